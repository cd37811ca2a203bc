#pragma once

// The shipped claims catalog, one record per line in the format read by
// parse_catalog. data/claims.catalog holds the same text.

namespace eca {

inline constexpr const char* kBuiltinCatalog = R"catalog(# id | rule | kind | params | expected | anchor
lin.1 | 15 | AffineRule |  | pass | rule 15 listed among the linear rules
lin.2 | 51 | AffineRule |  | pass | rule 51 listed among the linear rules
lin.3 | 60 | AffineRule |  | pass | rule 60 listed among the linear rules
lin.4 | 90 | AffineRule |  | pass | rule 90 listed among the linear rules
lin.5 | 105 | AffineRule |  | pass | rule 105 listed among the linear rules
lin.6 | 108 | AffineRule |  | fail | rule 108 listed among the linear rules (not affine over GF(2))
lin.7 | 128 | AffineRule |  | fail | rule 128 listed among the linear rules (not affine over GF(2))
lin.8 | 136 | AffineRule |  | fail | rule 136 listed among the linear rules (not affine over GF(2))
lin.9 | 150 | AffineRule |  | pass | rule 150 listed among the linear rules
lin.10 | 160 | AffineRule |  | fail | rule 160 listed among the linear rules (not affine over GF(2))
lin.11 | 170 | AffineRule |  | pass | rule 170 listed among the linear rules
lin.12 | 204 | AffineRule |  | pass | rule 204 listed among the linear rules
lin.13 | 15 | AuditPasses | bound=const n_max=5 problem=pred | pass | rule 15 Pred in constant bits
lin.14 | 51 | AuditPasses | bound=const n_max=5 problem=pred | pass | rule 51 Pred in constant bits
lin.15 | 60 | AuditPasses | bound=const n_max=5 problem=pred | pass | rule 60 Pred in constant bits
lin.16 | 90 | AuditPasses | bound=const n_max=5 problem=pred | pass | rule 90 Pred in constant bits
lin.17 | 105 | AuditPasses | bound=const n_max=5 problem=pred | pass | rule 105 Pred in constant bits
lin.18 | 108 | AuditPasses | bound=const n_max=5 problem=pred | pass | rule 108 Pred in constant bits
lin.19 | 128 | AuditPasses | bound=const n_max=5 problem=pred | pass | rule 128 Pred in constant bits
lin.20 | 136 | AuditPasses | bound=const n_max=5 problem=pred | pass | rule 136 Pred in constant bits
lin.21 | 150 | AuditPasses | bound=const n_max=5 problem=pred | pass | rule 150 Pred in constant bits
lin.22 | 160 | AuditPasses | bound=const n_max=5 problem=pred | pass | rule 160 Pred in constant bits
lin.23 | 170 | AuditPasses | bound=const n_max=5 problem=pred | pass | rule 170 Pred in constant bits
lin.24 | 204 | AuditPasses | bound=const n_max=5 problem=pred | pass | rule 204 Pred in constant bits

r76.1 | 76 | NoAntecedent | t=1 word=111 | pass | 111 is a garden of Eden
r76.2 | 76 | ShiftOnAvoiding | avoid=111 shift=0 width=10 | pass | identity away from 111
r76.3 | 76 | AuditPasses | bound=const n_max=5 problem=pred | pass | one simulated step, then identity

dep.1 | 0 | Nilpotent | steps=1 | pass | rule 0 is nilpotent
dep.2 | 0 | AuditPasses | bound=const n_max=5 problem=pred | pass | constant answer
dep.3 | 1 | MapsTo | in=0001000 out=010 t=2 | pass | block 0001^1000 is stable under two steps
dep.4 | 1 | MapsTo | in=00011000 out=0110 t=2 | pass | block 0001^2000 is stable under two steps
dep.5 | 1 | MapsTo | in=000111000 out=01110 t=2 | pass | block 0001^3000 is stable under two steps
dep.6 | 1 | NoAntecedent | t=1 word=1001 | pass | 1001 is a garden of Eden
dep.7 | 1 | NoAntecedent | t=1 word=101 | pass | 101 is a garden of Eden
dep.8 | 1 | DependsOnCenter | n_max=5 radius=3 | pass | Pred reads the seven central cells
dep.9 | 1 | AuditPasses | bound=const n_max=5 problem=pred | pass | window protocol
dep.10 | 2 | NoAntecedent | t=1 word=11 | pass | no adjacent 1s after one step
dep.11 | 2 | NoAntecedent | t=1 word=101 | pass | no 1s at distance two after one step
dep.12 | 2 | ShiftOnAvoiding | avoid=11/101 shift=1 width=10 | pass | left shift on sparse configurations
dep.13 | 2 | EqualsShiftOnImage | after=1 power=1 shift=1 width=9 | pass | left shift after one step
dep.14 | 2 | AuditPasses | bound=const n_max=5 problem=pred | pass | one step, then shift
dep.15 | 4 | NoAntecedent | t=1 word=11 | pass | 1s isolated after one step
dep.16 | 4 | ShiftOnAvoiding | avoid=11 shift=0 width=10 | pass | identity on isolated 1s
dep.17 | 4 | AuditPasses | bound=const n_max=5 problem=pred | pass | one step, then identity
dep.18 | 8 | Nilpotent | steps=2 | pass | rule 8 is nilpotent
dep.19 | 8 | AuditPasses | bound=const n_max=5 problem=pred | pass | constant for n >= 2
dep.20 | 10 | NoAntecedent | t=1 word=111 | pass | no 111 after one step
dep.21 | 10 | ShiftOnAvoiding | avoid=111 shift=1 width=10 | fail | left shift claimed whenever 111 is absent
dep.22 | 10 | NoAntecedent | t=1 word=101 | pass | 101 is a garden of Eden
dep.23 | 10 | ShiftOnAvoiding | avoid=101/111 shift=1 width=10 | pass | left shift without 101 and 111
dep.24 | 10 | EqualsShiftOnImage | after=1 power=1 shift=1 width=9 | pass | left shift after one step
dep.25 | 10 | AuditPasses | bound=const n_max=5 problem=pred | pass | one step, then shift
dep.26 | 12 | NoAntecedent | t=1 word=11 | pass | 1s isolated after one step
dep.27 | 12 | ShiftOnAvoiding | avoid=11 shift=0 width=10 | pass | identity on isolated 1s
dep.28 | 12 | AuditPasses | bound=const n_max=5 problem=pred | pass | one step, then identity
dep.29 | 19 | NoAntecedent | t=2 word=010 | pass | no isolated 1 after two steps
dep.30 | 19 | NoAntecedent | t=2 word=101 | pass | no isolated 0 after two steps
dep.31 | 19 | EqualsShiftOnImage | after=2 power=2 shift=0 width=9 | pass | two steps are the identity after two steps
dep.32 | 19 | AuditPasses | bound=const n_max=5 problem=pred | pass | period two after a transient
dep.33 | 24 | NoAntecedent | t=1 word=011 | pass | 011 is a garden of Eden
dep.34 | 24 | AuditPasses | bound=const n_max=5 problem=pred | pass | mirror of the rule 2 argument
dep.35 | 34 | NoAntecedent | t=1 word=00 | fail | 00 claimed to be a garden of Eden
dep.36 | 34 | ShiftOnAvoiding | avoid=00 shift=1 width=10 | fail | left shift claimed whenever 00 is absent
dep.37 | 34 | NoAntecedent | t=1 word=11 | pass | 11 is a garden of Eden
dep.38 | 34 | ShiftOnAvoiding | avoid=11 shift=1 width=10 | pass | left shift without 11
dep.39 | 34 | AuditPasses | bound=const n_max=5 problem=pred | pass | one step, then shift
dep.40 | 36 | StablePattern | t=1 word=00100 | pass | 00100 is stable
dep.41 | 36 | DependsOnCenter | n_max=5 radius=2 | pass | Pred reads the five central cells
dep.42 | 36 | AuditPasses | bound=const n_max=5 problem=pred | pass | window protocol
dep.43 | 38 | EqualsShiftOnImage | after=1 power=2 shift=2 width=9 | fail | two steps are a double shift after one step
dep.44 | 38 | EqualsShiftOnImage | after=2 power=2 shift=2 width=9 | pass | two steps are a double shift after two steps
dep.45 | 38 | AuditPasses | bound=const n_max=5 problem=pred | pass | transient, then double shift
dep.46 | 42 | NoAntecedent | t=1 word=111 | pass | no 111 after one step
dep.47 | 42 | ShiftOnAvoiding | avoid=111 shift=1 width=10 | pass | left shift without 111
dep.48 | 42 | AuditPasses | bound=const n_max=5 problem=pred | pass | one step, then shift
dep.49 | 46 | NoAntecedent | t=1 word=010 | pass | 010 is a garden of Eden
dep.50 | 46 | ShiftOnAvoiding | avoid=010/111 shift=1 width=10 | pass | left shift without 010 and 111
dep.51 | 46 | EqualsShiftOnImage | after=2 power=1 shift=1 width=9 | pass | left shift after two steps
dep.52 | 46 | AuditPasses | bound=const n_max=5 problem=pred | pass | two steps, then shift
dep.53 | 72 | MapsTo | in=a0110b out=0110 t=1 | pass | 0110 survives any context
dep.54 | 72 | NoAntecedent | t=1 word=111 | pass | 111 is a garden of Eden
dep.55 | 72 | NoAntecedent | t=2 word=010 | pass | 010 is a garden of Eden for two steps
dep.56 | 72 | EqualsShiftOnImage | after=2 power=1 shift=0 width=9 | pass | identity after two steps
dep.57 | 72 | AuditPasses | bound=const n_max=5 problem=pred | pass | two steps, then identity
dep.58 | 76 | ShiftOnAvoiding | avoid=111 shift=0 width=10 | pass | every block but 111 is stable
dep.59 | 76 | AuditPasses | bound=const n_max=5 problem=pred | pass | one step, then identity
dep.60 | 108 | EqualsShiftOnImage | after=2 power=2 shift=0 width=9 | pass | two steps are the identity on the image of two steps
dep.61 | 108 | AuditPasses | bound=const n_max=5 problem=pred | pass | period two after a transient
dep.62 | 127 | Nilpotent | steps=1 | fail | every cell claimed to be 1 after one step
dep.63 | 127 | MapsTo | in=abc out=1 t=1 | fail | one step claimed to give 1 everywhere
dep.64 | 127 | AuditPasses | bound=const n_max=5 problem=pred | pass | complement of the rule 1 protocol
dep.65 | 138 | NoAntecedent | t=1 word=101 | pass | 101 is a garden of Eden
dep.66 | 138 | ShiftOnAvoiding | avoid=101 shift=1 width=10 | pass | left shift without 101
dep.67 | 138 | AuditPasses | bound=const n_max=5 problem=pred | pass | one step, then shift
dep.68 | 200 | MapsTo | in=a0b out=0 t=1 | pass | 0 is stable
dep.69 | 200 | MapsTo | in=a11b out=11 t=1 | pass | 11 is stable
dep.70 | 200 | NoAntecedent | t=1 word=010 | pass | isolated 1 is a garden of Eden
dep.71 | 200 | DependsOnCenter | n_max=5 radius=1 | pass | Pred reads the three central cells
dep.72 | 200 | AuditPasses | bound=const n_max=5 problem=pred | pass | window protocol

r5.1 | 5 | MapsTo | in=a010b out=010 t=1 | pass | 010 survives any context
r5.2 | 5 | MapsTo | in=ab000cd out=000/010 t=2 | pass | 000 yields 000 or 010 after two steps
r5.3 | 5 | MapsTo | in=11011 out=000 t=1 | pass | 11011 maps to 000
r5.4 | 5 | MapsTo | in=110011 out=0000 t=1 | pass | 110011 maps to 0000
r5.5 | 5 | Invadable | backgrounds=none max_u=4 max_x=6 | pass | no background is invaded
r5.6 | 5 | AuditPasses | problem=sinv | pass | SInv in constant bits

r7.1 | 7 | MapsTo | in=w11xyz out=11 t=2 | pass | 11 returns after two steps
r7.2 | 7 | MapsTo | in=0000 out=11 t=1 | pass | 0000 maps to 11
r7.3 | 7 | MapsTo | in=0001 out=11 t=1 | pass | 0001 maps to 11
r7.4 | 7 | MapsTo | in=0010 out=11 t=1 | pass | 0010 maps to 11
r7.5 | 7 | Invadable | backgrounds=none max_u=4 max_x=6 | fail | no invasion claimed; 01 is invaded
r7.6 | 7 | Invadable | backgrounds=01 max_u=4 max_x=6 | pass | only the 01 background is invaded
r7.7 | 7 | AuditPasses | problem=sinv | pass | SInv in constant bits

r13.1 | 13 | MapsTo | in=a01b out=01 t=1 | pass | 01 survives any context
r13.2 | 13 | Wall | steps=4 word=01 | pass | 01 is a wall
r13.3 | 29 | MapsTo | in=a01b out=01 t=1 | pass | 01 survives any context
r13.4 | 29 | Wall | steps=4 word=01 | pass | 01 is a wall
r13.5 | 13 | Invadable | backgrounds=none max_u=4 max_x=6 | fail | no invasion claimed; uniform backgrounds are invaded
r13.6 | 13 | Invadable | backgrounds=0/1 max_u=4 max_x=6 | pass | exactly the uniform backgrounds are invaded
r13.7 | 29 | Invadable | backgrounds=none max_u=4 max_x=6 | pass | no background is invaded
r13.8 | 13 | AuditPasses | problem=sinv | pass | SInv in constant bits
r13.9 | 29 | AuditPasses | problem=sinv | pass | SInv in constant bits

r28.1 | 28 | MapsTo | in=a01b out=01 t=1 | pass | 01 survives any context
r28.2 | 28 | Wall | steps=4 word=01 | pass | 01 is a wall
r28.3 | 28 | Invadable | backgrounds=0/1 max_u=4 max_x=6 | pass | only uniform backgrounds are invaded
r28.4 | 28 | AuditPasses | problem=sinv | pass | SInv in constant bits

r78.1 | 78 | ShiftOnAvoiding | avoid=00/111 shift=0 width=10 | pass | stable without 00 and 111
r78.2 | 78 | NoAntecedent | t=1 word=1111 | pass | 1111 is a garden of Eden
r78.3 | 78 | MapsTo | in=a1001 out=101 t=1 | pass | a block of 2 zeros shrinks by one
r78.4 | 78 | MapsTo | in=a10001 out=1001 t=1 | pass | a block of 3 zeros shrinks by one
r78.5 | 78 | MapsTo | in=a100001 out=10001 t=1 | pass | a block of 4 zeros shrinks by one
r78.6 | 78 | MapsTo | in=a1000001 out=100001 t=1 | pass | a block of 5 zeros shrinks by one
r78.7 | 78 | MapsTo | in=01110 out=101 t=1 | pass | 01110 maps to 101
r78.8 | 78 | Invadable | backgrounds=0 max_u=4 max_x=6 | fail | only the 0 background claimed invadable
r78.9 | 78 | Invadable | backgrounds=0/1 max_u=4 max_x=6 | pass | both uniform backgrounds are invaded
r78.10 | 78 | AuditPasses | problem=sinv | pass | SInv in constant bits

r140.1 | 140 | MapsTo | in=a0b out=0 t=1 | pass | 0 is stable
r140.2 | 140 | MapsTo | in=110 out=0 t=1 | pass | 110 maps to 0
r140.3 | 140 | MapsTo | in=011 out=0 t=1 | fail | 011 claimed to map to 0
r140.4 | 140 | Invadable | backgrounds=1 max_u=4 max_x=6 | pass | only the 1 background is invaded
r140.5 | 140 | AuditPasses | problem=sinv | pass | SInv in constant bits

r172.1 | 178 | MapsTo | in=a00b out=00 t=1 | fail | 00 survives any context under 178
r172.2 | 172 | MapsTo | in=a00b out=00 t=1 | pass | 00 survives any context under 172
r172.3 | 178 | MapsTo | in=abc00 out=*00 t=1 | fail | 00 spreads left under 178
r172.4 | 172 | MapsTo | in=abc00 out=*00 t=1 | fail | 00 spreads left under 172
r172.5 | 178 | NoAntecedent | t=1 word=010 | fail | 010 claimed to be a garden of Eden under 178
r172.6 | 172 | NoAntecedent | t=1 word=010 | fail | 010 is a garden of Eden under 172
r172.7 | 172 | Invadable | backgrounds=1/01/011/0111 max_u=4 max_x=6 | pass | backgrounds without 00 are invaded
r172.8 | 172 | AuditPasses | problem=sinv | pass | double-zero protocol against rule 172
r172.9 | 172 | AuditPasses | oracle=178 problem=sinv | fail | double-zero protocol against rule 178

r32.1 | 32 | UniformImage | except=01 max_u=8 value=0 | pass | dies within len(u) steps unless u is 01
r32.2 | 32 | Invadable | backgrounds=01 max_u=4 max_x=6 | pass | only 01 is invaded
r32.3 | 32 | AuditPasses | problem=sinv | pass | SInv in constant bits

r156a.1 | 156 | Wall | steps=4 word=01 | pass | 01 is a wall
r156a.2 | 156 | Invadable | backgrounds=0/1 max_u=4 max_x=6 | pass | only uniform backgrounds are invaded
r156a.3 | 156 | AuditPasses | problem=sinv variant=A | pass | SInv in constant bits, Alice first

r27.1 | 27 | MapsTo | in=a111bcd out=111 t=2 | pass | 111 returns after two steps
r27.2 | 27 | MapsTo | in=a000b out=111 t=1 | pass | 000 maps to 111
r27.3 | 27 | MapsTo | in={011,001}{01,00} out=[4] t=2 | pass | two steps shift the 001/011 language (phase 0)
r27.4 | 27 | MapsTo | in={11,01}{011,001} out=[4] t=2 | pass | two steps shift the 001/011 language (phase 1)
r27.5 | 27 | MapsTo | in=1{011,001}0 out=[4] t=2 | pass | two steps shift the 001/011 language (phase 2)
r27.6 | 27 | AuditPasses | problem=sinv | pass | block-parse protocol

r44.1 | 44 | MapsTo | in=a00b out=00 t=1 | pass | 00 survives any context
r44.2 | 44 | MapsTo | in=111a out=00 t=1 | pass | 111 maps to 00
r44.3 | 44 | MapsTo | in=010ab out=111 t=1 | fail | 010ab claimed to map to 111
r44.4 | 44 | MapsTo | in={011,101,110}00 out=0 t=2 | pass | a 00 after the background block wins
r44.5 | 44 | Wall | steps=4 word=00 | pass | 00 is a wall
r44.6 | 44 | Invadable | backgrounds=011 max_u=4 max_x=6 | pass | only 011 is invaded
r44.7 | 44 | AuditPasses | problem=sinv | pass | SInv in constant bits

walls.1 | 23 | MapsTo | in=a00b out=11 t=1 | pass | 00 maps to 11 in any context
walls.2 | 23 | MapsTo | in=a11b out=00 t=1 | pass | 11 maps to 00 in any context
walls.3 | 23 | AuditPasses | bound=log n_max=5 problem=pred | pass | first-wall protocol
walls.4 | 50 | MapsTo | in=a01b out=10 t=1 | pass | 01 maps to 10 in any context
walls.5 | 50 | MapsTo | in=a10b out=01 t=1 | pass | 10 maps to 01 in any context
walls.6 | 50 | AuditPasses | bound=log n_max=5 problem=pred | pass | first-wall protocol
walls.7 | 77 | MapsTo | in=a01b out=01 t=1 | pass | 01 maps to 01 in any context
walls.8 | 77 | MapsTo | in=a10b out=10 t=1 | pass | 10 maps to 10 in any context
walls.9 | 77 | AuditPasses | bound=log n_max=5 problem=pred | pass | first-wall protocol
walls.10 | 178 | MapsTo | in=a01b out=10 t=1 | pass | 01 maps to 10 in any context
walls.11 | 178 | MapsTo | in=a10b out=01 t=1 | pass | 10 maps to 01 in any context
walls.12 | 178 | AuditPasses | bound=log n_max=5 problem=pred | pass | first-wall protocol
walls.13 | 232 | MapsTo | in=a00b out=00 t=1 | pass | 00 maps to 00 in any context
walls.14 | 232 | MapsTo | in=a11b out=11 t=1 | pass | 11 maps to 11 in any context
walls.15 | 232 | AuditPasses | bound=log n_max=5 problem=pred | pass | first-wall protocol

absorb.1 | 40 | MapsTo | in=ab0 out=0 t=1 | pass | a 0 on the right forces 0
absorb.2 | 130 | MapsTo | in=ab0 out=0 t=1 | pass | a 0 on the right forces 0
absorb.3 | 162 | MapsTo | in=ab0 out=0 t=1 | pass | a 0 on the right forces 0
absorb.4 | 168 | MapsTo | in=ab0 out=0 t=1 | pass | a 0 on the right forces 0
absorb.5 | 40 | AuditPasses | bound=const n_max=5 problem=pred | fail | rule 40 Pred in constant bits
absorb.6 | 130 | AuditPasses | bound=const n_max=5 problem=pred | pass | rule 130 Pred in constant bits
absorb.7 | 162 | AuditPasses | bound=const n_max=5 problem=pred | pass | rule 162 Pred in constant bits
absorb.8 | 168 | AuditPasses | bound=const n_max=5 problem=pred | fail | rule 168 Pred in constant bits
absorb.9 | 40 | AuditPasses | bound=log n_max=5 problem=pred | pass | column-class protocol
absorb.10 | 168 | AuditPasses | bound=log n_max=5 problem=pred | pass | right-to-left scan protocol

r104.1 | 104 | MapsTo | in=a00b out=00 t=1 | pass | 00 survives any context
r104.2 | 104 | MapsTo | in=1111 out=00 t=1 | pass | 1111 maps to 00
r104.3 | 104 | MapsTo | in=010111 out=0110 t=1 | pass | 010111 maps to 0110
r104.4 | 104 | MapsTo | in=0111010 out=10110 t=1 | pass | 0111010 maps to 10110
r104.5 | 104 | MapsTo | in=101101 out=00 t=2 | pass | 101101 dies in two steps
r104.6 | 104 | Wall | steps=4 word=00 | pass | 00 is a wall
r104.7 | 104 | Invadable | backgrounds=01/0111 max_u=4 max_x=6 | pass | only 01 and 0111 are invaded
r104.8 | 104 | AuditPasses | problem=sinv | pass | SInv in constant bits

r132.1 | 132 | MapsTo | in=a0b out=0 t=1 | pass | 0 is stable
r132.2 | 132 | AuditPasses | bound=log n_max=5 problem=pred | pass | run-length protocol

r152.1 | 152 | MapsTo | in=a011 out=01 t=1 | pass | 011 keeps its 01
r152.2 | 152 | MapsTo | in=111 out=1 t=1 | pass | 111 maps to 1
r152.3 | 152 | MapsTo | in=110 out=0 t=1 | pass | 110 maps to 0
r152.4 | 152 | ShiftOnAvoiding | avoid=11 shift=-1 width=10 | fail | right shift claimed whenever 11 is absent
r152.5 | 152 | ShiftOnAvoiding | avoid=11/101 shift=-1 width=10 | pass | right shift without 11 and 101
r152.6 | 152 | Invadable | backgrounds=1 max_u=4 max_x=6 | pass | only the 1 background is invaded
r152.7 | 152 | AuditPasses | problem=sinv | pass | SInv in constant bits

r156b.1 | 156 | MapsTo | in=a01b out=01 t=1 | pass | 01 survives any context
r156b.2 | 156 | MapsTo | in=100 out=1 t=1 | pass | 100 maps to 1
r156b.3 | 156 | MapsTo | in=110 out=0 t=1 | pass | 110 maps to 0
r156b.4 | 156 | AuditPasses | problem=sinv variant=B | pass | SInv in constant bits, Bob first

r184.1 | 184 | MapsTo | in=A{B,C} out=A t=1 | pass | A crosses 1 free blocks
r184.2 | 184 | MapsTo | in=A{B,C}{B,C} out=A t=2 | pass | A crosses 2 free blocks
r184.3 | 184 | MapsTo | in=A{B,C}{B,C}{B,C} out=A t=3 | pass | A crosses 3 free blocks
r184.4 | 184 | MapsTo | in=A{B,C}{B,C}{B,C}{B,C} out=A t=4 | pass | A crosses 4 free blocks
r184.5 | 184 | MapsTo | in=A{B,C}{B,C}{B,C}{B,C}{B,C} out=A t=5 | pass | A crosses 5 free blocks
r184.6 | 184 | MapsTo | in={B,C}D out=D t=1 | pass | D crosses 1 free blocks
r184.7 | 184 | MapsTo | in={B,C}{B,C}D out=D t=2 | pass | D crosses 2 free blocks
r184.8 | 184 | MapsTo | in={B,C}{B,C}{B,C}D out=D t=3 | pass | D crosses 3 free blocks
r184.9 | 184 | MapsTo | in={B,C}{B,C}{B,C}{B,C}D out=D t=4 | pass | D crosses 4 free blocks
r184.10 | 184 | MapsTo | in={B,C}{B,C}{B,C}{B,C}{B,C}D out=D t=5 | pass | D crosses 5 free blocks
r184.11 | 184 | MapsTo | in=AD out=B t=1 | pass | A and D annihilate into B (n=1)
r184.12 | 184 | MapsTo | in=A{B,C}D out=B t=2 | pass | A and D annihilate into B (n=2)
r184.13 | 184 | MapsTo | in=A{B,C}{B,C}D out=B t=3 | pass | A and D annihilate into B (n=3)
r184.14 | 184 | MapsTo | in=A{B,C}{B,C}{B,C}D out=B t=4 | pass | A and D annihilate into B (n=4)
r184.15 | 184 | MapsTo | in=A{B,C}{B,C}{B,C}{B,C}D out=B t=5 | pass | A and D annihilate into B (n=5)
r184.16 | 184 | MapsTo | in=DA out=B t=1 | pass | DA maps to B
r184.17 | 184 | MapsTo | in=D{B,C}A out=B t=2 | fail | D and A claimed to annihilate across 1 free blocks
r184.18 | 184 | MapsTo | in=D{B,C}{B,C}A out=B t=3 | fail | D and A claimed to annihilate across 2 free blocks
r184.19 | 184 | MapsTo | in=D{B,C}{B,C}{B,C}A out=B t=4 | fail | D and A claimed to annihilate across 3 free blocks
r184.20 | 184 | MapsTo | in=D{B,C}{B,C}{B,C}{B,C}A out=B t=5 | fail | D and A claimed to annihilate across 4 free blocks
r184.21 | 184 | AuditPasses | bound=log n_max=5 problem=pred | pass | particle-count protocol

r56.1 | 56 | MapsTo | in=DD out=A t=1 | pass | DD maps to A
r56.2 | 56 | MapsTo | in=BD out=C t=1 | pass | BD maps to C
r56.3 | 56 | NoAntecedent | t=1 word=1111 | pass | DD is a garden of Eden
r56.4 | 56 | NoAntecedent | t=1 word=0111 | pass | BD is a garden of Eden
r56.5 | 56 | AuditPasses | bound=const n_max=5 problem=pred | fail | rule 56 Pred claimed in constant bits
r56.6 | 56 | AuditPasses | bound=log n_max=5 problem=pred | pass | one step, then the particle protocol
)catalog";

}  // namespace eca
