#include "catch2/catch_amalgamated.hpp"

#include <random>
#include <set>

#include "eca/core.hpp"

using namespace eca;

namespace {

// Reference: direct table lookup by neighborhood value, no bit tricks.
Word step_reference(int code, const Word& w) {
  std::vector<Cell> out;
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    const int idx = 4 * w[i] + 2 * w[i + 1] + w[i + 2];
    int bit = code;
    for (int k = 0; k < idx; ++k) bit /= 2;
    out.push_back(static_cast<Cell>(bit % 2));
  }
  return Word(out);
}

}  // namespace

TEST_CASE("rule tables follow the binary expansion of the code") {
  for (int i = 0; i < 8; ++i) {
    CHECK(make_rule(0).at(i) == 0);
    CHECK(make_rule(255).at(i) == 1);
  }
  const Rule r184 = make_rule(184);
  CHECK(r184(1, 0, 1) == 1);
  CHECK(r184(1, 1, 0) == 0);
  CHECK_THROWS_AS(make_rule(256), std::out_of_range);
  CHECK_THROWS_AS(make_rule(-1), std::out_of_range);
}

TEST_CASE("code round-trips through the table") {
  for (int c = 0; c < 256; ++c) {
    const Rule r(c);
    CHECK(Rule::from_table(r.table()).code() == c);
    int sum = 0;
    for (int i = 0; i < 8; ++i) sum += r.at(i) << i;
    CHECK(sum == c);
  }
}

TEST_CASE("single steps on finite words") {
  CHECK(step_word(make_rule(5), Word::parse("11011")) == Word::parse("000"));
  CHECK(step_word(make_rule(7), Word::parse("0000")) == Word::parse("11"));
  CHECK(step_word(make_rule(0), Word::parse("10110")) == Word::parse("000"));
  CHECK(step_word(make_rule(90), Word::parse("11")).empty());
  CHECK(step_word(make_rule(90), Word()).empty());
}

TEST_CASE("step_word matches a table-lookup reference") {
  std::mt19937 rng(7);
  for (int c = 0; c < 256; ++c) {
    for (int trial = 0; trial < 4; ++trial) {
      const std::size_t len = rng() % 12;
      const Word w = Word::from_bits(rng(), len);
      const Word out = step_word(Rule(c), w);
      CHECK(out.size() == (len >= 2 ? len - 2 : 0));
      CHECK(out == step_reference(c, w));
    }
  }
}

TEST_CASE("cyclic steps") {
  CHECK(step_cyclic(make_rule(204), CyclicWord::parse("01")) == CyclicWord::parse("01"));
  CHECK(step_cyclic(make_rule(51), CyclicWord::parse("0")) == CyclicWord::parse("1"));
  CHECK(step_cyclic(make_rule(170), CyclicWord::parse("001")) == CyclicWord::parse("010"));
  CHECK_THROWS(CyclicWord(Word()));
}

TEST_CASE("periodic lifting commutes with repetition") {
  for (int c = 0; c < 256; c += 3) {
    for (std::size_t len = 1; len <= 6; ++len) {
      for (std::uint64_t bits = 0; bits < (1ULL << len); bits += 5) {
        const CyclicWord u(Word::from_bits(bits, len));
        const CyclicWord stepped = step_cyclic(Rule(c), u);
        Word rep, rep_step;
        for (int k = 1; k <= 4; ++k) {
          rep = rep + u.word();
          rep_step = rep_step + stepped.word();
          CHECK(step_cyclic(Rule(c), CyclicWord(rep)) == CyclicWord(rep_step));
        }
      }
    }
  }
}

TEST_CASE("evolve produces shrinking rows") {
  const auto d = evolve(make_rule(0), Word::parse("1011011"), 2);
  REQUIRE(d.size() == 3);
  CHECK(d[0].size() == 7);
  CHECK(d[1] == Word::parse("00000"));
  CHECK(d[2] == Word::parse("000"));

  const auto id = evolve(make_rule(204), Word::parse("10101"), 2);
  CHECK(id[1] == Word::parse("010"));
  CHECK(id[2] == Word::parse("1"));
  CHECK_THROWS(evolve(make_rule(0), Word(), -1));
}

TEST_CASE("rule 38 squared is a double shift on its image") {
  const Rule f(38);
  for (std::uint64_t bits = 0; bits < (1U << 11); ++bits) {
    const Word w = step_word(f, Word::from_bits(bits, 11));  // length 9, in the image
    const auto d = evolve(f, w, 3);
    // Row 3 starts at absolute cell 3; row 1 starts at 1, so read it from 3+2-1.
    CHECK(d[3] == d[1].sub(4, 3));
  }
}

TEST_CASE("rule 38 squared fails off the image") {
  const Rule f(38);
  int failures = 0;
  for (std::uint64_t bits = 0; bits < (1U << 9); ++bits) {
    const auto d = evolve(f, Word::from_bits(bits, 9), 3);
    if (d[3] != d[1].sub(4, 3)) ++failures;
  }
  CHECK(failures == 96);
}

TEST_CASE("mirror and complement") {
  CHECK(mirror(make_rule(184)).code() == 226);
  CHECK(complement(make_rule(0)).code() == 255);
  CHECK(complement(make_rule(1)).code() == 127);
  for (int c = 0; c < 256; ++c) {
    CHECK(mirror(mirror(Rule(c))) == Rule(c));
    CHECK(complement(complement(Rule(c))) == Rule(c));
  }
}

TEST_CASE("transforms commute with evolution") {
  std::mt19937 rng(11);
  for (int c = 0; c < 256; ++c) {
    for (int trial = 0; trial < 6; ++trial) {
      const Word w = Word::from_bits(rng(), rng() % 13);
      const Rule f(c);
      CHECK(step_word(mirror(f), w.reversed()) == step_word(f, w).reversed());
      CHECK(step_word(complement(f), w.negated()) == step_word(f, w).negated());
    }
  }
}

TEST_CASE("88 classes partition the 256 rules") {
  const Classification cls = classify();
  CHECK(cls.size() == 88);
  std::set<int> all;
  std::size_t total = 0;
  for (const auto& c : cls.classes) {
    total += c.size();
    all.insert(c.begin(), c.end());
    for (int m : c) CHECK(cls.representative(m) == c.front());
  }
  CHECK(total == 256);
  CHECK(all.size() == 256);
  CHECK(cls.representative(226) == 184);
}

TEST_CASE("cyclic word helpers") {
  const CyclicWord u = CyclicWord::parse("0110");
  CHECK(u.rotated(1) == CyclicWord::parse("1100"));
  CHECK(u.rotated(-1) == CyclicWord::parse("0011"));
  CHECK(u.rotation_to(CyclicWord::parse("1001")) == 2);
  CHECK(u.rotation_to(CyclicWord::parse("1111")) == -1);
  CHECK(CyclicWord::parse("010101").primitive_root() == CyclicWord::parse("01"));
  CHECK(CyclicWord::parse("0110").primitive_root() == CyclicWord::parse("0110"));
  CHECK(u.canonical().first == CyclicWord::parse("0011"));
  CHECK(u.at(-1) == 0);
  CHECK(u.at(6) == 1);
}

TEST_CASE("word parsing and bits") {
  CHECK(Word::parse("01 1_0").str() == "0110");
  CHECK_THROWS_AS(Word::parse("012"), std::invalid_argument);
  CHECK(Word::from_bits(6, 4).str() == "0110");
  CHECK(Word::parse("0110").to_bits() == 6);
  CHECK(Word::parse("00110").contains(Word::parse("11")));
  CHECK_FALSE(Word::parse("0101").contains(Word::parse("11")));
}

TEST_CASE("affine fit") {
  for (int c : {15, 51, 60, 90, 105, 150, 170, 204, 0, 255}) CHECK(is_affine(Rule(c)));
  for (int c : {30, 110, 108, 128, 136, 160, 184}) CHECK_FALSE(is_affine(Rule(c)));
  int count = 0;
  for (int c = 0; c < 256; ++c) count += is_affine(Rule(c));
  CHECK(count == 16);
}
