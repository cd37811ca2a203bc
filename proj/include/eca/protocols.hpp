#pragma once

// Two-party strategies for Pred and SInv, run with an explicit bit counter.
//
// A strategy sees the whole instance but may only publish, through the
// Channel, what the speaking party could compute from its own part and the
// transcript so far. `unroll_protocol` rebuilds the protocol tree from all
// transcripts and rejects any strategy that breaks this rule, so honesty is
// checked rather than assumed.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "eca/commcomp.hpp"
#include "eca/core.hpp"
#include "eca/problems.hpp"

namespace eca {

enum class Problem { Pred, SInv };

inline const char* to_string(Problem p) { return p == Problem::Pred ? "pred" : "sinv"; }

inline Problem parse_problem(const std::string& s) {
  if (s == "pred" || s == "Pred") return Problem::Pred;
  if (s == "sinv" || s == "SInv") return Problem::SInv;
  throw std::invalid_argument("unknown problem: " + s);
}

inline Party other(Party p) { return p == Party::Alice ? Party::Bob : Party::Alice; }

/// Declared cost: `b` bits, or `a*ceil(log2 n) + b` bits.
struct BitBound {
  enum class Kind { Constant, Logarithmic };
  Kind kind = Kind::Constant;
  int a = 0;
  int b = 0;

  static BitBound constant(int b) { return {Kind::Constant, 0, b}; }
  static BitBound logarithmic(int a, int b) { return {Kind::Logarithmic, a, b}; }

  int at(int n) const { return kind == Kind::Constant ? b : a * ceil_log2(static_cast<std::uint64_t>(std::max(n, 1))) + b; }
  std::string str() const {
    if (kind == Kind::Constant) return "O(1) <= " + std::to_string(b);
    return "O(log n) <= " + std::to_string(a) + "*ceil(log2 n)+" + std::to_string(b);
  }
};

/// Message log. Every bit is attributed to the party that sent it.
class Channel {
 public:
  void send(Party from, bool bit) { transcript_.emplace_back(swapped_ ? other(from) : from, bit); }

  /// Fixed-width unsigned value, most significant bit first.
  std::uint64_t send_uint(Party from, std::uint64_t v, int width) {
    if (width < 64 && (v >> width) != 0) throw std::logic_error("message does not fit its width");
    for (int i = width - 1; i >= 0; --i) send(from, (v >> i) & 1U);
    return v;
  }

  /// A value in [0, max], using ceil(log2(max+1)) bits.
  std::uint64_t send_bounded(Party from, std::uint64_t v, std::uint64_t max) {
    if (v > max) throw std::logic_error("message exceeds its declared range");
    return send_uint(from, v, ceil_log2(max + 1));
  }

  /// The final answer, one bit.
  int announce(Party from, int value) {
    send(from, value != 0);
    return value;
  }

  const std::vector<std::pair<Party, bool>>& transcript() const { return transcript_; }
  int bits() const { return static_cast<int>(transcript_.size()); }

  /// Used by the mirror combinator: the inner strategy's Alice is our Bob.
  void toggle_swap() { swapped_ = !swapped_; }

 private:
  std::vector<std::pair<Party, bool>> transcript_;
  bool swapped_ = false;
};

/// Pred input split at `cut`: Alice holds cells [0,cut), Bob [cut,len).
struct PredInstance {
  Word input;
  int cut = 0;

  int length() const { return static_cast<int>(input.size()); }
  int n() const { return length() / 2; }
  Word alice() const { return input.sub(0, static_cast<std::size_t>(cut)); }
  Word bob() const { return input.sub(static_cast<std::size_t>(cut), input.size() - static_cast<std::size_t>(cut)); }
  Party owner(int pos) const { return pos < cut ? Party::Alice : Party::Bob; }
  Party center_owner() const { return owner(n()); }
  bool solo() const { return cut == 0 || cut == length(); }
  Party holder() const { return cut == 0 ? Party::Bob : Party::Alice; }
};

/// SInv instance p_u[x]; Alice holds x[0,cut), Bob the rest. Both know u.
struct SInvInstance {
  CyclicWord u;
  Word x;
  int cut = 0;

  long long size() const { return static_cast<long long>(x.size()); }
  Cell cell(long long i) const { return i >= 0 && i < size() ? x[static_cast<std::size_t>(i)] : u.at(i); }
  Party owner(long long i) const { return i < cut ? Party::Alice : Party::Bob; }
};

struct Strategy {
  Problem problem = Problem::Pred;
  int rule = 0;
  std::string name;
  std::string family;
  std::string variant;
  BitBound bound;
  std::string note;
  std::function<int(const PredInstance&, Channel&)> pred;
  std::function<int(const SInvInstance&, Channel&)> sinv;
};

struct RunResult {
  int answer = 0;
  int bits = 0;
  std::vector<std::pair<Party, bool>> transcript;
};

namespace detail {

inline void check_pred_instance(const PredInstance& in) {
  if (in.input.size() % 2 == 0) throw std::invalid_argument("Pred input must have odd length");
  if (in.cut < 0 || in.cut > in.length()) throw std::invalid_argument("cut out of range");
}

// --- Pred building blocks ---------------------------------------------------

/// One synchronous step. Each side receives the single boundary cell it
/// lacks; the new cut keeps every cell on the side that could compute it.
inline PredInstance simulate_step(Rule f, const PredInstance& in, Channel& ch) {
  const int c = in.cut, len = in.length();
  if (len < 3) throw std::logic_error("no step left to simulate");
  if (c >= 1 && c <= len - 2) ch.send(Party::Alice, in.input[static_cast<std::size_t>(c - 1)]);
  if (c >= 2 && c <= len - 1) ch.send(Party::Bob, in.input[static_cast<std::size_t>(c)]);
  return {step_word(f, in.input), std::clamp(c - 1, 0, len - 2)};
}

inline int solo_answer(Rule f, const PredInstance& in, Channel& ch) {
  return ch.announce(in.holder(), pred_value(f, in.input));
}

/// The owner of `target` learns the other side's cells within `radius` of
/// it, zero-fills the rest and reads cell `target` after `steps` steps.
inline int window(Rule f, const PredInstance& in, Channel& ch, int radius, int target, int steps) {
  const Party owner = in.owner(target);
  std::vector<Cell> guess(in.input.size(), 0);
  for (int i = 0; i < in.length(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (in.owner(i) == owner) {
      guess[k] = in.input[k];
    } else if (i >= target - radius && i <= target + radius) {
      ch.send(other(owner), in.input[k]);
      guess[k] = in.input[k];
    }
  }
  return ch.announce(owner, step_word(f, Word(guess), steps)[static_cast<std::size_t>(target - steps)]);
}

/// After k steps the rule acts as a shift by s per step, so the center is
/// cell n + s(n-k) of F^k(x), which only sees cells within k of it.
inline int dependency(Rule f, const PredInstance& in, Channel& ch, int k, int s) {
  const int steps = std::min(k, in.n());
  return window(f, in, ch, steps, in.n() + s * (in.n() - steps), steps);
}

/// Pred of an affine rule is a parity of a fixed subset plus a constant.
inline int affine_share(Rule f, const PredInstance& in, Channel& ch) {
  const auto len = in.input.size();
  const Cell base = pred_value(f, Word::filled(len, 0));
  bool alice_any = false, bob_any = false;
  int alice_par = 0, bob_par = 0;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Cell> e(len, 0);
    e[i] = 1;
    if (pred_value(f, Word(e)) == base) continue;
    if (static_cast<int>(i) < in.cut) {
      alice_any = true;
      alice_par ^= in.input[i];
    } else {
      bob_any = true;
      bob_par ^= in.input[i];
    }
  }
  if (!alice_any && !bob_any) return base;
  if (!bob_any) return ch.announce(Party::Alice, base ^ alice_par);
  if (!alice_any) return ch.announce(Party::Bob, base ^ bob_par);
  ch.send(Party::Alice, alice_par);
  return ch.announce(Party::Bob, base ^ alice_par ^ bob_par);
}

/// Pred of a monotone conjunctive rule is the AND of a fixed subset.
inline int and_share(Rule f, const PredInstance& in, Channel& ch) {
  const auto len = in.input.size();
  bool alice_any = false, bob_any = false;
  int alice_and = 1, bob_and = 1;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Cell> e(len, 1);
    e[i] = 0;
    if (pred_value(f, Word(e)) != 0) continue;
    if (static_cast<int>(i) < in.cut) {
      alice_any = true;
      alice_and &= in.input[i];
    } else {
      bob_any = true;
      bob_and &= in.input[i];
    }
  }
  if (!alice_any && !bob_any) return 1;
  if (!bob_any) return ch.announce(Party::Alice, alice_and);
  if (!alice_any) return ch.announce(Party::Bob, bob_and);
  ch.send(Party::Alice, alice_and);
  return ch.announce(Party::Bob, alice_and & bob_and);
}

enum class WallClass { Alternating, Uniform };

/// Cells ordered from the cut outward. Everything past the first wall is
/// invisible to the center, so it is replaced by zeros; before the wall the
/// part is determined by its first cell.
inline std::vector<Cell> wall_rebuild(const std::vector<Cell>& part, std::optional<std::size_t> wall, Cell first,
                                      WallClass cls) {
  std::vector<Cell> out(part.size(), 0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    Cell v = cls == WallClass::Alternating ? static_cast<Cell>(first ^ (k % 2)) : first;
    if (wall && k == *wall + 1) v = cls == WallClass::Alternating ? out[*wall] : static_cast<Cell>(1 - out[*wall]);
    if (wall && k > *wall + 1) v = 0;
    out[k] = v;
  }
  return out;
}

/// The non-owner's cells listed from the cut outward.
inline std::vector<Cell> outward_part(const PredInstance& in, Party who) {
  std::vector<Cell> part;
  if (who == Party::Bob)
    for (int i = in.cut; i < in.length(); ++i) part.push_back(in.input[static_cast<std::size_t>(i)]);
  else
    for (int i = in.cut - 1; i >= 0; --i) part.push_back(in.input[static_cast<std::size_t>(i)]);
  return part;
}

inline Word splice(const PredInstance& in, Party rebuilt_side, const std::vector<Cell>& outward) {
  std::vector<Cell> cells(in.input.begin(), in.input.end());
  for (std::size_t k = 0; k < outward.size(); ++k) {
    const int pos = rebuilt_side == Party::Bob ? in.cut + static_cast<int>(k) : in.cut - 1 - static_cast<int>(k);
    cells[static_cast<std::size_t>(pos)] = outward[k];
  }
  return Word(cells);
}

inline int wall(Rule f, const PredInstance& in, Channel& ch, WallClass cls) {
  const Party owner = in.center_owner();
  const Party sender = other(owner);
  const std::vector<Cell> part = outward_part(in, sender);
  if (part.empty()) return ch.announce(owner, pred_value(f, in.input));
  std::optional<std::size_t> j;
  for (std::size_t k = 0; k + 1 < part.size(); ++k) {
    const bool is_wall = cls == WallClass::Alternating ? part[k] == part[k + 1] : part[k] != part[k + 1];
    if (is_wall) {
      j = k;
      break;
    }
  }
  // j in [0, |part|-2], or |part|-1 for "no wall".
  const std::uint64_t none = part.size() - 1;
  ch.send_bounded(sender, j ? *j : none, none);
  ch.send(sender, part[0]);
  return ch.announce(owner, pred_value(f, splice(in, sender, wall_rebuild(part, j, part[0], cls))));
}

/// Only the run of 1s touching the cut matters.
inline int run_length(Rule f, const PredInstance& in, Channel& ch) {
  const Party owner = in.center_owner();
  const Party sender = other(owner);
  const std::vector<Cell> part = outward_part(in, sender);
  std::size_t k = 0;
  while (k < part.size() && part[k] == 1) ++k;
  ch.send_bounded(sender, k, part.size());
  std::vector<Cell> rebuilt(part.size(), 0);
  std::fill(rebuilt.begin(), rebuilt.begin() + static_cast<std::ptrdiff_t>(k), 1);
  return ch.announce(owner, pred_value(f, splice(in, sender, rebuilt)));
}

/// Traffic rule. With prefix sums U_j (U_{-1} = 0) the center after n steps is
///   max_k (U_{2k} - k) - max_k (U_{2k-1} - k),   k = 0..n.
/// Alice sends both partial maxima relative to her own total; Bob finishes.
inline int max_plus(const PredInstance& in, Channel& ch) {
  const Rule f(184);
  if (in.solo()) return solo_answer(f, in, ch);
  const int n = in.n(), c = in.cut;
  std::vector<int> prefix(static_cast<std::size_t>(in.length()) + 1, 0);  // prefix[j+1] = U_j
  for (int j = 0; j < in.length(); ++j) prefix[static_cast<std::size_t>(j) + 1] = prefix[static_cast<std::size_t>(j)] + in.input[static_cast<std::size_t>(j)];
  auto U = [&](int j) { return prefix[static_cast<std::size_t>(j) + 1]; };
  const int total_a = U(c - 1);
  auto part_max = [&](int offset, bool alice) {
    std::optional<int> best;
    for (int k = 0; k <= n; ++k) {
      const int j = 2 * k + offset;
      if ((j < c) != alice) continue;
      const int v = U(j) - total_a - k;  // for Bob, U(j) - S_A is his own partial sum
      best = best ? std::max(*best, v) : v;
    }
    return best;
  };
  const std::uint64_t range = static_cast<std::uint64_t>(c + n + 1);  // -alpha in [0, c+n], c+n+1 = none
  const auto a1 = part_max(0, true), a2 = part_max(-1, true);
  ch.send_bounded(Party::Alice, a1 ? static_cast<std::uint64_t>(-*a1) : range, range);
  ch.send_bounded(Party::Alice, static_cast<std::uint64_t>(-*a2), range);
  const auto b1 = part_max(0, false), b2 = part_max(-1, false);
  auto best = [](std::optional<int> x, std::optional<int> y) { return x && y ? std::max(*x, *y) : (x ? *x : *y); };
  return ch.announce(Party::Bob, best(a1, b1) - best(a2, b2));
}

/// Rule 168 read right to left: the center is 1 iff the input ends in 1 and
/// at least n+1 ones occur before the first 00 seen from the right.
inline int scan168(const PredInstance& in, Channel& ch) {
  const Rule f(168);
  if (in.cut == in.length()) return solo_answer(f, in, ch);
  const int n = in.n(), c = in.cut, len = in.length();
  auto at = [&](int i) { return in.input[static_cast<std::size_t>(i)]; };
  // Bob's pass over [c, len).
  int cnt = 0;
  std::optional<int> decided;
  if (at(len - 1) == 0) decided = 0;
  for (int i = len - 1; i >= c && !decided; --i) {
    if (at(i) == 1) {
      if (++cnt >= n + 1) decided = 1;
    } else if (i > c && at(i - 1) == 0) {
      decided = 0;
    }
  }
  if (!decided && c == 0) decided = 0;
  ch.send(Party::Bob, decided.has_value());
  if (decided) return ch.announce(Party::Bob, *decided);
  ch.send_bounded(Party::Bob, static_cast<std::uint64_t>(cnt), static_cast<std::uint64_t>(n));
  ch.send(Party::Bob, at(c));
  // Alice resolves the pending pair and continues.
  if (at(c) == 0 && at(c - 1) == 0) return ch.announce(Party::Alice, 0);
  for (int i = c - 1; i >= 0; --i) {
    if (at(i) == 1) {
      if (++cnt >= n + 1) return ch.announce(Party::Alice, 1);
    } else if (i > 0 && at(i - 1) == 0) {
      return ch.announce(Party::Alice, 0);
    }
  }
  return ch.announce(Party::Alice, 0);
}

/// Rule 162: f(a,b,0) = 0, so a 0 in Bob's part settles the center alone.
inline int zero_test(const PredInstance& in, Channel& ch) {
  const Rule f(162);
  if (in.solo()) return solo_answer(f, in, ch);
  const Word b = in.bob();
  const bool has_zero = std::find(b.begin(), b.end(), Cell{0}) != b.end();
  ch.send(Party::Bob, has_zero);
  return ch.announce(has_zero ? Party::Bob : Party::Alice, pred_value(f, in.input));
}

/// Bob's part modulo "same column in the cut table".
struct ColumnClasses {
  std::vector<int> class_of;            // by Bob's input bits
  std::vector<std::vector<int>> value;  // [Alice bits][class]
  int count = 0;
  bool constant = false;
};

inline const ColumnClasses& column_classes(Rule f, int n, int cut) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, ColumnClasses> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_tuple(f.code(), n, cut);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const FunctionTable t = build_pred_table(f, n, cut);
  ColumnClasses cc;
  std::map<std::vector<int>, int> ids;
  for (std::size_t col = 0; col < t.cols(); ++col) {
    std::vector<int> column;
    for (std::size_t r = 0; r < t.rows(); ++r) column.push_back(t.at(r, col));
    auto [pos, fresh] = ids.emplace(column, static_cast<int>(ids.size()));
    if (fresh) {
      cc.value.resize(t.rows());
      for (std::size_t r = 0; r < t.rows(); ++r) cc.value[r].push_back(column[r]);
    }
    cc.class_of.push_back(pos->second);
  }
  cc.count = static_cast<int>(ids.size());
  cc.constant = t.distinct_values() <= 1;
  return cache.emplace(key, std::move(cc)).first->second;
}

/// One-way: Bob names his column class, Alice reads off the answer.
inline int column_class(Rule f, const PredInstance& in, Channel& ch) {
  const ColumnClasses& cc = column_classes(f, in.n(), in.cut);
  const int cls = cc.class_of[in.bob().to_bits()];
  if (cc.count > 1) ch.send_bounded(Party::Bob, static_cast<std::uint64_t>(cls), static_cast<std::uint64_t>(cc.count - 1));
  const int v = cc.value[in.alice().to_bits()][static_cast<std::size_t>(cls)];
  return cc.constant ? v : ch.announce(Party::Alice, v);
}

// --- SInv building blocks ---------------------------------------------------

inline bool same_background(const CyclicWord& u, const char* pattern) {
  return u.primitive_root().canonical().first == CyclicWord::parse(pattern).primitive_root().canonical().first;
}

inline bool has_cyclic_00(const CyclicWord& u) {
  for (long long i = 0; i < static_cast<long long>(u.size()); ++i)
    if (u.at(i) == 0 && u.at(i + 1) == 0) return true;
  return false;
}

/// Invaded iff the background is invadable and x differs from it anywhere.
inline int difference(const SInvInstance& in, Channel& ch, bool invadable, Party first) {
  if (!invadable) return 0;
  bool diff_a = false, diff_b = false;
  for (long long i = 0; i < in.size(); ++i)
    if (in.x[static_cast<std::size_t>(i)] != in.u.at(i)) (in.owner(i) == Party::Alice ? diff_a : diff_b) = true;
  const bool mine = first == Party::Alice ? diff_a : diff_b;
  ch.send(first, mine);
  return ch.announce(other(first), diff_a || diff_b);
}

/// Invaded iff a 00 appears in p_u[x] on [-1, |x|], unless u already has one.
inline int double_zero(const SInvInstance& in, Channel& ch) {
  if (has_cyclic_00(in.u)) return 0;
  bool found = false;
  for (long long i = -1; i < in.cut - 1; ++i) found = found || (in.cell(i) == 0 && in.cell(i + 1) == 0);
  ch.send(Party::Alice, found);
  if (found) return ch.announce(Party::Bob, 1);
  ch.send(Party::Alice, in.cell(in.cut - 1));
  for (long long i = in.cut - 1; i < in.size(); ++i) found = found || (in.cell(i) == 0 && in.cell(i + 1) == 0);
  return ch.announce(Party::Bob, found);
}

/// Phase p with u_{p+3k} = 0 and u_{p+3k+2} = 1 for all k, if any.
inline std::optional<int> block_phase(const CyclicWord& u) {
  const long long span = 3 * static_cast<long long>(u.size());
  for (int p = 0; p < 3; ++p) {
    bool ok = true;
    for (long long k = p; k < p + span && ok; k += 3) ok = u.at(k) == 0 && u.at(k + 2) == 1;
    if (ok) return p;
  }
  return std::nullopt;
}

/// Rule 27: parse p_u[x] into 3-blocks in the phase of the background.
/// The first block outside {001, 011} decides: invaded iff it is the
/// special block or the non-background block of the pair was seen before.
inline int block_parse(const SInvInstance& in, Channel& ch) {
  const auto phase = block_phase(in.u);
  if (!phase) return 0;
  auto block = [&](long long s) {
    std::string b;
    for (int j = 0; j < 3; ++j) b.push_back(static_cast<char>('0' + in.cell(s + j)));
    return b;
  };
  std::string beta;
  for (int j = 0; j < 3; ++j) beta.push_back(static_cast<char>('0' + in.u.at(*phase + j)));
  const std::string beta2 = beta == "001" ? "011" : "001";
  const std::string special = beta == "001" ? "010" : "000";
  long long s = *phase;
  while (s > 0) s -= 3;

  bool seen = false;
  std::optional<int> verdict;
  auto feed = [&](const std::string& b) {
    if (b == beta2) seen = true;
    else if (b != beta) verdict = (seen || b == special) ? 1 : 0;
  };
  // Alice: blocks lying entirely left of the cut.
  for (; s < in.size() && s + 3 <= in.cut && !verdict; s += 3) feed(block(s));
  // State: 0 bounded, 1 invaded, 2 open, 3 open with the other block seen.
  const int state = verdict ? *verdict : (seen ? 3 : 2);
  ch.send_uint(Party::Alice, static_cast<std::uint64_t>(state), 2);
  if (verdict) return *verdict;
  // Cells of the straddling block that Alice holds.
  if (s < in.size())
    for (long long i = s; i < in.cut; ++i) ch.send(Party::Alice, in.cell(i));
  for (; s < in.size() && !verdict; s += 3) feed(block(s));
  return ch.announce(Party::Bob, verdict ? *verdict : 0);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Catalog

/// Rules whose complexity is left open; there is no strategy for Pred.
inline const std::vector<int>& open_rules() {
  static const std::vector<int> list = {3,  6,  9,  11, 14, 18,  22,  25,  26,  30,  33,  35,  37,  41,  43,  45, 54,
                                        57, 58, 62, 73, 74, 106, 110, 122, 126, 134, 142, 146, 152, 154, 164, 204};
  return list;
}

inline bool is_open_rule(int code) {
  const auto& l = open_rules();
  return std::find(l.begin(), l.end(), code) != l.end();
}

namespace detail {

inline Strategy pred_strategy(int rule, std::string name, std::string family, BitBound bound,
                              std::function<int(const PredInstance&, Channel&)> fn, std::string note = {}) {
  Strategy s;
  s.problem = Problem::Pred;
  s.rule = rule;
  s.name = std::move(name);
  s.family = std::move(family);
  s.bound = bound;
  s.note = std::move(note);
  s.pred = std::move(fn);
  return s;
}

inline Strategy sinv_strategy(int rule, std::string name, std::string family, BitBound bound,
                              std::function<int(const SInvInstance&, Channel&)> fn, std::string variant = {},
                              std::string note = {}) {
  Strategy s;
  s.problem = Problem::SInv;
  s.rule = rule;
  s.name = std::move(name);
  s.family = std::move(family);
  s.variant = std::move(variant);
  s.bound = bound;
  s.note = std::move(note);
  s.sinv = std::move(fn);
  return s;
}

struct DependencySpec {
  int k_even, k_odd, shift;
};

inline std::optional<DependencySpec> dependency_spec(int rule) {
  switch (rule) {
    case 2: case 10: case 34: case 42: case 138: return DependencySpec{1, 1, 1};
    case 4: case 12: case 76: return DependencySpec{1, 1, 0};
    case 46: return DependencySpec{2, 2, 1};
    case 72: return DependencySpec{2, 2, 0};
    case 24: return DependencySpec{2, 2, -1};
    case 19: case 108: return DependencySpec{2, 3, 0};
    case 38: return DependencySpec{2, 3, 1};
    default: return std::nullopt;
  }
}

inline std::optional<int> window_radius(int rule) {
  switch (rule) {
    case 1: return 3;
    case 36: return 2;
    case 200: return 1;
    default: return std::nullopt;
  }
}

inline std::optional<Strategy> pred_entry(int rule);

}  // namespace detail

/// Pred strategy for F' = mirror(F): swap the parties and read the input
/// backwards.
inline Strategy mirror_strategy(const Strategy& s) {
  if (s.problem != Problem::Pred) throw std::invalid_argument("mirror is defined for Pred strategies");
  Strategy m = s;
  m.rule = mirror(Rule(s.rule)).code();
  m.name = "mirror of " + s.name;
  m.pred = [inner = s.pred](const PredInstance& in, Channel& ch) {
    ch.toggle_swap();
    const int v = inner(PredInstance{in.input.reversed(), in.length() - in.cut}, ch);
    ch.toggle_swap();
    return v;
  };
  return m;
}

/// Pred strategy for F' = complement(F): negate the input and the answer.
inline Strategy complement_strategy(const Strategy& s) {
  if (s.problem != Problem::Pred) throw std::invalid_argument("complement is defined for Pred strategies");
  Strategy m = s;
  m.rule = complement(Rule(s.rule)).code();
  m.name = "complement of " + s.name;
  m.pred = [inner = s.pred](const PredInstance& in, Channel& ch) {
    return 1 - inner(PredInstance{in.input.negated(), in.cut}, ch);
  };
  return m;
}

namespace detail {

inline std::optional<Strategy> pred_entry(int rule) {
  const Rule f(rule);
  using BB = BitBound;
  if (rule == 94 || (is_open_rule(rule) && rule != 204)) return std::nullopt;

  switch (rule) {
    case 15: case 51: case 60: case 90: case 105: case 150: case 170: case 204:
      return pred_strategy(rule, "parity share", "affine", BB::constant(2),
                           [f](const PredInstance& in, Channel& ch) { return affine_share(f, in, ch); },
                           rule == 204 ? "also listed among the open rules; the identity is trivially O(1)" : "");
    case 128: case 136: case 160:
      return pred_strategy(rule, "conjunction share", "affine", BB::constant(2),
                           [f](const PredInstance& in, Channel& ch) { return and_share(f, in, ch); },
                           "Pred is an AND of fixed cells; the rule itself is not affine over GF(2)");
    case 0:
      return pred_strategy(rule, "constant", "dependency", BB::constant(0),
                           [](const PredInstance&, Channel&) { return 0; });
    case 8:
      return pred_strategy(rule, "dies in two steps", "dependency", BB::constant(2),
                           [f](const PredInstance& in, Channel& ch) {
                             return in.n() >= 2 ? 0 : window(f, in, ch, 1, in.n(), in.n());
                           });
    case 127: {
      Strategy s = complement_strategy(*pred_entry(1));
      s.name = "complement of rule 1 window";
      return s;
    }
    case 23: case 232:
      return pred_strategy(rule, "first wall", "wall", BB::logarithmic(1, 3),
                           [f](const PredInstance& in, Channel& ch) { return wall(f, in, ch, WallClass::Alternating); });
    case 50: case 77: case 178:
      return pred_strategy(rule, "first wall", "wall", BB::logarithmic(1, 3),
                           [f](const PredInstance& in, Channel& ch) { return wall(f, in, ch, WallClass::Uniform); });
    case 132:
      return pred_strategy(rule, "run of ones at the cut", "run-length", BB::logarithmic(1, 2),
                           [f](const PredInstance& in, Channel& ch) { return run_length(f, in, ch); });
    case 184:
      return pred_strategy(rule, "max-plus particle count", "particles", BB::logarithmic(2, 7),
                           [](const PredInstance& in, Channel& ch) { return max_plus(in, ch); },
                           "rebuilt from the prefix-sum form of the traffic rule");
    case 56:
      return pred_strategy(rule, "one step then traffic", "particles", BB::logarithmic(2, 9),
                           [f](const PredInstance& in, Channel& ch) {
                             if (in.solo()) return solo_answer(f, in, ch);
                             return max_plus(simulate_step(f, in, ch), ch);
                           },
                           "inherits the logarithmic cost of the rule 184 protocol");
    case 168:
      return pred_strategy(rule, "right-to-left scan", "absorbing", BB::logarithmic(1, 4),
                           [](const PredInstance& in, Channel& ch) { return scan168(in, ch); },
                           "Bob forwards a counter, so the cost is logarithmic");
    case 162:
      return pred_strategy(rule, "zero test", "absorbing", BB::constant(2),
                           [](const PredInstance& in, Channel& ch) { return zero_test(in, ch); });
    case 40:
      return pred_strategy(rule, "column class", "absorbing", BB::logarithmic(1, 3),
                           [f](const PredInstance& in, Channel& ch) { return column_class(f, in, ch); },
                           "the class count grows with n");
    case 130:
      return pred_strategy(rule, "column class", "absorbing", BB::constant(3),
                           [f](const PredInstance& in, Channel& ch) { return column_class(f, in, ch); });
    default: break;
  }
  if (const auto d = dependency_spec(rule)) {
    const int bits = std::max(d->k_even, d->k_odd) + 1;
    return pred_strategy(rule, "bounded dependency", "dependency", BB::constant(bits),
                         [f, d = *d](const PredInstance& in, Channel& ch) {
                           return dependency(f, in, ch, in.n() % 2 == 0 ? d.k_even : d.k_odd, d.shift);
                         });
  }
  if (const auto r = window_radius(rule)) {
    return pred_strategy(rule, "center window", "dependency", BB::constant(*r + 1),
                         [f, r = *r](const PredInstance& in, Channel& ch) { return window(f, in, ch, r, in.n(), in.n()); });
  }
  return std::nullopt;
}

inline std::optional<Strategy> sinv_entry(int rule, const std::string& variant) {
  using BB = BitBound;
  auto diff = [rule](std::function<bool(const CyclicWord&)> invadable, Party first = Party::Alice,
                     std::string var = {}) {
    return sinv_strategy(rule, "difference bit", "difference", BB::constant(2),
                         [invadable, first](const SInvInstance& in, Channel& ch) {
                           return difference(in, ch, invadable(in.u), first);
                         },
                         std::move(var));
  };
  auto uniform = [](const CyclicWord& u) { return u.is_uniform(); };
  switch (rule) {
    case 5: case 29: {
      Strategy s = sinv_strategy(rule, "never invaded", "constant", BB::constant(0),
                                 [](const SInvInstance&, Channel&) { return 0; });
      return s;
    }
    case 7: case 32:
      return diff([](const CyclicWord& u) { return same_background(u, "01"); });
    case 13: case 28: case 78:
      return diff(uniform);
    case 156:
      if (variant.empty() || variant == "A") return diff(uniform, Party::Alice, "A");
      if (variant == "B") return diff(uniform, Party::Bob, "B");
      return std::nullopt;
    case 140: case 152:
      return diff([](const CyclicWord& u) { return same_background(u, "1"); });
    case 44:
      return diff([](const CyclicWord& u) { return same_background(u, "011"); });
    case 104:
      return diff([](const CyclicWord& u) { return same_background(u, "01") || same_background(u, "0111"); });
    case 172:
      return sinv_strategy(rule, "double zero", "double-zero", BB::constant(3),
                           [](const SInvInstance& in, Channel& ch) { return double_zero(in, ch); });
    case 27:
      return sinv_strategy(rule, "block parse", "block-parse", BB::constant(5),
                           [](const SInvInstance& in, Channel& ch) { return block_parse(in, ch); });
    default: return std::nullopt;
  }
}

}  // namespace detail

/// Variant names a rule offers for a problem ("" when there is a single one).
inline std::vector<std::string> strategy_variants(int rule, Problem p) {
  if (p == Problem::SInv && rule == 156) return {"A", "B"};
  return {""};
}

inline std::optional<Strategy> get_strategy(Rule rule, Problem problem, const std::string& variant = {}) {
  if (problem == Problem::Pred) {
    if (!variant.empty()) return std::nullopt;
    return detail::pred_entry(rule.code());
  }
  return detail::sinv_entry(rule.code(), variant);
}

/// Every rule with at least one strategy for `problem`, ascending.
inline std::vector<int> covered_rules(Problem problem) {
  std::vector<int> out;
  for (int c = 0; c < 256; ++c)
    if (get_strategy(Rule(c), problem, strategy_variants(c, problem).front())) out.push_back(c);
  return out;
}

inline RunResult run_strategy(const Strategy& s, const PredInstance& in) {
  if (s.problem != Problem::Pred || !s.pred) throw std::invalid_argument("not a Pred strategy");
  detail::check_pred_instance(in);
  Channel ch;
  RunResult r;
  r.answer = s.pred(in, ch);
  r.bits = ch.bits();
  r.transcript = ch.transcript();
  return r;
}

inline RunResult run_strategy(const Strategy& s, const SInvInstance& in) {
  if (s.problem != Problem::SInv || !s.sinv) throw std::invalid_argument("not an SInv strategy");
  if (in.cut < 0 || in.cut > in.size()) throw std::invalid_argument("cut out of range");
  Channel ch;
  RunResult r;
  r.answer = s.sinv(in, ch);
  r.bits = ch.bits();
  r.transcript = ch.transcript();
  return r;
}

// ---------------------------------------------------------------------------
// Audits

struct Mismatch {
  std::string instance;  // "input|cut" or "u|x|cut"
  int expected = 0;
  int got = 0;
};

struct AuditReport {
  int rule = 0;
  int oracle_rule = 0;
  Problem problem = Problem::Pred;
  std::string strategy;
  std::string variant;
  BitBound bound;
  int n_min = 1;
  int n_max = 0;
  std::vector<int> max_bits_by_n;  // Pred: index n. SInv: one entry.
  int max_bits = 0;
  long long instances = 0;
  long long inconclusive = 0;
  long long mismatch_count = 0;
  std::vector<Mismatch> mismatches;  // first few
  bool correct = true;
  bool within_bound = true;
  std::string note;

  bool passed() const { return correct && within_bound; }
};

inline constexpr std::size_t kKeptMismatches = 16;
inline constexpr int kMaxAuditN = 7;

namespace detail {

inline void record(AuditReport& r, std::string inst, int expected, int got) {
  ++r.mismatch_count;
  r.correct = false;
  if (r.mismatches.size() < kKeptMismatches) r.mismatches.push_back({std::move(inst), expected, got});
}

inline void check_bound(AuditReport& r) {
  r.within_bound = true;
  for (int n = r.n_min; n <= r.n_max; ++n)
    if (r.max_bits_by_n[static_cast<std::size_t>(n)] > r.bound.at(n)) r.within_bound = false;
  if (r.bound.kind == BitBound::Kind::Constant && r.n_max >= 3 &&
      r.max_bits_by_n[3] != r.max_bits_by_n[static_cast<std::size_t>(r.n_max)])
    r.within_bound = false;
}

}  // namespace detail

/// Exhaustive Pred audit: every input of length 2n+1 for n in [1, n_max] and
/// every cut, against `oracle`.
inline AuditReport audit_pred(const Strategy& s, Rule oracle, int n_max) {
  if (n_max < 1 || n_max > kMaxAuditN) throw GuardExceeded("Pred audit range must be 1..7");
  AuditReport r;
  r.rule = s.rule;
  r.oracle_rule = oracle.code();
  r.problem = Problem::Pred;
  r.strategy = s.name;
  r.bound = s.bound;
  r.note = s.note;
  r.n_max = n_max;
  r.max_bits_by_n.assign(static_cast<std::size_t>(n_max) + 1, 0);
  for (int n = 1; n <= n_max; ++n) {
    const std::size_t len = static_cast<std::size_t>(2 * n + 1);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << len); ++b) {
      const Word w = Word::from_bits(b, len);
      const int expected = pred_value(oracle, w);
      for (int c = 0; c <= static_cast<int>(len); ++c) {
        const RunResult out = run_strategy(s, PredInstance{w, c});
        ++r.instances;
        auto& mb = r.max_bits_by_n[static_cast<std::size_t>(n)];
        mb = std::max(mb, out.bits);
        if (out.answer != expected) detail::record(r, w.str() + "|" + std::to_string(c), expected, out.answer);
      }
    }
    r.max_bits = std::max(r.max_bits, r.max_bits_by_n[static_cast<std::size_t>(n)]);
  }
  detail::check_bound(r);
  return r;
}

/// Backgrounds of length 1..max_u and perturbations of length 0..max_x.
inline std::vector<std::pair<CyclicWord, Word>> sinv_catalog(std::size_t max_u = 4, std::size_t max_x = 6) {
  std::vector<std::pair<CyclicWord, Word>> out;
  for (std::size_t lu = 1; lu <= max_u; ++lu)
    for (std::uint64_t ub = 0; ub < (std::uint64_t{1} << lu); ++ub)
      for (std::size_t lx = 0; lx <= max_x; ++lx)
        for (std::uint64_t xb = 0; xb < (std::uint64_t{1} << lx); ++xb)
          out.emplace_back(CyclicWord(Word::from_bits(ub, lu)), Word::from_bits(xb, lx));
  return out;
}

/// SInv audit over the catalog and every cut; Inconclusive oracle verdicts
/// are counted and skipped.
inline AuditReport audit_sinv(const Strategy& s, Rule oracle, std::size_t max_u = 4, std::size_t max_x = 6,
                              int horizon = 256) {
  if (max_u > 6 || max_x > 8) throw GuardExceeded("SInv audit catalog too large");
  AuditReport r;
  r.rule = s.rule;
  r.oracle_rule = oracle.code();
  r.problem = Problem::SInv;
  r.strategy = s.name;
  r.variant = s.variant;
  r.bound = s.bound;
  r.note = s.note;
  r.n_min = 0;
  r.n_max = 0;
  r.max_bits_by_n.assign(1, 0);
  for (const auto& [u, x] : sinv_catalog(max_u, max_x)) {
    const SInvVerdict v = sinv_decide(oracle, u, x, {horizon, -1});
    if (!v.conclusive()) {
      ++r.inconclusive;
      continue;
    }
    const int expected = v.kind == SInvVerdict::Kind::Invaded ? 1 : 0;
    for (int c = 0; c <= static_cast<int>(x.size()); ++c) {
      const RunResult out = run_strategy(s, SInvInstance{u, x, c});
      ++r.instances;
      r.max_bits = std::max(r.max_bits, out.bits);
      if (out.answer != expected)
        detail::record(r, u.str() + "|" + x.str() + "|" + std::to_string(c), expected, out.answer);
    }
  }
  r.max_bits_by_n[0] = r.max_bits;
  r.within_bound = r.max_bits <= s.bound.at(1);
  return r;
}

/// Audit of the cataloged strategy for `rule`. Absent strategies yield an
/// empty optional.
inline std::optional<AuditReport> audit_strategy(Rule rule, Problem problem, int n_max = 5,
                                                 const std::string& variant = {}) {
  const auto s = get_strategy(rule, problem, variant);
  if (!s) return std::nullopt;
  return problem == Problem::Pred ? audit_pred(*s, rule, n_max) : audit_sinv(*s, rule);
}

// ---------------------------------------------------------------------------
// Unrolling

/// Protocol tree of a Pred strategy on the cut table of (rule, n, cut), built
/// from all transcripts. Throws std::logic_error if a message depends on the
/// other party's input or the answer is not determined by the transcript.
inline ProtocolTree unroll_protocol(const Strategy& s, int n, int cut) {
  if (s.problem != Problem::Pred) throw std::invalid_argument("unrolling is defined for Pred strategies");
  const int len = 2 * n + 1;
  if (n < 0 || cut < 0 || cut > len) throw std::invalid_argument("cut out of range");
  if (static_cast<std::size_t>(len) > kMaxPredLength) throw GuardExceeded("Pred input too long to unroll");
  const std::uint64_t rows = std::uint64_t{1} << cut, cols = std::uint64_t{1} << (len - cut);
  struct Run {
    std::uint64_t r, c;
    RunResult res;
  };
  std::vector<Run> runs;
  for (std::uint64_t r = 0; r < rows; ++r)
    for (std::uint64_t c = 0; c < cols; ++c)
      runs.push_back({r, c, run_strategy(s, PredInstance{Word::from_bits((r << (len - cut)) | c, static_cast<std::size_t>(len)), cut})});

  std::function<ProtocolTree(const std::vector<std::size_t>&, std::size_t)> build =
      [&](const std::vector<std::size_t>& ids, std::size_t depth) -> ProtocolTree {
    bool ended = false, running = false;
    for (auto i : ids) (runs[i].res.transcript.size() == depth ? ended : running) = true;
    if (ended && running) throw std::logic_error("transcript length depends on hidden input");
    if (ended) {
      const int v = runs[ids.front()].res.answer;
      for (auto i : ids)
        if (runs[i].res.answer != v) throw std::logic_error("answer not determined by the transcript");
      return ProtocolTree::leaf(v);
    }
    const Party speaker = runs[ids.front()].res.transcript[depth].first;
    const bool alice = speaker == Party::Alice;
    std::vector<bool> goes_right(alice ? rows : cols, false);
    std::vector<int> seen(goes_right.size(), -1);
    std::vector<std::size_t> left, right;
    for (auto i : ids) {
      const auto& [who, bit] = runs[i].res.transcript[depth];
      if (who != speaker) throw std::logic_error("speaker depends on hidden input");
      const std::uint64_t own = alice ? runs[i].r : runs[i].c;
      int& prev = seen[own];
      if (prev >= 0 && prev != static_cast<int>(bit)) throw std::logic_error("message depends on the other party's input");
      prev = bit;
      goes_right[own] = bit;
      (bit ? right : left).push_back(i);
    }
    const ProtocolTree l = left.empty() ? ProtocolTree::leaf(0) : build(left, depth + 1);
    const ProtocolTree rt = right.empty() ? ProtocolTree::leaf(0) : build(right, depth + 1);
    return ProtocolTree::node(speaker, goes_right, l, rt);
  };
  std::vector<std::size_t> all(runs.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return build(all, 0);
}

}  // namespace eca
