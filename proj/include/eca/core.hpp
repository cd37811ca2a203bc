#pragma once

// Elementary cellular automata: rules, finite and cyclic words, evolution,
// and the mirror/complement symmetry classes.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eca {

using Cell = std::uint8_t;

/// An elementary (two-state, radius-1) local rule in Wolfram numbering:
/// the neighborhood (l,c,r) reads as the integer 4l+2c+r and selects a bit
/// of the code.
class Rule {
 public:
  explicit constexpr Rule(int code) : code_(checked(code)) {}

  static constexpr Rule from_table(const std::array<Cell, 8>& table) {
    int code = 0;
    for (int i = 0; i < 8; ++i) code |= (table[i] & 1) << i;
    return Rule(code);
  }

  constexpr int code() const { return code_; }

  constexpr Cell operator()(Cell l, Cell c, Cell r) const {
    return static_cast<Cell>((code_ >> (4 * l + 2 * c + r)) & 1);
  }

  /// Output for the neighborhood whose value is `index` (0..7).
  constexpr Cell at(int index) const { return static_cast<Cell>((code_ >> index) & 1); }

  constexpr std::array<Cell, 8> table() const {
    std::array<Cell, 8> t{};
    for (int i = 0; i < 8; ++i) t[i] = at(i);
    return t;
  }

  friend constexpr bool operator==(Rule, Rule) = default;

 private:
  static constexpr int checked(int code) {
    if (code < 0 || code > 255) throw std::out_of_range("rule code must be in [0,255]");
    return code;
  }

  int code_;
};

inline constexpr Rule make_rule(int code) { return Rule(code); }

/// f'(l,c,r) = f(r,c,l)
inline constexpr Rule mirror(Rule f) {
  std::array<Cell, 8> t{};
  for (int l = 0; l < 2; ++l)
    for (int c = 0; c < 2; ++c)
      for (int r = 0; r < 2; ++r) t[4 * l + 2 * c + r] = f(r, c, l);
  return Rule::from_table(t);
}

/// f'(l,c,r) = not f(not l, not c, not r)
inline constexpr Rule complement(Rule f) {
  std::array<Cell, 8> t{};
  for (int i = 0; i < 8; ++i) t[i] = static_cast<Cell>(1 - f.at(7 - i));
  return Rule::from_table(t);
}

/// A finite configuration over {0,1}.
class Word {
 public:
  Word() = default;

  explicit Word(std::vector<Cell> cells) : cells_(std::move(cells)) {
    for (Cell c : cells_)
      if (c > 1) throw std::invalid_argument("word cells must be 0 or 1");
  }

  static Word parse(std::string_view text) {
    std::vector<Cell> cells;
    cells.reserve(text.size());
    for (char ch : text) {
      if (ch == '0' || ch == '1') {
        cells.push_back(static_cast<Cell>(ch - '0'));
      } else if (ch != ' ' && ch != '_') {
        throw std::invalid_argument("word may only contain 0 and 1: '" + std::string(text) + "'");
      }
    }
    return Word(std::move(cells));
  }

  /// Word of length `len` whose cell i is bit (len-1-i) of `bits`.
  static Word from_bits(std::uint64_t bits, std::size_t len) {
    std::vector<Cell> cells(len);
    for (std::size_t i = 0; i < len; ++i) cells[i] = static_cast<Cell>((bits >> (len - 1 - i)) & 1);
    return Word(std::move(cells));
  }

  static Word filled(std::size_t len, Cell value) { return Word(std::vector<Cell>(len, value)); }

  std::uint64_t to_bits() const {
    std::uint64_t bits = 0;
    for (Cell c : cells_) bits = (bits << 1) | c;
    return bits;
  }

  std::string str() const {
    std::string s;
    s.reserve(cells_.size());
    for (Cell c : cells_) s.push_back(static_cast<char>('0' + c));
    return s;
  }

  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  Cell operator[](std::size_t i) const { return cells_[i]; }
  std::span<const Cell> cells() const { return cells_; }
  auto begin() const { return cells_.begin(); }
  auto end() const { return cells_.end(); }

  Word sub(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Cell>(cells_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  cells_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
  }

  Word reversed() const { return Word(std::vector<Cell>(cells_.rbegin(), cells_.rend())); }

  Word negated() const {
    std::vector<Cell> out(cells_);
    for (Cell& c : out) c ^= 1;
    return Word(std::move(out));
  }

  bool contains(const Word& pattern) const {
    if (pattern.size() > size()) return false;
    return std::search(cells_.begin(), cells_.end(), pattern.cells_.begin(), pattern.cells_.end()) !=
           cells_.end();
  }

  friend Word operator+(const Word& a, const Word& b) {
    std::vector<Cell> out(a.cells_);
    out.insert(out.end(), b.cells_.begin(), b.cells_.end());
    return Word(std::move(out));
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Cell> cells_;
};

/// A nonempty word read cyclically; stands for the periodic configuration p_u
/// with (p_u)_i = u_{i mod |u|}.
class CyclicWord {
 public:
  explicit CyclicWord(Word cells) : cells_(std::move(cells)) {
    if (cells_.empty()) throw std::invalid_argument("cyclic word must be nonempty");
  }

  static CyclicWord parse(std::string_view text) { return CyclicWord(Word::parse(text)); }

  std::size_t size() const { return cells_.size(); }
  const Word& word() const { return cells_; }
  std::string str() const { return cells_.str(); }

  Cell operator[](std::size_t i) const { return cells_[i]; }

  /// Value at any integer position of the periodic configuration.
  Cell at(long long i) const {
    const auto n = static_cast<long long>(size());
    return cells_[static_cast<std::size_t>(((i % n) + n) % n)];
  }

  /// (rotate(s))_i = u_{i+s}; rotate(1) is the left shift.
  CyclicWord rotated(long long s) const {
    std::vector<Cell> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = at(static_cast<long long>(i) + s);
    return CyclicWord(Word(std::move(out)));
  }

  /// Smallest shift s >= 0 with rotated(s) == other, or -1.
  long long rotation_to(const CyclicWord& other) const {
    if (other.size() != size()) return -1;
    for (std::size_t s = 0; s < size(); ++s)
      if (rotated(static_cast<long long>(s)) == other) return static_cast<long long>(s);
    return -1;
  }

  /// Shortest v such that u = v^k.
  CyclicWord primitive_root() const {
    const std::size_t n = size();
    for (std::size_t p = 1; p < n; ++p) {
      if (n % p != 0) continue;
      bool ok = true;
      for (std::size_t i = p; i < n && ok; ++i) ok = cells_[i] == cells_[i - p];
      if (ok) return CyclicWord(cells_.sub(0, p));
    }
    return *this;
  }

  /// Lexicographically least rotation, together with the shift producing it.
  std::pair<CyclicWord, long long> canonical() const {
    CyclicWord best = *this;
    long long best_shift = 0;
    for (std::size_t s = 1; s < size(); ++s) {
      CyclicWord r = rotated(static_cast<long long>(s));
      if (r.word() < best.word()) {
        best = r;
        best_shift = static_cast<long long>(s);
      }
    }
    return {best, best_shift};
  }

  bool is_uniform() const {
    return std::all_of(cells_.begin(), cells_.end(), [&](Cell c) { return c == cells_[0]; });
  }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  Word cells_;
};

/// One step on a finite word; the result is two cells shorter.
inline Word step_word(Rule rule, const Word& w) {
  if (w.size() < 3) return Word();
  std::vector<Cell> out(w.size() - 2);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = rule(w[i], w[i + 1], w[i + 2]);
  return Word(std::move(out));
}

inline Word step_word(Rule rule, const Word& w, int t) {
  Word cur = w;
  for (int k = 0; k < t; ++k) cur = step_word(rule, cur);
  return cur;
}

inline CyclicWord step_cyclic(Rule rule, const CyclicWord& u) {
  const auto n = static_cast<long long>(u.size());
  std::vector<Cell> out(u.size());
  for (long long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = rule(u.at(i - 1), u.at(i), u.at(i + 1));
  return CyclicWord(Word(std::move(out)));
}

inline CyclicWord step_cyclic(Rule rule, const CyclicWord& u, int t) {
  CyclicWord cur = u;
  for (int k = 0; k < t; ++k) cur = step_cyclic(rule, cur);
  return cur;
}

/// Rows of a space-time diagram; row k+1 is the image of row k.
using SpaceTimeDiagram = std::vector<Word>;

inline SpaceTimeDiagram evolve(Rule rule, const Word& w, int t) {
  if (t < 0) throw std::invalid_argument("step count must be nonnegative");
  SpaceTimeDiagram rows;
  rows.reserve(static_cast<std::size_t>(t) + 1);
  rows.push_back(w);
  for (int k = 0; k < t; ++k) rows.push_back(step_word(rule, rows.back()));
  return rows;
}

struct Classification {
  std::vector<std::vector<int>> classes;  // each sorted; ordered by representative
  std::array<int, 256> class_of{};        // rule code -> index into classes

  int representative(int code) const { return classes[static_cast<std::size_t>(class_of[code])].front(); }
  std::size_t size() const { return classes.size(); }
};

/// Orbits of the four-element group generated by mirror and complement.
inline Classification classify() {
  Classification out;
  out.class_of.fill(-1);
  for (int code = 0; code < 256; ++code) {
    if (out.class_of[code] >= 0) continue;
    const Rule f(code);
    std::vector<int> members = {code, mirror(f).code(), complement(f).code(), complement(mirror(f)).code()};
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const int index = static_cast<int>(out.classes.size());
    for (int m : members) out.class_of[m] = index;
    out.classes.push_back(std::move(members));
  }
  return out;
}

/// Is f(l,c,r) = a·l xor b·c xor d·r xor e for some bits a,b,d,e?
inline bool is_affine(Rule f) {
  const int e = f.at(0);
  const int a = f.at(4) ^ e, b = f.at(2) ^ e, d = f.at(1) ^ e;
  for (int i = 0; i < 8; ++i) {
    const int l = (i >> 2) & 1, c = (i >> 1) & 1, r = i & 1;
    if (f.at(i) != ((a & l) ^ (b & c) ^ (d & r) ^ e)) return false;
  }
  return true;
}

}  // namespace eca
