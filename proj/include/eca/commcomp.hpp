#pragma once

// Two-party deterministic communication complexity: function tables, protocol
// trees, fooling sets and an exact D(f) search over sub-rectangles.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "eca/core.hpp"
#include "eca/errors.hpp"

namespace eca {

/// f: X × Y -> Z as an explicit matrix; rows are Alice's inputs, columns Bob's.
class FunctionTable {
 public:
  FunctionTable() = default;

  FunctionTable(std::vector<std::string> row_inputs, std::vector<std::string> col_inputs, std::vector<int> entries)
      : rows_(std::move(row_inputs)), cols_(std::move(col_inputs)), entries_(std::move(entries)) {
    if (entries_.size() != rows_.size() * cols_.size())
      throw std::invalid_argument("function table must define every entry");
    if (std::set<std::string>(rows_.begin(), rows_.end()).size() != rows_.size() ||
        std::set<std::string>(cols_.begin(), cols_.end()).size() != cols_.size())
      throw std::invalid_argument("function table inputs must be distinct");
  }

  /// Unlabelled table; inputs are named by their index.
  static FunctionTable from_matrix(const std::vector<std::vector<int>>& m) {
    if (m.empty()) throw std::invalid_argument("function table needs at least one row");
    std::vector<std::string> rows, cols;
    std::vector<int> entries;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i].size() != m[0].size()) throw std::invalid_argument("ragged function table");
      rows.push_back(std::to_string(i));
      entries.insert(entries.end(), m[i].begin(), m[i].end());
    }
    for (std::size_t j = 0; j < m[0].size(); ++j) cols.push_back(std::to_string(j));
    return FunctionTable(std::move(rows), std::move(cols), std::move(entries));
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_.size(); }
  int at(std::size_t r, std::size_t c) const { return entries_[r * cols_.size() + c]; }
  const std::vector<std::string>& row_inputs() const { return rows_; }
  const std::vector<std::string>& col_inputs() const { return cols_; }
  const std::vector<int>& entries() const { return entries_; }

  std::optional<std::size_t> row_index(const std::string& x) const { return find(rows_, x); }
  std::optional<std::size_t> col_index(const std::string& y) const { return find(cols_, y); }

  std::size_t distinct_values() const { return std::set<int>(entries_.begin(), entries_.end()).size(); }

  FunctionTable transposed() const {
    std::vector<int> t(entries_.size());
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t c = 0; c < cols(); ++c) t[c * rows() + r] = at(r, c);
    return FunctionTable(cols_, rows_, std::move(t));
  }

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

 private:
  static std::optional<std::size_t> find(const std::vector<std::string>& v, const std::string& x) {
    auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
  }

  std::vector<std::string> rows_;
  std::vector<std::string> cols_;
  std::vector<int> entries_;
};

inline int ceil_log2(std::uint64_t x) {
  if (x <= 1) return 0;
  return static_cast<int>(std::bit_width(x - 1));
}

// ---------------------------------------------------------------------------
// Protocol trees

enum class Party { Alice, Bob };

inline const char* to_string(Party p) { return p == Party::Alice ? "Alice" : "Bob"; }

struct ProtocolNode {
  enum class Kind { Leaf, Alice, Bob };
  Kind kind = Kind::Leaf;
  int value = 0;                 // leaves
  std::vector<bool> goes_right;  // internal: speaker input index -> r?
  int left = -1;
  int right = -1;
};

/// Binary protocol tree stored as an arena; node 0 is the root.
class ProtocolTree {
 public:
  static ProtocolTree leaf(int value) {
    ProtocolTree t;
    t.nodes_.push_back(ProtocolNode{ProtocolNode::Kind::Leaf, value, {}, -1, -1});
    return t;
  }

  /// Internal node for `speaker` whose branch map is `goes_right`, over
  /// subtrees `l` and `r`.
  static ProtocolTree node(Party speaker, std::vector<bool> goes_right, const ProtocolTree& l, const ProtocolTree& r) {
    ProtocolTree t;
    t.nodes_.push_back(ProtocolNode{speaker == Party::Alice ? ProtocolNode::Kind::Alice : ProtocolNode::Kind::Bob, 0,
                                    std::move(goes_right), -1, -1});
    t.nodes_[0].left = t.graft(l);
    t.nodes_[0].right = t.graft(r);
    return t;
  }

  const std::vector<ProtocolNode>& nodes() const { return nodes_; }
  std::vector<ProtocolNode>& mutable_nodes() { return nodes_; }

  int depth() const { return depth_from(0); }

 private:
  friend class ProtocolTreeBuilder;

  int graft(const ProtocolTree& sub) {
    const int offset = static_cast<int>(nodes_.size());
    for (ProtocolNode n : sub.nodes_) {
      if (n.left >= 0) n.left += offset;
      if (n.right >= 0) n.right += offset;
      nodes_.push_back(std::move(n));
    }
    return offset;
  }

  int depth_from(int i) const {
    const ProtocolNode& n = nodes_[static_cast<std::size_t>(i)];
    if (n.kind == ProtocolNode::Kind::Leaf) return 0;
    return 1 + std::max(depth_from(n.left), depth_from(n.right));
  }

  std::vector<ProtocolNode> nodes_;
};

struct ProtocolOutcome {
  int value = 0;
  int bits = 0;
};

/// Walks the tree for inputs (x, y) given as row/column indices.
inline ProtocolOutcome eval_protocol(const ProtocolTree& p, std::size_t x, std::size_t y) {
  int i = 0;
  int bits = 0;
  while (true) {
    const ProtocolNode& n = p.nodes()[static_cast<std::size_t>(i)];
    if (n.kind == ProtocolNode::Kind::Leaf) return {n.value, bits};
    const std::size_t input = n.kind == ProtocolNode::Kind::Alice ? x : y;
    if (input >= n.goes_right.size()) throw std::out_of_range("protocol node has no branch for input");
    i = n.goes_right[input] ? n.right : n.left;
    ++bits;
  }
}

inline bool protocol_correct(const ProtocolTree& p, const FunctionTable& f) {
  for (std::size_t x = 0; x < f.rows(); ++x)
    for (std::size_t y = 0; y < f.cols(); ++y)
      if (eval_protocol(p, x, y).value != f.at(x, y)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Fooling sets

struct FoolingSet {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (row, col)
  int value = 0;
};

/// True iff every pair maps to `value` and every cross pair breaks it on at
/// least one side. A valid set S certifies D(f) >= ceil(log2 |S|).
inline bool fooling_set_check(const FunctionTable& f, const FoolingSet& s) {
  for (const auto& [x, y] : s.pairs) {
    if (x >= f.rows() || y >= f.cols()) throw std::out_of_range("fooling pair outside the table");
    if (f.at(x, y) != s.value) return false;
  }
  for (std::size_t i = 0; i < s.pairs.size(); ++i)
    for (std::size_t j = i + 1; j < s.pairs.size(); ++j) {
      const auto [xi, yi] = s.pairs[i];
      const auto [xj, yj] = s.pairs[j];
      if (f.at(xi, yj) == s.value && f.at(xj, yi) == s.value) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Exact D(f)

struct CcResult {
  int depth = 0;          // exact D(f) when !exceeded
  bool exceeded = false;  // D(f) > cap
};

inline constexpr std::size_t kMaxCcSide = 24;

namespace detail {

using Mask = std::uint32_t;

// Rank of a 0/1 matrix modulo a prime; never exceeds the rational rank.
inline int rank_mod_p(std::vector<std::vector<std::int64_t>> m) {
  constexpr std::int64_t p = 2147483647;
  auto pw = [&](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b %= p;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    const auto& pr = m[static_cast<std::size_t>(rank)];
    const std::int64_t inv = pw(pr[c], p - 2);
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const std::int64_t factor = m[r][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = ((m[r][k] - factor * pr[k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

class CcSearch {
 public:
  explicit CcSearch(std::vector<std::vector<int>> m) : m_(std::move(m)) {}

  int rows() const { return static_cast<int>(m_.size()); }
  int cols() const { return static_cast<int>(m_[0].size()); }

  bool feasible(Mask rows, Mask cols, int budget) {
    canonicalize(rows, cols);
    const std::uint64_t key = (static_cast<std::uint64_t>(rows) << 32) | cols;
    auto& memo = memo_[key];
    if (memo.lower == 0 && memo.upper < 0) {
      memo.lower = lower_bound(rows, cols);
      if (memo.lower == 0) memo.upper = 0;
    }
    if (budget < memo.lower) return false;
    if (memo.upper >= 0 && budget >= memo.upper) return true;

    // Trivial protocol: one side names its (distinct) input, the other names the value.
    const int values = ceil_log2(distinct_values(rows, cols));
    const int trivial = std::min(ceil_log2(static_cast<std::uint64_t>(std::popcount(rows))),
                                 ceil_log2(static_cast<std::uint64_t>(std::popcount(cols)))) + values;
    if (budget >= trivial) {
      remember_upper(key, trivial);
      return true;
    }

    if (try_splits(rows, cols, budget, true) || try_splits(rows, cols, budget, false)) {
      remember_upper(key, budget);
      return true;
    }
    auto& m = memo_[key];
    m.lower = std::max(m.lower, budget + 1);
    return false;
  }

  int lower_bound(Mask rows, Mask cols) const {
    const std::set<int> values = value_set(rows, cols);
    if (values.size() <= 1) return 0;
    int bound = std::max(1, ceil_log2(values.size()));
    // Leaves >= monochromatic partition size >= sum over values of rank(M_z).
    int rank_sum = 0;
    for (int z : values) {
      std::vector<std::vector<std::int64_t>> ind;
      for (int r = 0; r < rows_n(); ++r) {
        if (!(rows >> r & 1U)) continue;
        std::vector<std::int64_t> row;
        for (int c = 0; c < cols_n(); ++c)
          if (cols >> c & 1U) row.push_back(m_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == z);
        ind.push_back(std::move(row));
      }
      rank_sum += rank_mod_p(std::move(ind));
    }
    return std::max(bound, ceil_log2(static_cast<std::uint64_t>(rank_sum)));
  }

 private:
  struct Bounds {
    int lower = 0;
    int upper = -1;
  };

  int rows_n() const { return rows(); }
  int cols_n() const { return cols(); }

  void remember_upper(std::uint64_t key, int value) {
    auto& m = memo_[key];
    if (m.upper < 0 || value < m.upper) m.upper = value;
  }

  std::set<int> value_set(Mask rows, Mask cols) const {
    std::set<int> out;
    for (int r = 0; r < rows_n(); ++r)
      if (rows >> r & 1U)
        for (int c = 0; c < cols_n(); ++c)
          if (cols >> c & 1U) out.insert(m_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    return out;
  }

  std::uint64_t distinct_values(Mask rows, Mask cols) const { return value_set(rows, cols).size(); }

  // Drop rows (columns) that duplicate an earlier one on the live rectangle.
  void canonicalize(Mask& rows, Mask& cols) const {
    auto same_row = [&](int a, int b) {
      for (int c = 0; c < cols_n(); ++c)
        if ((cols >> c & 1U) && m_[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] != m_[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])
          return false;
      return true;
    };
    auto same_col = [&](int a, int b) {
      for (int r = 0; r < rows_n(); ++r)
        if ((rows >> r & 1U) && m_[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)] != m_[static_cast<std::size_t>(r)][static_cast<std::size_t>(b)])
          return false;
      return true;
    };
    for (int a = 0; a < rows_n(); ++a) {
      if (!(rows >> a & 1U)) continue;
      for (int b = a + 1; b < rows_n(); ++b)
        if ((rows >> b & 1U) && same_row(a, b)) rows &= ~(Mask{1} << b);
    }
    for (int a = 0; a < cols_n(); ++a) {
      if (!(cols >> a & 1U)) continue;
      for (int b = a + 1; b < cols_n(); ++b)
        if ((cols >> b & 1U) && same_col(a, b)) cols &= ~(Mask{1} << b);
    }
  }

  // Every two-part split of the live rows (or columns); the part holding the
  // lowest live index is enumerated, so mirror-image splits are skipped.
  bool try_splits(Mask rows, Mask cols, int budget, bool split_rows) {
    const Mask live = split_rows ? rows : cols;
    const int k = std::popcount(live);
    if (k < 2) return false;
    std::vector<int> idx;
    for (int i = 0; i < 32; ++i)
      if (live >> i & 1U) idx.push_back(i);
    const std::uint64_t combos = std::uint64_t{1} << (k - 1);
    for (std::uint64_t sel = 0; sel + 1 < combos; ++sel) {
      Mask part = Mask{1} << idx[0];
      for (int j = 1; j < k; ++j)
        if (sel >> (j - 1) & 1U) part |= Mask{1} << idx[static_cast<std::size_t>(j)];
      const Mask other = live & ~part;
      bool ok = split_rows ? feasible(part, cols, budget - 1) && feasible(other, cols, budget - 1)
                           : feasible(rows, part, budget - 1) && feasible(rows, other, budget - 1);
      if (ok) return true;
    }
    return false;
  }

  std::vector<std::vector<int>> m_;
  std::unordered_map<std::uint64_t, Bounds> memo_;
};

// Rows and columns with identical contents are merged; D(f) is unchanged.
inline std::vector<std::vector<int>> dedupe(const FunctionTable& f) {
  std::vector<std::vector<int>> rows;
  std::set<std::vector<int>> seen;
  for (std::size_t r = 0; r < f.rows(); ++r) {
    std::vector<int> row(f.cols());
    for (std::size_t c = 0; c < f.cols(); ++c) row[c] = f.at(r, c);
    if (seen.insert(row).second) rows.push_back(std::move(row));
  }
  std::vector<std::vector<int>> cols;
  std::set<std::vector<int>> seen_cols;
  for (std::size_t c = 0; c < f.cols(); ++c) {
    std::vector<int> col(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) col[r] = rows[r][c];
    if (seen_cols.insert(col).second) cols.push_back(std::move(col));
  }
  std::vector<std::vector<int>> out(rows.size(), std::vector<int>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out[r][c] = cols[c][r];
  return out;
}

}  // namespace detail

/// Exact deterministic communication complexity, by iterative deepening
/// over protocol depth. Sub-rectangles are memoized by (row mask, column
/// mask) and pruned by the value-count and rank lower bounds. A leaf's value
/// is not communicated, so a non-constant one-sided function costs 1.
inline CcResult cc_exact(const FunctionTable& f, int cap) {
  if (cap < 0) throw std::invalid_argument("cap must be nonnegative");
  if (f.rows() == 0 || f.cols() == 0) return {0, false};
  if (f.rows() * f.cols() > (std::size_t{1} << 20)) throw GuardExceeded("function table too large");
  auto m = detail::dedupe(f);
  if (m.size() > kMaxCcSide || m[0].size() > kMaxCcSide)
    throw GuardExceeded("too many distinct rows or columns for exact search");
  detail::CcSearch search(std::move(m));
  const detail::Mask rows = search.rows() == 32 ? ~detail::Mask{0} : (detail::Mask{1} << search.rows()) - 1;
  const detail::Mask cols = search.cols() == 32 ? ~detail::Mask{0} : (detail::Mask{1} << search.cols()) - 1;
  const int lb = search.lower_bound(rows, cols);
  for (int d = lb; d <= cap; ++d)
    if (search.feasible(rows, cols, d)) return {d, false};
  return {cap + 1, true};
}

/// ceil(log2(sum_z rank M_z)) and ceil(log2 #values): the lower bound used
/// for pruning, exposed for reporting.
inline int cc_lower_bound(const FunctionTable& f) {
  auto m = detail::dedupe(f);
  if (m.size() > 32 || m[0].size() > 32) throw GuardExceeded("too many distinct rows or columns");
  detail::CcSearch search(std::move(m));
  const detail::Mask rows = search.rows() == 32 ? ~detail::Mask{0} : (detail::Mask{1} << search.rows()) - 1;
  const detail::Mask cols = search.cols() == 32 ? ~detail::Mask{0} : (detail::Mask{1} << search.cols()) - 1;
  return search.lower_bound(rows, cols);
}

/// Splits f: {0,1}^n -> Z at position i: Alice gets the first i cells, Bob
/// the remaining n-i. Inputs are labelled by their cell strings.
inline FunctionTable cc_of_cut(const std::function<int(const Word&)>& f, int n, int i) {
  if (n < 0 || i < 0 || i > n) throw std::invalid_argument("cut position out of range");
  if (n > 20) throw GuardExceeded("input too long to tabulate");
  const std::uint64_t rows = std::uint64_t{1} << i;
  const std::uint64_t cols = std::uint64_t{1} << (n - i);
  std::vector<std::string> row_inputs, col_inputs;
  for (std::uint64_t r = 0; r < rows; ++r) row_inputs.push_back(Word::from_bits(r, static_cast<std::size_t>(i)).str());
  for (std::uint64_t c = 0; c < cols; ++c) col_inputs.push_back(Word::from_bits(c, static_cast<std::size_t>(n - i)).str());
  std::vector<int> entries;
  entries.reserve(rows * cols);
  for (std::uint64_t r = 0; r < rows; ++r)
    for (std::uint64_t c = 0; c < cols; ++c)
      entries.push_back(f(Word::from_bits((r << (n - i)) | c, static_cast<std::size_t>(n))));
  return FunctionTable(std::move(row_inputs), std::move(col_inputs), std::move(entries));
}

}  // namespace eca
