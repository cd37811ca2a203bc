#include "catch2/catch_amalgamated.hpp"

#include <random>

#include "eca/commcomp.hpp"

using namespace eca;

namespace {

// Plain recursion over every split; no memo, no pruning, no dedupe.
bool naive_feasible(const FunctionTable& f, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                    int d) {
  std::set<int> values;
  for (auto r : rows)
    for (auto c : cols) values.insert(f.at(r, c));
  if (values.size() <= 1) return true;
  if (d == 0) return false;
  auto try_side = [&](const std::vector<std::size_t>& side, bool is_rows) {
    const std::size_t k = side.size();
    for (std::uint64_t sel = 1; sel + 1 < (1ULL << k); ++sel) {
      std::vector<std::size_t> a, b;
      for (std::size_t i = 0; i < k; ++i) (sel >> i & 1 ? a : b).push_back(side[i]);
      const bool ok = is_rows ? naive_feasible(f, a, cols, d - 1) && naive_feasible(f, b, cols, d - 1)
                              : naive_feasible(f, rows, a, d - 1) && naive_feasible(f, rows, b, d - 1);
      if (ok) return true;
    }
    return false;
  };
  return try_side(rows, true) || try_side(cols, false);
}

int naive_cc(const FunctionTable& f) {
  std::vector<std::size_t> rows(f.rows()), cols(f.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  for (int d = 0;; ++d)
    if (naive_feasible(f, rows, cols, d)) return d;
}

FunctionTable xor1() { return FunctionTable::from_matrix({{0, 1}, {1, 0}}); }

FunctionTable equality(int bits) {
  const int n = 1 << bits;
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return FunctionTable::from_matrix(m);
}

FunctionTable random_table(std::mt19937& rng, std::size_t r, std::size_t c, int values) {
  std::vector<std::vector<int>> m(r, std::vector<int>(c));
  for (auto& row : m)
    for (auto& v : row) v = static_cast<int>(rng() % static_cast<unsigned>(values));
  return FunctionTable::from_matrix(m);
}

// Alice sends x, Bob sends y, leaves hold x xor y.
ProtocolTree xor_tree() {
  const ProtocolTree after0 = ProtocolTree::node(Party::Bob, {false, true}, ProtocolTree::leaf(0), ProtocolTree::leaf(1));
  const ProtocolTree after1 = ProtocolTree::node(Party::Bob, {false, true}, ProtocolTree::leaf(1), ProtocolTree::leaf(0));
  return ProtocolTree::node(Party::Alice, {false, true}, after0, after1);
}

}  // namespace

TEST_CASE("function table validation") {
  CHECK_THROWS_AS(FunctionTable({"a", "a"}, {"x"}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(FunctionTable({"a"}, {"x"}, {0, 0}), std::invalid_argument);
  const FunctionTable t({"a", "b"}, {"x", "y", "z"}, {0, 1, 2, 3, 4, 5});
  CHECK(t.at(1, 2) == 5);
  CHECK(t.transposed().at(2, 1) == 5);
  CHECK(t.transposed().transposed() == t);
  CHECK(t.row_index("b") == 1u);
  CHECK_FALSE(t.col_index("w"));
}

TEST_CASE("exact complexity of small tables") {
  CHECK(cc_exact(FunctionTable::from_matrix({{3, 3}, {3, 3}}), 4).depth == 0);
  CHECK(cc_exact(xor1(), 4).depth == 2);
  CHECK(cc_exact(equality(2), 4).depth == 3);
  CHECK(cc_exact(FunctionTable::from_matrix({{0, 1}}), 4).depth == 1);
  CHECK(cc_exact(FunctionTable::from_matrix({{0, 1, 2, 3}}), 4).depth == 2);
}

TEST_CASE("cap overflow is reported distinctly") {
  const CcResult r = cc_exact(equality(2), 2);
  CHECK(r.exceeded);
  CHECK(r.depth == 3);
  CHECK_FALSE(cc_exact(equality(2), 3).exceeded);
}

TEST_CASE("oversize tables are rejected") {
  std::vector<std::vector<int>> m(30, std::vector<int>(30));
  for (int i = 0; i < 30; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  CHECK_THROWS_AS(cc_exact(FunctionTable::from_matrix(m), 10), GuardExceeded);
}

TEST_CASE("exact search agrees with naive recursion") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const FunctionTable f = random_table(rng, r, c, 2 + static_cast<int>(rng() % 2));
    CHECK(cc_exact(f, 8).depth == naive_cc(f));
  }
}

TEST_CASE("transpose symmetry and value-count bound") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const FunctionTable f = random_table(rng, 6, 6, 2 + static_cast<int>(trial % 2));
    const int d = cc_exact(f, 12).depth;
    CHECK(d == cc_exact(f.transposed(), 12).depth);
    if (f.distinct_values() > 1) CHECK(d >= std::max(1, ceil_log2(f.distinct_values())));
    CHECK(d >= cc_lower_bound(f));
  }
}

TEST_CASE("protocol evaluation") {
  const ProtocolTree leaf = ProtocolTree::leaf(7);
  CHECK(eval_protocol(leaf, 0, 0).value == 7);
  CHECK(eval_protocol(leaf, 0, 0).bits == 0);
  const ProtocolTree x = xor_tree();
  CHECK(eval_protocol(x, 1, 1).value == 0);
  CHECK(eval_protocol(x, 1, 1).bits == 2);
  CHECK(x.depth() == 2);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) CHECK(eval_protocol(x, a, b).bits <= x.depth());
}

TEST_CASE("protocol correctness") {
  CHECK(protocol_correct(ProtocolTree::leaf(2), FunctionTable::from_matrix({{2, 2}, {2, 2}})));
  CHECK_FALSE(protocol_correct(ProtocolTree::leaf(0), xor1()));
  CHECK(protocol_correct(xor_tree(), xor1()));
  CHECK(xor_tree().depth() >= cc_exact(xor1(), 4).depth);
}

TEST_CASE("fooling sets") {
  CHECK(fooling_set_check(xor1(), {{{0, 0}, {1, 1}}, 0}));
  CHECK_FALSE(fooling_set_check(FunctionTable::from_matrix({{0, 0}, {0, 0}}), {{{0, 0}, {1, 1}}, 0}));
  CHECK_FALSE(fooling_set_check(xor1(), {{{0, 0}, {0, 1}}, 0}));
  // The diagonal of equality is a fooling set of size 2^k.
  FoolingSet diag{{}, 1};
  for (std::size_t i = 0; i < 4; ++i) diag.pairs.push_back({i, i});
  CHECK(fooling_set_check(equality(2), diag));
  CHECK(cc_exact(equality(2), 8).depth >= ceil_log2(diag.pairs.size()));
}

TEST_CASE("valid fooling sets bound the exact complexity") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const FunctionTable f = random_table(rng, 5, 5, 2);
    // Greedy set on value 1 along a random permutation of pairs.
    FoolingSet s{{}, 1};
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 5; ++c) {
        if (f.at(r, c) != 1) continue;
        s.pairs.push_back({r, c});
        if (!fooling_set_check(f, s)) s.pairs.pop_back();
      }
    if (s.pairs.empty()) continue;
    CHECK(cc_exact(f, 10).depth >= ceil_log2(s.pairs.size()));
  }
}

TEST_CASE("cut tables") {
  auto parity = [](const Word& w) { return static_cast<int>(w[0] ^ w[1]); };
  const FunctionTable t = cc_of_cut(parity, 2, 1);
  CHECK(t.rows() == 2);
  CHECK(t.cols() == 2);
  CHECK(t.entries() == xor1().entries());
  const FunctionTable t0 = cc_of_cut(parity, 2, 0);
  CHECK(t0.rows() == 1);
  CHECK(t0.cols() == 4);
  CHECK(t0.row_inputs() == std::vector<std::string>{""});
  CHECK_THROWS_AS(cc_of_cut(parity, 2, 3), std::invalid_argument);
}
