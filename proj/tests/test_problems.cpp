#include "catch2/catch_amalgamated.hpp"

#include <algorithm>

#include "eca/problems.hpp"

using namespace eca;

TEST_CASE("Pred values") {
  for (std::uint64_t b = 0; b < 8; ++b) CHECK(pred_value(make_rule(0), Word::from_bits(b, 3)) == 0);
  CHECK(pred_value(make_rule(204), Word::parse("10110")) == 1);
  // 01110 -> 110 -> 0 under rule 184
  CHECK(pred_value(make_rule(184), Word::parse("01110")) == 0);
  CHECK_THROWS_AS(pred_value(make_rule(0), Word::parse("10")), std::invalid_argument);
}

TEST_CASE("Pred agrees with the center of the diagram") {
  for (int c = 0; c < 256; ++c)
    for (int n = 0; n <= 4; ++n) {
      const std::size_t len = static_cast<std::size_t>(2 * n + 1);
      for (std::uint64_t b = 0; b < (1ULL << len); b += 7) {
        const Word w = Word::from_bits(b, len);
        const auto d = evolve(Rule(c), w, n);
        CHECK(pred_value(Rule(c), w) == d.back()[0]);
      }
    }
}

TEST_CASE("Pred cut tables") {
  const FunctionTable zero = build_pred_table(make_rule(0), 1, 1);
  for (int v : zero.entries()) CHECK(v == 0);
  const FunctionTable id = build_pred_table(make_rule(204), 2, 2);
  CHECK(id.rows() == 4);
  CHECK(id.cols() == 8);
  for (std::size_t r = 0; r < id.rows(); ++r)
    for (std::size_t c = 0; c < id.cols(); ++c) CHECK(id.at(r, c) == id.at(0, c));
  CHECK(cc_exact(id, 6).depth == 1);
  CHECK_THROWS_AS(build_pred_table(make_rule(0), 9, 1), GuardExceeded);
}

TEST_CASE("Pred complexity") {
  CHECK(pred_cc(make_rule(0), 2) == 0);
  CHECK(pred_cc(make_rule(204), 2) == 1);
  CHECK(pred_cc(make_rule(90), 2) <= 2);
  // regression: the middle cut of rule 184 at n = 2
  CHECK(cc_exact(build_pred_table(make_rule(184), 2, 2), 8).depth == 3);
}

TEST_CASE("Pred complexity is mirror invariant") {
  for (int c : {2, 6, 18, 30, 54, 110, 184}) {
    for (int n = 1; n <= 3; ++n) {
      INFO("rule " << c << " n " << n);
      CHECK(pred_cc(mirror(Rule(c)), n) == pred_cc(Rule(c), n));
    }
  }
}

TEST_CASE("background orbits") {
  auto orbit = [](int c, const char* u) { return background_orbit(Rule(c), CyclicWord::parse(u)); };
  const auto id = orbit(204, "01");
  CHECK(id.transient == 0);
  CHECK(id.period == 1);
  CHECK(id.shift == 0);
  const auto blink = orbit(1, "0");
  CHECK(blink.transient == 0);
  CHECK(blink.period == 2);
  CHECK(blink.shift == 0);
  const auto shift = orbit(170, "01");
  CHECK(shift.transient == 0);
  CHECK(shift.period == 1);
  CHECK(shift.shift == 1);
  const auto die = orbit(0, "0110");
  CHECK(die.transient == 1);
  CHECK(die.period == 1);
}

TEST_CASE("background orbit closes up") {
  for (int c = 0; c < 256; c += 11)
    for (std::size_t len = 1; len <= 6; ++len)
      for (std::uint64_t b = 0; b < (1ULL << len); ++b) {
        const CyclicWord u(Word::from_bits(b, len));
        const auto o = background_orbit(Rule(c), u);
        const CyclicWord start = step_cyclic(Rule(c), u, o.transient);
        CHECK(step_cyclic(Rule(c), start, o.period) == start.rotated(o.shift));
      }
}

TEST_CASE("SInv verdicts") {
  using K = SInvVerdict::Kind;
  auto decide = [](int c, const char* u, const char* x, SInvOptions o = {}) {
    return sinv_decide(Rule(c), CyclicWord::parse(u), Word::parse(x), o);
  };
  CHECK(decide(0, "0", "1").kind == K::Bounded);
  // 11 on the 01 background spreads right by one cell every two steps.
  CHECK(decide(7, "01", "11").kind == K::Invaded);
  CHECK(decide(140, "1", "0").kind == K::Invaded);
  for (int t : {3, 10, 256}) CHECK(decide(140, "1", "0", {t, 2}).kind == K::Invaded);
  CHECK(decide(204, "01", "").kind == K::Bounded);
  CHECK(decide(170, "0", "1").kind == K::Bounded);  // a translate of itself
  CHECK(decide(90, "0", "1").kind == K::Invaded);
}

TEST_CASE("conclusive verdicts are stable under longer horizons") {
  for (int c = 0; c < 256; c += 9)
    for (const char* u : {"0", "1", "01", "001"})
      for (const char* x : {"1", "0", "11", "010"}) {
        const auto v = sinv_decide(Rule(c), CyclicWord::parse(u), Word::parse(x), {128, -1});
        if (!v.conclusive()) continue;
        for (int t : {200, 400}) {
          const auto w = sinv_decide(Rule(c), CyclicWord::parse(u), Word::parse(x), {t, -1});
          CHECK(w.kind == v.kind);
        }
      }
}

TEST_CASE("SInv oracle matches brute-force simulation on a wide window") {
  // Invaded: the brute-force width at the decision step equals the oracle's;
  // Bounded: the width never exceeds what the oracle saw.
  for (int c = 0; c < 256; c += 5)
    for (const char* u : {"0", "1", "01", "011"})
      for (const char* x : {"1", "0", "10", "0110"}) {
        const CyclicWord bg = CyclicWord::parse(u);
        const Word px = Word::parse(x);
        const auto v = sinv_decide(Rule(c), bg, px, {256, -1});
        if (!v.conclusive()) continue;
        const int steps = std::max(60, v.decided_at + 1);
        const long long span = 2 * steps + 10;
        std::vector<Cell> pert, base;
        for (long long i = -span; i < span; ++i) {
          base.push_back(bg.at(i));
          pert.push_back(i >= 0 && i < static_cast<long long>(px.size()) ? px[static_cast<std::size_t>(i)] : bg.at(i));
        }
        Word p(pert), b(base);
        INFO("rule " << c << " u " << u << " x " << x);
        for (int t = 0; t < steps; ++t) {
          long long lo = -1, hi = -1;
          for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != b[i]) {
              if (lo < 0) lo = static_cast<long long>(i);
              hi = static_cast<long long>(i);
            }
          const int width = lo < 0 ? 0 : static_cast<int>(hi - lo + 1);
          if (v.kind == SInvVerdict::Kind::Bounded) CHECK(width <= v.max_width);
          if (v.kind == SInvVerdict::Kind::Invaded && t == v.decided_at) CHECK(width == v.max_width);
          p = step_word(Rule(c), p);
          b = step_word(Rule(c), b);
        }
      }
}

TEST_CASE("rule 184 particle fooling set") {
  for (int n = 1; n <= 4; ++n) {
    INFO("n " << n);
    const auto f = rule184_fooling_set(n);
    CHECK(f.set.pairs.size() == static_cast<std::size_t>(n));
    CHECK(fooling_set_check(f.table, f.set));
  }
  for (int n = 2; n <= 3; ++n) {
    const auto f = rule184_fooling_set(n);
    CHECK(cc_exact(f.table, 4 * n + 2).depth >= ceil_log2(f.set.pairs.size()));
  }
  CHECK_THROWS_AS(rule184_fooling_set(0), std::invalid_argument);
}
