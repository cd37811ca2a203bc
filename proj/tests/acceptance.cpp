// Acceptance checks, one line per criterion. Exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eca/claims.hpp"
#include "eca/commcomp.hpp"
#include "eca/core.hpp"
#include "eca/preimage.hpp"
#include "eca/problems.hpp"
#include "eca/protocols.hpp"

using namespace eca;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass = false;
  std::string detail;
};

Verdict ac1_classification() {
  const auto t0 = Clock::now();
  const Classification c = classify();
  const double secs = seconds_since(t0);
  std::vector<int> seen(256, 0);
  for (const auto& cls : c.classes)
    for (int r : cls) ++seen[static_cast<std::size_t>(r)];
  bool partition = true;
  for (int k : seen) partition = partition && k == 1;
  std::ostringstream d;
  d << c.size() << " classes, partition " << (partition ? "ok" : "broken") << ", " << secs << " s";
  return {c.size() == 88 && partition && secs < 1.0, d.str()};
}

Verdict ac2_affine_set() {
  const std::vector<int> listed = {15, 51, 60, 90, 105, 108, 128, 136, 150, 160, 170, 204};
  auto affine_claim = [](int rule) {
    Claim c;
    c.id = "ac2." + std::to_string(rule);
    c.rule = rule;
    c.kind = ClaimKind::AffineRule;
    return run_claim(c);
  };
  bool pass = true;
  std::string failed;
  for (int r : listed) {
    const ClaimReport rep = affine_claim(r);
    if (!rep.passed) {
      pass = false;
      failed += " " + std::to_string(r) + " (off-fit " + rep.witness + ")";
    }
  }
  for (int r : {110, 30}) {
    if (affine_claim(r).passed) {
      pass = false;
      failed += " " + std::to_string(r) + " unexpectedly affine";
    }
  }
  return {pass, pass ? "12 listed rules affine, 110 and 30 not" : "listed rules not affine:" + failed};
}

Verdict ac3_preimage_equivalence() {
  const auto t0 = Clock::now();
  long long words = 0, agree = 0;
  for (int code : {1, 2, 76, 138, 204}) {
    const Rule rule(code);
    for (std::size_t len = 0; len <= 6; ++len)
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << len); ++b) {
        const Word w = Word::from_bits(b, len);
        bool raw = false;
        const std::size_t clen = len + 2;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << clen) && !raw; ++v) {
          const Word cand = Word::from_bits(v, clen);
          bool ok = true;
          for (std::size_t i = 0; i < len && ok; ++i) ok = rule(cand[i], cand[i + 1], cand[i + 2]) == w[i];
          raw = ok;
        }
        ++words;
        if (has_antecedent(rule, w, 1) == raw) ++agree;
      }
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << agree << "/" << words << " words agree, " << secs << " s";
  return {agree == words && secs < 10.0, d.str()};
}

Verdict ac4_catalog() {
  const auto t0 = Clock::now();
  const auto claims = builtin_catalog();
  const CatalogRun run = run_catalog(claims);
  const double secs = seconds_since(t0);
  int unwitnessed = 0;
  std::set<std::string> failed_ids;
  for (std::size_t i = 0; i < claims.size(); ++i) {
    const ClaimReport& r = run.reports[i];
    if (r.passed) continue;
    failed_ids.insert(r.id);
    if (r.witness.empty() || !witness_reproduces(claims[i], r)) ++unwitnessed;
  }
  // The two probes singled out by name must be among the marked failures.
  bool named = true;
  for (const Claim& c : claims) {
    const bool cross = c.kind == ClaimKind::AuditPasses && c.rule == 172 && c.param("oracle") == "178";
    const bool growth = c.kind == ClaimKind::AuditPasses && c.rule == 56 && c.param("bound") == "const";
    if ((cross || growth) && (c.expect_pass || !failed_ids.count(c.id))) named = false;
  }
  const auto& s = run.summary;
  std::ostringstream d;
  d << s.total << " claims, " << s.passed << " pass, " << s.expected_failures << " marked failures, " << s.unexpected
    << " unexpected, " << unwitnessed << " without reproducible witness, " << secs << " s";
  return {s.healthy() && unwitnessed == 0 && named && secs < 120.0, d.str()};
}

Verdict ac5_pred_audits() {
  const std::set<int> log_rules = {23, 50, 77, 178, 232, 132, 184};
  std::string bad;
  int audited = 0;
  for (int c : covered_rules(Problem::Pred)) {
    const auto r = audit_strategy(Rule(c), Problem::Pred, 5);
    ++audited;
    bool ok = r && r->correct && r->within_bound;
    // Per-n instance counts: (2n+2) cuts times 2^(2n+1) inputs.
    long long expected = 0;
    for (int n = 1; n <= 5; ++n) expected += (2LL * n + 2) << (2 * n + 1);
    ok = ok && r->instances == expected;
    if (ok && r->bound.kind == BitBound::Kind::Constant) ok = r->max_bits_by_n[3] == r->max_bits_by_n[5];
    if (ok && log_rules.count(c)) ok = r->bound.kind == BitBound::Kind::Logarithmic;
    if (!ok) bad += " " + std::to_string(c);
  }
  for (int c : log_rules)
    if (!get_strategy(Rule(c), Problem::Pred)) bad += " missing:" + std::to_string(c);
  std::ostringstream d;
  d << audited << " strategies audited for n <= 5";
  if (!bad.empty()) d << "; failing:" << bad;
  return {bad.empty(), d.str()};
}

Verdict ac6_fooling_set() {
  bool pass = true;
  std::ostringstream d;
  for (int n : {2, 3}) {
    const auto f = rule184_fooling_set(n);
    const bool valid = fooling_set_check(f.table, f.set);
    const int bound = ceil_log2(f.set.pairs.size());
    const CcResult cc = cc_exact(f.table, 4 * n + 2);
    pass = pass && valid && !cc.exceeded && cc.depth >= bound;
    d << "n=" << n << ": |S|=" << f.set.pairs.size() << " " << (valid ? "valid" : "INVALID") << ", D=" << cc.depth
      << " >= " << bound << "; ";
  }
  return {pass, d.str()};
}

Verdict ac7_cc_engine() {
  const FunctionTable zero = FunctionTable::from_matrix({{5, 5, 5}, {5, 5, 5}});
  const FunctionTable x1 = FunctionTable::from_matrix({{0, 1}, {1, 0}});
  std::vector<std::vector<int>> eq(4, std::vector<int>(4, 0));
  for (int i = 0; i < 4; ++i) eq[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  const FunctionTable eq2 = FunctionTable::from_matrix(eq);
  const int d0 = cc_exact(zero, 3).depth, dx = cc_exact(x1, 3).depth, de = cc_exact(eq2, 3).depth;
  std::mt19937 rng(2024);
  int symmetric = 0;
  for (int t = 0; t < 50; ++t) {
    std::vector<std::vector<int>> m(6, std::vector<int>(6));
    for (auto& row : m)
      for (int& v : row) v = static_cast<int>(rng() % 2);
    const FunctionTable f = FunctionTable::from_matrix(m);
    const CcResult a = cc_exact(f, 8), b = cc_exact(f.transposed(), 8);
    if (a.depth == b.depth && a.exceeded == b.exceeded) ++symmetric;
  }
  std::ostringstream d;
  d << "constant " << d0 << ", xor " << dx << ", equality " << de << ", transpose symmetric " << symmetric << "/50";
  return {d0 == 0 && dx == 2 && de == 3 && symmetric == 50, d.str()};
}

Verdict ac8_sinv() {
  long long inconclusive = 0, mismatches = 0;
  int audits = 0;
  for (int c : covered_rules(Problem::SInv))
    for (const auto& v : strategy_variants(c, Problem::SInv)) {
      const auto r = audit_strategy(Rule(c), Problem::SInv, 0, v);
      ++audits;
      inconclusive += r->inconclusive;
      mismatches += r->mismatch_count;
    }
  std::ostringstream d;
  d << audits << " audits over |u| <= 4, |x| <= 6 at T=256: " << inconclusive << " inconclusive, " << mismatches
    << " mismatches";
  return {audits > 0 && inconclusive == 0 && mismatches == 0, d.str()};
}

Verdict ac9_small_scale_growth() {
  std::ostringstream d;
  bool flat = true;
  for (int code : {204, 0}) {
    d << "rule " << code << ":";
    const int first = pred_cc(Rule(code), 1);
    for (int n = 1; n <= 4; ++n) {
      const int v = pred_cc(Rule(code), n);
      d << " " << v;
      flat = flat && v == first;
    }
    d << "; ";
  }
  std::vector<int> bounds;
  bool valid = true;
  for (int n = 2; n <= 4; ++n) {
    const auto f = rule184_fooling_set(n);
    valid = valid && fooling_set_check(f.table, f.set);
    bounds.push_back(ceil_log2(f.set.pairs.size()));
  }
  d << "rule 184 fooling bound n=2..4:";
  for (int b : bounds) d << " " << b;
  return {flat && valid && bounds.back() > bounds.front(), d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"AC1 classification into 88 classes", ac1_classification},
      {"AC2 affine set", ac2_affine_set},
      {"AC3 preimage oracle equivalence", ac3_preimage_equivalence},
      {"AC4 claims catalog", ac4_catalog},
      {"AC5 Pred protocol audits", ac5_pred_audits},
      {"AC6 rule 184 fooling set", ac6_fooling_set},
      {"AC7 exact CC engine", ac7_cc_engine},
      {"AC8 SInv verdicts", ac8_sinv},
      {"AC9 small-scale growth", ac9_small_scale_growth},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << name << ": " << v.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
