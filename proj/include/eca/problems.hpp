#pragma once

// Pred: the center cell after n steps. SInv: does a finite perturbation of a
// periodic background stay confined? Both come with brute-force oracles.

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "eca/commcomp.hpp"
#include "eca/core.hpp"
#include "eca/errors.hpp"

namespace eca {

inline constexpr std::size_t kMaxPredLength = 17;
inline constexpr std::size_t kMaxBackgroundLength = 20;

/// (F^n(x))_0 for an input of length 2n+1.
inline Cell pred_value(Rule rule, const Word& input) {
  if (input.size() % 2 == 0) throw std::invalid_argument("Pred input must have odd length");
  return step_word(rule, input, static_cast<int>(input.size() / 2))[0];
}

/// Cut table of Pred_{F,n}: rows are the first i cells, columns the rest.
inline FunctionTable build_pred_table(Rule rule, int n, int i) {
  if (n < 0) throw std::invalid_argument("step count must be nonnegative");
  const int len = 2 * n + 1;
  if (static_cast<std::size_t>(len) > kMaxPredLength) throw GuardExceeded("Pred input too long to tabulate");
  return cc_of_cut([rule](const Word& w) { return static_cast<int>(pred_value(rule, w)); }, len, i);
}

struct PredCcReport {
  std::vector<CcResult> per_cut;  // index = cut position
  int max = 0;
};

/// cc_exact of every cut 0..2n. The cap 2n+2 always suffices: Alice can send
/// her whole part and Bob announce the answer.
inline PredCcReport pred_cc_report(Rule rule, int n) {
  const int len = 2 * n + 1;
  PredCcReport out;
  for (int i = 0; i < len; ++i) {
    const CcResult r = cc_exact(build_pred_table(rule, n, i), len + 1);
    out.per_cut.push_back(r);
    out.max = std::max(out.max, r.depth);
  }
  return out;
}

inline int pred_cc(Rule rule, int n) { return pred_cc_report(rule, n).max; }

// ---------------------------------------------------------------------------
// Periodic backgrounds

struct BackgroundOrbit {
  int transient = 0;
  int period = 1;
  long long shift = 0;  // c_{transient+period} = c_transient rotated by shift
};

/// First repetition of the orbit of u up to rotation.
inline BackgroundOrbit background_orbit(Rule rule, const CyclicWord& u) {
  if (u.size() > kMaxBackgroundLength) throw GuardExceeded("background word too long");
  std::unordered_map<std::string, int> seen;  // canonical rotation -> time
  std::vector<CyclicWord> orbit;
  CyclicWord cur = u;
  for (int t = 0;; ++t) {
    const std::string key = cur.canonical().first.str();
    if (auto it = seen.find(key); it != seen.end()) {
      const int i = it->second;
      return {i, t - i, orbit[static_cast<std::size_t>(i)].rotation_to(cur)};
    }
    seen.emplace(key, t);
    orbit.push_back(cur);
    cur = step_cyclic(rule, cur);
  }
}

// ---------------------------------------------------------------------------
// SInv

struct SInvVerdict {
  enum class Kind { Bounded, Invaded, Inconclusive };
  Kind kind = Kind::Inconclusive;
  int horizon = 0;    // steps allowed
  int decided_at = 0; // step at which the verdict became final
  int max_width = 0;  // widest difference seen

  bool conclusive() const { return kind != Kind::Inconclusive; }
  friend bool operator==(const SInvVerdict&, const SInvVerdict&) = default;
};

inline const char* to_string(SInvVerdict::Kind k) {
  switch (k) {
    case SInvVerdict::Kind::Bounded: return "bounded";
    case SInvVerdict::Kind::Invaded: return "invaded";
    case SInvVerdict::Kind::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct SInvOptions {
  int horizon = 256;
  int width_cap = -1;  // negative: 4(|x|+|u|)
};

/// Semi-decision for SInv on p_u[x]. Only the difference window [a,b] with
/// the actual cells is stored; the background is read analytically from the
/// cyclic orbit of u. The verdict is
///  - Bounded when the difference dies out, or when (background aligned at
///    a, window content) repeats: the configuration is then a translate of an
///    earlier one and the orbit cycles;
///  - Invaded when the width exceeds the cap and has grown, never shrinking,
///    over the last background period;
///  - Inconclusive once the horizon is spent.
inline SInvVerdict sinv_decide(Rule rule, const CyclicWord& u_in, const Word& x, const SInvOptions& opt = {}) {
  if (opt.horizon < 0) throw std::invalid_argument("horizon must be nonnegative");
  const CyclicWord u = u_in.primitive_root();
  const int cap = opt.width_cap >= 0 ? opt.width_cap : 4 * static_cast<int>(x.size() + u_in.size());
  const int period = std::max(1, background_orbit(rule, u).period);
  const auto n = static_cast<long long>(u.size());
  auto mod = [n](long long i) { return static_cast<long long>(((i % n) + n) % n); };

  SInvVerdict out;
  out.horizon = opt.horizon;

  CyclicWord bg = u;
  long long a = 0;
  std::vector<Cell> win(x.begin(), x.end());

  // Shrink to the true difference support.
  auto trim = [&] {
    std::size_t lo = 0, hi = win.size();
    while (lo < hi && win[lo] == bg.at(a + static_cast<long long>(lo))) ++lo;
    while (hi > lo && win[hi - 1] == bg.at(a + static_cast<long long>(hi) - 1)) --hi;
    win = std::vector<Cell>(win.begin() + static_cast<std::ptrdiff_t>(lo), win.begin() + static_cast<std::ptrdiff_t>(hi));
    a += static_cast<long long>(lo);
  };
  auto state_key = [&] {
    std::string key = bg.rotated(mod(a)).str();
    key.push_back('|');
    for (Cell c : win) key.push_back(static_cast<char>('0' + c));
    return key;
  };

  std::unordered_map<std::string, int> seen;
  std::deque<int> widths;
  trim();
  for (int t = 0;; ++t) {
    const int width = static_cast<int>(win.size());
    out.max_width = std::max(out.max_width, width);
    if (width == 0) {
      out.kind = SInvVerdict::Kind::Bounded;
      out.decided_at = t;
      return out;
    }
    if (a < -t || a + width - 1 > static_cast<long long>(x.size()) - 1 + t)
      throw std::logic_error("difference escaped the light cone");

    if (width <= cap) {
      auto [it, inserted] = seen.emplace(state_key(), t);
      if (!inserted) {
        out.kind = SInvVerdict::Kind::Bounded;
        out.decided_at = t;
        return out;
      }
    }
    widths.push_back(width);
    if (static_cast<int>(widths.size()) > period + 1) widths.pop_front();
    if (width > cap && static_cast<int>(widths.size()) == period + 1) {
      bool monotone = true;
      for (std::size_t k = 1; k < widths.size(); ++k) monotone = monotone && widths[k] >= widths[k - 1];
      if (monotone && widths.back() > widths.front()) {
        out.kind = SInvVerdict::Kind::Invaded;
        out.decided_at = t;
        return out;
      }
    }
    if (t == opt.horizon) {
      out.decided_at = t;
      return out;
    }

    // One step on [a-1, b+1], reading the background outside the window.
    const auto w = static_cast<long long>(win.size());
    auto cell = [&](long long i) { return (i >= a && i < a + w) ? win[static_cast<std::size_t>(i - a)] : bg.at(i); };
    std::vector<Cell> next(static_cast<std::size_t>(w + 2));
    for (long long i = a - 1; i <= a + w; ++i) next[static_cast<std::size_t>(i - a + 1)] = rule(cell(i - 1), cell(i), cell(i + 1));
    win = std::move(next);
    a -= 1;
    bg = step_cyclic(rule, bg);
    trim();
  }
}

// ---------------------------------------------------------------------------
// Rule 184 lower bound

struct PredFoolingInstance {
  FunctionTable table;  // Pred cut table the pairs index into
  FoolingSet set;
  int steps = 0;        // Pred horizon of the table
};

/// The particle fooling set for rule 184 with n pairs: Alice holds
/// 0 A^i B^(n-i), Bob holds B^(n-i) D^i (A=00, B=01, D=11), i = 1..n.
/// Every pair meets after 2n steps in an empty region, so the center is 0;
/// crossing two pairs leaves a surplus particle on one side.
inline PredFoolingInstance rule184_fooling_set(int n) {
  if (n < 1) throw std::invalid_argument("fooling set needs n >= 1");
  PredFoolingInstance out;
  out.steps = 2 * n;
  out.table = build_pred_table(Rule(184), out.steps, 2 * n + 1);
  out.set.value = 0;
  for (int i = 1; i <= n; ++i) {
    std::string x = "0", y;
    for (int k = 0; k < n; ++k) x += k < i ? "00" : "01";
    for (int k = 0; k < n; ++k) y += k < n - i ? "01" : "11";
    out.set.pairs.emplace_back(*out.table.row_index(x), *out.table.col_index(y));
  }
  return out;
}

}  // namespace eca
