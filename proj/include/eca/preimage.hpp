#pragma once

// Antecedents of finite words: existence (de Bruijn reachability, iterated
// per step), explicit enumeration, and minimal forbidden words.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eca/core.hpp"
#include "eca/errors.hpp"

namespace eca {

inline constexpr int kMaxPreimageSteps = 10;
inline constexpr std::size_t kMaxEnumeratedLength = 24;
inline constexpr int kMaxForbiddenLength = 16;

/// Is there a v with |v| = |w| + 2t and F^t(v) = w?
///
/// The t layers v^t, ..., v^1, v^0 = w are read left to right together. The
/// automaton state keeps the last two cells of every layer (2t bits). Each
/// input cell appends one free cell to the top layer; the new cell of every
/// lower layer is then forced by the local rule, and the bottom one must
/// match w. Initial states are the length-2t prefixes of v^t pushed down.
inline bool has_antecedent(Rule rule, const Word& w, int t) {
  if (t < 1) throw std::invalid_argument("step count must be >= 1");
  if (t > kMaxPreimageSteps) throw GuardExceeded("too many preimage steps");
  if (w.empty()) return true;

  const std::size_t state_count = std::size_t{1} << (2 * t);
  // layer k (1..t) occupies bits 2(k-1), 2(k-1)+1: (a_k << 1) | b_k
  auto pair_of = [](std::uint32_t state, int k) { return (state >> (2 * (k - 1))) & 3U; };

  std::vector<char> live(state_count, 0);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * t)); ++bits) {
    Word layer = Word::from_bits(bits, static_cast<std::size_t>(2 * t));
    std::uint32_t state = 0;
    for (int k = t; k >= 1; --k) {
      const std::size_t len = layer.size();
      state |= static_cast<std::uint32_t>((layer[len - 2] << 1) | layer[len - 1]) << (2 * (k - 1));
      layer = step_word(rule, layer);
    }
    live[state] = 1;
  }

  std::vector<char> next(state_count, 0);
  for (Cell target : w) {
    std::fill(next.begin(), next.end(), 0);
    bool any = false;
    for (std::uint32_t state = 0; state < state_count; ++state) {
      if (!live[state]) continue;
      for (Cell top = 0; top < 2; ++top) {
        Cell incoming = top;
        std::uint32_t moved = 0;
        for (int k = t; k >= 1; --k) {
          const std::uint32_t p = pair_of(state, k);
          const Cell a = static_cast<Cell>(p >> 1), b = static_cast<Cell>(p & 1);
          moved |= ((static_cast<std::uint32_t>(b) << 1) | incoming) << (2 * (k - 1));
          incoming = rule(a, b, incoming);
        }
        if (incoming == target) {
          next[moved] = 1;
          any = true;
        }
      }
    }
    if (!any) return false;
    live.swap(next);
  }
  return true;
}

/// All v of length |w|+2 with F(v) = w, in increasing order.
inline std::vector<Word> enumerate_preimages(Rule rule, const Word& w) {
  if (w.size() + 2 > kMaxEnumeratedLength) throw GuardExceeded("word too long to enumerate preimages");
  const std::size_t n = w.size();
  std::vector<Word> out;
  std::vector<Cell> v(n + 2);

  // completes[i][p]: can cells i, i+1 = pair p be extended to the right end?
  std::vector<std::array<bool, 4>> completes(n + 1);
  completes[n].fill(true);
  for (std::size_t i = n; i-- > 0;) {
    for (unsigned p = 0; p < 4; ++p) {
      const Cell a = static_cast<Cell>(p >> 1), b = static_cast<Cell>(p & 1);
      bool ok = false;
      for (Cell c = 0; c < 2 && !ok; ++c)
        ok = rule(a, b, c) == w[i] && completes[i + 1][static_cast<std::size_t>((b << 1) | c)];
      completes[i][p] = ok;
    }
  }

  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.emplace_back(v);
      return;
    }
    for (Cell c = 0; c < 2; ++c) {
      if (rule(v[i], v[i + 1], c) != w[i]) continue;
      if (!completes[i + 1][static_cast<std::size_t>((v[i + 1] << 1) | c)]) continue;
      v[i + 2] = c;
      self(self, i + 1);
    }
  };
  for (unsigned p = 0; p < 4; ++p) {
    if (!completes[0][p]) continue;
    v[0] = static_cast<Cell>(p >> 1);
    v[1] = static_cast<Cell>(p & 1);
    extend(extend, 0);
  }
  return out;
}

/// Words of length <= max_len without a t-step antecedent whose proper
/// factors all have one. Ordered by length, then lexicographically.
inline std::vector<Word> forbidden_words(Rule rule, int t, int max_len) {
  if (max_len < 0) throw std::invalid_argument("max_len must be nonnegative");
  if (max_len > kMaxForbiddenLength) throw GuardExceeded("forbidden-word length bound too large");
  std::vector<Word> out;
  std::vector<char> allowed_prev(1, 1);  // the empty word
  for (int len = 1; len <= max_len; ++len) {
    const std::uint64_t count = std::uint64_t{1} << len;
    std::vector<char> allowed(count, 0);
    const std::uint64_t half = count >> 1;
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      const std::uint64_t prefix = bits >> 1;
      const std::uint64_t suffix = bits & (half - 1);
      if (!allowed_prev[prefix] || !allowed_prev[suffix]) continue;
      const Word w = Word::from_bits(bits, static_cast<std::size_t>(len));
      if (has_antecedent(rule, w, t)) {
        allowed[bits] = 1;
      } else {
        out.push_back(w);
      }
    }
    allowed_prev.swap(allowed);
  }
  return out;
}

}  // namespace eca
