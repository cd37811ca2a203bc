#pragma once

// q-state radius-r cellular automata, rescaling (bulking + iteration + shift)
// and the subautomaton / simulation relations.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "eca/core.hpp"
#include "eca/errors.hpp"

namespace eca {

// Largest local-rule table we are willing to materialize.
inline constexpr std::uint64_t kMaxTableSize = std::uint64_t{1} << 24;

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > limit / base) return limit + 1;
    out *= base;
  }
  return out;
}

}  // namespace detail

/// Local rule over states 0..q-1 with neighborhoods of 2r+1 cells. Table index
/// of (x_0..x_{2r}) is sum x_k q^{2r-k}, leftmost cell most significant.
class GeneralCA {
 public:
  GeneralCA(int states, int radius, std::vector<int> table)
      : states_(states), radius_(radius), table_(std::move(table)) {
    if (states_ < 1) throw std::invalid_argument("state count must be >= 1");
    if (radius_ < 0) throw std::invalid_argument("radius must be >= 0");
    if (table_.size() != table_size(states_, radius_))
      throw std::invalid_argument("local rule table must cover every neighborhood");
    for (int v : table_)
      if (v < 0 || v >= states_) throw std::invalid_argument("local rule table entry out of range");
  }

  static GeneralCA from_rule(Rule f) {
    std::vector<int> table(8);
    for (int i = 0; i < 8; ++i) table[static_cast<std::size_t>(i)] = f.at(i);
    return GeneralCA(2, 1, std::move(table));
  }

  static std::size_t table_size(int states, int radius) {
    const std::uint64_t n = detail::checked_pow(static_cast<std::uint64_t>(states), 2 * radius + 1, kMaxTableSize);
    if (n > kMaxTableSize) throw GuardExceeded("local rule table too large");
    return static_cast<std::size_t>(n);
  }

  int states() const { return states_; }
  int radius() const { return radius_; }
  int width() const { return 2 * radius_ + 1; }
  const std::vector<int>& table() const { return table_; }

  int operator()(std::span<const int> neighborhood) const { return table_[index_of(neighborhood)]; }
  int at(std::size_t index) const { return table_[index]; }

  std::size_t index_of(std::span<const int> neighborhood) const {
    std::size_t idx = 0;
    for (int s : neighborhood) idx = idx * static_cast<std::size_t>(states_) + static_cast<std::size_t>(s);
    return idx;
  }

  std::vector<int> neighborhood_of(std::size_t index) const {
    std::vector<int> out(static_cast<std::size_t>(width()));
    for (int k = width() - 1; k >= 0; --k) {
      out[static_cast<std::size_t>(k)] = static_cast<int>(index % static_cast<std::size_t>(states_));
      index /= static_cast<std::size_t>(states_);
    }
    return out;
  }

  /// One step on a finite configuration (shrinks by 2r).
  std::vector<int> step(std::span<const int> cells) const {
    if (cells.size() < static_cast<std::size_t>(width())) return {};
    std::vector<int> out(cells.size() - static_cast<std::size_t>(2 * radius_));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)(cells.subspan(i, static_cast<std::size_t>(width())));
    return out;
  }

  friend bool operator==(const GeneralCA&, const GeneralCA&) = default;

 private:
  int states_;
  int radius_;
  std::vector<int> table_;
};

/// Same dynamics read with a larger radius (outer cells ignored).
inline GeneralCA pad_radius(const GeneralCA& ca, int radius) {
  if (radius < ca.radius()) throw std::invalid_argument("cannot shrink radius");
  if (radius == ca.radius()) return ca;
  const std::size_t n = GeneralCA::table_size(ca.states(), radius);
  const int extra = radius - ca.radius();
  const std::size_t inner = GeneralCA::table_size(ca.states(), ca.radius());
  const auto q = static_cast<std::size_t>(ca.states());
  std::size_t tail = 1;  // q^extra
  for (int i = 0; i < extra; ++i) tail *= q;
  std::vector<int> table(n);
  for (std::size_t idx = 0; idx < n; ++idx) table[idx] = ca.at((idx / tail) % inner);
  return GeneralCA(ca.states(), radius, std::move(table));
}

/// Radius of F^<m,t,z>: smallest R with R·m >= t·r + |z|.
inline int rescaled_radius(int radius, int m, int t, int z) {
  const int need = t * radius + std::abs(z);
  return (need + m - 1) / m;
}

/// F^<m,t,z> = b_m ∘ σ^z ∘ F^t ∘ b_m^{-1} over q^m block states. Block
/// (x_0..x_{m-1}) is encoded as sum x_k q^{m-1-k}.
inline GeneralCA rescale(const GeneralCA& ca, int m, int t, int z) {
  if (m < 1 || t < 1) throw std::invalid_argument("rescaling needs m >= 1 and t >= 1");
  const std::uint64_t block_states = detail::checked_pow(static_cast<std::uint64_t>(ca.states()), m, kMaxTableSize);
  if (block_states > kMaxTableSize) throw GuardExceeded("too many block states");
  const int big_radius = rescaled_radius(ca.radius(), m, t, z);
  const int states = static_cast<int>(block_states);
  const std::size_t n = GeneralCA::table_size(states, big_radius);
  const int blocks = 2 * big_radius + 1;
  const auto q = static_cast<std::size_t>(ca.states());

  std::vector<int> table(n);
  std::vector<int> cells(static_cast<std::size_t>(blocks * m));
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rest = idx;
    for (int b = blocks - 1; b >= 0; --b) {
      auto block = rest % block_states;
      rest /= block_states;
      for (int k = m - 1; k >= 0; --k) {
        cells[static_cast<std::size_t>(b * m + k)] = static_cast<int>(block % q);
        block /= q;
      }
    }
    std::vector<int> cur = cells;
    for (int s = 0; s < t; ++s) cur = ca.step(cur);
    // cur[j] is the cell at original position j + t·r; the output block holds
    // positions R·m + k + z of the shifted image.
    int out = 0;
    for (int k = 0; k < m; ++k) {
      const int pos = big_radius * m + k + z - t * ca.radius();
      out = out * ca.states() + cur[static_cast<std::size_t>(pos)];
    }
    table[idx] = out;
  }
  return GeneralCA(states, big_radius, std::move(table));
}

/// φ: Q_G -> Q_F, stored as φ(s) = map[s].
struct Injection {
  std::vector<int> map;
  friend bool operator==(const Injection&, const Injection&) = default;
};

/// Injection φ with F∘φ = φ∘G on every neighborhood, or nothing. The smaller
/// radius is padded first; the search is exhaustive with backtracking.
inline std::optional<Injection> is_subautomaton(const GeneralCA& g_in, const GeneralCA& f_in) {
  if (g_in.states() > f_in.states()) return std::nullopt;
  const int radius = std::max(g_in.radius(), f_in.radius());
  const GeneralCA g = pad_radius(g_in, radius);
  const GeneralCA f = pad_radius(f_in, radius);
  const int qg = g.states();
  const int width = g.width();

  std::vector<int> phi(static_cast<std::size_t>(qg), -1);
  std::vector<bool> used(static_cast<std::size_t>(f.states()), false);
  std::vector<int> nb(static_cast<std::size_t>(width));
  std::vector<int> image(static_cast<std::size_t>(width));

  // Every neighborhood over states 0..s that uses state s must commute.
  auto consistent = [&](int s) {
    std::vector<int> digits(static_cast<std::size_t>(width), 0);
    while (true) {
      bool uses_s = false;
      for (int k = 0; k < width; ++k) {
        nb[static_cast<std::size_t>(k)] = digits[static_cast<std::size_t>(k)];
        uses_s = uses_s || digits[static_cast<std::size_t>(k)] == s;
      }
      if (uses_s) {
        const int gv = g(nb);
        if (gv <= s) {
          for (int k = 0; k < width; ++k) image[static_cast<std::size_t>(k)] = phi[static_cast<std::size_t>(nb[static_cast<std::size_t>(k)])];
          if (f(image) != phi[static_cast<std::size_t>(gv)]) return false;
        }
      }
      int k = width - 1;
      while (k >= 0 && digits[static_cast<std::size_t>(k)] == s) digits[static_cast<std::size_t>(k--)] = 0;
      if (k < 0) break;
      ++digits[static_cast<std::size_t>(k)];
    }
    return true;
  };

  // States whose g-image lands on a later state are rechecked once that
  // state is assigned; a final full pass confirms.
  auto full_check = [&] {
    for (std::size_t idx = 0; idx < g.table().size(); ++idx) {
      const auto n = g.neighborhood_of(idx);
      for (int k = 0; k < width; ++k) image[static_cast<std::size_t>(k)] = phi[static_cast<std::size_t>(n[static_cast<std::size_t>(k)])];
      if (f(image) != phi[static_cast<std::size_t>(g.at(idx))]) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, int s) -> bool {
    if (s == qg) return full_check();
    for (int v = 0; v < f.states(); ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      phi[static_cast<std::size_t>(s)] = v;
      used[static_cast<std::size_t>(v)] = true;
      if (consistent(s) && self(self, s + 1)) return true;
      used[static_cast<std::size_t>(v)] = false;
    }
    phi[static_cast<std::size_t>(s)] = -1;
    return false;
  };

  if (!search(search, 0)) return std::nullopt;
  return Injection{phi};
}

struct SimulationBounds {
  int max_m = 1;
  int max_t = 1;
  int max_abs_z = 0;
};

struct SimulationWitness {
  int m = 1;
  int t = 1;
  int z = 0;
  Injection phi;
};

struct SimulationResult {
  enum class Status { Found, NotFound, BoundExceeded };
  Status status = Status::NotFound;
  std::optional<SimulationWitness> witness;
};

/// Search for G as a subautomaton of some F^<m,t,z> within the bounds. Order:
/// m, then t, then z by increasing |z| (negative first). Rescalings whose
/// tables exceed the guard are skipped and make a negative answer
/// BoundExceeded instead of NotFound.
inline SimulationResult simulates(const GeneralCA& f, const GeneralCA& g, const SimulationBounds& bounds) {
  if (bounds.max_m < 1 || bounds.max_t < 1 || bounds.max_abs_z < 0)
    throw std::invalid_argument("simulation bounds must be positive");
  bool skipped = false;
  for (int m = 1; m <= bounds.max_m; ++m) {
    for (int t = 1; t <= bounds.max_t; ++t) {
      std::vector<int> shifts = {0};
      for (int a = 1; a <= bounds.max_abs_z; ++a) {
        shifts.push_back(-a);
        shifts.push_back(a);
      }
      for (int z : shifts) {
        std::optional<GeneralCA> scaled;
        try {
          scaled = rescale(f, m, t, z);
        } catch (const GuardExceeded&) {
          skipped = true;
          continue;
        }
        if (auto phi = is_subautomaton(g, *scaled)) {
          return {SimulationResult::Status::Found, SimulationWitness{m, t, z, *phi}};
        }
      }
    }
  }
  return {skipped ? SimulationResult::Status::BoundExceeded : SimulationResult::Status::NotFound, std::nullopt};
}

}  // namespace eca
