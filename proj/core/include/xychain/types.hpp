#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Basic domain types for the transverse-field XY chain
//
//   H = sum_i [ -(1+alpha)/2 sx_i sx_{i+1} - (1-alpha)/2 sy_i sy_{i+1} + B sz_i ]
//
// with N = 2M+1 sites and periodic boundaries. All analytic mode quantities
// live on the positive half-integer momentum grid k_j = (2j-1) pi / N.

namespace xychain {

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Level crossings make the Bogoliubov angle indeterminate; any gap at or
// below this floor is treated as gapless.
inline constexpr double gap_floor = 1e-12;

// Operationalizes "much larger than" for the adiabatic condition:
// tau_q >= adiabatic_margin * N^2/(2 pi^3) counts as adiabatic.
inline constexpr double adiabatic_margin = 10.0;

enum class Convention { Raw, Mod2Pi };

// Thrown when a phase is requested at (or numerically at) a level crossing.
class GaplessPointError : public std::domain_error {
 public:
  GaplessPointError(double k, double field, double alpha)
      : std::domain_error("gapless point: k=" + std::to_string(k) +
                          " B=" + std::to_string(field) +
                          " alpha=" + std::to_string(alpha)),
        k(k), field(field), alpha(alpha) {}
  double k, field, alpha;
};

class IntegrationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class FitError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Static description of the chain: site count N (odd) and anisotropy alpha.
struct ChainSpec {
  int n_sites;
  double alpha;

  ChainSpec(int n_sites, double alpha) : n_sites(n_sites), alpha(alpha) {
    if (n_sites < 3 || n_sites % 2 == 0)
      throw std::domain_error("ChainSpec: N must be odd and >= 3");
    if (!(alpha >= 0.0 && alpha <= 1.0))
      throw std::domain_error("ChainSpec: alpha must be in [0, 1]");
  }

  int pair_count() const { return (n_sites - 1) / 2; }
};

// Linear quench law B(t) = -t/tau_q, clamped to zero once the field is off.
struct QuenchSchedule {
  double tau_q;

  explicit QuenchSchedule(double tau_q) : tau_q(tau_q) {
    if (!(tau_q > 0.0))
      throw std::domain_error("QuenchSchedule: tau_q must be positive");
  }

  double field_at(double t) const { return t < 0.0 ? -t / tau_q : 0.0; }
};

// Positive pseudomomenta, ascending. The physical grid is the symmetric
// closure {+-k}; only the positive half is stored.
class ModeGrid {
 public:
  static ModeGrid half_integer(const ChainSpec& spec) {
    std::vector<double> k(spec.pair_count());
    for (int j = 1; j <= spec.pair_count(); ++j)
      k[j - 1] = (2 * j - 1) * pi / spec.n_sites;
    return ModeGrid(std::move(k));
  }

  // Testing hook only; production code always uses the half-integer grid.
  static ModeGrid custom(std::vector<double> momenta) {
    for (double k : momenta)
      if (!(k > 0.0 && k < pi))
        throw std::domain_error("ModeGrid: momenta must lie in (0, pi)");
    return ModeGrid(std::move(momenta));
  }

  const std::vector<double>& momenta() const { return momenta_; }
  std::size_t size() const { return momenta_.size(); }
  double operator[](std::size_t i) const { return momenta_[i]; }

 private:
  explicit ModeGrid(std::vector<double> momenta) : momenta_(std::move(momenta)) {}
  std::vector<double> momenta_;
};

// Per-mode phases over the positive grid plus the +-k total.
struct PhaseReport {
  std::vector<std::pair<double, double>> per_mode;  // (k, Gamma_k)
  double total_raw = 0.0;
  double total_mod = 0.0;
  Convention convention = Convention::Raw;
};

inline double mod_2pi(double x) {
  double r = std::fmod(x, 2.0 * pi);
  if (r < 0.0) r += 2.0 * pi;
  return r;
}

// Compensated (Kahan-Neumaier) accumulator; totals are summed in fixed
// ascending-k order with this, so results do not depend on threading.
class KahanSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace xychain
