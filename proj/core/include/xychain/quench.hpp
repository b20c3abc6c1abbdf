#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "xychain/types.hpp"

// Time-dependent physics of the quench: per-pair two-level Schroedinger
// evolution, Landau-Zener excitation probabilities, kink counting,
// Kibble-Zurek scaling fits, and the defect-dependent final-state phase.

namespace xychain {

enum class KinkMethod { AnalyticLZ, NumericODE };

// Eq-counting convention for the kink sum: one Landau-Zener event per
// (k, -k) pair (default), or both signs counted, which doubles the total.
enum class PairCounting { PairOnce, BothSigns };

// Amplitudes of one (k, -k) pair on the instantaneous ground/excited levels.
struct ModeState {
  std::complex<double> amp_ground{1.0, 0.0};
  std::complex<double> amp_excited{0.0, 0.0};
  double t = 0.0;

  double norm_sq() const {
    return std::norm(amp_ground) + std::norm(amp_excited);
  }
  double excitation_probability() const { return std::norm(amp_excited); }
};

struct IntegratorConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-9;
  double start_field = 5.0;  // evolution starts at t = -start_field * tau_q
  double max_step = 0.0;     // 0 -> tau_q / 100
  double norm_tol = 1e-6;    // hard error beyond this norm drift

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
      throw std::domain_error("IntegratorConfig: tolerances must be positive");
    if (!(start_field >= 5.0))
      throw std::domain_error("IntegratorConfig: start_field must be >= 5");
  }
};

struct DefectReport {
  std::vector<std::pair<double, double>> p_per_mode;  // (k, p_k), positive grid
  double kink_count = 0.0;
  double density = 0.0;
  KinkMethod method = KinkMethod::AnalyticLZ;
};

struct ScalingFit {
  double exponent = 0.0;  // slope of log n vs log tau_q
  double residual = 0.0;  // rms residual of the log-log fit
};

// 2x2 pair Hamiltonian with spectrum +-2 Lambda_k (the quasiparticle pair
// energy); the ground eigenvector reproduces
// cos(theta_k) = (cos k - B)/Lambda_k.
Eigen::Matrix2d mode_hamiltonian(double k, double field, double alpha);

// Integrates i d/dt psi = H_k(t) psi from t = -start_field*tau_q (in the
// instantaneous ground state) to t = 0 with an adaptive fourth-order Magnus
// scheme whose steps are unitary to rounding. Renormalization is forbidden;
// norm drift beyond norm_tol is an error.
ModeState evolve_mode(double k, double alpha, const QuenchSchedule& schedule,
                      const IntegratorConfig& config = {});

// Landau-Zener asymptotic excitation probability exp(-2 pi tau_q k^2).
double lz_probability(double k, const QuenchSchedule& schedule);

// Kink number N = sum over the positive grid of p_k and density n = N/N_sites.
DefectReport kink_count(const ChainSpec& spec, const QuenchSchedule& schedule,
                        KinkMethod method, const IntegratorConfig& config = {},
                        PairCounting counting = PairCounting::PairOnce);

// Least-squares slope of log y vs log x. Throws FitError on degenerate input.
ScalingFit fit_log_log(std::span<const double> x, std::span<const double> y);

// Kibble-Zurek exponent: fits log density vs log tau_q over the given
// samples (>= 5, spanning >= 1.5 decades).
ScalingFit scaling_fit(const ChainSpec& spec,
                       std::span<const double> tau_q_samples, KinkMethod method,
                       const IntegratorConfig& config = {});

// Final-state phase at B = 0 with the (pi/N, -pi/N) pair excited and
// excluded from the sum.
PhaseReport final_phase_one_pair(const ChainSpec& spec,
                                 Convention convention = Convention::Raw);

// Final-state phase at B = 0 with the defect_pairs lowest-|k| pairs excluded
// (highest excitation probability first). Requires alpha = 1.
PhaseReport final_phase_with_defects(const ChainSpec& spec, int defect_pairs,
                                     Convention convention = Convention::Raw);

// Side-by-side comparison of the brute-force final-state sums with the
// printed closed forms, evaluated literally. Reports; never asserts.
struct ClosedFormAudit {
  int n_sites = 0;
  int defect_pairs = 0;
  double brute_force = 0.0;          // ground truth: direct summation
  double brute_force_full = 0.0;     // no exclusions: pi (N - 2)
  double closed_form_one_pair = 0.0; // 2 pi (N - 2 + cos(pi/N))
  double closed_form_defects = 0.0;  // the general printed defect formula
  double closed_form_density_sin_n_sites = 0.0;  // literal sin(pi N) reading
  double closed_form_density_sin_density = 0.0;  // sin(pi n) reading
  double discrepancy_one_pair = 0.0;
  double discrepancy_defects = 0.0;
};

ClosedFormAudit audit_closed_forms(const ChainSpec& spec, int defect_pairs);

}  // namespace xychain
