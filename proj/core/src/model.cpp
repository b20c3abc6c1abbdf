#include "xychain/model.hpp"

#include <cmath>

namespace xychain {

double single_spin_phase(double theta) {
  if (!(theta >= 0.0 && theta <= pi))
    throw std::domain_error("single_spin_phase: theta must be in [0, pi]");
  return pi * (1.0 - std::cos(theta));
}

double energy_gap(double k, double field, double alpha) {
  double c = std::cos(k) - field;
  double s = alpha * std::sin(k);
  return std::hypot(c, s);
}

double bogoliubov_angle_cos(double k, double field, double alpha) {
  double gap = energy_gap(k, field, alpha);
  if (gap <= gap_floor) throw GaplessPointError(k, field, alpha);
  double c = (std::cos(k) - field) / gap;
  // hypot guarantees |numerator| <= gap up to rounding
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return c;
}

double mode_phase(double k, double field, double alpha, Convention convention) {
  double g = pi * (1.0 - bogoliubov_angle_cos(k, field, alpha));
  return convention == Convention::Mod2Pi ? mod_2pi(g) : g;
}

PhaseReport total_phase(const ModeGrid& grid, double field, double alpha,
                        Convention convention) {
  PhaseReport report;
  report.convention = convention;
  report.per_mode.reserve(grid.size());
  KahanSum sum;
  for (double k : grid.momenta()) {
    double g = mode_phase(k, field, alpha, convention);
    report.per_mode.emplace_back(k, g);
    sum.add(g);
  }
  report.total_raw = 2.0 * sum.value();  // Gamma_{-k} = Gamma_k
  report.total_mod = mod_2pi(report.total_raw);
  return report;
}

PhaseReport total_phase(const ChainSpec& spec, double field,
                        Convention convention) {
  return total_phase(ModeGrid::half_integer(spec), field, spec.alpha,
                     convention);
}

double mode_phase_at_time(double k, double t, const QuenchSchedule& schedule,
                          double alpha, Convention convention) {
  return mode_phase(k, schedule.field_at(t), alpha, convention);
}

double critical_mode_phase(double k, double alpha) {
  double c = std::cos(k) + 1.0;
  double s = alpha * std::sin(k);
  double lam = std::hypot(c, s);
  if (lam <= gap_floor)
    throw GaplessPointError(k, 1.0, alpha);
  return pi * (1.0 - c / lam);
}

double adiabatic_threshold(int n_sites) {
  if (n_sites < 3) throw std::domain_error("adiabatic_threshold: N >= 3");
  return static_cast<double>(n_sites) * n_sites / (2.0 * pi * pi * pi);
}

}  // namespace xychain
