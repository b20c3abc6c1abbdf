#pragma once

#include "xychain/types.hpp"

// Closed-form static quantities of the chain: Bogoliubov angle, gap,
// per-mode and total geometric phases, and the adiabatic threshold.

namespace xychain {

// Geometric phase of a single spin-1/2 transported around the field axis:
// pi * (1 - cos theta). The spin-down phase is the negation.
double single_spin_phase(double theta);

// Excitation gap Lambda_k = sqrt((cos k - B)^2 + alpha^2 sin^2 k).
double energy_gap(double k, double field, double alpha);

// cos(theta_k) = (cos k - B) / Lambda_k. Throws GaplessPointError when the
// gap is at or below gap_floor.
double bogoliubov_angle_cos(double k, double field, double alpha);

// Gamma_k = pi * (1 - cos theta_k), optionally reduced to [0, 2 pi).
double mode_phase(double k, double field, double alpha,
                  Convention convention = Convention::Raw);

// Per-mode phases on the positive grid and the total over {+-k}
// (Gamma_{-k} = Gamma_k, so the positive-k sum is doubled).
PhaseReport total_phase(const ChainSpec& spec, double field,
                        Convention convention = Convention::Raw);
PhaseReport total_phase(const ModeGrid& grid, double field, double alpha,
                        Convention convention = Convention::Raw);

// Gamma_k at time t under the given schedule; identical to
// mode_phase(k, schedule.field_at(t), alpha).
double mode_phase_at_time(double k, double t, const QuenchSchedule& schedule,
                          double alpha, Convention convention = Convention::Raw);

// Gamma_k at the critical instant t = -tau_q (B = 1).
double critical_mode_phase(double k, double alpha);

// N^2 / (2 pi^3); the quench is adiabatic when tau_q exceeds this by
// adiabatic_margin.
double adiabatic_threshold(int n_sites);

}  // namespace xychain
