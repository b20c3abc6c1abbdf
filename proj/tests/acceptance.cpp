#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "properties.hpp"
#include "xychain/exact.hpp"
#include "xychain/model.hpp"
#include "xychain/quench.hpp"

// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Reference numbers are independent closed forms evaluated inline; see the
// test suites for the frozen arbitrary-precision cross-checks.

namespace {

using namespace xychain;

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::string&)> check;
};

// 1. Single-mode trace family: alpha = 0.2, k = pi/3, tau_q in
//    {0.5, 1, 2, 5}; strictly decreasing in t, analytic endpoints, and
//    invariance under time rescaling.
bool criterion_1(std::string& detail) {
  const double k = pi / 3.0, alpha = 0.2;
  const double root = std::sqrt(0.28);  // Lambda at B = 1
  const double at_critical = pi * (1.0 + 0.5 / root);
  const double at_zero = pi * (1.0 - 0.5 / root);

  if (std::abs(mode_phase(k, 1000.0, alpha) - 2.0 * pi) > 1e-4) {
    detail = "B = 1000 proxy not within 1e-4 of 2 pi";
    return false;
  }
  for (double tq : {0.5, 1.0, 2.0, 5.0}) {
    QuenchSchedule schedule(tq);
    if (std::abs(mode_phase_at_time(k, -tq, schedule, alpha) - at_critical) >
        1e-9) {
      detail = "Gamma_k(-tau_q) off closed form at tau_q=" + std::to_string(tq);
      return false;
    }
    if (std::abs(mode_phase_at_time(k, 0.0, schedule, alpha) - at_zero) >
        1e-9) {
      detail = "Gamma_k(0) off closed form at tau_q=" + std::to_string(tq);
      return false;
    }
    QuenchSchedule unit(1.0);
    double prev = mode_phase_at_time(k, -3.0 * tq, schedule, alpha);
    for (int i = 1; i <= 300; ++i) {
      double t = -3.0 * tq + i * 3.0 * tq / 300.0;
      double g = mode_phase_at_time(k, t, schedule, alpha);
      if (t < 0.0 && !(g < prev)) {
        detail = "trace not strictly decreasing at tau_q=" + std::to_string(tq);
        return false;
      }
      if (std::abs(g - mode_phase_at_time(k, t / tq, unit, alpha)) > 1e-12) {
        detail = "time rescaling identity violated";
        return false;
      }
      prev = g;
    }
  }
  return true;
}

// 2. Landau-Zener: N = 101, alpha = 1, tau_q in {20, 50, 100}; the three
//    smallest momenta agree with exp(-2 pi tau_q k^2) to 10% inside the
//    validity window 2 pi tau_q k^2 <= 5.
bool criterion_2(std::string& detail) {
  ModeGrid grid = ModeGrid::half_integer(ChainSpec(101, 1.0));
  for (double tq : {20.0, 50.0, 100.0}) {
    QuenchSchedule schedule(tq);
    for (int j = 0; j < 3; ++j) {
      double k = grid[j];
      if (2.0 * pi * tq * k * k > 5.0) continue;
      double p_lz = lz_probability(k, schedule);
      double p = evolve_mode(k, 1.0, schedule).excitation_probability();
      if (std::abs(p - p_lz) / p_lz > 0.10) {
        detail = "rel err " + std::to_string(std::abs(p - p_lz) / p_lz) +
                 " at tau_q=" + std::to_string(tq) + " k=" + std::to_string(k);
        return false;
      }
    }
  }
  return true;
}

// 3. Kibble-Zurek: N = 401 density over tau_q = logspace(1, 3, 9) fits
//    slope -0.5 +- 0.1; numeric-ODE densities agree with analytic-LZ
//    within 15% at three spot values.
bool criterion_3(std::string& detail) {
  ChainSpec spec(401, 1.0);
  std::vector<double> tau_q, density;
  for (int i = 0; i < 9; ++i)
    tau_q.push_back(std::pow(10.0, 1.0 + 2.0 * i / 8.0));
  for (double tq : tau_q)
    density.push_back(
        kink_count(spec, QuenchSchedule(tq), KinkMethod::AnalyticLZ).density);
  ScalingFit fit = fit_log_log(tau_q, density);
  if (std::abs(fit.exponent + 0.5) > 0.1) {
    detail = "fitted exponent " + std::to_string(fit.exponent);
    return false;
  }
  for (double tq : {10.0, 100.0, 1000.0}) {
    double n_lz =
        kink_count(spec, QuenchSchedule(tq), KinkMethod::AnalyticLZ).density;
    double n_ode =
        kink_count(spec, QuenchSchedule(tq), KinkMethod::NumericODE).density;
    if (std::abs(n_ode - n_lz) / n_lz > 0.15) {
      detail = "ODE/LZ density mismatch at tau_q=" + std::to_string(tq);
      return false;
    }
  }
  return true;
}

// 4. Exact-oracle equivalence: all (N, alpha, B) in {3,5,7} x {0.5,1} x
//    {1.5,2} agree to 1e-2 at 1024 loop steps with demonstrated step
//    convergence; ferromagnetic points (B < 1) report untestable.
bool criterion_4(std::string& detail) {
  exact::LoopConfig loop;
  loop.steps = 1024;
  for (int n : {3, 5, 7})
    for (double alpha : {0.5, 1.0}) {
      for (double field : {1.5, 2.0}) {
        auto rec = exact::validate_against_analytic(n, alpha, field, loop);
        if (rec.status != exact::ValidationRecord::Status::Pass ||
            !(rec.convergence < 1e-3)) {
          detail = "N=" + std::to_string(n) + " alpha=" +
                   std::to_string(alpha) + " B=" + std::to_string(field) +
                   " diff=" + std::to_string(rec.abs_diff);
          return false;
        }
      }
      auto ferro = exact::validate_against_analytic(n, alpha, 0.5, loop);
      if (ferro.status != exact::ValidationRecord::Status::Untestable) {
        detail = "B=0.5 not flagged untestable at N=" + std::to_string(n);
        return false;
      }
    }
  return true;
}

// 5. Summation identities and the documented closed-form discrepancy.
bool criterion_5(std::string& detail) {
  for (int n = 3; n <= 1001; n += 2) {
    double total = final_phase_with_defects(ChainSpec(n, 1.0), 0).total_raw;
    if (std::abs(total - pi * (n - 2.0)) > 1e-9) {
      detail = "pi(N-2) identity broken at N=" + std::to_string(n);
      return false;
    }
  }
  double one_pair = final_phase_one_pair(ChainSpec(5, 1.0)).total_raw;
  double expected = 2.0 * pi * (1.0 + (std::sqrt(5.0) - 1.0) / 4.0);
  if (std::abs(one_pair - expected) > 1e-9) {
    detail = "one-pair total off closed form by " +
             std::to_string(one_pair - expected);
    return false;
  }
  // The printed closed form evaluates to 2 pi (N - 2 + cos(pi/N)); the audit
  // must document its 5 pi offset from the brute-force sum at N = 5 without
  // turning it into a failure.
  ClosedFormAudit audit = audit_closed_forms(ChainSpec(5, 1.0), 1);
  if (std::abs(audit.closed_form_one_pair -
               2.0 * pi * (3.0 + std::cos(pi / 5.0))) > 1e-9 ||
      std::abs(audit.discrepancy_one_pair - 5.0 * pi) > 1e-9) {
    detail = "audit discrepancy not reproduced";
    return false;
  }
  return true;
}

// 6. Property suites, >= 1000 seed-pinned cases each.
bool criterion_6(std::string& detail) {
  struct Prop {
    const char* name;
    int (*run)(int);
  };
  for (const Prop& p :
       {Prop{"phase bounds", props::phase_bounds},
        Prop{"evenness", props::evenness},
        Prop{"ramp monotonicity", props::ramp_monotonicity},
        Prop{"alpha-0 nullity", props::alpha_zero_nullity},
        Prop{"gap positivity", props::gap_positivity},
        Prop{"norm conservation", props::norm_conservation},
        Prop{"byte determinism", props::byte_determinism}}) {
    int bad = p.run(1000);
    if (bad != 0) {
      detail = std::string(p.name) + ": " + std::to_string(bad) +
               " violations in 1000 cases";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "single-mode trace family (endpoints, monotonicity, rescaling)",
       criterion_1},
      {2, "Landau-Zener agreement within the validity window", criterion_2},
      {3, "Kibble-Zurek -1/2 scaling with ODE cross-check", criterion_3},
      {4, "exact-diagonalization oracle equivalence", criterion_4},
      {5, "summation identities and closed-form audit", criterion_5},
      {6, "seed-pinned property suites (>= 1000 cases each)", criterion_6},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.check(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (!ok) ++failures;
    std::printf("criterion %d: %s — %s%s%s\n", c.id, ok ? "PASS" : "FAIL",
                c.title.c_str(), detail.empty() ? "" : " — ", detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
