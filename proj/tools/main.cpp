#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

// xychain: geometric phase and quench dynamics of the transverse-field XY
// chain. Subcommands:
//   trace     per-mode phase along the ramp, CSV
//   quench    kink statistics and final-state phase for one ramp, JSON
//   sweep     kink density vs ramp time plus the scaling-law fit
//   audit     brute-force sums vs the printed closed forms, JSON
//   validate  self-check suites (analytic sums, exact-diagonalization, LZ)

namespace {

using xychain::KinkMethod;
namespace cli = xychain::cli;

const std::map<std::string, KinkMethod> method_map{
    {"analytic-lz", KinkMethod::AnalyticLZ},
    {"numeric-ode", KinkMethod::NumericODE}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transverse-field XY chain: geometric phase under a linear quench"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a key=value file");

  cli::TraceConfig trace;
  auto* trace_cmd =
      app.add_subcommand("trace", "per-mode phase Gamma_k(t) along the ramp");
  trace_cmd->add_option("--alpha", trace.alpha, "anisotropy in [0, 1]")
      ->check(CLI::Range(0.0, 1.0));
  auto* k_opt =
      trace_cmd->add_option("--k", trace.k, "momentum in (0, pi), overrides --n");
  trace_cmd->add_option("--n", trace.n_sites, "site count (odd, >= 3)")
      ->excludes(k_opt);
  trace_cmd->add_option("--k-index", trace.k_index,
                        "1-based index into the grid (2j-1) pi / N");
  trace_cmd->add_option("--tau-q", trace.tau_q, "ramp time(s), repeatable");
  trace_cmd->add_option("--t-min", trace.t_min, "first sample time");
  trace_cmd->add_option("--t-max", trace.t_max, "last sample time (<= 0)");
  trace_cmd->add_option("--samples", trace.samples, "uniform time samples");
  trace_cmd->add_option("--out", trace.out, "output CSV path");
  trace_cmd->add_flag("--split", trace.split,
                      "one file per tau_q instead of a long-format column");

  cli::QuenchConfig quench;
  auto* quench_cmd = app.add_subcommand(
      "quench", "kink statistics and final-state phase for one ramp");
  quench_cmd->add_option("--n", quench.n_sites, "site count (odd, >= 3)");
  quench_cmd->add_option("--alpha", quench.alpha, "anisotropy in [0, 1]")
      ->check(CLI::Range(0.0, 1.0));
  quench_cmd->add_option("--tau-q", quench.tau_q, "ramp time")
      ->check(CLI::PositiveNumber);
  quench_cmd
      ->add_option("--method", quench.method, "excitation probability source")
      ->transform(CLI::CheckedTransformer(method_map, CLI::ignore_case));
  quench_cmd->add_flag("--cross-check", quench.cross_check,
                       "also run the other method and report the difference");
  quench_cmd->add_option("--out", quench.out, "output JSON path (default stdout)");

  cli::SweepConfig sweep;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "kink density vs ramp time with a log-log scaling fit");
  sweep_cmd->add_option("--n", sweep.n_sites, "site count (odd, >= 3)");
  sweep_cmd->add_option("--alpha", sweep.alpha, "anisotropy in [0, 1]")
      ->check(CLI::Range(0.0, 1.0));
  sweep_cmd
      ->add_option("--tau-q", sweep.tau_q, "ramp times (>= 5, >= 1.5 decades)")
      ->required();
  sweep_cmd->add_option("--method", sweep.method, "excitation probability source")
      ->transform(CLI::CheckedTransformer(method_map, CLI::ignore_case));
  sweep_cmd->add_option("--out", sweep.out,
                        "output CSV path; fit summary goes to <out>.json");
  sweep_cmd
      ->add_option("--synthetic-density-coeff", sweep.synthetic_density_coeff,
                   "testing hook: use density = c * tau_q^(-1/2)")
      ->group("");  // hidden

  cli::AuditConfig audit;
  auto* audit_cmd = app.add_subcommand(
      "audit", "brute-force final-state sums vs the printed closed forms");
  audit_cmd->add_option("--n", audit.n_sites, "site counts (odd, >= 3)");
  audit_cmd->add_option("--defects", audit.defects,
                        "excited pair counts to audit");
  audit_cmd->add_option("--out", audit.out, "output JSON path (default stdout)");

  cli::ValidateConfig validate;
  auto* validate_cmd =
      app.add_subcommand("validate", "run self-check suites, exit 1 on failure");
  validate_cmd->add_option("--suite", validate.suite, "oracle | lz | sums | all")
      ->check(CLI::IsMember({"oracle", "lz", "sums", "all"}));
  validate_cmd->add_option("--steps", validate.steps,
                           "phi samples for the exact-diagonalization loop")
      ->check(CLI::Range(16, 100000));
  validate_cmd->add_option("--out", validate.out,
                           "also write the results as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (trace_cmd->parsed()) return cli::cmd_trace(trace);
  if (quench_cmd->parsed()) return cli::cmd_quench(quench);
  if (sweep_cmd->parsed()) return cli::cmd_sweep(sweep);
  if (audit_cmd->parsed()) return cli::cmd_audit(audit);
  if (validate_cmd->parsed()) return cli::cmd_validate(validate);
  return 2;
}
