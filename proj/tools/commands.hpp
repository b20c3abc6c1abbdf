#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xychain/quench.hpp"
#include "xychain/types.hpp"

// Command implementations behind the CLI surface. Each returns the process
// exit code: 0 success, 1 validation/physics failure, 2 usage or I/O error.

namespace xychain::cli {

struct TraceConfig {
  double alpha = 0.2;
  std::optional<double> k;       // direct momentum, overrides k_index
  std::optional<int> n_sites;    // with k_index: k = (2 j - 1) pi / N
  int k_index = 1;
  std::vector<double> tau_q = {1.0};
  double t_min = -3.0;
  double t_max = 0.0;
  int samples = 301;
  std::string out = "trace.csv";
  bool split = false;  // one file per tau_q instead of a long-format column
};

struct QuenchConfig {
  int n_sites = 101;
  double alpha = 1.0;
  double tau_q = 100.0;
  KinkMethod method = KinkMethod::AnalyticLZ;
  bool cross_check = false;
  std::string out;  // empty: stdout
};

struct SweepConfig {
  int n_sites = 401;
  double alpha = 1.0;
  std::vector<double> tau_q;
  KinkMethod method = KinkMethod::AnalyticLZ;
  std::string out = "sweep.csv";  // fit summary goes to <out>.json
  // test hook: replace measured densities with c * tau_q^(-1/2)
  std::optional<double> synthetic_density_coeff;
};

struct AuditConfig {
  std::vector<int> n_sites = {5};
  std::vector<int> defects = {0, 1};
  std::string out;  // empty: stdout
};

struct ValidateConfig {
  std::string suite = "all";  // oracle | lz | sums | all
  int steps = 256;            // oracle loop resolution
  std::string out;            // optional machine-readable JSON
};

int cmd_trace(const TraceConfig& config);
int cmd_quench(const QuenchConfig& config);
int cmd_sweep(const SweepConfig& config);
int cmd_audit(const AuditConfig& config);
int cmd_validate(const ValidateConfig& config);

}  // namespace xychain::cli
