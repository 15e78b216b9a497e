#pragma once
// CLI command implementations; each returns a Report and is pure given
// (config, seed) apart from optional CSV output.

#include <random>

#include "halfspace/report.hpp"
#include "halfspace/chart.hpp"

namespace hs {

Report cmd_verify_metric(const RunConfig& cfg);
Report cmd_curvature_report(const RunConfig& cfg);
Report cmd_weight_scan(const RunConfig& cfg);
Report cmd_indicial(const RunConfig& cfg);
Report cmd_monoid(const RunConfig& cfg);
Report cmd_phg_run(const RunConfig& cfg);

// Dispatch by subcommand name; fills seed/config echo/wall time.
Report run_command(const std::string& name, const RunConfig& cfg);

// Random sampling in the regular chart domains (s in [-5,5], rho >= 0.1,
// sphere coordinates away from chart degeneracies).
ChartPoint random_bisector_point(std::mt19937_64& rng, int m);
ChartPoint random_siegel_point(std::mt19937_64& rng, int m);
ChartPoint random_fermi_point(std::mt19937_64& rng, int n);
ChartPoint random_upper_half_point(std::mt19937_64& rng, int n);

}  // namespace hs
