#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "qdimer/csv.hpp"
#include "qdimer/thermo.hpp"

namespace qdimer::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitConfig = 2,
    kExitDomain = 3,
};

enum class Command { sweep, figure, verify };

struct RunConfig {
    Command command = Command::sweep;
    double q = 1.0;
    double J = 1.0;
    double B = 0.0;
    thermo::Grid grid;
    double fd_step = 0.0;
    std::string out;
    std::string preset;
    std::string out_dir;
    std::uint64_t seed = 20240601;

    /// Throws ConfigError.
    void validate() const;
};

/// Evaluates, filters and tabulates one (q, J, B) sweep.
[[nodiscard]] SweepTable compute_table(const DimerParams& p, double q, const thermo::Grid& grid,
                                       double fd_step = 0.0);

/// Writes the sweep CSV to cfg.out ("-" for stdout). Diagnostics go to `log`.
int run_sweep(const RunConfig& cfg, std::ostream& log);

/// Writes one CSV per (q, B/J) of the preset into cfg.out_dir.
int run_figure(const RunConfig& cfg, std::ostream& log);

/// Runs the invariant suite and prints one line per check.
int run_verify(const RunConfig& cfg, std::ostream& report);

} // namespace qdimer::cli
