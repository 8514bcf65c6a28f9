#pragma once

#include <array>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qdimer/thermo.hpp"

namespace qdimer::cli {

inline constexpr std::array<std::string_view, 18> kCsvColumns = {
    "t_star", "beta_star", "beta", "T_physical", "Z",            "trace_q",      "U2",   "U",    "S",
    "F",      "physical",  "branch_id", "C_varrho", "C_rho_closed", "C_rho_oracle", "C_gb", "U_fd", "S_fd",
};

/// Sweep plus the per-row concurrence columns.
struct SweepTable {
    thermo::SweepResult sweep;
    std::vector<double> c_varrho;
    std::vector<double> c_rho_closed;
    std::vector<double> c_rho_oracle;
    std::vector<double> c_gb;
};

/// 17 significant digits; non-finite values become the token NaN.
[[nodiscard]] std::string format_number(double v);

[[nodiscard]] SweepTable build_table(thermo::SweepResult filtered);

void write_csv(std::ostream& os, const SweepTable& table);

} // namespace qdimer::cli
