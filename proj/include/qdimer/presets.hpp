#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qdimer/thermo.hpp"

namespace qdimer::cli {

/// Parameter families behind the figure data. J = 1 throughout, so B equals B/J
/// and temperatures are in units of J.
struct Preset {
    std::string name;
    std::string description;
    std::vector<double> qs;
    std::vector<double> b_over_j;
    thermo::Grid grid;
};

[[nodiscard]] const std::vector<Preset>& presets();

/// Throws ConfigError for an unknown name.
[[nodiscard]] const Preset& find_preset(std::string_view name);

/// e.g. "fig4_q0.6_bj1.2.csv"
[[nodiscard]] std::string preset_file_name(const Preset& preset, double q, double b_over_j);

/// One line per preset, for --help output.
[[nodiscard]] std::string describe_presets();

} // namespace qdimer::cli
