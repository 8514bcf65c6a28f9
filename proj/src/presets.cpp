#include "qdimer/presets.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "qdimer/errors.hpp"

namespace qdimer::cli {

namespace {

// Positive pseudo-temperatures, fine enough for the 1e-3 chord test.
const thermo::Grid kPositiveGrid{0.02, 5.0, 500, thermo::Spacing::uniform};

// Both signs of T*; the beta* < 0 half is the population-inverted state.
const thermo::Grid kSignedGrid{-8.0, 8.0, 800, thermo::Spacing::uniform};

std::string shortest(double v)
{
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), res.ptr};
}

std::vector<Preset> make_presets()
{
    const std::vector<double> panels = {0.0, 1.0, 1.2};
    return {
        {"fig1", "T vs T* for q < 1", {0.2, 0.6, 0.9}, panels, kPositiveGrid},
        {"fig2", "T vs T* at q = 2 across B/J, both signs of T*", {2.0}, {0.0, 1.0, 2.0, 4.0}, kSignedGrid},
        {"fig3a", "S vs U at q = 0.2, B/J = 1", {0.2}, {1.0}, kPositiveGrid},
        {"fig3b", "rejected T at q = 0.2, B/J = 1", {0.2}, {1.0}, kPositiveGrid},
        {"fig3c", "S vs U at q = 2, B/J = 4", {2.0}, {4.0}, kSignedGrid},
        {"fig3d", "rejected T at q = 2, B/J = 4", {2.0}, {4.0}, kSignedGrid},
        {"fig4", "concurrence, q < 1", {0.2, 0.6, 0.9}, panels, kPositiveGrid},
        {"fig5", "concurrence, 1 < q <= 2", {1.2, 1.6, 2.0}, panels, kPositiveGrid},
        {"fig6", "concurrence, 1 <= q <= 2.8", {1.0, 1.8, 2.8}, panels, kPositiveGrid},
    };
}

} // namespace

const std::vector<Preset>& presets()
{
    static const std::vector<Preset> all = make_presets();
    return all;
}

const Preset& find_preset(std::string_view name)
{
    for (const auto& p : presets()) {
        if (p.name == name) {
            return p;
        }
    }
    throw ConfigError("unknown preset '" + std::string(name) + "'");
}

std::string preset_file_name(const Preset& preset, double q, double b_over_j)
{
    return preset.name + "_q" + shortest(q) + "_bj" + shortest(b_over_j) + ".csv";
}

std::string describe_presets()
{
    std::ostringstream os;
    for (const auto& p : presets()) {
        os << "  " << p.name << ": " << p.description << "; q in {";
        for (std::size_t i = 0; i < p.qs.size(); ++i) {
            os << (i ? ", " : "") << shortest(p.qs[i]);
        }
        os << "}, B/J in {";
        for (std::size_t i = 0; i < p.b_over_j.size(); ++i) {
            os << (i ? ", " : "") << shortest(p.b_over_j[i]);
        }
        os << "}, T* in [" << shortest(p.grid.t_min) << ", " << shortest(p.grid.t_max) << "] x " << p.grid.steps
           << "\n";
    }
    return os.str();
}

} // namespace qdimer::cli
