// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qdimer/csv.hpp"
#include "qdimer/entanglement.hpp"
#include "qdimer/errors.hpp"
#include "qdimer/presets.hpp"
#include "qdimer/qcalc.hpp"
#include "qdimer/run.hpp"
#include "qdimer/superstat.hpp"
#include "qdimer/thermo.hpp"

using namespace qdimer;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

struct Labelled {
    std::string label;
    cli::SweepTable table;
};

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

const std::vector<Labelled>& preset_tables()
{
    static const std::vector<Labelled> all = [] {
        std::vector<Labelled> out;
        for (const auto& p : cli::presets()) {
            for (double q : p.qs) {
                for (double bj : p.b_over_j) {
                    out.push_back({cli::preset_file_name(p, q, bj), cli::compute_table({1.0, bj}, q, p.grid)});
                }
            }
        }
        return out;
    }();
    return all;
}

// Local chord dS/dU * T - 1 through beta* -+ h; NaN when the chord cannot resolve U.
double local_chord_error(const DimerParams& p, double q, const thermo::ThermoPoint& pt)
{
    const double h = 1e-5 * std::max(1.0, std::abs(pt.beta_star));
    const auto a = thermo::evaluate_point(p, q, 1.0 / (pt.beta_star - h));
    const auto b = thermo::evaluate_point(p, q, 1.0 / (pt.beta_star + h));
    const double du = b.U - a.U;
    if (!a.evaluable || !b.evaluable) {
        return INFINITY;
    }
    if (std::abs(du) <= 1e-11 * std::max({1.0, std::abs(a.U), std::abs(b.U)})) {
        return (a.cutoff || b.cutoff) ? INFINITY : NAN;
    }
    return (b.S - a.S) / (du * pt.beta) - 1.0;
}

Verdict gb_critical_temperature()
{
    const double expected = 1.0 / std::asinh(1.0);
    double worst = 0.0;
    for (double b : {0.0, 0.5, 1.0, 1.2, 2.0, 4.0}) {
        const DimerParams p{1.0, b};
        double lo = 0.5; // entangled
        double hi = 3.0; // separable
        while (hi - lo > 1e-12) {
            const double mid = 0.5 * (lo + hi);
            (entanglement::concurrence_gb(p, 1.0 / mid) > 0.0 ? lo : hi) = mid;
        }
        worst = std::max(worst, std::abs(0.5 * (lo + hi) - expected));
    }
    return {worst <= 1e-6, "max |T_c - 1/asinh(1)| = " + fmt(worst) + " over six fields"};
}

Verdict superstat_equivalence()
{
    double worst_quad = 0.0;
    double worst_se = 0.0;
    for (double q : {1.2, 1.5, 2.0, 2.8}) {
        const auto fl = superstat::GammaFluctuation::from_q(q, 1.0);
        for (double be : {0.1, 1.0, 5.0}) {
            const double exact = qcalc::q_exp(q, -be);
            const auto quad = superstat::averaged_boltzmann_scalar(fl, be, superstat::Method::quadrature);
            worst_quad = std::max(worst_quad, std::abs(quad.value - exact));
            const auto mc = superstat::averaged_boltzmann_scalar(fl, be, superstat::Method::monte_carlo, 1000000,
                                                                 superstat::kDefaultSeed);
            worst_se = std::max(worst_se, std::abs(mc.value - exact) / mc.error);
        }
    }
    return {worst_quad <= 1e-10 && worst_se <= 4.0,
            "quadrature max err " + fmt(worst_quad) + ", Monte Carlo max " + fmt(worst_se) + " SE"};
}

Verdict identity_map()
{
    double worst = 0.0;
    for (double b : {0.0, 1.0, 1.2, 2.0, 4.0}) {
        const DimerParams p{1.0, b};
        for (int k = 0; k <= 4900; ++k) {
            const double bs = 1.0 / (0.1 + 0.001 * k);
            worst = std::max(worst, std::abs(thermo::physical_beta(p, 1.0, bs) - bs));
            // the map written out from its ingredients
            const auto st = dimer::thermal_state(p, 1.0, bs);
            const double tr = dimer::trace_rho_q(st);
            const double explicit_beta = bs * tr / (1.0 - 0.0 * bs * dimer::internal_energy_2nd(st) / tr);
            worst = std::max(worst, std::abs(explicit_beta - bs));
        }
    }
    return {worst <= 1e-8, "max |beta - beta*| = " + fmt(worst)};
}

Verdict negative_temperature()
{
    const auto& preset = cli::find_preset("fig2");
    std::size_t negative = 0;
    std::size_t kept = 0;
    std::size_t mismatches = 0;
    for (double bj : preset.b_over_j) {
        const auto table = cli::compute_table({1.0, bj}, 2.0, preset.grid);
        const auto& pts = table.sweep.points;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto& pt = pts[i];
            if (!pt.evaluable || !(pt.beta < 0.0)) {
                continue;
            }
            ++negative;
            kept += pt.physical ? 1 : 0;
            // branch rules: T rises with T*, and dS/dU = 1/T locally
            const std::size_t j = i + 1 < pts.size() && pts[i + 1].evaluable && pts[i + 1].beta < 0.0 ? i + 1 : i - 1;
            const bool rising = (pts[std::max(i, j)].beta - pts[std::min(i, j)].beta) > 0.0;
            const double chord = local_chord_error({1.0, bj}, 2.0, pt);
            const bool slope = std::isnan(chord) || std::abs(chord) <= 1e-3;
            const bool expect = rising && slope;
            if (pt.physical && !expect) {
                ++mismatches;
            }
            if (!pt.physical && expect) {
                // only the overlap rule may drop such a point: another retained branch covers its T
                const double t = 1.0 / pt.beta;
                bool below = false;
                bool above = false;
                for (const auto& o : pts) {
                    if (o.physical && o.branch_id != pt.branch_id && o.beta < 0.0) {
                        below = below || 1.0 / o.beta < t;
                        above = above || 1.0 / o.beta > t;
                    }
                }
                mismatches += (below && above) ? 0 : 1;
            }
            if (pt.physical && pt.sign != thermo::TemperatureSign::negative) {
                ++mismatches;
            }
        }
    }
    return {negative > 0 && mismatches == 0, std::to_string(negative) + " rows with beta < 0, " +
                                                 std::to_string(kept) + " retained, " +
                                                 std::to_string(mismatches) + " verdicts off the branch rules"};
}

// Vertical-line test on a polyline: some x is crossed by segments that disagree on y.
bool multivalued(std::vector<std::pair<double, double>> xy)
{
    xy.erase(std::remove_if(xy.begin(), xy.end(),
                            [](const auto& v) { return !std::isfinite(v.first) || !std::isfinite(v.second); }),
             xy.end());
    for (const auto& probe : xy) {
        const double x = probe.first;
        double lo = INFINITY;
        double hi = -INFINITY;
        for (std::size_t i = 0; i + 1 < xy.size(); ++i) {
            const auto [x0, y0] = xy[i];
            const auto [x1, y1] = xy[i + 1];
            if (x < std::min(x0, x1) || x > std::max(x0, x1)) {
                continue;
            }
            const double y = x1 == x0 ? y0 : y0 + (y1 - y0) * (x - x0) / (x1 - x0);
            lo = std::min(lo, y);
            hi = std::max(hi, y);
        }
        if (hi - lo > 1e-6 * std::max(1.0, std::abs(hi))) {
            return true;
        }
    }
    return false;
}

Verdict fold_detection()
{
    const auto sw = thermo::physicality_filter(thermo::sweep({1.0, 1.0}, 0.2, cli::find_preset("fig3a").grid));
    std::vector<std::pair<double, double>> su_all;
    std::vector<std::pair<double, double>> su_kept;
    std::vector<std::pair<double, double>> tu_all;
    std::vector<std::pair<double, double>> tu_kept;
    std::size_t rejected = 0;
    for (const auto& p : sw.points) {
        if (!p.evaluable) {
            continue;
        }
        su_all.emplace_back(p.U_fd, p.S_fd);
        tu_all.emplace_back(1.0 / p.beta, p.U);
        if (p.physical) {
            su_kept.emplace_back(p.U_fd, p.S_fd);
            tu_kept.emplace_back(1.0 / p.beta, p.U);
        } else {
            ++rejected;
        }
    }
    const bool su_before = multivalued(su_all);
    const bool su_after = multivalued(su_kept);
    const bool tu_before = multivalued(tu_all);
    const bool tu_after = multivalued(tu_kept);
    const bool ok = rejected > 0 && su_before && !su_after && tu_before && !tu_after;
    return {ok, std::to_string(rejected) + " rejected; S(U) multivalued before/after: " +
                    (su_before ? "yes" : "no") + "/" + (su_after ? "yes" : "no") +
                    "; U(T) before/after: " + (tu_before ? "yes" : "no") + "/" + (tu_after ? "yes" : "no")};
}

Verdict dual_formula()
{
    std::map<double, double> worst_by_q;
    for (const auto& [label, table] : preset_tables()) {
        const double q = table.sweep.q;
        double& worst = worst_by_q[q];
        for (const auto& p : table.sweep.points) {
            if (!p.physical) {
                continue;
            }
            const double du = std::abs(p.U_fd - p.u2 / p.trace_q) / std::max(1.0, std::abs(p.U));
            const double ds = std::abs(p.S_fd - p.S) / std::max(1.0, p.S);
            worst = std::max({worst, std::isfinite(du) ? du : INFINITY, std::isfinite(ds) ? ds : INFINITY});
        }
    }
    bool ok = true;
    std::string detail = "max rel err by q:";
    for (const auto& [q, w] : worst_by_q) {
        ok = ok && w <= 1e-6;
        detail += " " + fmt(q) + ":" + fmt(w);
    }
    return {ok, detail};
}

Verdict chord_identity()
{
    double worst = 0.0;
    std::size_t tested = 0;
    for (const auto& [label, table] : preset_tables()) {
        for (const auto& p : table.sweep.points) {
            if (!p.physical) {
                continue;
            }
            const double e = local_chord_error(table.sweep.params, table.sweep.q, p);
            if (std::isnan(e)) {
                continue;
            }
            worst = std::max(worst, std::abs(e));
            ++tested;
        }
    }
    return {tested > 0 && worst <= 1e-3,
            std::to_string(tested) + " retained points, max |dS/dU T - 1| = " + fmt(worst)};
}

Verdict oracle_equivalence()
{
    double worst_x = 0.0;
    double worst_gb = 0.0;
    std::size_t gb_rows = 0;
    for (const auto& [label, table] : preset_tables()) {
        const auto& sw = table.sweep;
        for (std::size_t i = 0; i < sw.points.size(); ++i) {
            const auto& p = sw.points[i];
            if (!p.evaluable) {
                continue;
            }
            const auto st = dimer::thermal_state(sw.params, sw.q, p.beta_star);
            const double o = entanglement::concurrence_oracle(st);
            worst_x = std::max(worst_x, std::abs(o - entanglement::concurrence_x_state(st.rho)));
            if (qcalc::is_classical(sw.q)) {
                worst_gb = std::max(worst_gb, std::abs(o - entanglement::concurrence_gb(sw.params, p.beta)));
                worst_gb = std::max(worst_gb, std::abs(table.c_rho_oracle[i] - table.c_gb[i]));
                ++gb_rows;
            }
        }
    }
    return {worst_x <= 1e-10 && worst_gb <= 1e-10 && gb_rows > 0,
            "oracle vs X-state " + fmt(worst_x) + ", vs GB at q = 1 " + fmt(worst_gb) + " (" +
                std::to_string(gb_rows) + " rows)"};
}

Verdict high_q_extinction()
{
    const auto grid = cli::find_preset("fig6").grid;
    bool ok = true;
    std::string detail;
    for (double bj : {0.0, 1.0, 1.2}) {
        const auto table = cli::compute_table({1.0, bj}, 3.0, grid);
        double max_varrho = 0.0;
        double max_rho = 0.0;
        double at = NAN;
        for (std::size_t i = 0; i < table.sweep.points.size(); ++i) {
            if (table.c_varrho[i] > max_varrho) {
                max_varrho = table.c_varrho[i];
                at = table.sweep.points[i].t_star;
            }
            if (table.c_rho_closed[i] > max_rho) {
                max_rho = table.c_rho_closed[i];
            }
        }
        ok = ok && max_varrho == 0.0 && max_rho == 0.0;
        detail += (detail.empty() ? "" : "; ") + std::string("B/J=") + fmt(bj) + ": max C_varrho " + fmt(max_varrho) +
                  (max_varrho > 0.0 ? " at T*=" + fmt(at) : "") + ", max C_rho " + fmt(max_rho);
    }
    return {ok, detail};
}

std::string slurp(const fs::path& p)
{
    std::ifstream is(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(is), {}};
}

Verdict determinism()
{
    const fs::path root = fs::temp_directory_path() / "qdimer_acceptance_determinism";
    fs::remove_all(root);
    std::ostringstream log;
    std::size_t files = 0;
    std::size_t differing = 0;
    for (const auto& preset : cli::presets()) {
        std::vector<fs::path> dirs = {root / "a" / preset.name, root / "b" / preset.name};
        for (const auto& d : dirs) {
            cli::RunConfig cfg;
            cfg.command = cli::Command::figure;
            cfg.preset = preset.name;
            cfg.out_dir = d.string();
            if (cli::run_figure(cfg, log) != cli::kExitOk) {
                fs::remove_all(root);
                return {false, "figure " + preset.name + " failed: " + log.str()};
            }
        }
        for (const auto& entry : fs::directory_iterator(dirs[0])) {
            ++files;
            const auto other = dirs[1] / entry.path().filename();
            if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) {
                ++differing;
            }
        }
    }
    fs::remove_all(root);
    return {files > 0 && differing == 0, std::to_string(files) + " CSVs, " + std::to_string(differing) + " differ"};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"GB critical temperature", gb_critical_temperature},
        {"superstatistical equivalence", superstat_equivalence},
        {"identity map at q = 1", identity_map},
        {"negative-temperature regime", negative_temperature},
        {"fold detection", fold_detection},
        {"dual-formula thermodynamics", dual_formula},
        {"discrete thermodynamic identity", chord_identity},
        {"concurrence oracle equivalence", oracle_equivalence},
        {"high-q extinction", high_q_extinction},
        {"determinism", determinism},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = run();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (v.pass ? "PASS" : "FAIL") << "  " << name << "  (" << v.detail << "; " << fmt(secs) << " s)\n";
        failed += v.pass ? 0 : 1;
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
