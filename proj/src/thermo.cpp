#include "qdimer/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "qdimer/errors.hpp"
#include "qdimer/qcalc.hpp"

namespace qdimer::thermo {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool same_sign(double a, double b) noexcept { return (a > 0.0 && b > 0.0) || (a < 0.0 && b < 0.0); }

ThermoPoint blank_point(double t_star)
{
    ThermoPoint pt;
    pt.t_star = t_star;
    pt.beta_star = 1.0 / t_star;
    pt.beta = pt.Z = pt.trace_q = pt.u2 = pt.U = pt.S = pt.F = pt.U_fd = pt.S_fd = kNaN;
    return pt;
}

double ln_q_partition(const DimerParams& p, double q, double beta_star)
{
    return qcalc::q_log(q, dimer::partition_fn(p, q, beta_star));
}

struct ClosedForm {
    double U = 0.0;
    double S = 0.0;
    bool cutoff = false;
};

ClosedForm closed_form_su(const DimerParams& p, double q, double beta_star)
{
    const auto state = dimer::thermal_state(p, q, beta_star);
    return {dimer::internal_energy_2nd(state) / dimer::trace_rho_q(state), entropy_direct(state), state.cutoff};
}

constexpr double kChordStep = 1e-4;

} // namespace

void Grid::validate() const
{
    if (steps < 3) {
        throw ConfigError("grid needs at least 3 steps");
    }
    if (!std::isfinite(t_min) || !std::isfinite(t_max) || !(t_min < t_max)) {
        throw ConfigError("grid requires finite t_min < t_max");
    }
    if (spacing == Spacing::log && !(t_min > 0.0)) {
        throw ConfigError("log spacing requires t_min > 0");
    }
    const double span = t_max - t_min;
    for (double t : t_star_nodes()) {
        if (std::abs(t) <= 1e-12 * span) {
            throw ConfigError("grid contains the node T* = 0");
        }
    }
}

std::vector<double> Grid::t_star_nodes() const
{
    std::vector<double> nodes(steps);
    const double last = static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        const double f = static_cast<double>(i) / last;
        nodes[i] = spacing == Spacing::log ? t_min * std::pow(t_max / t_min, f) : t_min + f * (t_max - t_min);
    }
    nodes.back() = t_max;
    std::stable_sort(nodes.begin(), nodes.end(), [](double a, double b) { return 1.0 / a < 1.0 / b; });
    return nodes;
}

double physical_beta(const DimerParams& p, double q, double beta_star)
{
    if (qcalc::is_classical(q)) {
        return beta_star;
    }
    const auto state = dimer::thermal_state(p, q, beta_star);
    const double tr = dimer::trace_rho_q(state);
    const double u2 = dimer::internal_energy_2nd(state);
    const double denom = 1.0 - (1.0 - q) * beta_star * u2 / tr;
    if (std::abs(denom) < 1e-14) {
        std::ostringstream msg;
        msg << "beta(beta*) has a pole at beta*=" << beta_star << " (q=" << q << ")";
        throw SingularMap(msg.str());
    }
    return beta_star * tr / denom;
}

double entropy_direct(const dimer::ThermalState& state)
{
    if (qcalc::is_classical(state.q)) {
        double s = 0.0;
        for (double pi : state.populations) {
            if (pi > 0.0) {
                s -= pi * std::log(pi);
            }
        }
        return s;
    }
    return (1.0 - dimer::trace_rho_q(state)) / (state.q - 1.0);
}

double free_energy_from_partition(const DimerParams& p, double q, double beta_star)
{
    return -ln_q_partition(p, q, beta_star) / physical_beta(p, q, beta_star);
}

double default_fd_step(double beta_star) noexcept { return 1e-5 * std::max(1.0, std::abs(beta_star)); }

EntropyEnergy entropy_and_energy_physical(const DimerParams& p, double q, double beta_star, double h,
                                          double tol_deriv)
{
    const double lo = beta_star - h;
    const double hi = beta_star + h;

    const double beta_lo = physical_beta(p, q, lo);
    const double beta_hi = physical_beta(p, q, hi);
    const double dbeta = (beta_hi - beta_lo) / (2.0 * h);
    if (std::abs(dbeta) < tol_deriv) {
        std::ostringstream msg;
        msg << "d beta / d beta* vanishes at beta*=" << beta_star;
        throw SingularMap(msg.str());
    }

    const double lnz_lo = ln_q_partition(p, q, lo);
    const double lnz_hi = ln_q_partition(p, q, hi);
    const double dlnz = (lnz_hi - lnz_lo) / (2.0 * h);
    const double dg = (lnz_hi / beta_hi - lnz_lo / beta_lo) / (2.0 * h);

    EntropyEnergy out;
    out.U = -dlnz / dbeta;
    out.S = -beta_star * beta_star / dbeta * dg;
    return out;
}

ThermoPoint evaluate_point(const DimerParams& p, double q, double t_star, double fd_step, double tol_deriv)
{
    ThermoPoint pt = blank_point(t_star);
    try {
        const auto state = dimer::thermal_state(p, q, pt.beta_star);
        pt.Z = state.Z;
        pt.trace_q = dimer::trace_rho_q(state);
        pt.u2 = dimer::internal_energy_2nd(state);
        pt.beta = physical_beta(p, q, pt.beta_star);
        pt.U = pt.u2 / pt.trace_q;
        pt.S = entropy_direct(state);
        pt.F = pt.beta != 0.0 ? pt.U - pt.S / pt.beta : kNaN;
        pt.cutoff = state.cutoff;
        pt.evaluable = std::isfinite(pt.beta) && std::isfinite(pt.U) && std::isfinite(pt.S);
    } catch (const Error&) {
        return blank_point(t_star);
    }
    if (!pt.evaluable) {
        return blank_point(t_star);
    }
    pt.sign = pt.beta > 0.0 ? TemperatureSign::positive
                            : (pt.beta < 0.0 ? TemperatureSign::negative : TemperatureSign::none);

    const double h = fd_step > 0.0 ? fd_step : default_fd_step(pt.beta_star);
    try {
        const auto su = entropy_and_energy_physical(p, q, pt.beta_star, h, tol_deriv);
        pt.U_fd = su.U;
        pt.S_fd = su.S;
    } catch (const Error&) {
        // left as NaN: stencil outside the domain or at a fold
    }
    return pt;
}

SweepResult sweep(const DimerParams& p, double q, const Grid& grid, double fd_step)
{
    grid.validate();
    SweepResult out;
    out.q = q;
    out.params = p;
    out.grid = grid;
    out.fd_step = fd_step;
    const auto nodes = grid.t_star_nodes();
    out.points.reserve(nodes.size());
    for (double t : nodes) {
        out.points.push_back(evaluate_point(p, q, t, fd_step));
    }
    return out;
}

SweepResult physicality_filter(SweepResult result, const Tolerances& tol)
{
    auto& pts = result.points;
    const std::size_t n = pts.size();
    if (n < 3) {
        throw InsufficientGrid("physicality filter needs at least 3 points");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(pts[i].beta_star > pts[i - 1].beta_star)) {
            throw InsufficientGrid("sweep is not strictly increasing in beta*");
        }
    }

    // Neighbours i, i+1 lie on one continuous piece of the map.
    auto connected = [&](std::size_t i) {
        const auto& a = pts[i];
        const auto& b = pts[i + 1];
        return a.evaluable && b.evaluable && same_sign(a.beta_star, b.beta_star) && same_sign(a.beta, b.beta);
    };

    std::vector<bool> increasing(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        pts[i].physical = false;
        pts[i].branch_id = -1;
        if (!pts[i].evaluable) {
            continue;
        }
        if (i + 1 < n && connected(i)) {
            increasing[i] = pts[i + 1].beta > pts[i].beta;
        } else if (i > 0 && connected(i - 1)) {
            increasing[i] = pts[i].beta > pts[i - 1].beta;
        }
    }

    int branch = -1;
    for (std::size_t i = 0; i < n; ++i) {
        if (!pts[i].evaluable) {
            continue;
        }
        if (i == 0 || !connected(i - 1) || increasing[i] != increasing[i - 1]) {
            ++branch;
        }
        pts[i].branch_id = branch;
    }

    // Local chord through beta* -+ h against the node's own beta.
    auto slope_ok = [&](const ThermoPoint& pt) {
        const double h = kChordStep * std::max(1.0, std::abs(pt.beta_star));
        try {
            const auto a = closed_form_su(result.params, result.q, pt.beta_star - h);
            const auto b = closed_form_su(result.params, result.q, pt.beta_star + h);
            const double du = b.U - a.U;
            const double ds = b.S - a.S;
            if (std::abs(du) <= tol.resolution * std::max({1.0, std::abs(a.U), std::abs(b.U)})) {
                // A cut-off state frozen while T moves breaks 1/T = dS/dU outright.
                return !a.cutoff && !b.cutoff;
            }
            return std::abs(ds / (du * pt.beta) - 1.0) <= tol.dsdu;
        } catch (const Error&) {
            return false;
        }
    };

    std::vector<bool> candidate(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        candidate[i] = pts[i].evaluable && increasing[i] && slope_ok(pts[i]);
    }

    // Runs of consecutive candidates on one branch: [first, last].
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    for (std::size_t i = 0; i < n; ++i) {
        if (!candidate[i]) {
            continue;
        }
        if (!runs.empty() && runs.back().second + 1 == i && pts[i - 1].branch_id == pts[i].branch_id) {
            runs.back().second = i;
        } else {
            runs.emplace_back(i, i);
        }
    }

    // Runs nearest T* -> 0 (|beta*| largest) claim their T range first.
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
        if (pts[it->first].beta_star > 0.0) {
            order.push_back(*it);
        }
    }
    for (const auto& r : runs) {
        if (pts[r.first].beta_star < 0.0) {
            order.push_back(r);
        }
    }

    std::vector<std::pair<double, double>> covered_pos;
    std::vector<std::pair<double, double>> covered_neg;
    for (const auto& [first, last] : order) {
        auto& covered = pts[first].beta > 0.0 ? covered_pos : covered_neg;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::size_t i = first; i <= last; ++i) {
            const double t = 1.0 / pts[i].beta;
            const bool taken = std::any_of(covered.begin(), covered.end(),
                                           [t](const auto& iv) { return t > iv.first && t < iv.second; });
            if (taken) {
                continue;
            }
            pts[i].physical = true;
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
        if (lo <= hi) {
            covered.emplace_back(lo, hi);
        }
    }
    return result;
}

} // namespace qdimer::thermo
