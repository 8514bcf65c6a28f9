#include "qdimer/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qdimer/entanglement.hpp"
#include "qdimer/errors.hpp"
#include "qdimer/oracles.hpp"
#include "qdimer/qcalc.hpp"
#include "qdimer/superstat.hpp"
#include "qdimer/thermo.hpp"

namespace qdimer::verify {

namespace {

struct StateSample {
    DimerParams p;
    double q = 1.0;
    double beta_star = 0.0;
};

// Admissible (J, B, q, beta*) draws, reproducible from the seed.
std::vector<StateSample> sample_states(std::uint64_t seed, std::size_t count)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> uq(0.1, 2.9);
    std::uniform_real_distribution<double> ue(-2.0, 2.0);
    std::uniform_real_distribution<double> ub(-3.0, 3.0);
    std::vector<StateSample> out;
    while (out.size() < count) {
        StateSample s{{ue(gen), ue(gen)}, uq(gen), ub(gen)};
        try {
            (void)dimer::thermal_state(s.p, s.q, s.beta_star);
            out.push_back(s);
        } catch (const Error&) {
        }
    }
    return out;
}

CheckResult make(std::string name, bool ok, double worst, double tol)
{
    std::ostringstream d;
    d << "worst " << worst << ", tol " << tol;
    return {std::move(name), ok ? Status::pass : Status::fail, d.str()};
}

template <typename F>
CheckResult max_error_check(std::string name, double tol, F&& body)
{
    double worst = 0.0;
    try {
        body(worst);
    } catch (const Error& e) {
        return {std::move(name), Status::fail, std::string("threw: ") + e.what()};
    }
    return make(std::move(name), worst <= tol, worst, tol);
}

bool clean_populations(const dimer::ThermalState& s)
{
    return std::none_of(s.populations.begin(), s.populations.end(), [](double p) { return p > 0.0 && p < 1e-6; });
}

CheckResult check_qcalc_product(std::uint64_t seed)
{
    return max_error_check("qcalc: e_q(x) e_q(-x) = e_q((q-1) x^2)", 1e-12, [&](double& worst) {
        std::mt19937_64 gen(seed + 1);
        std::uniform_real_distribution<double> uq(0.05, 2.95);
        std::uniform_real_distribution<double> ux(-1.0, 1.0);
        for (int k = 0; k < 2000; ++k) {
            const double q = uq(gen);
            // keep both bases positive: |x| < 1/|1-q|
            const double x = 0.999 * ux(gen) / std::max(std::abs(1.0 - q), 0.2);
            const double lhs = qcalc::q_exp_product(q, x);
            const double rhs = qcalc::q_exp(q, (q - 1.0) * x * x);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300));
        }
    });
}

CheckResult check_qcalc_hyperbolic(std::uint64_t seed)
{
    return max_error_check("qcalc: cosh_q^2 - sinh_q^2 = e_q(x) e_q(-x)", 1e-12, [&](double& worst) {
        std::mt19937_64 gen(seed + 2);
        std::uniform_real_distribution<double> uq(0.05, 2.95);
        std::uniform_real_distribution<double> ux(-1.0, 1.0);
        for (int k = 0; k < 2000; ++k) {
            const double q = uq(gen);
            const double x = 0.99 * ux(gen) / std::max(std::abs(1.0 - q), 0.2);
            const double c = qcalc::q_cosh(q, x);
            const double s = qcalc::q_sinh(q, x);
            worst = std::max(worst, std::abs(c * c - s * s - qcalc::q_exp_product(q, x)) / std::max(1.0, c * c));
        }
    });
}

CheckResult check_qcalc_continuity()
{
    return max_error_check("qcalc: continuity of e_q at q = 1", 1e-6, [&](double& worst) {
        for (double q : {1.0 - 1e-8, 1.0 + 1e-8}) {
            for (double x = -5.0; x <= 5.0; x += 0.25) {
                worst = std::max(worst, std::abs(qcalc::q_exp(q, x) - std::exp(x)) / std::exp(x));
            }
        }
    });
}

CheckResult check_qcalc_round_trip(std::uint64_t seed)
{
    return max_error_check("qcalc: ln_q(e_q(x)) = x", 1e-10, [&](double& worst) {
        std::mt19937_64 gen(seed + 3);
        std::uniform_real_distribution<double> uq(0.05, 2.95);
        std::uniform_real_distribution<double> ux(-3.0, 3.0);
        for (int k = 0; k < 2000; ++k) {
            const double q = uq(gen);
            const double x = ux(gen);
            if (!qcalc::q_exp_defined(q, x)) {
                continue;
            }
            const double e = qcalc::q_exp(q, x);
            if (e > 0.0) {
                worst = std::max(worst, std::abs(qcalc::q_log(q, e) - x));
            }
        }
    });
}

CheckResult check_dimer_states(const std::vector<StateSample>& samples)
{
    return max_error_check("dimer: unit trace, symmetry, PSD, [rho, H] = 0", 1e-12, [&](double& worst) {
        for (const auto& s : samples) {
            const auto st = dimer::thermal_state(s.p, s.q, s.beta_star);
            const Matrix4 h = dimer::hamiltonian(s.p);
            worst = std::max(worst, std::abs(st.rho.trace() - 1.0));
            worst = std::max(worst, (st.rho - st.rho.transpose()).cwiseAbs().maxCoeff());
            worst = std::max(worst, std::max(0.0, -oracles::min_eigenvalue(st.rho)));
            worst = std::max(worst, (st.rho * h - h * st.rho).cwiseAbs().maxCoeff() / std::max(1.0, h.norm()));
        }
    });
}

CheckResult check_dimer_paths(const std::vector<StateSample>& samples)
{
    return max_error_check("dimer: closed form = q_exp(-beta* H) by eigendecomposition", 1e-12,
                           [&](double& worst) {
                               for (const auto& s : samples) {
                                   const auto st = dimer::thermal_state(s.p, s.q, s.beta_star);
                                   const Matrix4 g = dimer::thermal_state_generic(s.p, s.q, s.beta_star);
                                   worst = std::max(worst, (st.rho - g).cwiseAbs().maxCoeff());
                               }
                           });
}

CheckResult check_energy_oracle(const std::vector<StateSample>& samples)
{
    return max_error_check("dimer: U2 = Tr[rho^q H] (dense oracle)", 1e-10, [&](double& worst) {
        for (const auto& s : samples) {
            const auto st = dimer::thermal_state(s.p, s.q, s.beta_star);
            if (!clean_populations(st)) {
                continue;
            }
            const double dense = oracles::dense_energy_q(st.rho, dimer::hamiltonian(s.p), s.q);
            worst = std::max(worst, std::abs(dimer::internal_energy_2nd(st) - dense));
        }
    });
}

CheckResult check_gibbs_limit()
{
    return max_error_check("dimer: q -> 1 reproduces the Gibbs state", 1e-8, [&](double& worst) {
        for (double q : {1.0 - 1e-9, 1.0 + 1e-9}) {
            for (double b : {0.0, 0.7, 1.2}) {
                for (double bs : {0.1, 1.0, 3.0}) {
                    const DimerParams p{1.0, b};
                    const Matrix4 g = oracles::gibbs_state(dimer::hamiltonian(p), bs);
                    worst = std::max(worst, (dimer::thermal_state(p, q, bs).rho - g).cwiseAbs().maxCoeff());
                }
            }
        }
    });
}

CheckResult check_identity_map()
{
    return max_error_check("thermo: beta(beta*) = beta* at q = 1, T* in [0.1, 5]", 1e-8, [&](double& worst) {
        for (double b : {0.0, 1.0, 1.2, 4.0}) {
            for (double t = 0.1; t <= 5.0 + 1e-12; t += 0.01) {
                worst = std::max(worst, std::abs(thermo::physical_beta({1.0, b}, 1.0, 1.0 / t) - 1.0 / t));
            }
        }
    });
}

CheckResult check_free_energy_q1()
{
    return max_error_check("thermo: U - TS = -ln Z / beta at q = 1", 1e-8, [&](double& worst) {
        for (double b : {0.0, 1.0, 1.2}) {
            for (double t : {0.2, 0.5, 1.0, 2.0, 5.0}) {
                const auto pt = thermo::evaluate_point({1.0, b}, 1.0, t);
                worst = std::max(worst, std::abs(pt.F - thermo::free_energy_from_partition({1.0, b}, 1.0, 1.0 / t)));
            }
        }
    });
}

CheckResult check_fd_route_q1()
{
    return max_error_check("thermo: finite-difference S, U = closed forms at q = 1", 1e-6, [&](double& worst) {
        for (double b : {0.0, 1.0, 1.2}) {
            for (double t : {0.2, 0.5, 1.0, 2.0, 5.0}) {
                const auto pt = thermo::evaluate_point({1.0, b}, 1.0, t);
                worst = std::max(worst, std::abs(pt.U_fd - pt.U) / std::max(1.0, std::abs(pt.U)));
                worst = std::max(worst, std::abs(pt.S_fd - pt.S) / std::max(1.0, pt.S));
            }
        }
    });
}

CheckResult check_dsdu_identity()
{
    const thermo::Grid grid{0.02, 5.0, 500, thermo::Spacing::uniform};
    const thermo::Tolerances tol;
    return max_error_check("thermo: dS/dU = 1/T along retained branches", tol.dsdu, [&](double& worst) {
        for (double q : {0.2, 0.6, 1.0, 1.6, 2.0}) {
            for (double b : {0.0, 1.0, 1.2}) {
                const auto sw = thermo::physicality_filter(thermo::sweep({1.0, b}, q, grid), tol);
                for (const auto& pt : sw.points) {
                    if (!pt.physical) {
                        continue;
                    }
                    const double h = 1e-5 * std::max(1.0, std::abs(pt.beta_star));
                    const auto a = thermo::evaluate_point({1.0, b}, q, 1.0 / (pt.beta_star - h));
                    const auto c = thermo::evaluate_point({1.0, b}, q, 1.0 / (pt.beta_star + h));
                    const double du = c.U - a.U;
                    if (std::abs(du) <= tol.resolution * std::max({1.0, std::abs(a.U), std::abs(c.U)})) {
                        continue;
                    }
                    const double ratio = (c.S - a.S) / (du * pt.beta);
                    worst = std::max(worst, std::isfinite(ratio) ? std::abs(ratio - 1.0) : 1.0);
                }
            }
        }
    });
}

CheckResult check_q1_all_physical()
{
    const thermo::Grid grid{0.1, 5.0, 100, thermo::Spacing::uniform};
    const auto sw = thermo::physicality_filter(thermo::sweep({1.0, 1.0}, 1.0, grid));
    const auto bad = std::count_if(sw.points.begin(), sw.points.end(), [](const auto& p) { return !p.physical; });
    return {"thermo: every q = 1 node is physical", bad == 0 ? Status::pass : Status::fail,
            std::to_string(bad) + " rejected"};
}

CheckResult check_concurrence_gb()
{
    return max_error_check("entanglement: Wootters oracle = GB closed form at q = 1", 1e-10, [&](double& worst) {
        for (double b : {0.0, 1.0, 1.2}) {
            for (double beta = 0.1; beta <= 10.0 + 1e-12; beta += 0.05) {
                const DimerParams p{1.0, b};
                const double o = entanglement::concurrence_oracle(dimer::thermal_state(p, 1.0, beta));
                worst = std::max(worst, std::abs(o - entanglement::concurrence_gb(p, beta)));
            }
        }
    });
}

CheckResult check_concurrence_x_state(const std::vector<StateSample>& samples)
{
    return max_error_check("entanglement: Wootters oracle = X-state formula", 1e-10, [&](double& worst) {
        for (const auto& s : samples) {
            const auto st = dimer::thermal_state(s.p, s.q, s.beta_star);
            const double o = entanglement::concurrence_oracle(st);
            worst = std::max(worst, std::abs(o - entanglement::concurrence_x_state(st.rho)));
            worst = std::max(worst, std::abs(o - entanglement::concurrence_varrho_rooted(s.p, s.q, s.beta_star)));
            if (o < 0.0 || o > 1.0) {
                worst = std::max(worst, 1.0);
            }
        }
    });
}

} // namespace

std::string_view status_label(Status s) noexcept
{
    switch (s) {
    case Status::pass:
        return "PASS";
    case Status::fail:
        return "FAIL";
    case Status::skip:
        return "SKIP";
    }
    return "FAIL";
}

CheckResult check_trace_q_oracle(const TraceFn& trace_fn, std::uint64_t seed)
{
    const auto samples = sample_states(seed + 7, 300);
    return max_error_check("dimer: Tr[rho^q] = dense fractional power", 1e-10, [&](double& worst) {
        for (const auto& s : samples) {
            const auto st = dimer::thermal_state(s.p, s.q, s.beta_star);
            if (!clean_populations(st)) {
                continue;
            }
            const double got = trace_fn(s.p, s.q, s.beta_star);
            const double err = std::abs(got - oracles::dense_trace_power(st.rho, s.q));
            worst = std::isfinite(err) ? std::max(worst, err) : 1.0;
        }
    });
}

CheckResult check_superstat(double q, std::uint64_t seed)
{
    std::ostringstream name;
    name << "superstat: Gamma average = e_q(-beta E) at q = " << q;
    if (!(q > 1.0) || qcalc::is_classical(q)) {
        return {name.str(), Status::skip, "c = 1/(q-1) <= 0 has no Gamma density"};
    }
    double worst_quad = 0.0;
    double worst_mc = 0.0;
    double worst_moments = 0.0;
    try {
        const double beta = 1.0;
        const auto fl = superstat::GammaFluctuation::from_q(q, beta);
        worst_moments = std::max(std::abs(superstat::mean_by_quadrature(fl) - beta) / 1e-10,
                                 std::abs(superstat::variance_by_quadrature(fl) - (q - 1.0) * beta * beta) / 1e-8);
        for (double be : {0.1, 1.0, 5.0}) {
            const double exact = qcalc::q_exp(q, -be);
            const auto quad = superstat::averaged_boltzmann_scalar(fl, be, superstat::Method::quadrature);
            worst_quad = std::max(worst_quad, std::abs(quad.value - exact));
            const auto mc = superstat::averaged_boltzmann_scalar(fl, be, superstat::Method::monte_carlo, 100000, seed);
            worst_mc = std::max(worst_mc, std::abs(mc.value - exact) / mc.error);
        }
    } catch (const Error& e) {
        return {name.str(), Status::fail, std::string("threw: ") + e.what()};
    }
    std::ostringstream d;
    d << "quadrature err " << worst_quad << ", MC " << worst_mc << " SE";
    const bool ok = worst_quad <= 1e-10 && worst_mc <= 4.0 && worst_moments <= 1.0;
    return {name.str(), ok ? Status::pass : Status::fail, d.str()};
}

std::vector<CheckResult> run_all_checks(std::uint64_t seed)
{
    const auto samples = sample_states(seed, 300);
    std::vector<CheckResult> out;
    out.push_back(check_qcalc_product(seed));
    out.push_back(check_qcalc_hyperbolic(seed));
    out.push_back(check_qcalc_continuity());
    out.push_back(check_qcalc_round_trip(seed));
    out.push_back(check_dimer_states(samples));
    out.push_back(check_dimer_paths(samples));
    out.push_back(check_trace_q_oracle(
        [](const DimerParams& p, double q, double bs) { return dimer::trace_rho_q(p, q, bs); }, seed));
    out.push_back(check_energy_oracle(samples));
    out.push_back(check_gibbs_limit());
    out.push_back(check_identity_map());
    out.push_back(check_free_energy_q1());
    out.push_back(check_fd_route_q1());
    out.push_back(check_dsdu_identity());
    out.push_back(check_q1_all_physical());
    for (double q : {0.5, 1.2, 1.5, 2.0, 2.8}) {
        out.push_back(check_superstat(q, seed));
    }
    out.push_back(check_concurrence_gb());
    out.push_back(check_concurrence_x_state(samples));
    return out;
}

} // namespace qdimer::verify
