#include "qdimer/superstat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "qdimer/errors.hpp"
#include "qdimer/qcalc.hpp"

namespace qdimer::superstat {

namespace {

constexpr std::size_t kChunk = 1 << 16;

void check_convergence(const GammaFluctuation& fl, double E)
{
    // closed form (1 + beta E / c)^{-c} exists only above this bound
    if (!(1.0 + fl.beta_mean * E / fl.shape > 0.0)) {
        std::ostringstream msg;
        msg << "averaged Boltzmann factor diverges for E=" << E << " (q=" << fl.q() << ", beta=" << fl.beta_mean
            << ")";
        throw DivergentIntegral(msg.str());
    }
}

double boltzmann_sum(const GammaFluctuation& fl, const GaussLaguerreRule& rule, double E)
{
    return expectation(fl, rule, [E](double b) { return std::exp(-b * E); });
}

double quadrature(const GammaFluctuation& fl, double E, std::size_t n, double& error, std::size_t& used)
{
    if (E < 0.0) {
        // Golub-Welsch weights carry absolute errors near 1e-16 that a growing
        // exp(-b E) amplifies. Integrate against the tilted density with rate
        // c/beta + E instead, where the integrand is constant.
        const double ratio = 1.0 / (1.0 + fl.scale * E);
        const auto rule = GaussLaguerreRule::build(n, fl.shape - 1.0);
        double mass = 0.0;
        for (double w : rule.weights) {
            mass += w;
        }
        error = std::abs(mass - 1.0);
        used = n;
        return std::pow(ratio, fl.shape) * mass;
    }
    double prev = boltzmann_sum(fl, GaussLaguerreRule::build(n, fl.shape - 1.0), E);
    error = std::numeric_limits<double>::infinity();
    used = n;
    while (2 * used <= kMaxQuadratureNodes) {
        used *= 2;
        const double next = boltzmann_sum(fl, GaussLaguerreRule::build(used, fl.shape - 1.0), E);
        error = std::abs(next - prev);
        prev = next;
        if (error < 1e-12) {
            break;
        }
    }
    return prev;
}

Estimate monte_carlo(const GammaFluctuation& fl, double E, std::size_t n, std::uint64_t seed)
{
    // Each chunk owns a generator seeded from (seed, chunk), so chunks are
    // independent of evaluation order.
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t done = 0;
    for (std::uint32_t chunk = 0; done < n; ++chunk) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), chunk};
        std::mt19937_64 gen(seq);
        std::gamma_distribution<double> dist(fl.shape, fl.scale);
        const std::size_t m = std::min(kChunk, n - done);
        for (std::size_t k = 0; k < m; ++k) {
            const double v = std::exp(-dist(gen) * E);
            sum += v;
            sum_sq += v * v;
        }
        done += m;
    }
    const double nd = static_cast<double>(n);
    const double mean = sum / nd;
    const double var = std::max(0.0, (sum_sq / nd - mean * mean) * nd / (nd - 1.0));
    return {mean, std::sqrt(var / nd), n};
}

} // namespace

GammaFluctuation GammaFluctuation::from_q(double q, double beta_mean)
{
    if (!(q > 1.0) || qcalc::is_classical(q)) {
        std::ostringstream msg;
        msg << "Gamma fluctuation needs q > 1 (c = 1/(q-1) > 0), got q=" << q;
        throw DomainError(msg.str());
    }
    if (!(beta_mean > 0.0)) {
        throw DomainError("Gamma fluctuation needs a positive mean inverse temperature");
    }
    GammaFluctuation fl;
    fl.shape = 1.0 / (q - 1.0);
    fl.scale = beta_mean / fl.shape;
    fl.beta_mean = beta_mean;
    return fl;
}

double GammaFluctuation::density(double b) const
{
    if (b <= 0.0) {
        return 0.0;
    }
    const double x = b / scale;
    return std::exp((shape - 1.0) * std::log(x) - x - std::lgamma(shape)) / scale;
}

GaussLaguerreRule GaussLaguerreRule::build(std::size_t n, double alpha)
{
    if (n == 0) {
        throw DomainError("Gauss-Laguerre rule needs at least one node");
    }
    // Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the generalized
    // Laguerre recurrence, weights the squared first eigenvector components.
    Eigen::VectorXd diag(static_cast<Eigen::Index>(n));
    Eigen::VectorXd sub(static_cast<Eigen::Index>(n - 1));
    for (std::size_t k = 0; k < n; ++k) {
        diag(static_cast<Eigen::Index>(k)) = 2.0 * static_cast<double>(k) + alpha + 1.0;
    }
    for (std::size_t k = 1; k < n; ++k) {
        const double kd = static_cast<double>(k);
        sub(static_cast<Eigen::Index>(k - 1)) = std::sqrt(kd * (kd + alpha));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
    eig.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (eig.info() != Eigen::Success) {
        throw NumericalBreakdown("Gauss-Laguerre eigenproblem did not converge");
    }
    GaussLaguerreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        rule.nodes[i] = eig.eigenvalues()(ii);
        const double v0 = eig.eigenvectors()(0, ii);
        rule.weights[i] = v0 * v0;
    }
    return rule;
}

Estimate averaged_boltzmann_scalar(const GammaFluctuation& fl, double E, Method method, std::size_t n,
                                   std::uint64_t seed)
{
    check_convergence(fl, E);
    if (n == 0) {
        throw DomainError("sample/node count must be positive");
    }
    if (method == Method::monte_carlo) {
        return monte_carlo(fl, E, n, seed);
    }
    Estimate est;
    est.value = quadrature(fl, E, n, est.error, est.nodes);
    return est;
}

Matrix4 averaged_boltzmann_operator(const GammaFluctuation& fl, const Matrix4& H, Method method, std::size_t n,
                                    std::uint64_t seed)
{
    const Eigen::SelfAdjointEigenSolver<Matrix4> eig(H);
    Vector4 avg;
    for (int i = 0; i < 4; ++i) {
        avg(i) = averaged_boltzmann_scalar(fl, eig.eigenvalues()(i), method, n, seed + static_cast<unsigned>(i))
                     .value;
    }
    const Matrix4& v = eig.eigenvectors();
    return v * avg.asDiagonal() * v.transpose();
}

Matrix4 q_exp_operator(double q, double beta, const Matrix4& H)
{
    const Eigen::SelfAdjointEigenSolver<Matrix4> eig(H);
    Vector4 w;
    for (int i = 0; i < 4; ++i) {
        w(i) = qcalc::q_exp(q, -beta * eig.eigenvalues()(i));
    }
    const Matrix4& v = eig.eigenvectors();
    return v * w.asDiagonal() * v.transpose();
}

double mean_by_quadrature(const GammaFluctuation& fl, std::size_t n)
{
    const auto rule = GaussLaguerreRule::build(n, fl.shape - 1.0);
    return expectation(fl, rule, [](double b) { return b; });
}

double variance_by_quadrature(const GammaFluctuation& fl, std::size_t n)
{
    const auto rule = GaussLaguerreRule::build(n, fl.shape - 1.0);
    const double m = fl.beta_mean;
    return expectation(fl, rule, [m](double b) { return (b - m) * (b - m); });
}

} // namespace qdimer::superstat
