#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qdimer/dimer.hpp"

namespace qdimer::superstat {

/// Normalized Gamma density of the fluctuating inverse temperature:
///   f(b) = (1/Gamma(c)) (c/beta)^c b^{c-1} exp(-c b / beta),
/// with shape c = 1/(q-1) and mean beta.
struct GammaFluctuation {
    double shape = 1.0;
    double scale = 1.0;
    double beta_mean = 1.0;

    /// Tsallis identification c = 1/(q-1), b c = beta. Requires q > 1.
    [[nodiscard]] static GammaFluctuation from_q(double q, double beta_mean);
    [[nodiscard]] double q() const noexcept { return 1.0 + 1.0 / shape; }
    [[nodiscard]] double density(double b) const;
};

enum class Method { quadrature, monte_carlo };

struct Estimate {
    double value = 0.0;
    /// Standard error (Monte Carlo) or last successive difference (quadrature).
    double error = 0.0;
    std::size_t nodes = 0;
};

/// Generalized Gauss-Laguerre rule for the weight x^alpha e^{-x}, with weights
/// divided by Gamma(alpha + 1) so they sum to one.
struct GaussLaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    [[nodiscard]] static GaussLaguerreRule build(std::size_t n, double alpha);
};

inline constexpr std::size_t kDefaultQuadratureNodes = 200;
inline constexpr std::size_t kMaxQuadratureNodes = 800;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Expectation of g(b) under the fluctuation density, using `rule` built for alpha = c - 1.
template <typename F>
double expectation(const GammaFluctuation& fl, const GaussLaguerreRule& rule, F&& g)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * g(fl.scale * rule.nodes[i]);
    }
    return sum;
}

/// int_0^inf f(b) e^{-b E} db. Quadrature doubles n until successive values
/// agree to 1e-12 (for E < 0 it runs on the tilted density, where the integrand
/// is constant); Monte Carlo draws n samples from streams seeded by `seed`.
/// Throws DivergentIntegral when E <= -1/((q-1) beta).
[[nodiscard]] Estimate averaged_boltzmann_scalar(const GammaFluctuation& fl, double E, Method method,
                                                 std::size_t n = kDefaultQuadratureNodes,
                                                 std::uint64_t seed = kDefaultSeed);

/// Applies averaged_boltzmann_scalar to every eigenvalue of H and reassembles.
[[nodiscard]] Matrix4 averaged_boltzmann_operator(const GammaFluctuation& fl, const Matrix4& H, Method method,
                                                  std::size_t n = kDefaultQuadratureNodes,
                                                  std::uint64_t seed = kDefaultSeed);

/// Matrix function e_q(-beta H) through the eigendecomposition of H.
[[nodiscard]] Matrix4 q_exp_operator(double q, double beta, const Matrix4& H);

/// Mean and variance of the fluctuation density by quadrature.
[[nodiscard]] double mean_by_quadrature(const GammaFluctuation& fl, std::size_t n = kDefaultQuadratureNodes);
[[nodiscard]] double variance_by_quadrature(const GammaFluctuation& fl, std::size_t n = kDefaultQuadratureNodes);

} // namespace qdimer::superstat
