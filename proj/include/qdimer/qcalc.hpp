#pragma once

// q-deformed elementary functions.
//
//   e_q(x)  = [1 + (1 - q) x]^{1/(1-q)}
//   ln_q(x) = (x^{1-q} - 1) / (1 - q)
//
// For |q - 1| < kSwitchEpsilon the classical exp/ln are used. For q < 1 the
// Tsallis cutoff applies (e_q(x) = 0 once the base is non-positive); for q > 1
// a non-positive base is a DomainError.

namespace qdimer::qcalc {

inline constexpr double kSwitchEpsilon = 1e-9;

/// Entropic index. Any finite q is accepted; q = 1 routes to classical functions.
struct QParams {
    double q = 1.0;

    [[nodiscard]] bool classical() const noexcept;
    /// Shape of the Gamma fluctuation density, 1/(q-1); only meaningful for q > 1.
    [[nodiscard]] double gamma_shape() const;
};

[[nodiscard]] bool is_classical(double q) noexcept;

/// True when e_q(x) is defined (possibly as the cutoff value 0).
[[nodiscard]] bool q_exp_defined(double q, double x) noexcept;

[[nodiscard]] double q_exp(double q, double x);
[[nodiscard]] double q_log(double q, double x);
[[nodiscard]] double q_cosh(double q, double x);
[[nodiscard]] double q_sinh(double q, double x);

/// e_q(x) * e_q(-x). Equals e_q((q-1) x^2) wherever both factors are positive.
[[nodiscard]] double q_exp_product(double q, double x);

/// e_q(x) * exp(-x): the mixed reading of the product with one classical factor.
/// Kept to show that it does not reduce to e_q((q-1) x^2).
[[nodiscard]] double q_exp_mixed_product(double q, double x);

} // namespace qdimer::qcalc
