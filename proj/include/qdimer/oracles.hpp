#pragma once

// Reference computations on dense matrices. They share no code with the
// closed-form paths in dimer/thermo and exist to cross-check them.

#include "qdimer/dimer.hpp"

namespace qdimer::oracles {

/// Tr[rho^q] from a numeric eigendecomposition of rho.
[[nodiscard]] double dense_trace_power(const Matrix4& rho, double q);

/// Tr[rho^q H] from a numeric eigendecomposition of rho.
[[nodiscard]] double dense_energy_q(const Matrix4& rho, const Matrix4& H, double q);

/// exp(-beta H) / Tr exp(-beta H).
[[nodiscard]] Matrix4 gibbs_state(const Matrix4& H, double beta);

/// Smallest eigenvalue of a symmetric matrix.
[[nodiscard]] double min_eigenvalue(const Matrix4& m);

} // namespace qdimer::oracles
