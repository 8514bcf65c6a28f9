#pragma once

#include <array>

#include <Eigen/Dense>

namespace qdimer {

using Matrix4 = Eigen::Matrix4d;
using Vector4 = Eigen::Vector4d;

/// Exchange coupling J and magnetic field B, both in energy units.
struct DimerParams {
    double J = 1.0;
    double B = 0.0;
};

namespace dimer {

// Product basis, in this order, for every 4x4 matrix in the library.
enum BasisIndex : int { k00 = 0, k01 = 1, k10 = 2, k11 = 3 };

// Eigenpairs of the XX dimer in a fixed order:
//   |00>          -> -B
//   |11>          -> +B
//   (|01>+|10>)/√2 -> +J
//   (|01>-|10>)/√2 -> -J
struct Spectrum {
    std::array<double, 4> energies{};
    std::array<Vector4, 4> eigenvectors{};
};

[[nodiscard]] Matrix4 hamiltonian(const DimerParams& p);
[[nodiscard]] Spectrum spectrum(const DimerParams& p);

/// Unnormalized q-Boltzmann weights e_q(-beta* E_i), in Spectrum order.
[[nodiscard]] std::array<double, 4> q_weights(const DimerParams& p, double q, double beta_star);

/// Second-constraint thermal state varrho = e_q(-beta* H) / Z.
struct ThermalState {
    Matrix4 rho = Matrix4::Zero();
    double q = 1.0;
    double beta_star = 0.0;
    double Z = 0.0;
    /// Eigenvalues of rho in Spectrum order.
    std::array<double, 4> populations{};
    std::array<double, 4> energies{};
    /// Some q-weight hit the Tsallis cutoff (q < 1).
    bool cutoff = false;
};

/// Closed form built from q_cosh / q_sinh; the central block is diagonalized analytically.
[[nodiscard]] ThermalState thermal_state(const DimerParams& p, double q, double beta_star);

/// Same state through a numeric eigendecomposition of H and q_exp on its eigenvalues.
[[nodiscard]] Matrix4 thermal_state_generic(const DimerParams& p, double q, double beta_star);

// Sums over the state's eigenvalues; cutoff-zero populations contribute nothing.
[[nodiscard]] double trace_rho_q(const ThermalState& s);
[[nodiscard]] double internal_energy_2nd(const ThermalState& s);

[[nodiscard]] double partition_fn(const DimerParams& p, double q, double beta_star);
[[nodiscard]] double trace_rho_q(const DimerParams& p, double q, double beta_star);
[[nodiscard]] double internal_energy_2nd(const DimerParams& p, double q, double beta_star);

} // namespace dimer
} // namespace qdimer
