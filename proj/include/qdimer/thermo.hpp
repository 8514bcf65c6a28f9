#pragma once

#include <cstddef>
#include <vector>

#include "qdimer/dimer.hpp"

namespace qdimer::thermo {

/// Tolerances of the physicality analysis.
struct Tolerances {
    /// |d beta / d beta*| below this is treated as a fold of the map.
    double deriv = 1e-10;
    /// Allowed relative mismatch in dS/dU = 1/T on a local chord.
    double dsdu = 1e-3;
    /// Chords with |dU| below resolution * max(1, |U|) cannot test dS/dU.
    double resolution = 1e-11;
};

enum class TemperatureSign { none, positive, negative };

/// One sweep sample. Non-evaluable nodes carry NaN everywhere except the grid
/// coordinates, and are never physical.
struct ThermoPoint {
    double t_star = 0.0;
    double beta_star = 0.0;
    double beta = 0.0;
    double Z = 0.0;
    double trace_q = 0.0;
    double u2 = 0.0;
    /// Physical internal energy U = U2 / Tr[rho^q].
    double U = 0.0;
    /// Tsallis entropy (1 - Tr[rho^q]) / (q - 1).
    double S = 0.0;
    /// U - S / beta.
    double F = 0.0;
    /// U and S through finite differences of ln_q Z along beta* with Z1(beta) = Z(beta*).
    double U_fd = 0.0;
    double S_fd = 0.0;
    bool evaluable = false;
    bool cutoff = false;
    bool physical = false;
    int branch_id = -1;
    TemperatureSign sign = TemperatureSign::none;
};

enum class Spacing { uniform, log };

/// Grid in the pseudo-temperature T* = 1/beta*.
struct Grid {
    double t_min = 0.1;
    double t_max = 5.0;
    std::size_t steps = 100;
    Spacing spacing = Spacing::uniform;

    /// Throws ConfigError for an invalid grid.
    void validate() const;
    /// Nodes in T*, ordered by increasing beta*.
    [[nodiscard]] std::vector<double> t_star_nodes() const;
};

struct SweepResult {
    std::vector<ThermoPoint> points;
    double q = 1.0;
    DimerParams params;
    Grid grid;
    double fd_step = 0.0; // 0 means the per-node default
};

/// beta = beta* Tr[rho^q] / (1 - (1-q) beta* U2 / Tr[rho^q]). Negative values are legal.
[[nodiscard]] double physical_beta(const DimerParams& p, double q, double beta_star);

/// (1 - Tr[rho^q]) / (q - 1), or -sum p ln p near q = 1, from the eigenvalues.
[[nodiscard]] double entropy_direct(const dimer::ThermalState& state);

/// Free energy -ln_q Z(beta*) / beta through the Z1(beta) = Z(beta*) identification.
[[nodiscard]] double free_energy_from_partition(const DimerParams& p, double q, double beta_star);

struct EntropyEnergy {
    double S = 0.0;
    double U = 0.0;
};

[[nodiscard]] double default_fd_step(double beta_star) noexcept;

// Central differences of step h:
//   U = -(d beta/d beta*)^-1 d ln_q Z / d beta*
//   S = -(beta*)^2 (d beta/d beta*)^-1 d[beta^-1 ln_q Z] / d beta*
// Throws SingularMap when |d beta / d beta*| < tol_deriv.
[[nodiscard]] EntropyEnergy entropy_and_energy_physical(const DimerParams& p, double q, double beta_star,
                                                        double h, double tol_deriv = 1e-10);

/// Evaluates every thermodynamic column at one node. Never throws on domain
/// failures; the point is marked non-evaluable instead.
[[nodiscard]] ThermoPoint evaluate_point(const DimerParams& p, double q, double t_star, double fd_step = 0.0,
                                         double tol_deriv = 1e-10);

/// Evaluates the grid. Points are unfiltered (physical == false).
[[nodiscard]] SweepResult sweep(const DimerParams& p, double q, const Grid& grid, double fd_step = 0.0);

// Marks each point physical iff
//   (a) beta increases with beta* locally (T increases with T*),
//   (b) the chord between beta* -+ 1e-4 max(1, |beta*|) satisfies dS/dU = beta
//       within tol.dsdu,
//   (c) its T is not already covered by a retained run closer to the T* -> 0 end
//       of the same temperature sign.
// Also assigns branch ids (monotone segments) and temperature signs.
[[nodiscard]] SweepResult physicality_filter(SweepResult sweep, const Tolerances& tol = {});

} // namespace qdimer::thermo
