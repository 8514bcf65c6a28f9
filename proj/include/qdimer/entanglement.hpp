#pragma once

#include <vector>

#include "qdimer/dimer.hpp"
#include "qdimer/thermo.hpp"

namespace qdimer::entanglement {

enum class Variant { rho_physical, varrho_pseudo, gibbs_boltzmann, wootters_oracle };

struct ConcurrenceSample {
    /// Physical T for rho_physical / wootters_oracle / gibbs_boltzmann, T* for varrho_pseudo.
    double t_axis = 0.0;
    double value = 0.0;
    Variant variant = Variant::wootters_oracle;
};

/// Wootters concurrence max{l1 - l2 - l3 - l4, 0}, where l_i are the square
/// roots of the eigenvalues of rho (sy x sy) rho* (sy x sy), sorted descending.
/// Computed as singular values of sqrt(rho) (sy x sy) sqrt(rho)*, which keeps
/// small l_i accurate. Throws NumericalBreakdown if rho has an eigenvalue below -1e-9.
[[nodiscard]] double concurrence_oracle(const Matrix4& rho);
[[nodiscard]] double concurrence_oracle(const dimer::ThermalState& state);

/// 2 max{0, |rho_{01,10}| - sqrt(rho_{00,00} rho_{11,11})} for X-shaped states.
[[nodiscard]] double concurrence_x_state(const Matrix4& rho);

/// (|sinh bJ| - 1) / (cosh bJ + cosh bB), clipped at 0; the beta -> infinity
/// limit is taken from the leading exponentials.
[[nodiscard]] double concurrence_gb(const DimerParams& p, double beta);

/// Printed closed form with the unrooted product e_q(b*B) e_q(-b*B).
[[nodiscard]] double concurrence_varrho(const DimerParams& p, double q, double beta_star);

/// X-state closed form: the product enters through its square root.
[[nodiscard]] double concurrence_varrho_rooted(const DimerParams& p, double q, double beta_star);

/// Concurrence along the physical temperature axis for every point the filter
/// retained. `variant` selects the printed closed form (rho_physical) or the
/// Wootters oracle; the oracle path also insists on X-state agreement to 1e-10.
[[nodiscard]] std::vector<ConcurrenceSample> concurrence_rho_physical(const thermo::SweepResult& sweep,
                                                                      Variant variant = Variant::rho_physical);

} // namespace qdimer::entanglement
