#include "qdimer/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "qdimer/errors.hpp"
#include "qdimer/qcalc.hpp"

namespace qdimer::entanglement {

namespace {

Matrix4 spin_flip()
{
    // sigma_y (x) sigma_y is real in the computational basis.
    Matrix4 f = Matrix4::Zero();
    f(0, 3) = -1.0;
    f(3, 0) = -1.0;
    f(1, 2) = 1.0;
    f(2, 1) = 1.0;
    return f;
}

double clamp_concurrence(double c) { return std::clamp(c, 0.0, 1.0); }

} // namespace

double concurrence_oracle(const Matrix4& rho)
{
    // lambda_i are the singular values of sqrt(rho) F sqrt(rho)^*.
    static const Matrix4 flip = spin_flip();
    const Eigen::SelfAdjointEigenSolver<Matrix4> eig(rho);
    if (eig.info() != Eigen::Success) {
        throw NumericalBreakdown("eigendecomposition of rho did not converge");
    }
    const Vector4 w = eig.eigenvalues();
    if (w.minCoeff() < -1e-9) {
        std::ostringstream msg;
        msg << "rho has eigenvalue " << w.minCoeff();
        throw NumericalBreakdown(msg.str());
    }
    const Matrix4 root = eig.eigenvectors() * w.cwiseMax(0.0).cwiseSqrt().asDiagonal() * eig.eigenvectors().adjoint();
    const Eigen::JacobiSVD<Matrix4> svd(root * flip * root.conjugate());
    const Vector4 lambda = svd.singularValues();
    return clamp_concurrence(lambda(0) - lambda(1) - lambda(2) - lambda(3));
}

double concurrence_oracle(const dimer::ThermalState& state) { return concurrence_oracle(state.rho); }

double concurrence_x_state(const Matrix4& rho)
{
    using namespace dimer;
    const double c = 2.0 * (std::abs(rho(k01, k10)) - std::sqrt(std::max(0.0, rho(k00, k00) * rho(k11, k11))));
    return clamp_concurrence(c);
}

double concurrence_gb(const DimerParams& p, double beta)
{
    const double num = std::abs(std::sinh(beta * p.J)) - 1.0;
    const double den = std::cosh(beta * p.J) + std::cosh(beta * p.B);
    if (!std::isfinite(num) || !std::isfinite(den)) {
        // beta -> infinity: ratio of the leading exponentials
        const double a = std::abs(p.J);
        const double b = std::abs(p.B);
        if (a == 0.0 || b > a) {
            return 0.0;
        }
        return b == a ? 0.5 : 1.0;
    }
    return std::max(num / den, 0.0);
}

double concurrence_varrho(const DimerParams& p, double q, double beta_star)
{
    const double xj = beta_star * p.J;
    const double xb = beta_star * p.B;
    const double num = std::abs(qcalc::q_sinh(q, xj)) - qcalc::q_exp_product(q, xb);
    const double den = qcalc::q_cosh(q, xj) + qcalc::q_cosh(q, xb);
    return std::max(num / den, 0.0);
}

double concurrence_varrho_rooted(const DimerParams& p, double q, double beta_star)
{
    const double xj = beta_star * p.J;
    const double xb = beta_star * p.B;
    const double num = std::abs(qcalc::q_sinh(q, xj)) - std::sqrt(qcalc::q_exp_product(q, xb));
    const double den = qcalc::q_cosh(q, xj) + qcalc::q_cosh(q, xb);
    return std::max(num / den, 0.0);
}

std::vector<ConcurrenceSample> concurrence_rho_physical(const thermo::SweepResult& sweep, Variant variant)
{
    std::vector<ConcurrenceSample> out;
    for (const auto& pt : sweep.points) {
        if (!pt.physical) {
            continue;
        }
        ConcurrenceSample s;
        s.t_axis = 1.0 / pt.beta;
        if (variant == Variant::wootters_oracle) {
            const auto state = dimer::thermal_state(sweep.params, sweep.q, pt.beta_star);
            s.value = concurrence_oracle(state);
            const double x = concurrence_x_state(state.rho);
            if (std::abs(s.value - x) > 1e-10) {
                std::ostringstream msg;
                msg << "Wootters oracle " << s.value << " disagrees with X-state value " << x << " at beta*="
                    << pt.beta_star;
                throw NumericalBreakdown(msg.str());
            }
            s.variant = Variant::wootters_oracle;
        } else {
            s.value = concurrence_varrho(sweep.params, sweep.q, pt.beta_star);
            s.variant = Variant::rho_physical;
        }
        out.push_back(s);
    }
    return out;
}

} // namespace qdimer::entanglement
