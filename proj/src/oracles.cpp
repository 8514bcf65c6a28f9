#include "qdimer/oracles.hpp"

#include <cmath>

namespace qdimer::oracles {

namespace {

// Eigenvalues below this are roundoff images of cut-off populations.
constexpr double kZeroPopulation = 1e-13;

double power_or_zero(double x, double q) { return x > kZeroPopulation ? std::pow(x, q) : 0.0; }

} // namespace

double dense_trace_power(const Matrix4& rho, double q)
{
    const Eigen::SelfAdjointEigenSolver<Matrix4> eig(rho);
    double t = 0.0;
    for (int i = 0; i < 4; ++i) {
        t += power_or_zero(eig.eigenvalues()(i), q);
    }
    return t;
}

double dense_energy_q(const Matrix4& rho, const Matrix4& H, double q)
{
    const Eigen::SelfAdjointEigenSolver<Matrix4> eig(rho);
    Vector4 d;
    for (int i = 0; i < 4; ++i) {
        d(i) = power_or_zero(eig.eigenvalues()(i), q);
    }
    const Matrix4& v = eig.eigenvectors();
    const Matrix4 rho_q = v * d.asDiagonal() * v.transpose();
    return (rho_q * H).trace();
}

Matrix4 gibbs_state(const Matrix4& H, double beta)
{
    const Eigen::SelfAdjointEigenSolver<Matrix4> eig(H);
    Vector4 w;
    for (int i = 0; i < 4; ++i) {
        w(i) = std::exp(-beta * eig.eigenvalues()(i));
    }
    w /= w.sum();
    const Matrix4& v = eig.eigenvectors();
    return v * w.asDiagonal() * v.transpose();
}

double min_eigenvalue(const Matrix4& m)
{
    const Eigen::SelfAdjointEigenSolver<Matrix4> eig(m, Eigen::EigenvaluesOnly);
    return eig.eigenvalues().minCoeff();
}

} // namespace qdimer::oracles
