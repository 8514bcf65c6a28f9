#include "qdimer/dimer.hpp"

#include <cmath>
#include <sstream>

#include "qdimer/errors.hpp"
#include "qdimer/qcalc.hpp"

namespace qdimer::dimer {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double pow_q(double p, double q)
{
    if (p <= 0.0) {
        return 0.0;
    }
    return qcalc::is_classical(q) ? p : std::pow(p, q);
}

} // namespace

Matrix4 hamiltonian(const DimerParams& p)
{
    Matrix4 h = Matrix4::Zero();
    h(k00, k00) = -p.B;
    h(k11, k11) = p.B;
    h(k01, k10) = p.J;
    h(k10, k01) = p.J;
    return h;
}

Spectrum spectrum(const DimerParams& p)
{
    Spectrum s;
    s.energies = {-p.B, p.B, p.J, -p.J};
    s.eigenvectors[0] = Vector4::Unit(k00);
    s.eigenvectors[1] = Vector4::Unit(k11);
    s.eigenvectors[2] = (Vector4::Unit(k01) + Vector4::Unit(k10)) * kInvSqrt2;
    s.eigenvectors[3] = (Vector4::Unit(k01) - Vector4::Unit(k10)) * kInvSqrt2;
    return s;
}

std::array<double, 4> q_weights(const DimerParams& p, double q, double beta_star)
{
    const auto energies = spectrum(p).energies;
    std::array<double, 4> w{};
    for (std::size_t i = 0; i < 4; ++i) {
        w[i] = qcalc::q_exp(q, -beta_star * energies[i]);
    }
    return w;
}

ThermalState thermal_state(const DimerParams& p, double q, double beta_star)
{
    const double xb = beta_star * p.B;
    const double xj = beta_star * p.J;

    const double up = qcalc::q_exp(q, xb);   // |00>, energy -B
    const double down = qcalc::q_exp(q, -xb); // |11>, energy +B
    const double sym = qcalc::q_exp(q, -xj); // triplet, energy +J
    const double anti = qcalc::q_exp(q, xj); // singlet, energy -J
    const double ch = 0.5 * (anti + sym);
    const double sh = 0.5 * (anti - sym);

    const double Z = 2.0 * ch + up + down;
    if (!(Z > 0.0)) {
        std::ostringstream msg;
        msg << "all q-weights cut off (q=" << q << ", beta*=" << beta_star << ")";
        throw DegenerateState(msg.str());
    }

    ThermalState s;
    s.q = q;
    s.beta_star = beta_star;
    s.Z = Z;
    s.rho(k00, k00) = up / Z;
    s.rho(k11, k11) = down / Z;
    s.rho(k01, k01) = ch / Z;
    s.rho(k10, k10) = ch / Z;
    s.rho(k01, k10) = -sh / Z;
    s.rho(k10, k01) = -sh / Z;

    const std::array<double, 4> w = {up, down, sym, anti};
    s.energies = spectrum(p).energies;
    for (std::size_t i = 0; i < 4; ++i) {
        s.populations[i] = w[i] / Z;
        if (w[i] == 0.0) {
            s.cutoff = true;
        }
    }
    return s;
}

Matrix4 thermal_state_generic(const DimerParams& p, double q, double beta_star)
{
    const Eigen::SelfAdjointEigenSolver<Matrix4> eig(hamiltonian(p));
    Vector4 w;
    for (int i = 0; i < 4; ++i) {
        w(i) = qcalc::q_exp(q, -beta_star * eig.eigenvalues()(i));
    }
    const double Z = w.sum();
    if (!(Z > 0.0)) {
        throw DegenerateState("all q-weights cut off");
    }
    const Matrix4& v = eig.eigenvectors();
    return v * (w / Z).asDiagonal() * v.transpose();
}

double trace_rho_q(const ThermalState& s)
{
    double t = 0.0;
    for (double pi : s.populations) {
        t += pow_q(pi, s.q);
    }
    return t;
}

double internal_energy_2nd(const ThermalState& s)
{
    double u = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        u += pow_q(s.populations[i], s.q) * s.energies[i];
    }
    return u;
}

double partition_fn(const DimerParams& p, double q, double beta_star)
{
    return thermal_state(p, q, beta_star).Z;
}

double trace_rho_q(const DimerParams& p, double q, double beta_star)
{
    return trace_rho_q(thermal_state(p, q, beta_star));
}

double internal_energy_2nd(const DimerParams& p, double q, double beta_star)
{
    return internal_energy_2nd(thermal_state(p, q, beta_star));
}

} // namespace qdimer::dimer
