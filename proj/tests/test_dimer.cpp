#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qdimer/dimer.hpp"
#include "qdimer/errors.hpp"
#include "qdimer/oracles.hpp"
#include "qdimer/verify.hpp"

using namespace qdimer;
using namespace qdimer::dimer;

namespace {

struct Sample {
    DimerParams p;
    double q;
    double beta_star;
};

std::vector<Sample> admissible_samples(std::uint64_t seed, int count)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> uq(0.1, 2.9);
    std::uniform_real_distribution<double> ue(-2.0, 2.0);
    std::uniform_real_distribution<double> ub(-3.0, 3.0);
    std::vector<Sample> out;
    while (static_cast<int>(out.size()) < count) {
        Sample s{{ue(gen), ue(gen)}, uq(gen), ub(gen)};
        try {
            (void)thermal_state(s.p, s.q, s.beta_star);
            out.push_back(s);
        } catch (const Error&) {
        }
    }
    return out;
}

} // namespace

TEST(Hamiltonian, MatrixElements)
{
    const Matrix4 h = hamiltonian({1.5, 0.4});
    EXPECT_EQ(h(k00, k00), -0.4);
    EXPECT_EQ(h(k11, k11), 0.4);
    EXPECT_EQ(h(k01, k10), 1.5);
    EXPECT_EQ(h(k10, k01), 1.5);
    EXPECT_EQ(h(k01, k01), 0.0);
    EXPECT_EQ(h(k00, k11), 0.0);
}

TEST(Hamiltonian, SpectrumMatchesEigenpairs)
{
    const DimerParams p{0.8, -1.3};
    const Matrix4 h = hamiltonian(p);
    const Spectrum s = spectrum(p);
    EXPECT_EQ(s.energies[0], -p.B);
    EXPECT_EQ(s.energies[1], p.B);
    EXPECT_EQ(s.energies[2], p.J);
    EXPECT_EQ(s.energies[3], -p.J);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR((h * s.eigenvectors[i] - s.energies[i] * s.eigenvectors[i]).norm(), 0.0, 1e-15);
        EXPECT_NEAR(s.eigenvectors[i].norm(), 1.0, 1e-15);
    }
}

TEST(ThermalState, GibbsReferenceValues)
{
    const auto st = thermal_state({1.0, 0.0}, 1.0, 1.0);
    EXPECT_NEAR(st.Z, 5.08616126963048755695581124151, 1e-13);
    EXPECT_NEAR(st.rho(k01, k10), -0.231058578630004879, 1e-15);
    EXPECT_NEAR(st.rho(k00, k00), 1.0 / st.Z, 1e-15);
    EXPECT_FALSE(st.cutoff);
}

TEST(ThermalState, DeformedReferenceValues)
{
    const DimerParams p{1.0, 1.0};
    const auto st = thermal_state(p, 0.5, 0.3);
    EXPECT_NEAR(trace_rho_q(st), 1.97787270573659505, 1e-13);
    EXPECT_NEAR(internal_energy_2nd(st), -0.296680905860489257, 1e-13);
    EXPECT_NEAR(st.rho(k00, k00), 0.323349633251833741, 1e-14);
    EXPECT_NEAR(st.rho(k11, k11), 0.176650366748166259, 1e-14);
    EXPECT_NEAR(st.rho(k01, k01), 0.25, 1e-14);
    EXPECT_NEAR(st.rho(k01, k10), -0.0733496332518337408, 1e-14);
    EXPECT_NEAR(trace_rho_q(p, 0.5, 0.3), trace_rho_q(st), 1e-15);
    EXPECT_NEAR(internal_energy_2nd(p, 0.5, 0.3), internal_energy_2nd(st), 1e-15);
}

TEST(ThermalState, StructuralInvariants)
{
    for (const auto& s : admissible_samples(21, 400)) {
        const auto st = thermal_state(s.p, s.q, s.beta_star);
        const Matrix4 h = hamiltonian(s.p);
        ASSERT_NEAR(st.rho.trace(), 1.0, 1e-12);
        ASSERT_NEAR((st.rho - st.rho.transpose()).cwiseAbs().maxCoeff(), 0.0, 1e-15);
        ASSERT_GE(oracles::min_eigenvalue(st.rho), -1e-12);
        ASSERT_NEAR((st.rho * h - h * st.rho).cwiseAbs().maxCoeff(), 0.0, 1e-12);
        // X shape: only diagonal and the central coherence survive
        ASSERT_EQ(st.rho(k00, k11), 0.0);
        ASSERT_EQ(st.rho(k00, k01), 0.0);
        ASSERT_EQ(st.rho(k10, k11), 0.0);
    }
}

TEST(ThermalState, ClosedFormAgreesWithEigendecomposition)
{
    for (const auto& s : admissible_samples(22, 400)) {
        const auto st = thermal_state(s.p, s.q, s.beta_star);
        const Matrix4 g = thermal_state_generic(s.p, s.q, s.beta_star);
        ASSERT_LE((st.rho - g).cwiseAbs().maxCoeff(), 1e-12) << "q=" << s.q << " b*=" << s.beta_star;
    }
}

TEST(ThermalState, PartitionFunctionIsNormalization)
{
    for (const auto& s : admissible_samples(23, 200)) {
        const auto w = q_weights(s.p, s.q, s.beta_star);
        ASSERT_NEAR(partition_fn(s.p, s.q, s.beta_star), w[0] + w[1] + w[2] + w[3], 1e-12);
    }
}

TEST(ThermalState, TraceOfPowerMatchesDenseOracle)
{
    const auto r = verify::check_trace_q_oracle(
        [](const DimerParams& p, double q, double bs) { return trace_rho_q(p, q, bs); }, 24);
    EXPECT_EQ(r.status, verify::Status::pass) << r.detail;
}

TEST(ThermalState, ElementwisePowerIsCaughtByOracle)
{
    // sum_ij |rho_ij|^q is not Tr[rho^q] once off-diagonals are present
    const auto mutant = [](const DimerParams& p, double q, double bs) {
        const auto st = thermal_state(p, q, bs);
        return st.rho.cwiseAbs().array().pow(q).sum();
    };
    const auto r = verify::check_trace_q_oracle(mutant, 24);
    EXPECT_EQ(r.status, verify::Status::fail) << r.detail;
}

TEST(ThermalState, SecondConstraintEnergyMatchesDenseOracle)
{
    for (const auto& s : admissible_samples(25, 300)) {
        const auto st = thermal_state(s.p, s.q, s.beta_star);
        bool tiny = false;
        for (double p : st.populations) {
            tiny = tiny || (p > 0.0 && p < 1e-6);
        }
        if (tiny) {
            continue;
        }
        ASSERT_NEAR(internal_energy_2nd(st), oracles::dense_energy_q(st.rho, hamiltonian(s.p), s.q), 1e-10);
    }
}

TEST(ThermalState, GibbsLimit)
{
    const DimerParams p{1.0, 0.7};
    for (double q : {1.0 - 1e-9, 1.0 + 1e-9}) {
        for (double bs : {0.1, 1.0, 4.0}) {
            const Matrix4 g = oracles::gibbs_state(hamiltonian(p), bs);
            EXPECT_LE((thermal_state(p, q, bs).rho - g).cwiseAbs().maxCoeff(), 1e-8);
        }
    }
}

TEST(ThermalState, CutoffZeroesPopulations)
{
    // q = 0.2: e_q(-b* E) vanishes once b* E >= 1/(1-q) = 1.25
    const auto st = thermal_state({1.0, 1.0}, 0.2, 2.0);
    EXPECT_TRUE(st.cutoff);
    int zeros = 0;
    for (double p : st.populations) {
        zeros += p == 0.0 ? 1 : 0;
    }
    EXPECT_EQ(zeros, 2);
    EXPECT_NEAR(st.rho.trace(), 1.0, 1e-15);
    EXPECT_NEAR(trace_rho_q(st), 2.0 * std::pow(0.5, 0.2), 1e-14);
    EXPECT_NEAR(internal_energy_2nd(st), -2.0 * std::pow(0.5, 0.2), 1e-14);
}

TEST(ThermalState, PoleAboveOneIsDomainError)
{
    EXPECT_THROW((void)thermal_state({1.0, 0.0}, 2.0, 1.0), DomainError);
    EXPECT_THROW((void)thermal_state({1.0, 0.0}, 2.0, -1.5), DomainError);
    EXPECT_NO_THROW((void)thermal_state({1.0, 0.0}, 2.0, 0.99));
}

TEST(ThermalState, SymmetricUnderFieldReversal)
{
    for (const auto& s : admissible_samples(26, 100)) {
        const DimerParams flipped{s.p.J, -s.p.B};
        ASSERT_NEAR(partition_fn(s.p, s.q, s.beta_star), partition_fn(flipped, s.q, s.beta_star), 1e-12);
        ASSERT_NEAR(trace_rho_q(s.p, s.q, s.beta_star), trace_rho_q(flipped, s.q, s.beta_star), 1e-12);
    }
}

TEST(ThermalState, InfiniteTemperatureIsMaximallyMixed)
{
    const auto st = thermal_state({1.0, 0.5}, 0.4, 0.0);
    EXPECT_NEAR((st.rho - 0.25 * Matrix4::Identity()).norm(), 0.0, 1e-15);
    EXPECT_NEAR(trace_rho_q(st), 4.0 * std::pow(0.25, 0.4), 1e-14);
}
