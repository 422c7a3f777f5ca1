#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ionscatter/constants.hpp"
#include "ionscatter/scattering.hpp"
#include "ionscatter/species.hpp"

using namespace ionscatter;
namespace cn = ionscatter::constants;

namespace {

const IonSpecies& be() { return default_registry().at("9Be+"); }

// random detunings clear of both poles, inside and outside the manifold
double random_detuning(std::mt19937_64& rng, const IonSpecies& s) {
    std::uniform_real_distribution<double> mag(1e-3, 1e3);
    std::uniform_int_distribution<int> pick(0, 2);
    switch (pick(rng)) {
        case 0: return -mag(rng) * s.omega_f;
        case 1: return s.omega_f * std::uniform_real_distribution<double>(0.01, 0.99)(rng);
        default: return s.omega_f * (1.0 + mag(rng));
    }
}

}  // namespace

TEST_CASE("coupling strength from beam parameters") {
    BeamConfig beam{10e-3, 20e-6, {}};
    const double g2 = g_squared_from_beam(be(), beam).g_squared;
    CHECK(g2 == doctest::Approx(3.6115513e19).epsilon(1e-6));

    BeamConfig double_power{20e-3, 20e-6, {}};
    CHECK(g_squared_from_beam(be(), double_power).g_squared ==
          doctest::Approx(2.0 * g2).epsilon(1e-15));

    BeamConfig double_waist{10e-3, 40e-6, {}};
    CHECK(g_squared_from_beam(be(), double_waist).g_squared ==
          doctest::Approx(g2 / 4.0).epsilon(1e-15));
}

TEST_CASE("rabi frequency sign and symmetry") {
    CouplingStrength g2{1e18};
    const double wf = be().omega_f;

    CHECK(rabi_frequency(g2, be(), -0.5 * wf) > 0.0);
    CHECK(rabi_frequency(g2, be(), 0.5 * wf) < 0.0);  // inside the manifold
    CHECK(rabi_frequency(g2, be(), 1.7 * wf) > 0.0);

    // |Omega_R| invariant under Delta -> omega_f - Delta
    const double d = 0.23 * wf;
    CHECK(std::abs(rabi_frequency(g2, be(), d)) ==
          doctest::Approx(std::abs(rabi_frequency(g2, be(), wf - d))).epsilon(1e-12));

    CHECK_THROWS_AS(rabi_frequency(g2, be(), 1e-9 * wf), std::invalid_argument);
    CHECK_THROWS_AS(rabi_frequency(g2, be(), wf * (1.0 + 1e-9)), std::invalid_argument);
}

TEST_CASE("pi time") {
    CHECK(pi_time(cn::two_pi * 0.25e6) == doctest::Approx(1e-6).epsilon(1e-12));
    CHECK(pi_time(cn::two_pi * 0.5e6) == doctest::Approx(0.5e-6).epsilon(1e-12));
    CHECK(pi_time(cn::pi / 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pi_time(-cn::pi / 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(pi_time(0.0), std::invalid_argument);
}

TEST_CASE("total probability minimum and asymptote") {
    const double wf = be().omega_f;
    const double unit = be().gamma / wf;

    // global minimum between the fine-structure levels
    const double at_min = prob_total_pi(be(), (std::sqrt(2.0) - 1.0) * wf);
    CHECK(at_min == doctest::Approx(2.0 * std::sqrt(2.0) * cn::pi * unit).epsilon(1e-12));

    // large-detuning asymptote
    CHECK(prob_total_pi(be(), -1e6 * wf) ==
          doctest::Approx(3.0 * cn::pi * unit).epsilon(1e-5));

    // independent of power and waist by construction: only species constants enter
    IonSpecies heavier = be();
    heavier.mass *= 7.0;
    CHECK(prob_total_pi(heavier, -2.0 * wf) ==
          doctest::Approx(prob_total_pi(be(), -2.0 * wf)).epsilon(1e-15));
}

TEST_CASE("numeric minimization locates the total-probability minimum") {
    // golden-section search, independent of the closed-form location
    const double wf = be().omega_f;
    double a = 1e-3 * wf, b = (1.0 - 1e-3) * wf;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    while (b - a > 1e-10 * wf) {
        if (prob_total_pi(be(), c) < prob_total_pi(be(), d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - gr * (b - a);
        d = a + gr * (b - a);
    }
    const double found = 0.5 * (a + b);
    CHECK(found == doctest::Approx((std::sqrt(2.0) - 1.0) * wf).epsilon(1e-6));
    CHECK(prob_total_pi(be(), found) ==
          doctest::Approx(2.0 * std::sqrt(2.0) * cn::pi * be().gamma / wf).epsilon(1e-12));
}

TEST_CASE("raman probability values and scaling") {
    // red detuning reaching the 1e-4 error level
    CHECK(prob_raman_pi(be(), -cn::two_pi * 203e9) ==
          doctest::Approx(1e-4).epsilon(0.01));

    // quadratic decay far from the manifold: |D(D - wf)| ratio is 10100/110
    const double wf = be().omega_f;
    const double ratio =
        prob_raman_pi(be(), -100.0 * wf) / prob_raman_pi(be(), -10.0 * wf);
    CHECK(ratio == doctest::Approx(110.0 / 10100.0).epsilon(1e-12));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const double d = random_detuning(rng, be());
        CHECK(prob_raman_pi(be(), d) <= prob_total_pi(be(), d));
    }
}

TEST_CASE("raman probability minimum inside the manifold") {
    const double wf = be().omega_f;
    CHECK(prob_raman_pi(be(), 0.5 * wf) ==
          doctest::Approx(8.0 * cn::pi * be().gamma / (3.0 * wf)).epsilon(1e-12));
    // nearby points are above it
    CHECK(prob_raman_pi(be(), 0.4 * wf) > prob_raman_pi(be(), 0.5 * wf));
    CHECK(prob_raman_pi(be(), 0.6 * wf) > prob_raman_pi(be(), 0.5 * wf));
}

TEST_CASE("reflection symmetry about the manifold midpoint") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> inside(0.01, 0.99);
    const double wf = be().omega_f;
    bool total_asymmetric = false;
    for (int i = 0; i < 100; ++i) {
        const double d = inside(rng) * wf;
        CHECK(prob_raman_pi(be(), d) ==
              doctest::Approx(prob_raman_pi(be(), wf - d)).epsilon(1e-12));
        if (std::abs(prob_total_pi(be(), d) - prob_total_pi(be(), wf - d)) >
            1e-6 * prob_total_pi(be(), d))
            total_asymmetric = true;
    }
    CHECK(total_asymmetric);
}

TEST_CASE("rayleigh probability is the total minus the raman part") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const double d = random_detuning(rng, be());
        const double sum = prob_rayleigh_pi(be(), d) + prob_raman_pi(be(), d);
        CHECK(sum == doctest::Approx(prob_total_pi(be(), d)).epsilon(1e-12));
    }
    // same asymptote as the total probability
    const double wf = be().omega_f;
    CHECK(prob_rayleigh_pi(be(), -1e6 * wf) ==
          doctest::Approx(3.0 * cn::pi * be().gamma / wf).epsilon(1e-5));
    // frozen value at the 1e-4 single-qubit operating point
    CHECK(prob_rayleigh_pi(be(), -1.27419922e12) ==
          doctest::Approx(8.2932516e-4).epsilon(1e-6));
}

TEST_CASE("rates integrate to the per-pulse probabilities over one pi time") {
    // The rate functions count both beams, so one pi time of exposure
    // reproduces the per-pulse forms exactly.
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> g2dist(1e15, 1e21);
    for (int i = 0; i < 100; ++i) {
        CouplingStrength g2{g2dist(rng)};
        const double d = random_detuning(rng, be());
        const double tau = pi_time(rabi_frequency(g2, be(), d));
        CHECK(rate_total(g2, be(), d) * tau ==
              doctest::Approx(prob_total_pi(be(), d)).epsilon(1e-12));
        CHECK(rate_raman(g2, be(), d) * tau ==
              doctest::Approx(prob_raman_pi(be(), d)).epsilon(1e-12));
    }
}

TEST_CASE("rates scale linearly with the coupling") {
    const double d = -3.0 * be().omega_f;
    CHECK(rate_total(CouplingStrength{2e18}, be(), d) ==
          doctest::Approx(2.0 * rate_total(CouplingStrength{1e18}, be(), d))
              .epsilon(1e-15));
    CHECK(rate_raman(CouplingStrength{2e18}, be(), d) ==
          doctest::Approx(2.0 * rate_raman(CouplingStrength{1e18}, be(), d))
              .epsilon(1e-15));

    // raman fraction vanishes far from the manifold
    const double near = rate_raman(CouplingStrength{1e18}, be(), d) /
                        rate_total(CouplingStrength{1e18}, be(), d);
    const double far = rate_raman(CouplingStrength{1e18}, be(), 1e4 * d) /
                       rate_total(CouplingStrength{1e18}, be(), 1e4 * d);
    CHECK(far < 1e-6 * near);
}

TEST_CASE("pole guard rejects detunings near resonance") {
    CHECK_THROWS_AS(prob_total_pi(be(), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(prob_raman_pi(be(), be().omega_f), std::invalid_argument);
    CHECK_THROWS_AS(prob_rayleigh_pi(be(), 1e-7 * be().omega_f), std::invalid_argument);
    CHECK_NOTHROW(prob_total_pi(be(), 1e-5 * be().omega_f));
}
