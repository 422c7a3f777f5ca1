#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ionscatter/budget_single.hpp"
#include "ionscatter/constants.hpp"
#include "ionscatter/species.hpp"

using namespace ionscatter;
namespace cn = ionscatter::constants;

namespace {

const IonSpecies& reg(const char* name) { return default_registry().at(name); }

SingleQubitGateSpec table_point(double power_mw = 10.0) {
    return {cn::two_pi * 0.25e6, BeamConfig{power_mw * 1e-3, 20e-6, {}}};
}

// independent bisection on the per-pulse Raman probability
double bisect_raman(const IonSpecies& s, double target, double lo, double hi) {
    auto f = [&](double d) { return prob_raman_pi(s, d) - target; };
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if ((f(lo) > 0.0) == (f(mid) > 0.0))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("single-qubit raman error at the reference operating point") {
    CHECK(epsilon_s_single(reg("9Be+"), table_point()) ==
          doctest::Approx(0.34e-4).epsilon(0.05));
    CHECK(epsilon_s_single(reg("43Ca+"), table_point()) ==
          doctest::Approx(0.17e-4).epsilon(0.05));
    // frozen oracle value
    CHECK(epsilon_s_single(reg("9Be+"), table_point()) ==
          doctest::Approx(3.3654410e-5).epsilon(1e-6));
}

TEST_CASE("error scales with the cube of the transition frequency") {
    const double ratio = epsilon_s_single(reg("43Ca+"), table_point()) /
                         epsilon_s_single(reg("9Be+"), table_point());
    CHECK(ratio == doctest::Approx(std::pow(313.0 / 393.4, 3.0)).epsilon(1e-12));
}

TEST_CASE("error is independent of the fine-structure splitting") {
    IonSpecies perturbed = reg("9Be+");
    perturbed.omega_f *= 3.7;
    CHECK(epsilon_s_single(perturbed, table_point()) ==
          doctest::Approx(epsilon_s_single(reg("9Be+"), table_point())).epsilon(1e-15));
}

TEST_CASE("power for a target error") {
    const double rabi = cn::two_pi * 0.25e6;
    CHECK(power_for_error_single(reg("9Be+"), rabi, 20e-6, 1e-4) ==
          doctest::Approx(3.4e-3).epsilon(0.05));
    CHECK(power_for_error_single(reg("199Hg+"), rabi, 20e-6, 1e-4) ==
          doctest::Approx(23e-3).epsilon(0.05));

    // exact inverse pair
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> eps(1e-7, 1e-2);
    for (int i = 0; i < 50; ++i) {
        const double target = eps(rng);
        const double p = power_for_error_single(reg("9Be+"), rabi, 20e-6, target);
        SingleQubitGateSpec spec{rabi, BeamConfig{p, 20e-6, {}}};
        CHECK(epsilon_s_single(reg("9Be+"), spec) ==
              doctest::Approx(target).epsilon(1e-12));
    }
}

TEST_CASE("detuning solver reproduces the reference red detunings") {
    auto be = detunings_for_raman_error(reg("9Be+"), 1e-4);
    CHECK(be.front().branch == DetuningBranch::RedOutside);
    CHECK(be.front().detuning / cn::two_pi / 1e9 == doctest::Approx(-203.0).epsilon(0.01));

    auto yb = detunings_for_raman_error(reg("171Yb+"), 1e-4);
    CHECK(yb.front().detuning / cn::two_pi / 1e9 == doctest::Approx(-411.0).epsilon(0.01));
}

TEST_CASE("root count switches at the in-manifold minimum") {
    const IonSpecies& s = reg("9Be+");
    const double threshold = raman_error_threshold(s);
    CHECK(threshold == doctest::Approx(8.2929583e-4).epsilon(1e-6));

    auto below = detunings_for_raman_error(s, threshold * (1.0 - 1e-9));
    REQUIRE(below.size() == 2);
    CHECK(below[0].branch == DetuningBranch::RedOutside);
    CHECK(below[1].branch == DetuningBranch::BlueOutside);

    auto above = detunings_for_raman_error(s, threshold * (1.0 + 1e-9));
    REQUIRE(above.size() == 4);
    CHECK(above[1].branch == DetuningBranch::RedInside);
    CHECK(above[2].branch == DetuningBranch::BlueInside);
    CHECK(above[1].detuning < 0.5 * s.omega_f);
    CHECK(above[2].detuning > 0.5 * s.omega_f);

    CHECK_THROWS_AS(detunings_for_raman_error(s, 0.0), std::invalid_argument);
}

TEST_CASE("every root reproduces its target and is sorted") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> logeps(-8.0, -1.0);
    std::uniform_int_distribution<std::size_t> pick(0, default_registry().size() - 1);
    for (int i = 0; i < 200; ++i) {
        const IonSpecies& s = default_registry().all()[pick(rng)];
        const double target = std::pow(10.0, logeps(rng));
        auto roots = detunings_for_raman_error(s, target);
        CHECK((roots.size() == 2 || roots.size() == 4));
        for (std::size_t j = 1; j < roots.size(); ++j)
            CHECK(roots[j - 1].detuning < roots[j].detuning);
        for (const auto& r : roots)
            CHECK(prob_raman_pi(s, r.detuning) == doctest::Approx(target).epsilon(1e-9));
    }
}

TEST_CASE("closed-form roots agree with bracketed bisection") {
    const IonSpecies& s = reg("43Ca+");
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> logeps(-7.0, -2.0);
    for (int i = 0; i < 50; ++i) {
        const double target = std::pow(10.0, logeps(rng));
        auto roots = detunings_for_raman_error(s, target);
        // red-outside: probability decreases away from the pole
        const double ref =
            bisect_raman(s, target, -1e-5 * s.omega_f, -1e6 * s.omega_f);
        CHECK(roots.front().detuning == doctest::Approx(ref).epsilon(1e-9));
    }
}

TEST_CASE("d-level error and its ratio to the raman error") {
    auto ca_roots = detunings_for_raman_error(reg("43Ca+"), 1e-4);
    const double ca_d0 = ca_roots.front().detuning;
    CHECK(ca_d0 / cn::two_pi / 1e9 == doctest::Approx(-442.0).epsilon(0.01));
    CHECK(epsilon_ratio_d_over_s(reg("43Ca+"), ca_d0) ==
          doctest::Approx(0.10).epsilon(0.05));

    auto ba_roots = detunings_for_raman_error(reg("137Ba+"), 1e-4);
    CHECK(epsilon_ratio_d_over_s(reg("137Ba+"), ba_roots.front().detuning) ==
          doctest::Approx(0.51).epsilon(0.05));

    CHECK_THROWS_AS(epsilon_d_single(reg("9Be+"), -1e12), NoDLevelError);
    CHECK_THROWS_AS(epsilon_ratio_d_over_s(reg("9Be+"), -1e12), NoDLevelError);
    CHECK_THROWS_AS(epsilon_d_asymptotic_single(reg("9Be+")), NoDLevelError);
}

TEST_CASE("ratio formula equals the quotient of the two errors") {
    const IonSpecies& s = reg("43Ca+");
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> mag(1e-2, 1e3);
    for (int i = 0; i < 100; ++i) {
        const double d = -mag(rng) * s.omega_f;
        CHECK(epsilon_ratio_d_over_s(s, d) ==
              doctest::Approx(epsilon_d_single(s, d) / prob_raman_pi(s, d))
                  .epsilon(1e-12));
    }
    // the two errors become comparable near sqrt(2) omega_f / (3 sqrt(f));
    // that crossing estimate is asymptotic in small f
    IonSpecies weak_branch = s;
    weak_branch.branching_f = 1e-6;
    const double crossing =
        std::sqrt(2.0) * s.omega_f / (3.0 * std::sqrt(*weak_branch.branching_f));
    CHECK(epsilon_ratio_d_over_s(weak_branch, crossing) ==
          doctest::Approx(1.0).epsilon(0.01));
    // for the real branching fraction the two are the same order of magnitude there
    const double real_crossing =
        std::sqrt(2.0) * s.omega_f / (3.0 * std::sqrt(*s.branching_f));
    CHECK(epsilon_ratio_d_over_s(s, real_crossing) > 0.5);
    CHECK(epsilon_ratio_d_over_s(s, real_crossing) < 2.0);
}

TEST_CASE("asymptotic d-level error") {
    CHECK(epsilon_d_asymptotic_single(reg("43Ca+")) ==
          doctest::Approx(0.019e-4).epsilon(0.10));
    CHECK(epsilon_d_asymptotic_single(reg("171Yb+")) ==
          doctest::Approx(6e-9).epsilon(0.10));

    IonSpecies half_f = reg("43Ca+");
    half_f.branching_f = *half_f.branching_f / 2.0;
    CHECK(epsilon_d_asymptotic_single(half_f) ==
          doctest::Approx(epsilon_d_asymptotic_single(reg("43Ca+")) / 2.0)
              .epsilon(1e-15));
}

TEST_CASE("d-level error approaches its floor at large detuning") {
    // The gap to the floor closes as 1/|Delta|: from above on the blue side,
    // from below past -omega_f on the red side (the total-probability
    // numerator minus 3|Delta(Delta - omega_f)| equals (Delta/omega_f + 1)
    // omega_f^2, which changes sign at -omega_f).
    const IonSpecies& s = reg("87Sr+");
    const double floor = epsilon_d_asymptotic_single(s);

    double prev_gap = std::abs(epsilon_d_single(s, -10.0 * s.omega_f) - floor);
    for (double mult : {30.0, 100.0, 300.0, 1000.0}) {
        const double cur = epsilon_d_single(s, -mult * s.omega_f);
        CHECK(cur < floor);  // red side sits below the asymptote
        CHECK(std::abs(cur - floor) < prev_gap);
        prev_gap = std::abs(cur - floor);
    }
    CHECK(epsilon_d_single(s, -1000.0 * s.omega_f) ==
          doctest::Approx(floor).epsilon(1e-2));

    prev_gap = std::abs(epsilon_d_single(s, 10.0 * s.omega_f) - floor);
    for (double mult : {30.0, 100.0, 300.0, 1000.0}) {
        const double cur = epsilon_d_single(s, mult * s.omega_f);
        CHECK(cur > floor);  // blue side approaches from above
        CHECK(std::abs(cur - floor) < prev_gap);
        prev_gap = std::abs(cur - floor);
    }
}
