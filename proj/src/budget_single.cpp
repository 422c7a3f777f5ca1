#include "ionscatter/budget_single.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ionscatter/constants.hpp"

namespace ionscatter {

namespace {

double branching_or_throw(const IonSpecies& species) {
    if (!species.branching_f)
        throw NoDLevelError("species '" + species.name +
                            "' has no low lying D levels; D-level error not applicable");
    return *species.branching_f;
}

}  // namespace

const char* to_string(DetuningBranch branch) {
    switch (branch) {
        case DetuningBranch::RedOutside: return "red-outside";
        case DetuningBranch::RedInside: return "red-inside";
        case DetuningBranch::BlueInside: return "blue-inside";
        case DetuningBranch::BlueOutside: return "blue-outside";
    }
    return "?";
}

double epsilon_s_single(const IonSpecies& species, const SingleQubitGateSpec& spec) {
    if (!(spec.rabi > 0.0)) throw std::invalid_argument("rabi frequency must be positive");
    if (!(spec.beam.power > 0.0) || !(spec.beam.waist > 0.0))
        throw std::invalid_argument("beam power and waist must be positive");
    const double w32 = omega_3half(species);
    return 2.0 * constants::pi * spec.rabi * constants::hbar * w32 * w32 * w32 *
           spec.beam.waist * spec.beam.waist /
           (3.0 * constants::c * constants::c * spec.beam.power);
}

double power_for_error_single(const IonSpecies& species, double rabi, double waist,
                              double target_eps_s) {
    if (!(target_eps_s > 0.0) || !(target_eps_s < 1.0))
        throw std::invalid_argument("target error must be in (0, 1)");
    if (!(rabi > 0.0) || !(waist > 0.0))
        throw std::invalid_argument("rabi and waist must be positive");
    const double w32 = omega_3half(species);
    const double waist_over_lambda = constants::two_pi * waist / species.lambda_3half;
    return (constants::two_pi / (3.0 * target_eps_s)) * waist_over_lambda *
           waist_over_lambda * constants::hbar * w32 * rabi;
}

double raman_error_threshold(const IonSpecies& species) {
    return 8.0 * constants::pi * species.gamma / (3.0 * species.omega_f);
}

std::vector<DetuningSolution> detunings_for_raman_error(const IonSpecies& species,
                                                        double target_eps_s) {
    if (!(target_eps_s > 0.0))
        throw std::invalid_argument("target error must be positive");

    // P_Raman = (2 pi gamma / 3) omega_f / |Delta (Delta - omega_f)|, so the
    // roots satisfy |Delta (Delta - omega_f)| = k.
    const double wf = species.omega_f;
    const double k = (2.0 * constants::pi * species.gamma / 3.0) * wf / target_eps_s;

    std::vector<DetuningSolution> roots;
    const double sq_out = std::sqrt(wf * wf + 4.0 * k);
    roots.push_back({-2.0 * k / (wf + sq_out), DetuningBranch::RedOutside});

    // Inside the manifold Delta (omega_f - Delta) = k, solvable only above
    // the in-manifold minimum of the Raman probability.
    const double disc_in = wf * wf - 4.0 * k;
    if (disc_in > 0.0) {
        const double sq_in = std::sqrt(disc_in);
        roots.push_back({2.0 * k / (wf + sq_in), DetuningBranch::RedInside});
        roots.push_back({0.5 * (wf + sq_in), DetuningBranch::BlueInside});
    }
    roots.push_back({0.5 * (wf + sq_out), DetuningBranch::BlueOutside});

    std::sort(roots.begin(), roots.end(),
              [](const DetuningSolution& a, const DetuningSolution& b) {
                  return a.detuning < b.detuning;
              });
    return roots;
}

double epsilon_d_single(const IonSpecies& species, double detuning) {
    return branching_or_throw(species) * prob_total_pi(species, detuning);
}

double epsilon_ratio_d_over_s(const IonSpecies& species, double detuning) {
    const double f = branching_or_throw(species);
    const double wf = species.omega_f;
    const double d = detuning;
    return (3.0 * f / 2.0) * (2.0 * d * d + (d - wf) * (d - wf)) / (wf * wf);
}

double epsilon_d_asymptotic_single(const IonSpecies& species) {
    return 3.0 * constants::pi * species.gamma * branching_or_throw(species) /
           species.omega_f;
}

}  // namespace ionscatter
