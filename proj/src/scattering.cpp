#include "ionscatter/scattering.hpp"

#include <cmath>
#include <stdexcept>

#include "ionscatter/constants.hpp"

namespace ionscatter {

namespace {

void check_beam(const BeamConfig& beam) {
    if (!(beam.power > 0.0)) throw std::invalid_argument("beam power must be positive");
    if (!(beam.waist > 0.0)) throw std::invalid_argument("beam waist must be positive");
}

// |Delta (Delta - omega_f)| after the pole guard.
double abs_denominator(const IonSpecies& s, double detuning) {
    check_detuning(s, detuning);
    return std::abs(detuning * (detuning - s.omega_f));
}

}  // namespace

void check_detuning(const IonSpecies& species, double detuning) {
    const double guard = kPoleGuardFraction * species.omega_f;
    if (std::abs(detuning) < guard || std::abs(detuning - species.omega_f) < guard)
        throw std::invalid_argument(
            "detuning within the pole guard of a P-level resonance");
}

CouplingStrength g_squared_from_beam(const IonSpecies& species, const BeamConfig& beam) {
    check_beam(beam);
    const double w32 = omega_3half(species);
    const double g2 = 3.0 * species.gamma * constants::c * constants::c * beam.power /
                      (beam.waist * beam.waist * constants::hbar * w32 * w32 * w32);
    return CouplingStrength{g2};
}

double rabi_frequency(CouplingStrength coupling, const IonSpecies& species, double detuning) {
    if (!(coupling.g_squared > 0.0))
        throw std::invalid_argument("coupling g^2 must be positive");
    check_detuning(species, detuning);
    return (coupling.g_squared / 3.0) * species.omega_f /
           (detuning * (detuning - species.omega_f));
}

double pi_time(double rabi) {
    if (rabi == 0.0) throw std::invalid_argument("zero Rabi frequency");
    return constants::pi / (2.0 * std::abs(rabi));
}

double prob_total_pi(const IonSpecies& species, double detuning) {
    const double wf = species.omega_f;
    const double d = detuning;
    return (constants::pi * species.gamma / wf) *
           (2.0 * d * d + (d - wf) * (d - wf)) / abs_denominator(species, d);
}

double prob_raman_pi(const IonSpecies& species, double detuning) {
    return (2.0 * constants::pi * species.gamma / 3.0) * species.omega_f /
           abs_denominator(species, detuning);
}

double prob_rayleigh_pi(const IonSpecies& species, double detuning) {
    const double wf = species.omega_f;
    const double d = detuning;
    return (constants::pi * species.gamma / wf) *
           (3.0 * d * d - 2.0 * d * wf + wf * wf / 3.0) / abs_denominator(species, d);
}

double rate_total(CouplingStrength coupling, const IonSpecies& species, double detuning) {
    check_detuning(species, detuning);
    const double wf = species.omega_f;
    const double d = detuning;
    return (2.0 * species.gamma * coupling.g_squared / 3.0) *
           (1.0 / (d * d) + 2.0 / ((d - wf) * (d - wf)));
}

double rate_raman(CouplingStrength coupling, const IonSpecies& species, double detuning) {
    const double ratio = species.omega_f /
                         (detuning * (detuning - species.omega_f));
    check_detuning(species, detuning);
    return (4.0 * species.gamma * coupling.g_squared / 9.0) * ratio * ratio;
}

}  // namespace ionscatter
