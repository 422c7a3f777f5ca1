#include "ionscatter/budget_two.hpp"

#include <cmath>
#include <stdexcept>

#include "ionscatter/constants.hpp"

namespace ionscatter {

namespace {

void check_eta(double eta) {
    if (!(eta > 0.0) || !(eta < 1.0))
        throw std::invalid_argument("Lamb-Dicke parameter must be in (0, 1)");
}

void check_circles(int circles) {
    if (circles < 1) throw std::invalid_argument("circle count K must be >= 1");
}

double gate_scale(double eta, int circles) {
    check_eta(eta);
    check_circles(circles);
    return 4.0 * std::sqrt(static_cast<double>(circles)) / eta;
}

}  // namespace

LambDicke lamb_dicke(const IonSpecies& species, double trap_freq) {
    if (!(trap_freq > 0.0)) throw std::invalid_argument("trap frequency must be positive");
    const double z0 = std::sqrt(constants::hbar / (4.0 * species.mass * trap_freq));
    const double k_laser = constants::two_pi / species.lambda_3half;
    return LambDicke{std::sqrt(2.0) * k_laser * z0, z0};
}

double gate_time_from_rabi(double rabi, double eta, int circles) {
    check_eta(eta);
    check_circles(circles);
    if (!(rabi != 0.0)) throw std::invalid_argument("rabi frequency must be nonzero");
    return constants::pi * std::sqrt(static_cast<double>(circles)) /
           (2.0 * std::abs(rabi) * eta);
}

double epsilon_s_gate(const IonSpecies& species, const TwoQubitGateSpec& spec) {
    check_circles(spec.circles);
    if (!(spec.gate_time > 0.0) || !(spec.trap_freq > 0.0) || !(spec.waist > 0.0) ||
        !(spec.power > 0.0))
        throw std::invalid_argument("two-qubit gate spec fields must be positive");
    return (8.0 * constants::pi * constants::pi / (3.0 * spec.power)) *
           (static_cast<double>(spec.circles) / spec.gate_time) * spec.waist * spec.waist *
           omega_3half(species) * species.mass * spec.trap_freq;
}

double epsilon_s_gate_from_eta(const IonSpecies& species, double gate_time, double waist,
                               double power, int circles, double eta) {
    check_eta(eta);
    check_circles(circles);
    if (!(gate_time > 0.0)) throw std::invalid_argument("gate time must be positive");
    // |Omega_R| needed for this gate time, then the single-qubit error
    // scaled by the two-ion / two-field / longer-gate factor.
    const double rabi =
        constants::pi * std::sqrt(static_cast<double>(circles)) / (2.0 * gate_time * eta);
    SingleQubitGateSpec single{rabi, BeamConfig{power, waist, {}}};
    return epsilon_s_single(species, single) * gate_scale(eta, circles);
}

double power_for_error_gate(const IonSpecies& species, double gate_time, double waist,
                            int circles, double trap_freq, double target_eps_s) {
    check_circles(circles);
    if (!(target_eps_s > 0.0) || !(target_eps_s < 1.0))
        throw std::invalid_argument("target error must be in (0, 1)");
    if (!(gate_time > 0.0) || !(trap_freq > 0.0) || !(waist > 0.0))
        throw std::invalid_argument("gate parameters must be positive");
    return (8.0 * constants::pi * constants::pi / (3.0 * target_eps_s)) *
           (static_cast<double>(circles) / gate_time) * waist * waist *
           omega_3half(species) * species.mass * trap_freq;
}

std::vector<DetuningSolution> detunings_for_raman_error_gate(const IonSpecies& species,
                                                             double eta, int circles,
                                                             double target_eps_s) {
    // (4 sqrt(K)/eta) P_Raman(Delta) = eps is the single-qubit equation with
    // a rescaled target.
    return detunings_for_raman_error(species, target_eps_s / gate_scale(eta, circles));
}

double epsilon_d_gate(const IonSpecies& species, double detuning, double eta, int circles) {
    return gate_scale(eta, circles) * epsilon_d_single(species, detuning);
}

double epsilon_d_asymptotic_gate(const IonSpecies& species, double eta, int circles) {
    return gate_scale(eta, circles) * epsilon_d_asymptotic_single(species);
}

double p_rayleigh_gate(const IonSpecies& species, double detuning, double eta, int circles) {
    return gate_scale(eta, circles) * prob_rayleigh_pi(species, detuning);
}

double epsilon_r(const IonSpecies& species, double detuning, double eta, int circles) {
    const double wf = species.omega_f;
    const double d = detuning;
    check_detuning(species, d);
    check_eta(eta);
    check_circles(circles);
    return (5.0 * eta * constants::pi * species.gamma /
            (6.0 * std::sqrt(static_cast<double>(circles)) * wf)) *
           (3.0 * d * d - 2.0 * d * wf + wf * wf / 3.0) / std::abs(d * (d - wf));
}

double epsilon_r_asymptotic_from_eta(const IonSpecies& species, double eta, int circles) {
    check_eta(eta);
    check_circles(circles);
    return (5.0 * constants::pi * eta / (2.0 * std::sqrt(static_cast<double>(circles)))) *
           species.gamma / species.omega_f;
}

double epsilon_r_asymptotic(const IonSpecies& species, double trap_freq, int circles) {
    return epsilon_r_asymptotic_from_eta(species, lamb_dicke(species, trap_freq).eta,
                                         circles);
}

double epsilon_r_asymptotic_mass_form(const IonSpecies& species, double trap_freq,
                                      int circles) {
    check_circles(circles);
    if (!(trap_freq > 0.0)) throw std::invalid_argument("trap frequency must be positive");
    const double pi = constants::pi;
    return 5.0 * pi * pi * species.gamma / (species.omega_f * species.lambda_3half) *
           std::sqrt(constants::hbar / (2.0 * species.mass * trap_freq * circles));
}

double epsilon_delta_gate(const IonSpecies& species, double detuning, double eta,
                          int circles) {
    const double ratio = species.omega0 / detuning;
    return ratio * ratio * p_rayleigh_gate(species, detuning, eta, circles);
}

double epsilon_delta_single(const IonSpecies& species, double detuning) {
    const double ratio = species.omega0 / detuning;
    return ratio * ratio * prob_rayleigh_pi(species, detuning);
}

}  // namespace ionscatter
