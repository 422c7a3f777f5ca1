#pragma once

#include <vector>

#include "ionscatter/budget_single.hpp"
#include "ionscatter/species.hpp"

namespace ionscatter {

/// Geometric phase gate driven by two Raman beam pairs (four beams total),
/// exciting one axial mode through K closed phase-space circles.
struct TwoQubitGateSpec {
    double gate_time = 0.0;  // s
    double trap_freq = 0.0;  // rad/s
    int circles = 1;         // K
    double waist = 0.0;      // m
    double power = 0.0;      // W per beam
};

struct LambDicke {
    double eta = 0.0;  // dimensionless
    double z0 = 0.0;   // m, rms ground-state spread
};

/// z0 = sqrt(hbar / (4 M omega_trap)); eta = sqrt(2) (2 pi / lambda_3/2) z0
/// for the counter-propagating 45-degree beam geometry.
LambDicke lamb_dicke(const IonSpecies& species, double trap_freq);

/// tau_gate = pi sqrt(K) / (2 |Omega_R| eta) = tau_pi sqrt(K) / eta.
double gate_time_from_rabi(double rabi, double eta, int circles);

/// Raman error of the gate with waist, gate time and trap frequency fixed:
/// eps_S = (8 pi^2 / 3 P) (K / tau_gate) w0^2 omega_3/2 M omega_trap.
double epsilon_s_gate(const IonSpecies& species, const TwoQubitGateSpec& spec);

/// Same error computed through the single-qubit form scaled by 4 sqrt(K)/eta,
/// with |Omega_R| eliminated through the gate-time relation. Identical to
/// epsilon_s_gate when eta comes from lamb_dicke; takes eta explicitly so a
/// measured or tabulated value can be injected.
double epsilon_s_gate_from_eta(const IonSpecies& species, double gate_time, double waist,
                               double power, int circles, double eta);

/// Power per beam for a target gate error; exact inverse of epsilon_s_gate.
double power_for_error_gate(const IonSpecies& species, double gate_time, double waist,
                            int circles, double trap_freq, double target_eps_s);

/// Detunings where the gate Raman error (4 sqrt(K)/eta times the per-pulse
/// probability) equals the target. Same branch structure as the single-qubit
/// solver.
std::vector<DetuningSolution> detunings_for_raman_error_gate(const IonSpecies& species,
                                                             double eta, int circles,
                                                             double target_eps_s);

/// eps_D = (4 sqrt(K) / eta) f P_total(detuning).
double epsilon_d_gate(const IonSpecies& species, double detuning, double eta, int circles);

/// Gate D-level floor, (3 pi gamma f / omega_f) (4 sqrt(K) / eta).
double epsilon_d_asymptotic_gate(const IonSpecies& species, double eta, int circles);

/// Probability that one of the ions Rayleigh-scatters during the gate.
double p_rayleigh_gate(const IonSpecies& species, double detuning, double eta, int circles);

/// Recoil dephasing error:
/// eps_R = (5 eta pi gamma / (6 sqrt(K) omega_f))
///         (3 Delta^2 - 2 Delta omega_f + omega_f^2/3) / |Delta (Delta - omega_f)|,
/// i.e. p_rayleigh_gate scaled by 5 eta^2 / (24 K).
double epsilon_r(const IonSpecies& species, double detuning, double eta, int circles);

/// Large-detuning recoil floor, (5 pi eta / (2 sqrt(K))) gamma / omega_f,
/// with eta from the trap frequency.
double epsilon_r_asymptotic(const IonSpecies& species, double trap_freq, int circles);

/// Same floor with eta injected.
double epsilon_r_asymptotic_from_eta(const IonSpecies& species, double eta, int circles);

/// Equivalent closed form through mass and trap frequency,
/// 5 pi^2 gamma / (omega_f lambda_3/2) sqrt(hbar / (2 M omega_trap K)).
double epsilon_r_asymptotic_mass_form(const IonSpecies& species, double trap_freq,
                                      int circles);

/// Rayleigh rate-difference error for the gate,
/// eps_delta = (omega_0 / Delta)^2 P_Rayleigh-gate(Delta).
double epsilon_delta_gate(const IonSpecies& species, double detuning, double eta,
                          int circles);

/// Single-qubit variant, (omega_0 / Delta)^2 P_Rayleigh(Delta).
double epsilon_delta_single(const IonSpecies& species, double detuning);

}  // namespace ionscatter
