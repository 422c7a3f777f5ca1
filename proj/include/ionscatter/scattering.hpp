#pragma once

#include <optional>

#include "ionscatter/species.hpp"

namespace ionscatter {

/// One Raman beam. Gaussian profile; power is per beam.
struct BeamConfig {
    double power = 0.0;               // W
    double waist = 0.0;               // m
    std::optional<double> detuning;   // rad/s, signed (negative = red of S1/2 -> P1/2)
};

/// Squared resonant coupling g^2 with g_b = g_r = g.
struct CouplingStrength {
    double g_squared = 0.0;  // (rad/s)^2
};

/// Detunings within this fraction of omega_f of either pole are rejected.
inline constexpr double kPoleGuardFraction = 1e-6;

/// Throws std::invalid_argument if detuning sits on a resonance pole
/// (|delta| or |delta - omega_f| below the guard).
void check_detuning(const IonSpecies& species, double detuning);

/// g^2 = 3 gamma c^2 P / (w0^2 hbar omega_3/2^3), for a Gaussian beam at
/// its center.
CouplingStrength g_squared_from_beam(const IonSpecies& species, const BeamConfig& beam);

/// Signed two-photon Rabi frequency between the clock states for linearly
/// polarized beams: Omega_R = (g^2/3) omega_f / (Delta (Delta - omega_f)).
/// Negative between the fine-structure levels.
double rabi_frequency(CouplingStrength coupling, const IonSpecies& species, double detuning);

/// tau_pi = pi / (2 |Omega_R|).
double pi_time(double rabi);

// Per-pi-pulse scattering probabilities. Functions of (gamma, omega_f,
// detuning) only; independent of beam power and waist.
double prob_total_pi(const IonSpecies& species, double detuning);
double prob_raman_pi(const IonSpecies& species, double detuning);
double prob_rayleigh_pi(const IonSpecies& species, double detuning);

// Scattering rates for a given coupling. rate * pi_time reproduces the
// per-pulse probabilities above.
double rate_total(CouplingStrength coupling, const IonSpecies& species, double detuning);
double rate_raman(CouplingStrength coupling, const IonSpecies& species, double detuning);

}  // namespace ionscatter
