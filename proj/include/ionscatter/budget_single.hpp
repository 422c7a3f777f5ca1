#pragma once

#include <stdexcept>
#include <vector>

#include "ionscatter/scattering.hpp"
#include "ionscatter/species.hpp"

namespace ionscatter {

/// Thrown when a D-level quantity is requested for a species without low
/// lying D levels. Deliberately not zero: a silent 0 would mask species
/// mix-ups.
struct NoDLevelError : std::domain_error {
    using std::domain_error::domain_error;
};

struct SingleQubitGateSpec {
    double rabi = 0.0;  // rad/s, target |Omega_R|
    BeamConfig beam;
};

/// Named error components of one budget evaluation, with the operating
/// point they were evaluated at. Components absent where inapplicable.
struct ErrorBudget {
    std::optional<double> epsilon_s;
    std::optional<double> epsilon_d;
    std::optional<double> epsilon_delta;
    double detuning = 0.0;  // rad/s
    double power = 0.0;     // W
};

enum class DetuningBranch { RedOutside, RedInside, BlueInside, BlueOutside };

const char* to_string(DetuningBranch branch);

struct DetuningSolution {
    double detuning = 0.0;  // rad/s
    DetuningBranch branch = DetuningBranch::RedOutside;
};

/// Raman scattering error of a pi rotation:
/// eps_S = 2 pi |Omega_R| hbar omega_3/2^3 w0^2 / (3 c^2 P).
/// Independent of detuning and of the fine-structure splitting.
double epsilon_s_single(const IonSpecies& species, const SingleQubitGateSpec& spec);

/// Power per beam needed to reach a target eps_S at fixed Rabi frequency;
/// exact inverse of epsilon_s_single.
double power_for_error_single(const IonSpecies& species, double rabi, double waist,
                              double target_eps_s);

/// Minimum of the Raman scattering probability inside the fine-structure
/// manifold, 8 pi gamma / (3 omega_f). Targets above it have four detuning
/// solutions, targets below only the two outside the manifold.
double raman_error_threshold(const IonSpecies& species);

/// All detunings where the per-pulse Raman probability equals the target,
/// solved in closed form per sign region and sorted ascending.
std::vector<DetuningSolution> detunings_for_raman_error(const IonSpecies& species,
                                                        double target_eps_s);

/// eps_D = f * P_total(detuning). Requires branching_f.
double epsilon_d_single(const IonSpecies& species, double detuning);

/// eps_D / eps_S = (3 f / 2) (2 Delta^2 + (Delta - omega_f)^2) / omega_f^2.
double epsilon_ratio_d_over_s(const IonSpecies& species, double detuning);

/// Large-detuning floor of the D-level error, 3 pi gamma f / omega_f.
double epsilon_d_asymptotic_single(const IonSpecies& species);

}  // namespace ionscatter
