#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "ionscatter/rng.hpp"

namespace ionscatter {

/// Drive parameters of the geometric phase gate in the frame rotating at
/// the trap frequency. Gate duration is 2 pi K / delta.
struct TrajectoryConfig {
    int circles = 1;          // K
    double delta = 0.0;       // rad/s, sideband detuning, > 0
    double trap_freq = 0.0;   // rad/s, must be >= 10 * delta
    double gate_phase = 0.0;  // rad, Phi_L
    double eta = 0.0;         // Lamb-Dicke parameter, in (0, 1)
};

/// Throws std::invalid_argument on violated invariants.
void validate(const TrajectoryConfig& config);

double gate_duration(const TrajectoryConfig& config);

/// Cumulative drive displacement
/// alpha(t) = (i / (2 sqrt(K))) (e^{-i delta t} - 1) e^{i Phi_L}.
/// Zero at both ends of the gate; |alpha| <= 1/sqrt(K).
std::complex<double> drive_displacement(double t, const TrajectoryConfig& config);

struct ComposedDisplacement {
    std::complex<double> net;
    double phase = 0.0;  // rad, accumulated commutator phase
};

/// Folds a sequence of displacements into one net displacement and the
/// phase picked up from the pairwise commutators, in application order.
ComposedDisplacement compose_displacements(std::span<const std::complex<double>> steps);

/// One sampled scattering event.
struct RecoilSample {
    double t_scat = 0.0;             // s, within the gate
    std::complex<double> beta{0.0};  // rotating-frame recoil displacement
};

/// Recoil displacement for a given emission direction. Absorption arrives
/// at 45 degrees to the trap axis (axial projection beam_sign/sqrt(2) in
/// units of k_L); the emitted photon leaves at polar angle theta. Only the
/// axial component is kept:
///   beta = i (eta / sqrt(2)) (beam_sign / sqrt(2) - cos_theta) e^{i w_trap t}.
std::complex<double> recoil_beta(double eta, double cos_theta, int beam_sign, double t_scat,
                                 double trap_freq);

/// Draws an isotropic emission direction (cos theta uniform) and a uniform
/// absorbing-beam sign, and forms the recoil displacement at time t_scat.
RecoilSample sample_recoil(const TrajectoryConfig& config, double t_scat, SampleRng& rng);

/// Gate phase error of a single recoil event,
/// dphi = Im[beta alpha*(t) - beta* alpha(t)].
double phase_error(std::complex<double> beta, double t_scat, const TrajectoryConfig& config);

/// Diagonal of the (possibly erroneous) gate on {uu, ud, du, dd}:
/// diag(1, e^{i(phi+dphi)}, e^{i(phi-dphi)}, 1). dphi = 0 gives the ideal gate.
std::array<std::complex<double>, 4> gate_unitary(double phi, double dphi);

/// Two-qubit amplitudes over {uu, ud, du, dd}. Must be normalized.
struct TwoQubitState {
    std::array<std::complex<double>, 4> amp{};
};

/// Fidelity of the erroneous gate output against the ideal one,
/// F = | |a_uu|^2 + e^{i dphi} |a_ud|^2 + e^{-i dphi} |a_du|^2 + |a_dd|^2 |^2.
double state_fidelity(const TwoQubitState& state, double dphi);

struct McEstimate {
    double error_per_scatter = 0.0;  // 1 - <cos^2 dphi>
    double std_error = 0.0;
    double mean_beta_sq = 0.0;       // sample mean of |beta|^2
    double max_abs_beta = 0.0;
    std::uint64_t samples = 0;
};

/// Monte Carlo estimate of the per-scattering-event gate error. Scattering
/// times are uniform over the gate, directions isotropic. Work is split
/// into n_chunks independent RNG streams keyed by (seed, chunk) and reduced
/// in chunk order, so the result is identical for any worker count.
/// Parallelized over chunks with OpenMP when available.
McEstimate mc_rayleigh_error(const TrajectoryConfig& config, std::uint64_t n_samples,
                             std::uint64_t seed, int n_chunks = 64);

/// Serial reference: same chunk decomposition and reduction order, plain
/// loop. Bit-identical to mc_rayleigh_error by construction.
McEstimate mc_rayleigh_error_serial(const TrajectoryConfig& config, std::uint64_t n_samples,
                                    std::uint64_t seed, int n_chunks = 64);

struct EquivalenceResult {
    double fidelity_mixture = 0.0;    // photon-mode trace of the joint state
    double fidelity_dephasing = 0.0;  // random-phase average of pure states
};

/// Single-ion check that tracing the scattered photon out of the joint
/// state gives the same fidelity as averaging the dephased pure states.
/// Both paths are evaluated on one deterministic quadrature grid
/// (Gauss-Legendre in cos theta, uniform midpoint in scattering time, both
/// beam signs); no randomness.
EquivalenceResult mixture_vs_dephasing(const TrajectoryConfig& config, int n_directions);

/// Gauss-Legendre nodes and weights on [-1, 1].
std::vector<std::pair<double, double>> gauss_legendre(int n);

}  // namespace ionscatter
