#include "ionscatter/recoil_mc.hpp"

#include <cmath>
#include <stdexcept>

#include "ionscatter/constants.hpp"

namespace ionscatter {

namespace {

using std::complex;

constexpr complex<double> kI{0.0, 1.0};

struct ChunkAccum {
    double sum_err = 0.0;
    double sum_err_sq = 0.0;
    double sum_beta_sq = 0.0;
    double max_abs_beta = 0.0;
    std::uint64_t count = 0;
};

// Every sample draws, in order: scattering time, emission cos(theta),
// absorbing-beam sign. The order is part of the reproducibility contract.
void run_chunk(const TrajectoryConfig& cfg, std::uint64_t n, SampleRng rng,
               ChunkAccum& acc) {
    const double tau_gate = gate_duration(cfg);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double t = rng.open01() * tau_gate;
        const RecoilSample s = sample_recoil(cfg, t, rng);
        const double dphi = phase_error(s.beta, t, cfg);
        const double err = std::sin(dphi) * std::sin(dphi);  // 1 - cos^2
        acc.sum_err += err;
        acc.sum_err_sq += err * err;
        const double beta_sq = std::norm(s.beta);
        acc.sum_beta_sq += beta_sq;
        acc.max_abs_beta = std::max(acc.max_abs_beta, std::sqrt(beta_sq));
        ++acc.count;
    }
}

McEstimate reduce_chunks(const std::vector<ChunkAccum>& chunks) {
    ChunkAccum total;
    for (const ChunkAccum& c : chunks) {  // fixed order, independent of workers
        total.sum_err += c.sum_err;
        total.sum_err_sq += c.sum_err_sq;
        total.sum_beta_sq += c.sum_beta_sq;
        total.max_abs_beta = std::max(total.max_abs_beta, c.max_abs_beta);
        total.count += c.count;
    }
    const double n = static_cast<double>(total.count);
    McEstimate est;
    est.samples = total.count;
    est.error_per_scatter = total.sum_err / n;
    const double var =
        (total.sum_err_sq / n - est.error_per_scatter * est.error_per_scatter) /
        (n - 1.0);
    est.std_error = std::sqrt(std::max(var, 0.0));
    est.mean_beta_sq = total.sum_beta_sq / n;
    est.max_abs_beta = total.max_abs_beta;
    return est;
}

std::vector<std::uint64_t> chunk_sizes(std::uint64_t n_samples, int n_chunks) {
    std::vector<std::uint64_t> sizes(static_cast<std::size_t>(n_chunks));
    const std::uint64_t base = n_samples / n_chunks;
    const std::uint64_t extra = n_samples % n_chunks;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        sizes[i] = base + (i < extra ? 1 : 0);
    return sizes;
}

void check_mc_args(std::uint64_t n_samples, int n_chunks) {
    if (n_samples < 1000)
        throw std::invalid_argument("at least 1000 samples required");
    if (n_chunks < 1) throw std::invalid_argument("chunk count must be >= 1");
}

}  // namespace

void validate(const TrajectoryConfig& config) {
    if (config.circles < 1) throw std::invalid_argument("circle count K must be >= 1");
    if (!(config.delta > 0.0))
        throw std::invalid_argument("sideband detuning delta must be positive");
    if (!(config.trap_freq >= 10.0 * config.delta))
        throw std::invalid_argument("trap frequency must be at least 10x delta");
    if (!(config.eta > 0.0) || !(config.eta < 1.0))
        throw std::invalid_argument("Lamb-Dicke parameter must be in (0, 1)");
}

double gate_duration(const TrajectoryConfig& config) {
    validate(config);
    return constants::two_pi * config.circles / config.delta;
}

complex<double> drive_displacement(double t, const TrajectoryConfig& config) {
    const double tau_gate = gate_duration(config);
    if (t < 0.0 || t > tau_gate)
        throw std::out_of_range("time outside the gate interval");
    const double root_k = std::sqrt(static_cast<double>(config.circles));
    return (kI / (2.0 * root_k)) * (std::exp(-kI * (config.delta * t)) - 1.0) *
           std::exp(kI * config.gate_phase);
}

ComposedDisplacement compose_displacements(std::span<const complex<double>> steps) {
    ComposedDisplacement result;
    for (const complex<double>& step : steps) {
        result.phase += std::imag(step * std::conj(result.net));
        result.net += step;
    }
    return result;
}

complex<double> recoil_beta(double eta, double cos_theta, int beam_sign, double t_scat,
                            double trap_freq) {
    const double inv_root2 = 1.0 / std::sqrt(2.0);
    // axial momentum transfer in units of k_L, absorption minus emission
    const double q_axial = beam_sign * inv_root2 - cos_theta;
    const double displacement = eta * inv_root2 * q_axial;  // q_z z0, signed
    return kI * displacement * std::exp(kI * (trap_freq * t_scat));
}

RecoilSample sample_recoil(const TrajectoryConfig& config, double t_scat, SampleRng& rng) {
    const double cos_theta = rng.symmetric();
    const int beam_sign = rng.sign();
    return RecoilSample{
        t_scat, recoil_beta(config.eta, cos_theta, beam_sign, t_scat, config.trap_freq)};
}

double phase_error(complex<double> beta, double t_scat, const TrajectoryConfig& config) {
    const complex<double> alpha = drive_displacement(t_scat, config);
    return std::imag(beta * std::conj(alpha) - std::conj(beta) * alpha);
}

std::array<complex<double>, 4> gate_unitary(double phi, double dphi) {
    return {complex<double>{1.0, 0.0}, std::exp(kI * (phi + dphi)),
            std::exp(kI * (phi - dphi)), complex<double>{1.0, 0.0}};
}

double state_fidelity(const TwoQubitState& state, double dphi) {
    double norm = 0.0;
    for (const auto& a : state.amp) norm += std::norm(a);
    if (std::abs(norm - 1.0) > 1e-12)
        throw std::invalid_argument("two-qubit state must be normalized");
    const complex<double> overlap = std::norm(state.amp[0]) +
                                    std::exp(kI * dphi) * std::norm(state.amp[1]) +
                                    std::exp(-kI * dphi) * std::norm(state.amp[2]) +
                                    std::norm(state.amp[3]);
    return std::norm(overlap);
}

McEstimate mc_rayleigh_error(const TrajectoryConfig& config, std::uint64_t n_samples,
                             std::uint64_t seed, int n_chunks) {
    validate(config);
    check_mc_args(n_samples, n_chunks);
    const auto sizes = chunk_sizes(n_samples, n_chunks);
    std::vector<ChunkAccum> accums(sizes.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n_chunks; ++i)
        run_chunk(config, sizes[i], chunk_rng(seed, static_cast<std::uint64_t>(i)),
                  accums[i]);
    return reduce_chunks(accums);
}

McEstimate mc_rayleigh_error_serial(const TrajectoryConfig& config, std::uint64_t n_samples,
                                    std::uint64_t seed, int n_chunks) {
    validate(config);
    check_mc_args(n_samples, n_chunks);
    const auto sizes = chunk_sizes(n_samples, n_chunks);
    std::vector<ChunkAccum> accums(sizes.size());
    for (int i = 0; i < n_chunks; ++i)
        run_chunk(config, sizes[i], chunk_rng(seed, static_cast<std::uint64_t>(i)),
                  accums[i]);
    return reduce_chunks(accums);
}

std::vector<std::pair<double, double>> gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("node count must be >= 1");
    std::vector<std::pair<double, double>> nodes(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton from the Chebyshev-like initial guess.
        double x = std::cos(constants::pi * (i + 0.75) / (n + 0.5));
        double deriv = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            deriv = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / deriv;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * deriv * deriv);
        nodes[static_cast<std::size_t>(i)] = {-x, w};
        nodes[static_cast<std::size_t>(n - 1 - i)] = {x, w};
    }
    return nodes;
}

EquivalenceResult mixture_vs_dephasing(const TrajectoryConfig& config, int n_directions) {
    validate(config);
    const auto nodes = gauss_legendre(n_directions);
    const double tau_gate = gate_duration(config);
    constexpr int kTimeSteps = 128;

    // Per-node partial sums, reduced in node order afterwards.
    std::vector<complex<double>> coherence(nodes.size());
    std::vector<double> cos_sq(nodes.size());
#pragma omp parallel for schedule(static)
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
        const auto [u, w] = nodes[static_cast<std::size_t>(i)];
        complex<double> coh{0.0};
        double csq = 0.0;
        for (int sign = -1; sign <= 1; sign += 2) {
            for (int j = 0; j < kTimeSteps; ++j) {
                const double t = (j + 0.5) * tau_gate / kTimeSteps;
                const complex<double> beta =
                    recoil_beta(config.eta, u, sign, t, config.trap_freq);
                const double dphi = phase_error(beta, t, config);
                coh += std::exp(kI * (2.0 * dphi));
                csq += std::cos(dphi) * std::cos(dphi);
            }
        }
        const double node_weight = w / (2.0 * 2.0 * kTimeSteps);  // GL sum = 2
        coherence[static_cast<std::size_t>(i)] = node_weight * coh;
        cos_sq[static_cast<std::size_t>(i)] = node_weight * csq;
    }

    complex<double> coh_total{0.0};
    double csq_total = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        coh_total += coherence[i];
        csq_total += cos_sq[i];
    }
    // Mixture path: density-operator coherence after tracing the photon out;
    // fidelity against the ideal output is 1/2 + Re<e^{i 2 dphi}>/2.
    return EquivalenceResult{0.5 + 0.5 * std::real(coh_total), csq_total};
}

}  // namespace ionscatter
