#pragma once

#include <cstdint>
#include <random>

namespace ionscatter {

/// splitmix64 step; used to decorrelate (seed, chunk) pairs before they
/// seed the per-chunk engines.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Deterministic uniform-variate source. The double helpers bypass
/// std::uniform_real_distribution so the stream is pinned by this header
/// alone, independent of standard-library internals.
class SampleRng {
  public:
    explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on the open interval (0, 1); never returns an endpoint.
    double open01() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53; }

    /// Uniform on [-1, 1).
    double symmetric() { return 2.0 * (static_cast<double>(engine_() >> 11) * 0x1p-53) - 1.0; }

    /// Uniformly +1 or -1.
    int sign() { return (engine_() & 1ull) ? +1 : -1; }

  private:
    std::mt19937_64 engine_;
};

/// Independent stream for one (seed, chunk) pair. Streams are reproducible
/// for a fixed pair regardless of how chunks are scheduled across workers.
inline SampleRng chunk_rng(std::uint64_t seed, std::uint64_t chunk) {
    std::uint64_t state = seed;
    (void)splitmix64(state);
    state ^= 0xD1B54A32D192ED03ull * (chunk + 1);
    std::uint64_t mixed = splitmix64(state);
    (void)splitmix64(state);
    return SampleRng(mixed ^ splitmix64(state));
}

}  // namespace ionscatter
