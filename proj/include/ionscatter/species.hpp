#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ionscatter {

/// Atomic constants for one ion species. All frequencies are stored as
/// angular frequencies (rad/s); the CSV interchange format holds ordinary
/// frequencies in Hz and is converted on load/save.
struct IonSpecies {
    std::string name;                    // e.g. "9Be+"
    double mass = 0.0;                   // kg
    double nuclear_spin = 0.0;           // half-integer I
    double gamma = 0.0;                  // rad/s, natural linewidth of the P levels
    double omega0 = 0.0;                 // rad/s, qubit hyperfine splitting
    double omega_f = 0.0;                // rad/s, fine-structure splitting
    double lambda_half = 0.0;            // m, S1/2 -> P1/2 wavelength
    double lambda_3half = 0.0;           // m, S1/2 -> P3/2 wavelength
    std::optional<double> branching_f;   // P -> D branching fraction, absent if no D levels
};

/// Angular frequency of the S1/2 -> P3/2 transition, 2*pi*c / lambda_3half.
double omega_3half(const IonSpecies& species);

/// Immutable after load; safe for concurrent reads.
class SpeciesRegistry {
  public:
    /// Validates invariants and rejects duplicate names.
    void add(IonSpecies species);

    const IonSpecies& at(std::string_view name) const;           // throws if absent
    const IonSpecies* find(std::string_view name) const noexcept;
    std::span<const IonSpecies> all() const noexcept { return species_; }
    std::size_t size() const noexcept { return species_.size(); }
    bool empty() const noexcept { return species_.empty(); }

  private:
    std::vector<IonSpecies> species_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Exact required header of the species CSV format.
inline constexpr std::string_view kRegistryHeader =
    "name,mass_amu,nuclear_spin,gamma_hz,omega0_hz,fs_split_hz,"
    "lambda_half_m,lambda_3half_m,branching_f_inverse";

/// Parses the species CSV format. Row order is preserved. Errors name the
/// offending row and column. A header-only stream yields an empty registry.
SpeciesRegistry load_registry(std::istream& in);

/// Writes the registry back in the same CSV format with round-trip precision.
void save_registry(std::ostream& out, const SpeciesRegistry& registry);

/// Registry built from the CSV text shipped with the library (nine species).
const SpeciesRegistry& default_registry();

/// The shipped CSV text itself (identical to data/species.csv).
std::string_view default_registry_csv();

}  // namespace ionscatter
