#include "ionscatter/species.hpp"

namespace ionscatter {

// Shipped constants for the nine hyperfine-qubit candidate species.
// gamma_hz, omega0_hz, fs_split_hz are ordinary frequencies (gamma/2pi etc.);
// masses are precise isotope masses in amu. Identical to data/species.csv.
namespace {
constexpr const char* kDefaultCsv =
    "name,mass_amu,nuclear_spin,gamma_hz,omega0_hz,fs_split_hz,"
    "lambda_half_m,lambda_3half_m,branching_f_inverse\n"
    "9Be+,9.012182,3/2,19.6e6,1.25e9,0.198e12,313.1e-9,313.0e-9,\n"
    "25Mg+,24.985837,5/2,41.3e6,1.79e9,2.75e12,280.3e-9,279.6e-9,\n"
    "43Ca+,42.958766,7/2,22.5e6,3.23e9,6.68e12,396.8e-9,393.4e-9,17\n"
    "67Zn+,66.927128,5/2,62.2e6,7.2e9,27.8e12,206.2e-9,202.5e-9,\n"
    "87Sr+,86.908877,9/2,21.5e6,5.00e9,24.0e12,421.6e-9,407.8e-9,14\n"
    "111Cd+,110.904183,1/2,50.5e6,14.53e9,74.4e12,226.5e-9,214.4e-9,\n"
    "137Ba+,136.905827,3/2,20.1e6,8.04e9,50.7e12,493.4e-9,455.4e-9,3\n"
    "171Yb+,170.936330,1/2,19.7e6,12.64e9,99.8e12,369.4e-9,328.9e-9,290\n"
    "199Hg+,198.968281,1/2,54.7e6,40.51e9,273.4e12,194.2e-9,165.0e-9,700\n";
}  // namespace

std::string_view default_registry_csv() { return kDefaultCsv; }

}  // namespace ionscatter
