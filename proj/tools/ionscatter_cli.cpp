// Command-line front end: species constants, single- and two-qubit
// scattering error budgets, detuning sweeps, and the Monte Carlo recoil
// simulator. Data goes to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 1 usage error, 2 I/O or data error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ionscatter/budget_single.hpp"
#include "ionscatter/budget_two.hpp"
#include "ionscatter/constants.hpp"
#include "ionscatter/output.hpp"
#include "ionscatter/recoil_mc.hpp"
#include "ionscatter/scattering.hpp"
#include "ionscatter/species.hpp"

namespace {

using namespace ionscatter;
namespace cn = ionscatter::constants;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --registry beats IONSCATTER_REGISTRY beats the built-in table.
SpeciesRegistry load_registry_from(const std::string& path_flag) {
    std::string path = path_flag;
    if (path.empty()) {
        if (const char* env = std::getenv("IONSCATTER_REGISTRY")) path = env;
    }
    if (path.empty()) return default_registry();
    std::ifstream in(path);
    if (!in) throw DataError("cannot open species registry '" + path + "'");
    try {
        return load_registry(in);
    } catch (const std::exception& e) {
        throw DataError(std::string(e.what()) + " (registry '" + path + "')");
    }
}

std::vector<const IonSpecies*> select_species(const SpeciesRegistry& registry,
                                              const std::string& name) {
    std::vector<const IonSpecies*> out;
    if (name == "all") {
        for (const IonSpecies& s : registry.all()) out.push_back(&s);
    } else {
        const IonSpecies* s = registry.find(name);
        if (!s) throw DataError("unknown species '" + name + "'");
        out.push_back(s);
    }
    return out;
}

void emit(const std::vector<OutputRecord>& records, const std::string& format) {
    if (format == "csv")
        write_csv(std::cout, records);
    else
        write_table(std::cout, records);
}

double red_outside_root(const std::vector<DetuningSolution>& roots) {
    for (const DetuningSolution& r : roots)
        if (r.branch == DetuningBranch::RedOutside) return r.detuning;
    throw DataError("no red-outside detuning root");  // unreachable
}

void add_branch_columns(OutputRecord& rec, const std::vector<DetuningSolution>& roots,
                        double to_unit) {
    const DetuningBranch order[] = {DetuningBranch::RedOutside, DetuningBranch::RedInside,
                                    DetuningBranch::BlueInside,
                                    DetuningBranch::BlueOutside};
    for (DetuningBranch b : order) {
        std::string value = "N.A.";
        for (const DetuningSolution& r : roots)
            if (r.branch == b) value = format_number(r.detuning / to_unit);
        rec.set(std::string("Delta_") + to_string(b), value);
    }
}

// ---------------------------------------------------------------- species

int cmd_species(const std::string& registry_path, const std::string& name,
                const std::string& format) {
    SpeciesRegistry registry = load_registry_from(registry_path);
    std::vector<OutputRecord> records;
    for (const IonSpecies* s : select_species(registry, name)) {
        OutputRecord r;
        r.set("ion", s->name);
        r.set("mass_amu", s->mass / cn::amu);
        double doubled = 2.0 * s->nuclear_spin;
        r.set("I", std::fmod(doubled, 2.0) == 0.0
                       ? format_number(s->nuclear_spin)
                       : format_number(doubled) + "/2");
        r.set("gamma/2pi_MHz", s->gamma / cn::two_pi / 1e6);
        r.set("omega0/2pi_GHz", s->omega0 / cn::two_pi / 1e9);
        r.set("omega_f/2pi_THz", s->omega_f / cn::two_pi / 1e12);
        r.set("lambda_half_nm", s->lambda_half * 1e9);
        r.set("lambda_3half_nm", s->lambda_3half * 1e9);
        r.set("f_inverse", s->branching_f ? format_number(1.0 / *s->branching_f)
                                          : std::string("N.A."));
        records.push_back(std::move(r));
    }
    emit(records, format);
    return kExitOk;
}

// ----------------------------------------------------------------- single

struct SingleArgs {
    std::string registry, species = "all", format = "table";
    double power_mw = 10.0, waist_um = 20.0, rabi_mhz = 0.25, error = 1e-4;
    double detuning_ghz = 0.0;
    bool power_given = false, error_given = false, detuning_given = false;
    bool all_branches = false;
};

int cmd_single(const SingleArgs& a) {
    if (a.power_given && a.error_given)
        throw UsageError("give exactly one of --power-mw and --error");
    if (!(a.rabi_mhz > 0.0)) throw UsageError("--rabi-mhz must be positive");
    if (!(a.waist_um > 0.0)) throw UsageError("--waist-um must be positive");
    if (!(a.error > 0.0) || !(a.error < 1.0))
        throw UsageError("--error must be in (0, 1)");
    if (a.power_given && !(a.power_mw > 0.0))
        throw UsageError("--power-mw must be positive");

    const bool with_eps_s = !a.error_given;  // power known (given or default)
    const double rabi = cn::two_pi * a.rabi_mhz * 1e6;
    const double waist = a.waist_um * 1e-6;
    const double power = a.power_mw * 1e-3;

    SpeciesRegistry registry = load_registry_from(a.registry);
    std::vector<OutputRecord> records;
    for (const IonSpecies* s : select_species(registry, a.species)) {
        OutputRecord r;
        r.set("ion", s->name);
        if (with_eps_s)
            r.set("eps_S/1e-4",
                  epsilon_s_single(*s, {rabi, {power, waist, {}}}) / 1e-4);
        r.set("P0_mW", power_for_error_single(*s, rabi, waist, a.error) * 1e3);
        auto roots = detunings_for_raman_error(*s, a.error);
        const double delta0 = red_outside_root(roots);
        r.set("Delta0/2pi_GHz", delta0 / cn::two_pi / 1e9);
        if (a.all_branches) add_branch_columns(r, roots, cn::two_pi * 1e9);
        const double d_eval = a.detuning_given ? cn::two_pi * a.detuning_ghz * 1e9 : delta0;
        try {
            r.set("eps_D/eps_S", epsilon_ratio_d_over_s(*s, d_eval));
            r.set("eps_Dinf/1e-4", epsilon_d_asymptotic_single(*s) / 1e-4);
        } catch (const NoDLevelError&) {
            r.set("eps_D/eps_S", "N.A.");
            r.set("eps_Dinf/1e-4", "N.A.");
        }
        records.push_back(std::move(r));
    }
    emit(records, a.format);
    return kExitOk;
}

// -------------------------------------------------------------------- two

struct TwoArgs {
    std::string registry, species = "all", format = "table";
    double power_mw = 10.0, waist_um = 20.0, gate_time_us = 10.0, trap_mhz = 5.0;
    double error = 1e-4, eta = 0.0;
    int circles = 1;
    bool eta_given = false;
};

int cmd_two(const TwoArgs& a) {
    if (!(a.power_mw > 0.0) || !(a.waist_um > 0.0) || !(a.gate_time_us > 0.0) ||
        !(a.trap_mhz > 0.0))
        throw UsageError("gate parameters must be positive");
    if (a.circles < 1) throw UsageError("--circles must be >= 1");
    if (a.eta_given && (!(a.eta > 0.0) || !(a.eta < 1.0)))
        throw UsageError("--eta must be in (0, 1)");
    if (!(a.error > 0.0) || !(a.error < 1.0))
        throw UsageError("--error must be in (0, 1)");

    const double power = a.power_mw * 1e-3;
    const double waist = a.waist_um * 1e-6;
    const double gate_time = a.gate_time_us * 1e-6;
    const double trap = cn::two_pi * a.trap_mhz * 1e6;
    const int K = a.circles;

    SpeciesRegistry registry = load_registry_from(a.registry);
    std::vector<OutputRecord> records;
    for (const IonSpecies* s : select_species(registry, a.species)) {
        const double eta = a.eta_given ? a.eta : lamb_dicke(*s, trap).eta;
        if (eta > 0.3)
            std::cerr << "warning: " << s->name << " eta = " << format_number(eta)
                      << " strains the Lamb-Dicke assumption\n";
        OutputRecord r;
        r.set("ion", s->name);
        r.set("eta", eta);
        r.set("eps_S/1e-4",
              epsilon_s_gate_from_eta(*s, gate_time, waist, power, K, eta) / 1e-4);
        // power for the target error at the same operating point
        const double p0 =
            epsilon_s_gate_from_eta(*s, gate_time, waist, power, K, eta) / a.error * power;
        r.set("P0_mW", p0 * 1e3);
        auto roots = detunings_for_raman_error_gate(*s, eta, K, a.error);
        const double delta0 = red_outside_root(roots);
        r.set("Delta0/2pi_THz", delta0 / cn::two_pi / 1e12);
        try {
            r.set("eps_D/eps_S", epsilon_ratio_d_over_s(*s, delta0));
            r.set("eps_Dinf/1e-4", epsilon_d_asymptotic_gate(*s, eta, K) / 1e-4);
        } catch (const NoDLevelError&) {
            r.set("eps_D/eps_S", "N.A.");
            r.set("eps_Dinf/1e-4", "N.A.");
        }
        r.set("eps_R/eps_S", epsilon_r(*s, delta0, eta, K) / a.error);
        r.set("eps_Rinf/1e-4", epsilon_r_asymptotic_from_eta(*s, eta, K) / 1e-4);
        if (std::abs(delta0) < 10.0 * s->omega0)
            std::cerr << "warning: " << s->name
                      << " detuning not large against the qubit splitting;"
                      << " eps_delta estimate unreliable\n";
        r.set("eps_delta", epsilon_delta_gate(*s, delta0, eta, K));
        records.push_back(std::move(r));
    }
    emit(records, a.format);
    return kExitOk;
}

// ------------------------------------------------------------------ sweep

struct SweepArgs {
    std::string registry, species, quantity;
    std::string detuning_range, error_range;
    double waist_um = 20.0, rabi_mhz = 0.25, gate_time_us = 10.0, trap_mhz = 5.0;
    int circles = 1, points = 100;
};

std::pair<double, double> parse_range(const std::string& text, const char* flag) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError(std::string(flag) + " must be 'low:high'");
    char* end = nullptr;
    const std::string lo_s = text.substr(0, colon), hi_s = text.substr(colon + 1);
    const double lo = std::strtod(lo_s.c_str(), &end);
    if (lo_s.empty() || end != lo_s.c_str() + lo_s.size())
        throw UsageError(std::string(flag) + ": bad number '" + lo_s + "'");
    const double hi = std::strtod(hi_s.c_str(), &end);
    if (hi_s.empty() || end != hi_s.c_str() + hi_s.size())
        throw UsageError(std::string(flag) + ": bad number '" + hi_s + "'");
    if (!(lo < hi)) throw UsageError(std::string(flag) + ": empty range");
    return {lo, hi};
}

int cmd_sweep(const SweepArgs& a) {
    if (a.points < 1) throw UsageError("--points must be >= 1");
    SpeciesRegistry registry = load_registry_from(a.registry);
    if (a.species == "all") throw UsageError("sweep needs a single species");
    const IonSpecies& s = *select_species(registry, a.species).front();

    std::vector<OutputRecord> records;
    const bool probability_mode =
        a.quantity == "total" || a.quantity == "raman" || a.quantity == "rayleigh";
    if (probability_mode) {
        if (a.detuning_range.empty())
            throw UsageError("--detuning-range required for probability sweeps");
        auto [lo, hi] = parse_range(a.detuning_range, "--detuning-range");
        int dropped = 0;
        for (int i = 0; i < a.points; ++i) {
            const double x = a.points == 1 ? lo : lo + (hi - lo) * i / (a.points - 1);
            const double detuning = x * s.omega_f;
            try {
                double p = 0.0;
                if (a.quantity == "total") p = prob_total_pi(s, detuning);
                else if (a.quantity == "raman") p = prob_raman_pi(s, detuning);
                else p = prob_rayleigh_pi(s, detuning);
                OutputRecord r;
                r.set("delta_over_omega_f", x);
                r.set("probability_gamma_over_omega_f", p / (s.gamma / s.omega_f));
                records.push_back(std::move(r));
            } catch (const std::invalid_argument&) {
                ++dropped;  // pole guard
            }
        }
        if (dropped > 0)
            std::cerr << "note: dropped " << dropped << " points near poles\n";
    } else if (a.quantity == "power-single" || a.quantity == "power-two") {
        if (a.error_range.empty())
            throw UsageError("--error-range required for power sweeps");
        auto [lo, hi] = parse_range(a.error_range, "--error-range");
        if (!(lo > 0.0)) throw UsageError("--error-range must be positive");
        const double waist = a.waist_um * 1e-6;
        for (int i = 0; i < a.points; ++i) {
            const double frac = a.points == 1 ? 0.0 : static_cast<double>(i) / (a.points - 1);
            const double error = lo * std::pow(hi / lo, frac);  // log spacing
            double power = 0.0;
            if (a.quantity == "power-single") {
                power = power_for_error_single(s, cn::two_pi * a.rabi_mhz * 1e6, waist,
                                               error);
            } else {
                power = power_for_error_gate(s, a.gate_time_us * 1e-6, waist, a.circles,
                                             cn::two_pi * a.trap_mhz * 1e6, error);
            }
            OutputRecord r;
            r.set("error", error);
            r.set("power_mW", power * 1e3);
            records.push_back(std::move(r));
        }
    } else {
        throw UsageError("unknown --quantity '" + a.quantity + "'");
    }
    write_csv(std::cout, records);
    return kExitOk;
}

// --------------------------------------------------------------------- mc

struct McArgs {
    std::string registry, species, format = "table";
    double eta = 0.0, trap_mhz = 5.0, delta_khz = 50.0, phi_l = 0.0;
    std::uint64_t samples = 1000000, seed = 12345;
    int circles = 1, chunks = 64, directions = 1000;
    bool eta_given = false;
};

int cmd_mc(const McArgs& a) {
    if (a.species.empty() == !a.eta_given)
        throw UsageError("give exactly one of --species and --eta");
    if (a.samples < 1000) throw UsageError("--samples must be >= 1000");
    if (a.chunks < 1) throw UsageError("--chunks must be >= 1");
    if (a.circles < 1) throw UsageError("--circles must be >= 1");
    if (!(a.trap_mhz > 0.0) || !(a.delta_khz > 0.0))
        throw UsageError("--trap-mhz and --delta-khz must be positive");

    const double trap = cn::two_pi * a.trap_mhz * 1e6;
    double eta = a.eta;
    if (!a.eta_given) {
        SpeciesRegistry registry = load_registry_from(a.registry);
        eta = lamb_dicke(registry.at(a.species), trap).eta;
    }
    TrajectoryConfig config{a.circles, cn::two_pi * a.delta_khz * 1e3, trap, a.phi_l, eta};
    try {
        validate(config);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const McEstimate est = mc_rayleigh_error(config, a.samples, a.seed, a.chunks);
    const double closed_form = (5.0 / 12.0) * eta * eta / (2.0 * a.circles);
    const EquivalenceResult eq = mixture_vs_dephasing(config, a.directions);

    OutputRecord r;
    r.set("eta", eta);
    r.set("samples", static_cast<double>(a.samples));
    r.set("chunks", static_cast<double>(a.chunks));
    r.set("seed", static_cast<double>(a.seed));
    r.set("error_per_scatter", est.error_per_scatter);
    r.set("std_error", est.std_error);
    r.set("mean_beta_sq", est.mean_beta_sq);
    r.set("closed_form", closed_form);
    r.set("mc_over_closed_form", est.error_per_scatter / closed_form);
    r.set("fidelity_mixture", eq.fidelity_mixture);
    r.set("fidelity_dephasing", eq.fidelity_dephasing);
    std::vector<OutputRecord> records{std::move(r)};
    emit(records, a.format);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spontaneous-scattering error budgets for trapped-ion hyperfine "
                 "qubit gates"};
    app.require_subcommand(1);

    std::string registry;
    app.add_option("--registry", registry,
                   "species registry CSV (default: $IONSCATTER_REGISTRY or built-in)");

    auto* sp = app.add_subcommand("species", "list species constants");
    std::string sp_name = "all", sp_format = "table";
    sp->add_option("--species", sp_name, "species name or 'all'");
    sp->add_option("--format", sp_format)->check(CLI::IsMember({"table", "csv"}));

    SingleArgs sa;
    auto* single = app.add_subcommand("single", "single-qubit pi-rotation budget");
    single->add_option("--species", sa.species);
    auto* sa_power = single->add_option("--power-mw", sa.power_mw, "power per beam");
    single->add_option("--waist-um", sa.waist_um, "beam waist");
    single->add_option("--rabi-mhz", sa.rabi_mhz, "Rabi frequency / 2pi");
    auto* sa_error = single->add_option("--error", sa.error, "target eps_S");
    auto* sa_det = single->add_option("--detuning-ghz", sa.detuning_ghz,
                                      "evaluate D-level columns here instead of Delta0");
    single->add_flag("--all-branches", sa.all_branches, "emit all detuning branches");
    single->add_option("--format", sa.format)->check(CLI::IsMember({"table", "csv"}));

    TwoArgs ta;
    auto* two = app.add_subcommand("two", "two-qubit phase-gate budget");
    two->add_option("--species", ta.species);
    two->add_option("--power-mw", ta.power_mw, "power per beam (four beams)");
    two->add_option("--waist-um", ta.waist_um);
    two->add_option("--gate-time-us", ta.gate_time_us);
    two->add_option("--trap-mhz", ta.trap_mhz, "trap frequency / 2pi");
    two->add_option("--circles", ta.circles, "phase-space circles K");
    auto* ta_eta = two->add_option("--eta", ta.eta, "override the Lamb-Dicke parameter");
    two->add_option("--error", ta.error, "target eps_S");
    two->add_option("--format", ta.format)->check(CLI::IsMember({"table", "csv"}));

    SweepArgs wa;
    auto* sweep = app.add_subcommand("sweep", "CSV sweeps for plotting");
    sweep->add_option("--species", wa.species)->required();
    sweep->add_option("--quantity", wa.quantity,
                      "total | raman | rayleigh | power-single | power-two")
        ->required();
    sweep->add_option("--detuning-range", wa.detuning_range,
                      "low:high in units of omega_f");
    sweep->add_option("--error-range", wa.error_range, "low:high, log spaced");
    sweep->add_option("--points", wa.points);
    sweep->add_option("--waist-um", wa.waist_um);
    sweep->add_option("--rabi-mhz", wa.rabi_mhz);
    sweep->add_option("--gate-time-us", wa.gate_time_us);
    sweep->add_option("--trap-mhz", wa.trap_mhz);
    sweep->add_option("--circles", wa.circles);

    McArgs ma;
    auto* mc = app.add_subcommand("mc", "Monte Carlo recoil error estimate");
    mc->add_option("--species", ma.species, "species providing eta");
    auto* ma_eta = mc->add_option("--eta", ma.eta, "inject eta directly");
    mc->add_option("--trap-mhz", ma.trap_mhz);
    mc->add_option("--delta-khz", ma.delta_khz, "sideband detuning / 2pi");
    mc->add_option("--circles", ma.circles);
    mc->add_option("--samples", ma.samples);
    mc->add_option("--seed", ma.seed);
    mc->add_option("--chunks", ma.chunks, "independent RNG chunks");
    mc->add_option("--phi-l", ma.phi_l, "gate phase Phi_L in rad");
    mc->add_option("--directions", ma.directions, "quadrature directions");
    mc->add_option("--format", ma.format)->check(CLI::IsMember({"table", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (sp->parsed()) return cmd_species(registry, sp_name, sp_format);
        if (single->parsed()) {
            sa.registry = registry;
            sa.power_given = sa_power->count() > 0;
            sa.error_given = sa_error->count() > 0;
            sa.detuning_given = sa_det->count() > 0;
            return cmd_single(sa);
        }
        if (two->parsed()) {
            ta.registry = registry;
            ta.eta_given = ta_eta->count() > 0;
            return cmd_two(ta);
        }
        if (sweep->parsed()) {
            wa.registry = registry;
            return cmd_sweep(wa);
        }
        if (mc->parsed()) {
            ma.registry = registry;
            ma.eta_given = ma_eta->count() > 0;
            return cmd_mc(ma);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
