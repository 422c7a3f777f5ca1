#include "ionscatter/species.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ionscatter/constants.hpp"

namespace ionscatter {

namespace {

const char* const kColumnNames[9] = {
    "name",          "mass_amu",        "nuclear_spin",
    "gamma_hz",      "omega0_hz",       "fs_split_hz",
    "lambda_half_m", "lambda_3half_m",  "branching_f_inverse",
};

[[noreturn]] void fail(std::size_t row, const char* column, const std::string& what) {
    std::ostringstream msg;
    msg << "species csv row " << row << ", column " << column << ": " << what;
    throw std::runtime_error(msg.str());
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& text, std::size_t row, const char* column) {
    if (text.empty()) fail(row, column, "empty field");
    const char* begin = text.c_str();
    char* end = nullptr;
    double value = std::strtod(begin, &end);
    if (end != begin + text.size() || !std::isfinite(value))
        fail(row, column, "not a finite number: '" + text + "'");
    return value;
}

// "p/2" fraction or a plain integer.
double parse_spin(const std::string& text, std::size_t row) {
    const char* column = "nuclear_spin";
    auto slash = text.find('/');
    double value = 0.0;
    if (slash != std::string::npos) {
        if (text.substr(slash + 1) != "2") fail(row, column, "denominator must be 2");
        value = parse_double(text.substr(0, slash), row, column) / 2.0;
    } else {
        value = parse_double(text, row, column);
    }
    double doubled = 2.0 * value;
    if (doubled != std::floor(doubled))
        fail(row, column, "must be an integer multiple of 1/2");
    return value;
}

void require_positive(double value, std::size_t row, const char* column) {
    if (!(value > 0.0)) fail(row, column, "must be strictly positive");
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::string round_trip(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

}  // namespace

double omega_3half(const IonSpecies& species) {
    return constants::two_pi * constants::c / species.lambda_3half;
}

void SpeciesRegistry::add(IonSpecies species) {
    if (species.name.empty()) throw std::runtime_error("species with empty name");
    if (index_.count(species.name))
        throw std::runtime_error("duplicate species name '" + species.name + "'");
    index_.emplace(species.name, species_.size());
    species_.push_back(std::move(species));
}

const IonSpecies& SpeciesRegistry::at(std::string_view name) const {
    if (const IonSpecies* s = find(name)) return *s;
    throw std::runtime_error("unknown species '" + std::string(name) + "'");
}

const IonSpecies* SpeciesRegistry::find(std::string_view name) const noexcept {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? nullptr : &species_[it->second];
}

SpeciesRegistry load_registry(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("species csv: empty stream, header expected");
    if (strip_cr(line) != kRegistryHeader)
        throw std::runtime_error("species csv: bad header, expected '" +
                                 std::string(kRegistryHeader) + "'");

    SpeciesRegistry registry;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        line = strip_cr(line);
        if (line.empty()) continue;
        auto fields = split_fields(line);
        if (fields.size() != 9) {
            std::ostringstream msg;
            msg << "species csv row " << row << ": expected 9 columns, got " << fields.size();
            throw std::runtime_error(msg.str());
        }

        IonSpecies s;
        s.name = fields[0];
        if (s.name.empty()) fail(row, kColumnNames[0], "empty field");
        s.mass = parse_double(fields[1], row, kColumnNames[1]) * constants::amu;
        s.nuclear_spin = parse_spin(fields[2], row);
        s.gamma = constants::two_pi * parse_double(fields[3], row, kColumnNames[3]);
        s.omega0 = constants::two_pi * parse_double(fields[4], row, kColumnNames[4]);
        s.omega_f = constants::two_pi * parse_double(fields[5], row, kColumnNames[5]);
        s.lambda_half = parse_double(fields[6], row, kColumnNames[6]);
        s.lambda_3half = parse_double(fields[7], row, kColumnNames[7]);
        if (!fields[8].empty() && fields[8] != "N.A.") {
            double f_inverse = parse_double(fields[8], row, kColumnNames[8]);
            if (!(f_inverse > 1.0))
                fail(row, kColumnNames[8], "branching fraction must be in (0, 1)");
            s.branching_f = 1.0 / f_inverse;
        }

        require_positive(s.mass, row, kColumnNames[1]);
        require_positive(s.nuclear_spin, row, kColumnNames[2]);
        require_positive(s.gamma, row, kColumnNames[3]);
        require_positive(s.omega0, row, kColumnNames[4]);
        require_positive(s.omega_f, row, kColumnNames[5]);
        require_positive(s.lambda_half, row, kColumnNames[6]);
        require_positive(s.lambda_3half, row, kColumnNames[7]);
        if (!(s.lambda_3half < s.lambda_half))
            fail(row, kColumnNames[7], "lambda_3half must be below lambda_half");

        try {
            registry.add(std::move(s));
        } catch (const std::runtime_error& e) {
            std::ostringstream msg;
            msg << "species csv row " << row << ": " << e.what();
            throw std::runtime_error(msg.str());
        }
    }
    return registry;
}

void save_registry(std::ostream& out, const SpeciesRegistry& registry) {
    out << kRegistryHeader << '\n';
    for (const IonSpecies& s : registry.all()) {
        out << s.name << ',' << round_trip(s.mass / constants::amu) << ',';
        double doubled = 2.0 * s.nuclear_spin;
        if (std::fmod(doubled, 2.0) == 0.0)
            out << round_trip(s.nuclear_spin);
        else
            out << round_trip(doubled) << "/2";
        out << ',' << round_trip(s.gamma / constants::two_pi)
            << ',' << round_trip(s.omega0 / constants::two_pi)
            << ',' << round_trip(s.omega_f / constants::two_pi)
            << ',' << round_trip(s.lambda_half)
            << ',' << round_trip(s.lambda_3half) << ',';
        if (s.branching_f) out << round_trip(1.0 / *s.branching_f);
        out << '\n';
    }
}

const SpeciesRegistry& default_registry() {
    static const SpeciesRegistry registry = [] {
        std::istringstream in{std::string(default_registry_csv())};
        return load_registry(in);
    }();
    return registry;
}

}  // namespace ionscatter
