#include "ionscatter/output.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ionscatter {

std::string format_number(double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("non-finite value in output");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

void OutputRecord::set(std::string key, std::string value) {
    fields_.emplace_back(std::move(key), std::move(value));
}

void OutputRecord::set(std::string key, double value) {
    set(std::move(key), format_number(value));
}

namespace {

void check_uniform_keys(std::span<const OutputRecord> records) {
    if (records.empty()) return;
    const auto& head = records.front().fields();
    for (const OutputRecord& r : records) {
        const auto& fields = r.fields();
        if (fields.size() != head.size())
            throw std::invalid_argument("output records disagree on columns");
        for (std::size_t i = 0; i < fields.size(); ++i)
            if (fields[i].first != head[i].first)
                throw std::invalid_argument("output records disagree on columns");
    }
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char ch : field) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

void write_table(std::ostream& out, std::span<const OutputRecord> records) {
    check_uniform_keys(records);
    if (records.empty()) return;
    const std::size_t ncols = records.front().fields().size();
    std::vector<std::size_t> widths(ncols);
    for (std::size_t i = 0; i < ncols; ++i)
        widths[i] = records.front().fields()[i].first.size();
    for (const OutputRecord& r : records)
        for (std::size_t i = 0; i < ncols; ++i)
            widths[i] = std::max(widths[i], r.fields()[i].second.size());

    auto pad = [&out](const std::string& text, std::size_t width, bool last) {
        out << text;
        if (!last)
            for (std::size_t i = text.size(); i < width + 2; ++i) out << ' ';
    };
    for (std::size_t i = 0; i < ncols; ++i)
        pad(records.front().fields()[i].first, widths[i], i + 1 == ncols);
    out << '\n';
    for (const OutputRecord& r : records) {
        for (std::size_t i = 0; i < ncols; ++i)
            pad(r.fields()[i].second, widths[i], i + 1 == ncols);
        out << '\n';
    }
}

void write_csv(std::ostream& out, std::span<const OutputRecord> records) {
    check_uniform_keys(records);
    if (records.empty()) return;
    const auto& head = records.front().fields();
    for (std::size_t i = 0; i < head.size(); ++i)
        out << (i ? "," : "") << csv_escape(head[i].first);
    out << '\n';
    for (const OutputRecord& r : records) {
        const auto& fields = r.fields();
        for (std::size_t i = 0; i < fields.size(); ++i)
            out << (i ? "," : "") << csv_escape(fields[i].second);
        out << '\n';
    }
}

}  // namespace ionscatter
