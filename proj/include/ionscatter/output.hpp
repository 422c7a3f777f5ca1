#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ionscatter {

/// Formats with 6 significant digits; throws on non-finite values.
std::string format_number(double value);

/// One computed row: ordered key -> value map.
class OutputRecord {
  public:
    void set(std::string key, std::string value);
    void set(std::string key, double value);  // via format_number

    std::span<const std::pair<std::string, std::string>> fields() const noexcept {
        return fields_;
    }

  private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

/// Aligned human-readable columns. All records must share one key sequence.
void write_table(std::ostream& out, std::span<const OutputRecord> records);

/// RFC-4180-style CSV (quoting as needed) with a header row, "\n" line ends.
void write_csv(std::ostream& out, std::span<const OutputRecord> records);

}  // namespace ionscatter
