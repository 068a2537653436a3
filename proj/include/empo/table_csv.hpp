#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "empo/experiment.hpp"

namespace empo {

// Malformed CSV input; line() is 1-based.
class CsvError : public std::runtime_error {
public:
    CsvError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line),
          detail_(message) {}
    std::size_t line() const noexcept { return line_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

enum class NumberStyle {
    // %.6g for mean and sd.
    significant6,
    // Seconds: mean to 4 decimals, sd to 6 decimals. Comparison counts: exact
    // shortest round-trip form.
    table,
};

// Long form, header `metric,n,distribution,mean,sd,trials`, one row per cell.
// Metadata goes first as `#` comment lines. Host, clock resolution and
// timestamp are written only for metric=time, so comparison tables are
// byte-identical across hosts.
void write_measurement_csv(std::ostream& out, const MeasurementTable& table,
                           NumberStyle style = NumberStyle::significant6);

// Reads the long form back. Throws CsvError with the offending line.
MeasurementTable read_measurement_csv(std::istream& in);

enum class GridField { mean, sd };

// Wide form: header `n,<dist>,<dist>,...`, one line per n.
void write_grid_csv(std::ostream& out, const MeasurementTable& table, GridField field,
                    NumberStyle style = NumberStyle::table);

namespace csv {

// RFC 4180 field splitting and quoting.
std::vector<std::string> split_record(const std::string& line);
std::string quote(const std::string& field);

}  // namespace csv

}  // namespace empo
