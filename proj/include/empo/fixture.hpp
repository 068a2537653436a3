#pragma once

#include <array>
#include <string>
#include <vector>

#include "empo/experiment.hpp"

namespace empo {

// Published reference measurements: mean sorting seconds over 10 trials for
// n = 5000..50000 and the six reference distributions, with the matching
// standard deviations in each row's sd. metric=time.
MeasurementTable load_fixture_table1();

// The published n*log10(n) column, as printed (2 decimals), one per grid row.
std::array<double, 10> fixture_nlogn_column();

// Consistency checks on the embedded data: printed n*log10(n) matches the
// computed value to 2 decimals and the table survives a CSV write/read
// unchanged. Returns one message per failed check.
std::vector<std::string> check_fixture_integrity();

}  // namespace empo
