#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace empo::text {

// Shortest decimal form that round-trips to the same double.
std::string shortest(double value);

// printf-style "%.<digits>g".
std::string significant(double value, int digits);

// printf-style "%.<decimals>f".
std::string fixed(double value, int decimals);

std::string lower(std::string_view s);
std::string_view trim(std::string_view s);

// Strict whole-string numeric parses; throw std::invalid_argument naming `what`.
double parse_double(std::string_view s, std::string_view what);
std::int64_t parse_int(std::string_view s, std::string_view what);

}  // namespace empo::text
