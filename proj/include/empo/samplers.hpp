#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "empo/distribution.hpp"
#include "empo/rng.hpp"

namespace empo {

using IntKeys = std::vector<std::int64_t>;
using RealKeys = std::vector<double>;

// A generated input array. Integer keys for the discrete models, real keys
// for the continuous ones.
struct Sample {
    DistributionSpec spec;
    std::variant<IntKeys, RealKeys> keys;

    std::size_t size() const noexcept;
    KeyDomain key_domain() const noexcept {
        return std::holds_alternative<IntKeys>(keys) ? KeyDomain::integer : KeyDomain::real;
    }
};

// Upper bound on uniform draws per Poisson key before generation fails.
inline constexpr std::int64_t kPoissonDrawCap = 1'000'000;

// Each key counts the draws below p out of m unit-uniform draws.
IntKeys sample_binomial(std::int64_t m, double p, std::size_t n, Rng& rng);

// Multiplication method: multiply unit draws until the product falls below
// exp(-lambda); the key is the number of draws minus one. Throws
// std::runtime_error if a key needs more than kPoissonDrawCap draws.
IntKeys sample_poisson(double lambda, std::size_t n, Rng& rng);

// floor(k*u) + 1, support {1, ..., k}.
IntKeys sample_discrete_uniform(std::int64_t k, std::size_t n, Rng& rng);

// u*theta, support [0, theta).
RealKeys sample_continuous_uniform(double theta, std::size_t n, Rng& rng);

// -ln(u)/theta with u in (0, 1); theta is the rate.
RealKeys sample_exponential(double theta, std::size_t n, Rng& rng);

// Box-Muller pairs scaled to mean + sd*z. First variates of each pair fill
// the front half of the array and second variates the back half; for odd n
// one extra pair is drawn and the last key dropped.
RealKeys sample_std_normal(double mean, double sd, std::size_t n, Rng& rng);

// Dispatches on the spec. Parameter checks happen when the spec is built,
// so this only fails on Poisson draw-cap overflow.
Sample generate(const DistributionSpec& spec, std::size_t n, Rng& rng);

}  // namespace empo
