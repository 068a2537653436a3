#include "empo/samplers.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "empo/detail/overloaded.hpp"

namespace empo {

std::size_t Sample::size() const noexcept {
    return std::visit([](const auto& v) { return v.size(); }, keys);
}

IntKeys sample_binomial(std::int64_t m, double p, std::size_t n, Rng& rng) {
    IntKeys out(n);
    for (auto& key : out) {
        std::int64_t s = 0;
        for (std::int64_t j = 0; j < m; ++j)
            if (rng.next_unit() < p)
                ++s;
        key = s;
    }
    return out;
}

IntKeys sample_poisson(double lambda, std::size_t n, Rng& rng) {
    const double threshold = std::exp(-lambda);
    IntKeys out(n);
    for (auto& key : out) {
        double product = 1.0;
        std::int64_t draws = 1;
        for (;; ++draws) {
            if (draws > kPoissonDrawCap)
                throw std::runtime_error("poisson sampler exceeded " +
                                         std::to_string(kPoissonDrawCap) +
                                         " draws for one key (lambda too large)");
            product *= rng.next_unit();
            if (product < threshold)
                break;
        }
        key = draws - 1;
    }
    return out;
}

IntKeys sample_discrete_uniform(std::int64_t k, std::size_t n, Rng& rng) {
    const double scale = static_cast<double>(k);
    IntKeys out(n);
    for (auto& key : out) {
        auto v = static_cast<std::int64_t>(scale * rng.next_unit()) + 1;
        key = v > k ? k : v;  // scale*u can round up to k for huge k
    }
    return out;
}

RealKeys sample_continuous_uniform(double theta, std::size_t n, Rng& rng) {
    const double below = std::nextafter(theta, 0.0);
    RealKeys out(n);
    for (auto& key : out) {
        double v = rng.next_unit() * theta;
        key = v < theta ? v : below;
    }
    return out;
}

RealKeys sample_exponential(double theta, std::size_t n, Rng& rng) {
    RealKeys out(n);
    for (auto& key : out)
        key = -std::log(rng.next_unit_nonzero()) / theta;
    return out;
}

RealKeys sample_std_normal(double mean, double sd, std::size_t n, Rng& rng) {
    const std::size_t pairs = (n + 1) / 2;
    RealKeys out(2 * pairs);
    for (std::size_t i = 0; i < pairs; ++i) {
        double u1 = rng.next_unit();
        double u2 = rng.next_unit();
        while (u1 == 0.0) {
            u1 = rng.next_unit();
            u2 = rng.next_unit();
        }
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        out[i] = mean + sd * (radius * std::cos(angle));
        out[pairs + i] = mean + sd * (radius * std::sin(angle));
    }
    out.resize(n);
    return out;
}

Sample generate(const DistributionSpec& spec, std::size_t n, Rng& rng) {
    using detail::overloaded;
    auto keys = std::visit(
        overloaded{
            [&](const Binomial& d) -> std::variant<IntKeys, RealKeys> {
                return sample_binomial(d.m, d.p, n, rng);
            },
            [&](const Poisson& d) -> std::variant<IntKeys, RealKeys> {
                return sample_poisson(d.lambda, n, rng);
            },
            [&](const DiscreteUniform& d) -> std::variant<IntKeys, RealKeys> {
                return sample_discrete_uniform(d.k, n, rng);
            },
            [&](const ContinuousUniform& d) -> std::variant<IntKeys, RealKeys> {
                return sample_continuous_uniform(d.theta, n, rng);
            },
            [&](const Exponential& d) -> std::variant<IntKeys, RealKeys> {
                return sample_exponential(d.theta, n, rng);
            },
            [&](const StdNormal& d) -> std::variant<IntKeys, RealKeys> {
                return sample_std_normal(d.mean, d.sd, n, rng);
            },
        },
        spec.params());
    return Sample{spec, std::move(keys)};
}

}  // namespace empo
