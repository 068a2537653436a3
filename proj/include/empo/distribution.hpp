#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace empo {

struct Binomial {
    std::int64_t m;
    double p;
    bool operator==(const Binomial&) const = default;
};

struct Poisson {
    double lambda;
    bool operator==(const Poisson&) const = default;
};

// Support {1, ..., k}.
struct DiscreteUniform {
    std::int64_t k;
    bool operator==(const DiscreteUniform&) const = default;
};

// Support [0, theta).
struct ContinuousUniform {
    double theta;
    bool operator==(const ContinuousUniform&) const = default;
};

// theta is a rate: mean = 1/theta.
struct Exponential {
    double theta;
    bool operator==(const Exponential&) const = default;
};

struct StdNormal {
    double mean;
    double sd;
    bool operator==(const StdNormal&) const = default;
};

enum class KeyDomain { integer, real };

// One of the six input models. Construction goes through the factory
// functions below, which validate parameters.
class DistributionSpec {
public:
    using Params = std::variant<Binomial, Poisson, DiscreteUniform, ContinuousUniform,
                                Exponential, StdNormal>;

    static DistributionSpec binomial(std::int64_t m, double p);
    static DistributionSpec poisson(double lambda);
    static DistributionSpec discrete_uniform(std::int64_t k);
    static DistributionSpec continuous_uniform(double theta);
    static DistributionSpec exponential(double theta);
    static DistributionSpec std_normal(double mean, double sd);

    // Parses the canonical text form, e.g. "binomial:m=100,p=0.5".
    // Names and keys are case-insensitive; unknown or missing keys throw
    // std::invalid_argument.
    static DistributionSpec parse(std::string_view text);

    const Params& params() const noexcept { return params_; }
    KeyDomain key_domain() const noexcept;

    // Canonical text form; parse(to_string()) == *this.
    std::string to_string() const;

    // Short human label, e.g. "Poisson".
    std::string label() const;

    bool operator==(const DistributionSpec&) const = default;

private:
    explicit DistributionSpec(Params p) : params_(p) {}
    Params params_;
};

// The six input models of the reference experiment, in table column order.
std::vector<DistributionSpec> reference_distributions();

}  // namespace empo
