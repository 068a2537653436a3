#include "empo/distribution.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "empo/detail/overloaded.hpp"
#include "empo/text.hpp"

namespace empo {

namespace {

using detail::overloaded;

[[noreturn]] void reject(const std::string& message) { throw std::invalid_argument(message); }

void require_finite(double v, const char* what) {
    if (!std::isfinite(v))
        reject(std::string(what) + " must be finite");
}

using KeyValues = std::map<std::string, std::string, std::less<>>;

KeyValues split_params(std::string_view body, std::string_view name) {
    KeyValues out;
    if (text::trim(body).empty())
        return out;
    while (true) {
        auto comma = body.find(',');
        auto item = text::trim(body.substr(0, comma));
        auto eq = item.find('=');
        if (eq == std::string_view::npos)
            reject("expected key=value in '" + std::string(name) + "' parameters, got '" +
                   std::string(item) + "'");
        auto key = text::lower(text::trim(item.substr(0, eq)));
        auto value = std::string(text::trim(item.substr(eq + 1)));
        if (!out.emplace(key, value).second)
            reject("duplicate key '" + key + "' for " + std::string(name));
        if (comma == std::string_view::npos)
            break;
        body.remove_prefix(comma + 1);
    }
    return out;
}

class ParamReader {
public:
    ParamReader(std::string name, KeyValues kv) : name_(std::move(name)), kv_(std::move(kv)) {}

    double real(const char* key) { return text::parse_double(take(key), name_ + "." + key); }
    std::int64_t integer(const char* key) { return text::parse_int(take(key), name_ + "." + key); }

    void finish() const {
        if (!kv_.empty())
            reject("unknown key '" + kv_.begin()->first + "' for " + name_);
    }

private:
    std::string take(const char* key) {
        auto it = kv_.find(key);
        if (it == kv_.end())
            reject("missing key '" + std::string(key) + "' for " + name_);
        auto value = it->second;
        kv_.erase(it);
        return value;
    }

    std::string name_;
    KeyValues kv_;
};

}  // namespace

DistributionSpec DistributionSpec::binomial(std::int64_t m, double p) {
    if (m < 0)
        reject("binomial m must be >= 0");
    if (!(p >= 0.0 && p <= 1.0))
        reject("binomial p must lie in [0, 1]");
    return DistributionSpec(Binomial{m, p});
}

DistributionSpec DistributionSpec::poisson(double lambda) {
    require_finite(lambda, "poisson lambda");
    if (!(lambda > 0.0))
        reject("poisson lambda must be > 0");
    return DistributionSpec(Poisson{lambda});
}

DistributionSpec DistributionSpec::discrete_uniform(std::int64_t k) {
    if (k < 1)
        reject("duniform k must be >= 1");
    return DistributionSpec(DiscreteUniform{k});
}

DistributionSpec DistributionSpec::continuous_uniform(double theta) {
    require_finite(theta, "cuniform theta");
    if (!(theta > 0.0))
        reject("cuniform theta must be > 0");
    return DistributionSpec(ContinuousUniform{theta});
}

DistributionSpec DistributionSpec::exponential(double theta) {
    require_finite(theta, "exponential theta");
    if (!(theta > 0.0))
        reject("exponential theta must be > 0");
    return DistributionSpec(Exponential{theta});
}

DistributionSpec DistributionSpec::std_normal(double mean, double sd) {
    require_finite(mean, "normal mean");
    require_finite(sd, "normal sd");
    if (!(sd >= 0.0))
        reject("normal sd must be >= 0");
    return DistributionSpec(StdNormal{mean, sd});
}

DistributionSpec DistributionSpec::parse(std::string_view input) {
    auto trimmed = text::trim(input);
    auto colon = trimmed.find(':');
    auto name = text::lower(text::trim(trimmed.substr(0, colon)));
    std::string_view body = colon == std::string_view::npos ? std::string_view{}
                                                            : trimmed.substr(colon + 1);
    ParamReader r(name, split_params(body, name));

    auto build = [&]() -> DistributionSpec {
        if (name == "binomial") {
            auto m = r.integer("m");
            auto p = r.real("p");
            return binomial(m, p);
        }
        if (name == "poisson")
            return poisson(r.real("lambda"));
        if (name == "duniform")
            return discrete_uniform(r.integer("k"));
        if (name == "cuniform")
            return continuous_uniform(r.real("theta"));
        if (name == "exponential")
            return exponential(r.real("theta"));
        if (name == "normal") {
            auto mean = r.real("mean");
            auto sd = r.real("sd");
            return std_normal(mean, sd);
        }
        reject("unknown distribution '" + name + "' (expected binomial, poisson, duniform, "
               "cuniform, exponential or normal)");
    };
    auto spec = build();
    r.finish();
    return spec;
}

KeyDomain DistributionSpec::key_domain() const noexcept {
    return std::visit(overloaded{
                          [](const Binomial&) { return KeyDomain::integer; },
                          [](const Poisson&) { return KeyDomain::integer; },
                          [](const DiscreteUniform&) { return KeyDomain::integer; },
                          [](const auto&) { return KeyDomain::real; },
                      },
                      params_);
}

std::string DistributionSpec::to_string() const {
    using text::shortest;
    return std::visit(
        overloaded{
            [](const Binomial& d) {
                return "binomial:m=" + std::to_string(d.m) + ",p=" + shortest(d.p);
            },
            [](const Poisson& d) { return "poisson:lambda=" + shortest(d.lambda); },
            [](const DiscreteUniform& d) { return "duniform:k=" + std::to_string(d.k); },
            [](const ContinuousUniform& d) { return "cuniform:theta=" + shortest(d.theta); },
            [](const Exponential& d) { return "exponential:theta=" + shortest(d.theta); },
            [](const StdNormal& d) {
                return "normal:mean=" + shortest(d.mean) + ",sd=" + shortest(d.sd);
            },
        },
        params_);
}

std::string DistributionSpec::label() const {
    return std::visit(overloaded{
                          [](const Binomial&) { return std::string("Binomial"); },
                          [](const Poisson&) { return std::string("Poisson"); },
                          [](const DiscreteUniform&) { return std::string("Discrete Uniform"); },
                          [](const ContinuousUniform&) { return std::string("Continuous Uniform"); },
                          [](const Exponential&) { return std::string("Exponential"); },
                          [](const StdNormal&) { return std::string("Standard Normal"); },
                      },
                      params_);
}

std::vector<DistributionSpec> reference_distributions() {
    return {
        DistributionSpec::binomial(100, 0.5),
        DistributionSpec::poisson(1.0),
        DistributionSpec::discrete_uniform(50),
        DistributionSpec::continuous_uniform(1.0),
        DistributionSpec::exponential(1.0),
        DistributionSpec::std_normal(0.0, 1.0),
    };
}

}  // namespace empo
