#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "empo/distribution.hpp"

namespace empo {

enum class Metric { time, comparisons };

std::string_view to_string(Metric metric);
Metric parse_metric(std::string_view text);

// A designed experiment: every distribution is sampled `trials` times at
// every size in n_grid.
struct ExperimentPlan {
    std::vector<std::size_t> n_grid;
    int trials = 10;
    std::uint64_t seed = 0;
    Metric metric = Metric::comparisons;
    std::vector<DistributionSpec> distributions;
    // Discarded runs per cell before the recorded trials. Unset means 1 for
    // metric=time and 0 for metric=comparisons.
    std::optional<int> warmup;
    // Worker threads for metric=comparisons; 0 picks hardware concurrency.
    // metric=time always runs on the calling thread.
    unsigned threads = 0;

    // n = 5000, 10000, ..., 50000; 10 trials; the six reference distributions.
    static ExperimentPlan reference(Metric metric, std::uint64_t seed = 0);

    int effective_warmup() const;

    // Throws std::invalid_argument on an empty or non-ascending grid, a zero
    // size, trials < 1, negative warmup, or no distributions.
    void validate() const;
};

struct Summary {
    double mean = 0.0;
    double sd = 0.0;
};

// Arithmetic mean and sample standard deviation (divisor count-1; 0 for a
// single value). Throws std::invalid_argument on an empty list.
Summary aggregate(std::span<const double> values);

struct MeasurementRow {
    std::size_t n = 0;
    DistributionSpec spec;
    double mean = 0.0;
    double sd = 0.0;
    std::size_t trials = 0;
    // Per-trial values when the table was measured; empty for fixtures and
    // tables read back from CSV.
    std::vector<double> trial_values;
};

struct TableMetadata {
    std::optional<std::uint64_t> seed;
    std::optional<double> clock_resolution;
    std::string timestamp;
    std::string host;
};

// Rows are in grid order: all distributions for the first n, then the next n.
struct MeasurementTable {
    Metric metric = Metric::comparisons;
    std::vector<MeasurementRow> rows;
    TableMetadata metadata;

    // Distributions in first-appearance order.
    std::vector<DistributionSpec> distributions() const;

    struct Column {
        std::vector<double> ns;
        std::vector<double> means;
        std::vector<double> sds;
    };
    // The curve for one distribution, ascending in n.
    Column column(const DistributionSpec& spec) const;
};

// Seed of trial t in cell (n, spec). Depends only on its arguments, so cell
// order and plan composition do not affect any cell's samples.
std::uint64_t trial_seed(std::uint64_t plan_seed, const DistributionSpec& spec, std::size_t n,
                         std::uint64_t trial);

// Runs the plan. For each cell, fresh samples are generated (untimed) and
// sorted once per trial; comparisons or sort seconds are recorded.
// Allocation failure or sampler failure in a cell throws std::runtime_error
// naming the cell.
MeasurementTable run_experiment(const ExperimentPlan& plan);

}  // namespace empo
