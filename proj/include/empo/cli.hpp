#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "empo/distribution.hpp"
#include "empo/experiment.hpp"
#include "empo/fitting.hpp"

namespace empo::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kRuntimeError = 1;
inline constexpr int kConfigError = 2;

enum class Command { run, refit_fixture, fit };

// Defaults describe the reference experiment: n = 5000..50000 step 5000,
// 10 trials, the six reference distributions, candidates {n log n, n^2}.
struct CliConfig {
    Command command = Command::run;
    std::vector<DistributionSpec> dists = reference_distributions();
    std::size_t n_min = 5000;
    std::size_t n_max = 50000;
    std::size_t n_step = 5000;
    int trials = 10;
    std::uint64_t seed = 0;
    Metric metric = Metric::time;
    std::vector<ComplexityClass> classes = {ComplexityClass::n_log_n, ComplexityClass::n_squared};
    FitMode fit_mode = FitMode::intercept;
    std::filesystem::path out_dir = "results";
    std::optional<int> warmup;
    unsigned threads = 0;
    // Input table for `fit`.
    std::filesystem::path csv_path;

    // Throws std::invalid_argument on an unusable grid.
    std::vector<std::size_t> n_grid() const;
    ExperimentPlan plan() const;
};

// Each command writes into config.out_dir and reports on `out`/`err`.
int cmd_run(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_refit_fixture(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_fit(const CliConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and dispatches. Parse and config errors return kConfigError.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace empo::cli
