#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "empo/experiment.hpp"
#include "empo/fitting.hpp"

namespace empo {

struct DistributionVerdict {
    DistributionSpec spec;
    std::vector<double> ns;
    std::vector<double> ys;
    EmpiricalVerdict verdict;
};

// Fits every distribution's mean curve in the table.
std::vector<DistributionVerdict> fit_table(const MeasurementTable& table,
                                           std::span<const ComplexityClass> classes,
                                           FitMode mode = FitMode::intercept);

// File-name form of a spec: "poisson:lambda=1" -> "poisson_lambda_1".
std::string file_slug(const DistributionSpec& spec);

// Header `distribution,selected_class,r2_nlogn,r2_n2`; an R^2 field is left
// empty when its class was not a candidate.
void write_verdicts_csv(std::ostream& out, std::span<const DistributionVerdict> verdicts);

// One `<dist>_<class>.csv` per (distribution, candidate) with header
// `n,observed,fitted`, full precision. Returns the paths written.
std::vector<std::filesystem::path> write_plot_data(const std::filesystem::path& dir,
                                                   std::span<const DistributionVerdict> verdicts);

// Human-readable verdict lines.
void print_verdicts(std::ostream& out, std::span<const DistributionVerdict> verdicts);

}  // namespace empo
