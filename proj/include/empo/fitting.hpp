#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace empo {

// Candidate growth curves, ordered slowest to fastest.
enum class ComplexityClass { constant, log_n, n, n_log_n, n_1_5, n_squared };

std::vector<ComplexityClass> all_classes();

// f(n). Logarithms are natural; a different base only rescales the slope.
double evaluate(ComplexityClass c, double n);

// Display form inside O(...), e.g. "n log n", "n^2".
std::string_view display_name(ComplexityClass c);

// Compact token used on the command line and in file names:
// const, logn, n, nlogn, n1.5, n2.
std::string_view token(ComplexityClass c);

// Accepts tokens and display names, case-insensitive.
ComplexityClass parse_class(std::string_view text);

// Comma-separated list of classes.
std::vector<ComplexityClass> parse_class_list(std::string_view text);

enum class FitMode {
    // y = a + b*f(n)
    intercept,
    // y = b*f(n)
    origin,
};

struct FitResult {
    ComplexityClass cls = ComplexityClass::n;
    double intercept = 0.0;
    double slope = 0.0;
    // 1 - SS_res/SS_tot clamped to [0, 1]; 1 when SS_tot < 1e-30.
    double r_squared = 0.0;
    double ss_res = 0.0;
    std::vector<double> residuals;
};

// Least squares of ys on a precomputed design column. The const class in
// intercept mode is the mean-only model (slope 0); any other column with no
// spread throws std::domain_error naming `cls`.
FitResult fit_column(std::span<const double> f, std::span<const double> ys, ComplexityClass cls,
                     FitMode mode = FitMode::intercept);

// Requires |ns| == |ys| >= 3 and strictly ascending positive ns
// (std::invalid_argument otherwise).
FitResult fit(std::span<const double> ns, std::span<const double> ys, ComplexityClass cls,
              FitMode mode = FitMode::intercept);

// R^2 values closer than this count as a tie.
inline constexpr double kTieTolerance = 1e-9;

struct EmpiricalVerdict {
    ComplexityClass selected = ComplexityClass::n;
    std::vector<FitResult> per_class;
    // "y_avg(n) = O_emp(<class>)"
    std::string notation;

    // nullptr when `c` was not a candidate.
    const FitResult* result_for(ComplexityClass c) const;
};

std::string notation_for(ComplexityClass c);

// Fits every candidate and picks the largest R^2; among candidates within
// kTieTolerance of the best, the slowest-growing class wins.
EmpiricalVerdict select_bound(std::span<const double> ns, std::span<const double> ys,
                              std::span<const ComplexityClass> candidates,
                              FitMode mode = FitMode::intercept);

struct PlotPoint {
    double n;
    double observed;
    double fitted;
};

struct PlotPanel {
    ComplexityClass cls;
    std::vector<PlotPoint> points;
};

// Observed vs fitted curve for every candidate in the verdict.
std::vector<PlotPanel> fit_report(const EmpiricalVerdict& verdict, std::span<const double> ns,
                                  std::span<const double> ys);

}  // namespace empo
