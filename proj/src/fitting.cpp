#include "empo/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "empo/text.hpp"

namespace empo {

std::vector<ComplexityClass> all_classes() {
    return {ComplexityClass::constant, ComplexityClass::log_n,  ComplexityClass::n,
            ComplexityClass::n_log_n,  ComplexityClass::n_1_5, ComplexityClass::n_squared};
}

double evaluate(ComplexityClass c, double n) {
    switch (c) {
    case ComplexityClass::constant:
        return 1.0;
    case ComplexityClass::log_n:
        return std::log(n);
    case ComplexityClass::n:
        return n;
    case ComplexityClass::n_log_n:
        return n * std::log(n);
    case ComplexityClass::n_1_5:
        return n * std::sqrt(n);
    case ComplexityClass::n_squared:
        return n * n;
    }
    throw std::logic_error("unhandled complexity class");
}

std::string_view display_name(ComplexityClass c) {
    switch (c) {
    case ComplexityClass::constant:
        return "1";
    case ComplexityClass::log_n:
        return "log n";
    case ComplexityClass::n:
        return "n";
    case ComplexityClass::n_log_n:
        return "n log n";
    case ComplexityClass::n_1_5:
        return "n^1.5";
    case ComplexityClass::n_squared:
        return "n^2";
    }
    return "?";
}

std::string_view token(ComplexityClass c) {
    switch (c) {
    case ComplexityClass::constant:
        return "const";
    case ComplexityClass::log_n:
        return "logn";
    case ComplexityClass::n:
        return "n";
    case ComplexityClass::n_log_n:
        return "nlogn";
    case ComplexityClass::n_1_5:
        return "n1.5";
    case ComplexityClass::n_squared:
        return "n2";
    }
    return "?";
}

ComplexityClass parse_class(std::string_view text) {
    auto t = text::lower(text::trim(text));
    for (auto c : all_classes())
        if (t == token(c) || t == display_name(c))
            return c;
    if (t == "1" || t == "constant")
        return ComplexityClass::constant;
    if (t == "n^2" || t == "n²" || t == "nsquared")
        return ComplexityClass::n_squared;
    if (t == "n log n" || t == "n*log(n)" || t == "nlog(n)")
        return ComplexityClass::n_log_n;
    throw std::invalid_argument("unknown complexity class '" + std::string(text) +
                                "' (expected const, logn, n, nlogn, n1.5 or n2)");
}

std::vector<ComplexityClass> parse_class_list(std::string_view text) {
    std::vector<ComplexityClass> out;
    while (true) {
        auto comma = text.find(',');
        auto item = text::trim(text.substr(0, comma));
        if (!item.empty()) {
            auto c = parse_class(item);
            if (std::find(out.begin(), out.end(), c) == out.end())
                out.push_back(c);
        }
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    if (out.empty())
        throw std::invalid_argument("empty complexity class list");
    return out;
}

FitResult fit_column(std::span<const double> f, std::span<const double> ys, ComplexityClass cls,
                     FitMode mode) {
    if (f.size() != ys.size())
        throw std::invalid_argument("design column and response differ in length");
    if (ys.empty())
        throw std::invalid_argument("fit needs data");
    const auto count = static_cast<long double>(ys.size());

    long double f_mean = 0.0L;
    long double y_mean = 0.0L;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        f_mean += f[i];
        y_mean += ys[i];
    }
    f_mean /= count;
    y_mean /= count;

    long double sxx = 0.0L;
    long double sxy = 0.0L;
    long double ss_tot = 0.0L;
    long double ff = 0.0L;
    long double fy = 0.0L;
    for (std::size_t i = 0; i < ys.size(); ++i) {
        const long double dx = f[i] - f_mean;
        const long double dy = ys[i] - y_mean;
        sxx += dx * dx;
        sxy += dx * dy;
        ss_tot += dy * dy;
        ff = ff + static_cast<long double>(f[i]) * f[i];
        fy = fy + static_cast<long double>(f[i]) * ys[i];
    }

    FitResult r;
    r.cls = cls;
    if (mode == FitMode::intercept) {
        if (sxx <= 0.0L) {
            if (cls != ComplexityClass::constant)
                throw std::domain_error("degenerate design for class " +
                                        std::string(display_name(cls)) +
                                        ": all f(n) values are equal");
            r.intercept = static_cast<double>(y_mean);
            r.slope = 0.0;
        } else {
            const long double b = sxy / sxx;
            r.slope = static_cast<double>(b);
            r.intercept = static_cast<double>(y_mean - b * f_mean);
        }
    } else {
        if (ff <= 0.0L)
            throw std::domain_error("degenerate design for class " +
                                    std::string(display_name(cls)) + ": all f(n) values are zero");
        r.slope = static_cast<double>(fy / ff);
        r.intercept = 0.0;
    }

    long double ss_res = 0.0L;
    r.residuals.reserve(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) {
        const long double fitted =
            static_cast<long double>(r.intercept) + static_cast<long double>(r.slope) * f[i];
        const long double e = ys[i] - fitted;
        r.residuals.push_back(static_cast<double>(e));
        ss_res += e * e;
    }
    r.ss_res = static_cast<double>(ss_res);
    if (ss_tot < 1e-30L)
        r.r_squared = 1.0;
    else
        r.r_squared = std::clamp(static_cast<double>(1.0L - ss_res / ss_tot), 0.0, 1.0);
    return r;
}

namespace {

void check_fit_input(std::span<const double> ns, std::span<const double> ys) {
    if (ns.size() != ys.size())
        throw std::invalid_argument("ns and ys differ in length (" + std::to_string(ns.size()) +
                                    " vs " + std::to_string(ys.size()) + ")");
    if (ns.size() < 3)
        throw std::invalid_argument("fit needs at least 3 points, got " +
                                    std::to_string(ns.size()));
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (!(ns[i] > 0.0))
            throw std::invalid_argument("sizes must be positive");
        if (i > 0 && !(ns[i] > ns[i - 1]))
            throw std::invalid_argument("sizes must be strictly ascending");
    }
    for (double y : ys)
        if (!std::isfinite(y))
            throw std::invalid_argument("responses must be finite");
}

}  // namespace

FitResult fit(std::span<const double> ns, std::span<const double> ys, ComplexityClass cls,
              FitMode mode) {
    check_fit_input(ns, ys);
    std::vector<double> f;
    f.reserve(ns.size());
    for (double n : ns)
        f.push_back(evaluate(cls, n));
    return fit_column(f, ys, cls, mode);
}

const FitResult* EmpiricalVerdict::result_for(ComplexityClass c) const {
    for (const auto& r : per_class)
        if (r.cls == c)
            return &r;
    return nullptr;
}

std::string notation_for(ComplexityClass c) {
    return "y_avg(n) = O_emp(" + std::string(display_name(c)) + ")";
}

EmpiricalVerdict select_bound(std::span<const double> ns, std::span<const double> ys,
                              std::span<const ComplexityClass> candidates, FitMode mode) {
    if (candidates.empty())
        throw std::invalid_argument("select_bound needs at least one candidate class");
    EmpiricalVerdict v;
    double best = -1.0;
    for (auto c : candidates) {
        v.per_class.push_back(fit(ns, ys, c, mode));
        best = std::max(best, v.per_class.back().r_squared);
    }
    bool chosen = false;
    for (const auto& r : v.per_class) {
        if (r.r_squared < best - kTieTolerance)
            continue;
        if (!chosen || r.cls < v.selected) {
            v.selected = r.cls;
            chosen = true;
        }
    }
    v.notation = notation_for(v.selected);
    return v;
}

std::vector<PlotPanel> fit_report(const EmpiricalVerdict& verdict, std::span<const double> ns,
                                  std::span<const double> ys) {
    if (ns.size() != ys.size())
        throw std::invalid_argument("ns and ys differ in length");
    std::vector<PlotPanel> panels;
    for (const auto& r : verdict.per_class) {
        PlotPanel panel{r.cls, {}};
        for (std::size_t i = 0; i < ns.size(); ++i)
            panel.points.push_back({ns[i], ys[i], r.intercept + r.slope * evaluate(r.cls, ns[i])});
        panels.push_back(std::move(panel));
    }
    return panels;
}

}  // namespace empo
