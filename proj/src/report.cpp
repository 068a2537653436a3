#include "empo/report.hpp"

#include <cctype>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "empo/table_csv.hpp"
#include "empo/text.hpp"

namespace empo {

std::vector<DistributionVerdict> fit_table(const MeasurementTable& table,
                                           std::span<const ComplexityClass> classes,
                                           FitMode mode) {
    std::vector<DistributionVerdict> out;
    for (const auto& spec : table.distributions()) {
        auto col = table.column(spec);
        try {
            auto verdict = select_bound(col.ns, col.means, classes, mode);
            out.push_back({spec, col.ns, col.means, std::move(verdict)});
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(spec.to_string() + ": " + e.what());
        }
    }
    return out;
}

std::string file_slug(const DistributionSpec& spec) {
    std::string slug;
    for (char c : spec.to_string()) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-')
            slug += c;
        else if (slug.empty() || slug.back() != '_')
            slug += '_';
    }
    return slug;
}

namespace {

std::string r2_field(const EmpiricalVerdict& v, ComplexityClass c) {
    const auto* r = v.result_for(c);
    return r ? text::shortest(r->r_squared) : std::string{};
}

}  // namespace

void write_verdicts_csv(std::ostream& out, std::span<const DistributionVerdict> verdicts) {
    out << "distribution,selected_class,r2_nlogn,r2_n2\n";
    for (const auto& d : verdicts) {
        out << csv::quote(d.spec.to_string()) << ',' << token(d.verdict.selected) << ','
            << r2_field(d.verdict, ComplexityClass::n_log_n) << ','
            << r2_field(d.verdict, ComplexityClass::n_squared) << '\n';
    }
}

std::vector<std::filesystem::path> write_plot_data(const std::filesystem::path& dir,
                                                   std::span<const DistributionVerdict> verdicts) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    for (const auto& d : verdicts) {
        for (const auto& panel : fit_report(d.verdict, d.ns, d.ys)) {
            auto path = dir / (file_slug(d.spec) + "_" + std::string(token(panel.cls)) + ".csv");
            std::ofstream file(path);
            if (!file)
                throw std::runtime_error("cannot write " + path.string());
            file << "n,observed,fitted\n";
            for (const auto& p : panel.points)
                file << text::shortest(p.n) << ',' << text::shortest(p.observed) << ','
                     << text::shortest(p.fitted) << '\n';
            written.push_back(path);
        }
    }
    return written;
}

void print_verdicts(std::ostream& out, std::span<const DistributionVerdict> verdicts) {
    for (const auto& d : verdicts) {
        out << std::left << std::setw(28) << d.spec.to_string() << "  " << std::setw(26)
            << d.verdict.notation;
        for (const auto& r : d.verdict.per_class)
            out << "  R2[" << display_name(r.cls) << "]=" << text::fixed(r.r_squared, 6);
        out << '\n';
    }
}

}  // namespace empo
