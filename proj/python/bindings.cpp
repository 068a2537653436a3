#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <variant>
#include <vector>

#include "empo/distribution.hpp"
#include "empo/experiment.hpp"
#include "empo/fitting.hpp"
#include "empo/fixture.hpp"
#include "empo/quicksort.hpp"
#include "empo/samplers.hpp"

namespace py = pybind11;

namespace {

py::dict run_to_dict(const empo::InstrumentedRun& run) {
    py::dict d;
    d["comparisons"] = run.comparisons;
    d["swaps"] = run.swaps;
    d["elapsed"] = run.elapsed;
    return d;
}

py::list table_rows(const empo::MeasurementTable& table) {
    py::list rows;
    for (const auto& row : table.rows) {
        py::dict d;
        d["metric"] = std::string(empo::to_string(table.metric));
        d["n"] = row.n;
        d["distribution"] = row.spec.to_string();
        d["mean"] = row.mean;
        d["sd"] = row.sd;
        d["trials"] = row.trials;
        d["trial_values"] = row.trial_values;
        rows.append(d);
    }
    return rows;
}

py::dict fit_to_dict(const empo::FitResult& r) {
    py::dict d;
    d["class"] = std::string(empo::token(r.cls));
    d["intercept"] = r.intercept;
    d["slope"] = r.slope;
    d["r_squared"] = r.r_squared;
    d["residuals"] = r.residuals;
    return d;
}

empo::FitMode parse_mode(const std::string& mode) {
    if (mode == "intercept")
        return empo::FitMode::intercept;
    if (mode == "origin")
        return empo::FitMode::origin;
    throw py::value_error("fit mode must be 'intercept' or 'origin'");
}

template <class Key>
py::dict sort_keys(std::vector<Key> keys) {
    auto outcome = empo::quicksort(std::move(keys));
    py::dict d = run_to_dict(outcome.run);
    d["sorted"] = std::move(outcome.sorted_keys);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quicksort instrumentation, input samplers and complexity-class fitting.";

    py::class_<empo::DistributionSpec>(m, "DistributionSpec")
        .def(py::init([](const std::string& text) { return empo::DistributionSpec::parse(text); }),
             py::arg("text"))
        .def_property_readonly("label", &empo::DistributionSpec::label)
        .def_property_readonly("integer_keys",
                               [](const empo::DistributionSpec& s) {
                                   return s.key_domain() == empo::KeyDomain::integer;
                               })
        .def("__str__", &empo::DistributionSpec::to_string)
        .def("__repr__",
             [](const empo::DistributionSpec& s) {
                 return "DistributionSpec('" + s.to_string() + "')";
             })
        .def("__eq__", [](const empo::DistributionSpec& a, const empo::DistributionSpec& b) {
            return a == b;
        });

    m.def(
        "sample",
        [](const std::string& spec, std::size_t n, std::uint64_t seed) -> py::object {
            empo::Rng rng(seed);
            auto s = empo::generate(empo::DistributionSpec::parse(spec), n, rng);
            return std::visit([](auto& keys) -> py::object { return py::cast(keys); }, s.keys);
        },
        py::arg("spec"), py::arg("n"), py::arg("seed"),
        "Generate n keys from a distribution given in canonical text form.");

    m.def("quicksort", &sort_keys<std::int64_t>, py::arg("keys"),
          "Sort integer keys; returns sorted keys with comparison and swap counts.");
    m.def("quicksort", &sort_keys<double>, py::arg("keys"),
          "Sort real keys; returns sorted keys with comparison and swap counts.");

    m.def(
        "aggregate",
        [](const std::vector<double>& values) {
            auto s = empo::aggregate(values);
            return py::make_tuple(s.mean, s.sd);
        },
        py::arg("values"));

    m.def(
        "trial_seed",
        [](std::uint64_t seed, const std::string& spec, std::size_t n, std::uint64_t trial) {
            return empo::trial_seed(seed, empo::DistributionSpec::parse(spec), n, trial);
        },
        py::arg("seed"), py::arg("spec"), py::arg("n"), py::arg("trial"));

    m.def(
        "run_experiment",
        [](const std::vector<std::string>& distributions, const std::vector<std::size_t>& n_grid,
           int trials, std::uint64_t seed, const std::string& metric, unsigned threads) {
            empo::ExperimentPlan plan;
            for (const auto& d : distributions)
                plan.distributions.push_back(empo::DistributionSpec::parse(d));
            plan.n_grid = n_grid;
            plan.trials = trials;
            plan.seed = seed;
            plan.metric = empo::parse_metric(metric);
            plan.threads = threads;
            empo::MeasurementTable table;
            {
                py::gil_scoped_release release;
                table = empo::run_experiment(plan);
            }
            return table_rows(table);
        },
        py::arg("distributions"), py::arg("n_grid"), py::arg("trials") = 10, py::arg("seed") = 0,
        py::arg("metric") = "comparisons", py::arg("threads") = 0);

    m.def("load_fixture_table1", [] { return table_rows(empo::load_fixture_table1()); });

    m.def("all_classes", [] {
        std::vector<std::string> out;
        for (auto c : empo::all_classes())
            out.emplace_back(empo::token(c));
        return out;
    });

    m.def(
        "fit",
        [](const std::vector<double>& ns, const std::vector<double>& ys, const std::string& cls,
           const std::string& mode) {
            return fit_to_dict(empo::fit(ns, ys, empo::parse_class(cls), parse_mode(mode)));
        },
        py::arg("ns"), py::arg("ys"), py::arg("cls"), py::arg("mode") = "intercept");

    m.def(
        "select_bound",
        [](const std::vector<double>& ns, const std::vector<double>& ys,
           const std::vector<std::string>& candidates, const std::string& mode) {
            std::vector<empo::ComplexityClass> classes;
            for (const auto& c : candidates)
                classes.push_back(empo::parse_class(c));
            auto v = empo::select_bound(ns, ys, classes, parse_mode(mode));
            py::dict d;
            d["selected"] = std::string(empo::token(v.selected));
            d["notation"] = v.notation;
            py::list fits;
            for (const auto& r : v.per_class)
                fits.append(fit_to_dict(r));
            d["fits"] = fits;
            return d;
        },
        py::arg("ns"), py::arg("ys"), py::arg("candidates") = std::vector<std::string>{"nlogn", "n2"},
        py::arg("mode") = "intercept");

}
