#include "empo/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "empo/fixture.hpp"
#include "empo/report.hpp"
#include "empo/table_csv.hpp"
#include "empo/text.hpp"

namespace empo::cli {

std::vector<std::size_t> CliConfig::n_grid() const {
    if (n_min < 1)
        throw std::invalid_argument("--n-min must be >= 1");
    if (n_step < 1)
        throw std::invalid_argument("--n-step must be >= 1");
    if (n_max < n_min)
        throw std::invalid_argument("--n-max must be >= --n-min");
    std::vector<std::size_t> grid;
    for (std::size_t n = n_min; n <= n_max; n += n_step)
        grid.push_back(n);
    return grid;
}

ExperimentPlan CliConfig::plan() const {
    ExperimentPlan p;
    p.n_grid = n_grid();
    p.trials = trials;
    p.seed = seed;
    p.metric = metric;
    p.distributions = dists;
    p.warmup = warmup;
    p.threads = threads;
    p.validate();
    return p;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << contents))
        throw std::runtime_error("cannot write " + path.string());
}

template <class Writer>
void write_with(const std::filesystem::path& path, Writer&& writer) {
    std::ostringstream buf;
    writer(buf);
    write_file(path, buf.str());
}

void emit_fits(const std::vector<DistributionVerdict>& verdicts, const CliConfig& config,
               std::ostream& out) {
    std::filesystem::create_directories(config.out_dir);
    write_with(config.out_dir / "verdicts.csv",
               [&](std::ostream& s) { write_verdicts_csv(s, verdicts); });
    write_plot_data(config.out_dir, verdicts);
    print_verdicts(out, verdicts);
}

}  // namespace

int cmd_run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    ExperimentPlan plan;
    try {
        plan = config.plan();
        if (plan.n_grid.size() < 3)
            throw std::invalid_argument("the n grid needs at least 3 sizes to fit a curve");
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }
    try {
        auto table = run_experiment(plan);
        std::filesystem::create_directories(config.out_dir);
        write_with(config.out_dir / "means.csv",
                   [&](std::ostream& s) { write_measurement_csv(s, table, NumberStyle::table); });
        write_with(config.out_dir / "sds.csv",
                   [&](std::ostream& s) { write_grid_csv(s, table, GridField::sd); });

        out << "mean " << to_string(table.metric) << " (" << plan.trials << " trials)\n";
        write_grid_csv(out, table, GridField::mean);
        out << '\n';
        emit_fits(fit_table(table, config.classes, config.fit_mode), config, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
    return kOk;
}

int cmd_refit_fixture(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        auto problems = check_fixture_integrity();
        if (!problems.empty()) {
            for (const auto& p : problems)
                err << "fixture integrity: " << p << '\n';
            return kRuntimeError;
        }
        auto table = load_fixture_table1();
        emit_fits(fit_table(table, config.classes, config.fit_mode), config, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
    return kOk;
}

int cmd_fit(const CliConfig& config, std::ostream& out, std::ostream& err) {
    std::ifstream in(config.csv_path);
    if (!in) {
        err << "error: cannot open " << config.csv_path.string() << '\n';
        return kConfigError;
    }
    std::vector<DistributionVerdict> verdicts;
    try {
        auto table = read_measurement_csv(in);
        if (table.rows.empty())
            throw std::invalid_argument("table has no rows");
        verdicts = fit_table(table, config.classes, config.fit_mode);
    } catch (const CsvError& e) {
        err << config.csv_path.string() << ":" << e.line() << ": " << e.detail() << '\n';
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        err << config.csv_path.string() << ": " << e.what() << '\n';
        return kConfigError;
    }
    try {
        emit_fits(verdicts, config, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
    return kOk;
}

namespace {

struct RawOptions {
    std::vector<std::string> dists;
    std::string classes;
    std::string metric;
    std::string fit_mode;
    std::optional<int> warmup;
};

void add_fit_options(CLI::App* sub, CliConfig& cfg, RawOptions& raw) {
    sub->add_option("--classes", raw.classes,
                    "Candidate classes, comma-separated: const,logn,n,nlogn,n1.5,n2 "
                    "(default nlogn,n2)");
    sub->add_option("--fit-mode", raw.fit_mode, "intercept (default) or origin");
    sub->add_option("--out-dir", cfg.out_dir, "Output directory (default results)");
}

void apply_raw(CliConfig& cfg, const RawOptions& raw) {
    if (!raw.dists.empty()) {
        cfg.dists.clear();
        for (const auto& d : raw.dists)
            cfg.dists.push_back(DistributionSpec::parse(d));
    }
    if (!raw.classes.empty())
        cfg.classes = parse_class_list(raw.classes);
    if (!raw.metric.empty())
        cfg.metric = parse_metric(raw.metric);
    if (!raw.fit_mode.empty()) {
        auto mode = text::lower(raw.fit_mode);
        if (mode == "intercept")
            cfg.fit_mode = FitMode::intercept;
        else if (mode == "origin")
            cfg.fit_mode = FitMode::origin;
        else
            throw std::invalid_argument("unknown fit mode '" + raw.fit_mode +
                                        "' (expected intercept or origin)");
    }
    cfg.warmup = raw.warmup;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Empirical complexity estimation for quicksort over random inputs"};
    app.require_subcommand(1);

    CliConfig cfg;
    RawOptions raw;

    auto* run = app.add_subcommand("run", "Run the experiment, tabulate, fit and write verdicts");
    run->add_option("--dist", raw.dists,
                    "Input distribution, repeatable (e.g. poisson:lambda=1); default: the six "
                    "reference distributions");
    run->add_option("--n-min", cfg.n_min, "Smallest n (default 5000)");
    run->add_option("--n-max", cfg.n_max, "Largest n (default 50000)");
    run->add_option("--n-step", cfg.n_step, "Step in n (default 5000)");
    run->add_option("--trials", cfg.trials, "Trials per cell (default 10)");
    run->add_option("--seed", cfg.seed, "Base seed (default 0)");
    run->add_option("--metric", raw.metric, "time (default) or comparisons");
    run->add_option("--warmup", raw.warmup,
                    "Discarded runs per cell (default 1 for time, 0 for comparisons)");
    run->add_option("--threads", cfg.threads,
                    "Worker threads for metric=comparisons (default: all cores)");
    add_fit_options(run, cfg, raw);

    auto* refit = app.add_subcommand("refit-fixture",
                                     "Fit the embedded reference table and write verdicts");
    add_fit_options(refit, cfg, raw);

    auto* fit = app.add_subcommand("fit", "Fit a measurement CSV written by `run`");
    fit->add_option("csv", cfg.csv_path, "Measurement table (metric,n,distribution,mean,sd,trials)")
        ->required();
    add_fit_options(fit, cfg, raw);

    try {
        app.parse(argc, argv);
        apply_raw(cfg, raw);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kConfigError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    if (run->parsed()) {
        cfg.command = Command::run;
        return cmd_run(cfg, out, err);
    }
    if (refit->parsed()) {
        cfg.command = Command::refit_fixture;
        return cmd_refit_fixture(cfg, out, err);
    }
    cfg.command = Command::fit;
    return cmd_fit(cfg, out, err);
}

}  // namespace empo::cli
