#include "empo/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <mutex>
#include <new>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <unistd.h>

#include "empo/quicksort.hpp"
#include "empo/rng.hpp"
#include "empo/samplers.hpp"
#include "empo/text.hpp"

namespace empo {

std::string_view to_string(Metric metric) {
    return metric == Metric::time ? "time" : "comparisons";
}

Metric parse_metric(std::string_view text) {
    auto t = text::lower(text::trim(text));
    if (t == "time")
        return Metric::time;
    if (t == "comparisons")
        return Metric::comparisons;
    throw std::invalid_argument("unknown metric '" + std::string(text) +
                                "' (expected time or comparisons)");
}

ExperimentPlan ExperimentPlan::reference(Metric metric, std::uint64_t seed) {
    ExperimentPlan plan;
    for (std::size_t n = 5000; n <= 50000; n += 5000)
        plan.n_grid.push_back(n);
    plan.trials = 10;
    plan.seed = seed;
    plan.metric = metric;
    plan.distributions = reference_distributions();
    return plan;
}

int ExperimentPlan::effective_warmup() const {
    if (warmup)
        return *warmup;
    return metric == Metric::time ? 1 : 0;
}

void ExperimentPlan::validate() const {
    if (n_grid.empty())
        throw std::invalid_argument("n grid is empty");
    if (n_grid.front() < 1)
        throw std::invalid_argument("n grid sizes must be >= 1");
    if (std::adjacent_find(n_grid.begin(), n_grid.end(), std::greater_equal<>{}) != n_grid.end())
        throw std::invalid_argument("n grid must be strictly ascending");
    if (trials < 1)
        throw std::invalid_argument("trials must be >= 1");
    if (warmup && *warmup < 0)
        throw std::invalid_argument("warmup must be >= 0");
    if (distributions.empty())
        throw std::invalid_argument("plan has no distributions");
}

Summary aggregate(std::span<const double> values) {
    if (values.empty())
        throw std::invalid_argument("aggregate needs at least one value");
    const double count = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / count;
    if (values.size() == 1)
        return {mean, 0.0};
    double ss = 0.0;
    for (double v : values)
        ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / (count - 1.0))};
}

std::vector<DistributionSpec> MeasurementTable::distributions() const {
    std::vector<DistributionSpec> out;
    for (const auto& row : rows)
        if (std::find(out.begin(), out.end(), row.spec) == out.end())
            out.push_back(row.spec);
    return out;
}

MeasurementTable::Column MeasurementTable::column(const DistributionSpec& spec) const {
    std::vector<const MeasurementRow*> picked;
    for (const auto& row : rows)
        if (row.spec == spec)
            picked.push_back(&row);
    std::stable_sort(picked.begin(), picked.end(),
                     [](const auto* a, const auto* b) { return a->n < b->n; });
    Column col;
    for (const auto* row : picked) {
        col.ns.push_back(static_cast<double>(row->n));
        col.means.push_back(row->mean);
        col.sds.push_back(row->sd);
    }
    return col;
}

std::uint64_t trial_seed(std::uint64_t plan_seed, const DistributionSpec& spec, std::size_t n,
                         std::uint64_t trial) {
    std::uint64_t h = mix64(plan_seed);
    h = mix64(h ^ fnv1a64(spec.to_string()));
    h = mix64(h ^ static_cast<std::uint64_t>(n));
    return mix64(h ^ trial);
}

namespace {

double measure_once(const ExperimentPlan& plan, const DistributionSpec& spec, std::size_t n,
                    std::uint64_t trial) {
    Rng rng(trial_seed(plan.seed, spec, n, trial));
    auto sample = generate(spec, n, rng);
    return std::visit(
        [&](auto& keys) {
            using Key = typename std::decay_t<decltype(keys)>::value_type;
            std::span<Key> view(keys);
            if (plan.metric == Metric::time)
                return timed_sort_in_place(view).elapsed;
            return static_cast<double>(quicksort_in_place(view).comparisons);
        },
        sample.keys);
}

MeasurementRow run_cell(const ExperimentPlan& plan, const DistributionSpec& spec, std::size_t n) {
    const auto trials = static_cast<std::uint64_t>(plan.trials);
    MeasurementRow row{n, spec, 0.0, 0.0, static_cast<std::size_t>(plan.trials), {}};
    try {
        // Warmup runs use trial indices past the recorded ones.
        for (int w = 0; w < plan.effective_warmup(); ++w)
            (void)measure_once(plan, spec, n, trials + static_cast<std::uint64_t>(w));
        row.trial_values.reserve(row.trials);
        for (std::uint64_t t = 0; t < trials; ++t)
            row.trial_values.push_back(measure_once(plan, spec, n, t));
    } catch (const std::bad_alloc&) {
        throw std::runtime_error("allocation failed in cell n=" + std::to_string(n) + " " +
                                 spec.to_string());
    } catch (const std::exception& e) {
        throw std::runtime_error("cell n=" + std::to_string(n) + " " + spec.to_string() + ": " +
                                 e.what());
    }
    auto summary = aggregate(row.trial_values);
    row.mean = summary.mean;
    row.sd = summary.sd;
    return row;
}

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string host_name() {
    char buf[256] = {};
    if (gethostname(buf, sizeof buf - 1) != 0)
        return "unknown";
    return buf;
}

}  // namespace

MeasurementTable run_experiment(const ExperimentPlan& plan) {
    plan.validate();

    struct Cell {
        std::size_t n;
        const DistributionSpec* spec;
    };
    std::vector<Cell> cells;
    for (std::size_t n : plan.n_grid)
        for (const auto& spec : plan.distributions)
            cells.push_back({n, &spec});

    MeasurementTable table;
    table.metric = plan.metric;
    table.metadata.seed = plan.seed;
    table.metadata.clock_resolution = clock_resolution_seconds();
    table.metadata.timestamp = utc_timestamp();
    table.metadata.host = host_name();

    unsigned workers = 1;
    if (plan.metric == Metric::comparisons) {
        workers = plan.threads != 0 ? plan.threads : std::max(1u, std::thread::hardware_concurrency());
        workers = std::min<unsigned>(workers, static_cast<unsigned>(cells.size()));
    }

    if (workers <= 1) {
        for (const auto& cell : cells)
            table.rows.push_back(run_cell(plan, *cell.spec, cell.n));
        return table;
    }

    std::vector<std::optional<MeasurementRow>> slots(cells.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < cells.size(); i = next++) {
                    try {
                        slots[i] = run_cell(plan, *cells[i].spec, cells[i].n);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                        next = cells.size();
                    }
                }
            });
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    for (auto& slot : slots)
        table.rows.push_back(std::move(*slot));
    return table;
}

}  // namespace empo
