#pragma once

#include <cassert>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace empo {

// Measurements for one sort execution.
//
// comparisons: evaluations of the key tests `x[down] <= a` and `x[up] > a`.
//              The index guard `down < ub` is not a key comparison.
// swaps:       element exchanges inside the scan loop plus the final pivot
//              placement of every partition call.
// elapsed:     seconds spent in the sort call; zero for untimed sorts.
struct InstrumentedRun {
    std::uint64_t comparisons = 0;
    std::uint64_t swaps = 0;
    double elapsed = 0.0;
};

template <class Key>
struct SortOutcome {
    std::vector<Key> sorted_keys;
    InstrumentedRun run;
};

// Pivot-first partition of keys[lb..ub]: equal keys are scanned to the left,
// the pivot ends at the up pointer. Returns the pivot's final index.
//
// The scans run only while down < up, so a one-element range costs no
// comparisons.
template <class Key>
std::ptrdiff_t partition(std::span<Key> x, std::ptrdiff_t lb, std::ptrdiff_t ub,
                         InstrumentedRun& counter) {
    assert(0 <= lb && lb <= ub && ub < static_cast<std::ptrdiff_t>(x.size()));
    const Key a = x[lb];
    std::ptrdiff_t down = lb;
    std::ptrdiff_t up = ub;
    std::uint64_t comparisons = 0;
    std::uint64_t swaps = 0;
    while (down < up) {
        while (true) {
            ++comparisons;
            if (!(x[down] <= a) || !(down < ub))
                break;
            ++down;
        }
        while (true) {
            ++comparisons;
            if (!(x[up] > a))
                break;
            --up;
        }
        if (down < up) {
            std::swap(x[down], x[up]);
            ++swaps;
        }
    }
    x[lb] = x[up];
    x[up] = a;
    ++swaps;
    counter.comparisons += comparisons;
    counter.swaps += swaps;
    return up;
}

// In-place quicksort of x. Visits subranges in the same order as the
// recursive formulation (left part fully before right part) but keeps the
// pending ranges on a heap-allocated worklist, so tied inputs with linear
// partition depth cannot exhaust the call stack.
template <class Key>
InstrumentedRun quicksort_in_place(std::span<Key> x) {
    InstrumentedRun counter;
    std::vector<std::pair<std::ptrdiff_t, std::ptrdiff_t>> pending;
    if (!x.empty())
        pending.emplace_back(0, static_cast<std::ptrdiff_t>(x.size()) - 1);
    while (!pending.empty()) {
        auto [lb, ub] = pending.back();
        pending.pop_back();
        const std::ptrdiff_t j = partition(x, lb, ub, counter);
        // Empty ranges return immediately in the recursive form and cost nothing.
        if (j + 1 <= ub)
            pending.emplace_back(j + 1, ub);
        if (lb <= j - 1)
            pending.emplace_back(lb, j - 1);
    }
    return counter;
}

template <class Key>
SortOutcome<Key> quicksort(std::vector<Key> keys) {
    auto run = quicksort_in_place(std::span<Key>(keys));
    return {std::move(keys), run};
}

// Sorts in place, timing only the sort call.
template <class Clock = std::chrono::steady_clock, class Key>
InstrumentedRun timed_sort_in_place(std::span<Key> x) {
    static_assert(Clock::is_steady, "timed_sort needs a monotonic clock");
    const auto start = Clock::now();
    auto run = quicksort_in_place(x);
    const auto end = Clock::now();
    run.elapsed = std::chrono::duration<double>(end - start).count();
    return run;
}

template <class Clock = std::chrono::steady_clock, class Key>
SortOutcome<Key> timed_sort(std::vector<Key> keys) {
    auto run = timed_sort_in_place<Clock>(std::span<Key>(keys));
    return {std::move(keys), run};
}

// Smallest nonzero tick observed on the steady clock, in seconds.
double clock_resolution_seconds();

}  // namespace empo
