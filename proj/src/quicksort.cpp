#include "empo/quicksort.hpp"

#include <algorithm>

namespace empo {

double clock_resolution_seconds() {
    using Clock = std::chrono::steady_clock;
    auto best = Clock::duration::max();
    for (int i = 0; i < 64; ++i) {
        const auto t0 = Clock::now();
        auto t1 = Clock::now();
        while (t1 == t0)
            t1 = Clock::now();
        best = std::min(best, t1 - t0);
    }
    return std::chrono::duration<double>(best).count();
}

}  // namespace empo
