#include "empo/fixture.hpp"

#include <cmath>
#include <sstream>

#include "empo/table_csv.hpp"
#include "empo/text.hpp"

namespace empo {

namespace {

constexpr std::array<std::size_t, 10> kSizes = {5000,  10000, 15000, 20000, 25000,
                                                30000, 35000, 40000, 45000, 50000};

constexpr std::array<double, 10> kNLogN = {18494.85,  40000.00,  62641.37,  86020.60,
                                           109948.50, 134313.64, 159042.38, 184082.40,
                                           209394.56, 234948.50};

// Columns: binomial, poisson, duniform, cuniform, exponential, normal.
constexpr double kMeans[10][6] = {
    {0.0047, 0.0047, 0.0015, 0.0016, 0.0016, 0.0031},
    {0.0095, 0.0172, 0.0031, 0.0031, 0.0047, 0.0063},
    {0.0091, 0.0422, 0.0062, 0.0062, 0.0078, 0.0062},
    {0.0156, 0.0719, 0.0062, 0.0062, 0.0109, 0.0110},
    {0.0266, 0.1140, 0.0093, 0.0093, 0.0110, 0.0109},
    {0.0345, 0.1609, 0.0156, 0.0157, 0.0156, 0.0140},
    {0.0421, 0.2188, 0.0203, 0.0156, 0.0156, 0.0154},
    {0.0579, 0.2812, 0.0218, 0.0157, 0.0171, 0.0189},
    {0.0735, 0.3625, 0.0282, 0.0204, 0.0202, 0.0219},
    {0.0844, 0.4453, 0.0391, 0.0235, 0.0219, 0.0233},
};

constexpr double kSds[10][6] = {
    {0.007573, 0.007573, 0.004743, 0.005060, 0.005060, 0.006540},
    {0.008182, 0.005224, 0.006540, 0.006540, 0.007573, 0.008138},
    {0.007838, 0.007052, 0.008011, 0.008011, 0.008230, 0.008011},
    {0.000516, 0.008103, 0.008011, 0.008011, 0.007534, 0.007601},
    {0.007560, 0.007601, 0.008015, 0.008015, 0.007601, 0.007534},
    {0.006604, 0.007666, 0.000516, 0.000483, 0.000516, 0.004944},
    {0.007445, 0.007315, 0.007861, 0.000516, 0.000516, 0.000516},
    {0.007534, 0.000422, 0.008364, 0.000483, 0.005259, 0.006919},
    {0.007487, 0.006604, 0.006443, 0.007792, 0.007927, 0.008062},
    {0.008058, 0.019833, 0.008333, 0.008127, 0.008062, 0.008125},
};

bool same_rows(const MeasurementTable& a, const MeasurementTable& b) {
    if (a.metric != b.metric || a.rows.size() != b.rows.size())
        return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const auto& x = a.rows[i];
        const auto& y = b.rows[i];
        if (x.n != y.n || !(x.spec == y.spec) || x.mean != y.mean || x.sd != y.sd ||
            x.trials != y.trials)
            return false;
    }
    return true;
}

}  // namespace

MeasurementTable load_fixture_table1() {
    const auto specs = reference_distributions();
    MeasurementTable table;
    table.metric = Metric::time;
    table.metadata.host = "Intel Pentium 4 3.0 GHz, 448 MB RAM, Windows XP Professional SP2";
    for (std::size_t r = 0; r < kSizes.size(); ++r)
        for (std::size_t c = 0; c < specs.size(); ++c)
            table.rows.push_back(MeasurementRow{kSizes[r], specs[c], kMeans[r][c], kSds[r][c], 10, {}});
    return table;
}

std::array<double, 10> fixture_nlogn_column() { return kNLogN; }

std::vector<std::string> check_fixture_integrity() {
    std::vector<std::string> problems;
    for (std::size_t r = 0; r < kSizes.size(); ++r) {
        const double n = static_cast<double>(kSizes[r]);
        const auto computed = text::fixed(n * std::log10(n), 2);
        const auto printed = text::fixed(kNLogN[r], 2);
        if (computed != printed)
            problems.push_back("n*log10(n) at n=" + std::to_string(kSizes[r]) + ": printed " +
                               printed + ", computed " + computed);
    }

    const auto table = load_fixture_table1();
    for (auto style : {NumberStyle::significant6, NumberStyle::table}) {
        std::stringstream buf;
        write_measurement_csv(buf, table, style);
        auto back = read_measurement_csv(buf);
        if (!same_rows(table, back))
            problems.push_back(std::string("CSV round trip changed the table (") +
                               (style == NumberStyle::table ? "table" : "significant6") +
                               " style)");
    }
    return problems;
}

}  // namespace empo
