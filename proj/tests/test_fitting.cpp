#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "empo/fitting.hpp"
#include "empo/fixture.hpp"
#include "empo/rng.hpp"

using namespace empo;

namespace {

std::vector<double> grid() {
    std::vector<double> ns;
    for (int n = 5000; n <= 50000; n += 5000)
        ns.push_back(n);
    return ns;
}

std::vector<double> fixture_column(std::size_t index) {
    auto table = load_fixture_table1();
    return table.column(reference_distributions()[index]).means;
}

const std::vector<ComplexityClass> kDefaultPair = {ComplexityClass::n_log_n,
                                                 ComplexityClass::n_squared};

}  // namespace

TEST_CASE("class evaluation and naming") {
    CHECK(evaluate(ComplexityClass::constant, 10) == 1.0);
    CHECK(evaluate(ComplexityClass::n_log_n, std::exp(1.0)) == doctest::Approx(std::exp(1.0)));
    CHECK(evaluate(ComplexityClass::n_1_5, 4) == 8.0);
    CHECK(evaluate(ComplexityClass::n_squared, 3) == 9.0);
    for (auto c : all_classes()) {
        CHECK(parse_class(token(c)) == c);
        CHECK(parse_class(display_name(c)) == c);
        if (c != ComplexityClass::constant) {
            for (double n = 2; n < 1e6; n *= 1.7) {
                CHECK(evaluate(c, n) > 0.0);
                CHECK(evaluate(c, n * 1.1) > evaluate(c, n));
            }
        }
    }
    CHECK(parse_class("N^2") == ComplexityClass::n_squared);
    CHECK_THROWS_AS(parse_class("n^3"), std::invalid_argument);
    CHECK(parse_class_list("nlogn, n2,nlogn") == kDefaultPair);
    CHECK_THROWS_AS(parse_class_list(" , "), std::invalid_argument);
    CHECK(notation_for(ComplexityClass::n_squared) == "y_avg(n) = O_emp(n^2)");
    CHECK(notation_for(ComplexityClass::n_log_n) == "y_avg(n) = O_emp(n log n)");
}

TEST_CASE("exact quadratic recovery") {
    auto ns = grid();
    std::vector<double> ys;
    for (double n : ns)
        ys.push_back(2.0 * n * n);
    auto r = fit(ns, ys, ComplexityClass::n_squared);
    CHECK(r.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(r.intercept) < 1e-3);
    CHECK(r.r_squared == doctest::Approx(1.0).epsilon(1e-12));

    auto origin = fit(ns, ys, ComplexityClass::n_squared, FitMode::origin);
    CHECK(origin.intercept == 0.0);
    CHECK(origin.slope == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("constant data fits every class perfectly with zero slope") {
    auto ns = grid();
    std::vector<double> ys(ns.size(), 7.0);
    for (auto c : all_classes()) {
        auto r = fit(ns, ys, c);
        CHECK(r.slope == 0.0);
        CHECK(r.intercept == doctest::Approx(7.0));
        CHECK(r.r_squared == 1.0);
    }
    auto v = select_bound(ns, ys, all_classes());
    CHECK(v.selected == ComplexityClass::constant);
    for (const auto& panel : fit_report(v, ns, ys))
        for (const auto& p : panel.points)
            CHECK(p.fitted == doctest::Approx(7.0));
}

TEST_CASE("fit preconditions") {
    std::vector<double> two_n{1, 2};
    std::vector<double> two_y{1, 2};
    CHECK_THROWS_AS(fit(two_n, two_y, ComplexityClass::n), std::invalid_argument);
    std::vector<double> ns{1, 3, 2};
    std::vector<double> ys{1, 2, 3};
    CHECK_THROWS_AS(fit(ns, ys, ComplexityClass::n), std::invalid_argument);
    std::vector<double> short_y{1, 2};
    std::vector<double> ok_n{1, 2, 3};
    CHECK_THROWS_AS(fit(ok_n, short_y, ComplexityClass::n), std::invalid_argument);
    std::vector<ComplexityClass> none;
    CHECK_THROWS_AS(select_bound(ok_n, ys, none), std::invalid_argument);

    std::vector<double> flat{4, 4, 4};
    try {
        fit_column(flat, ys, ComplexityClass::n_log_n);
        FAIL("expected degenerate design error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("n log n") != std::string::npos);
    }
}

TEST_CASE("fixture verdicts") {
    auto ns = grid();
    const ComplexityClass expected[] = {ComplexityClass::n_squared, ComplexityClass::n_squared,
                                        ComplexityClass::n_squared, ComplexityClass::n_log_n,
                                        ComplexityClass::n_log_n,   ComplexityClass::n_log_n};
    for (std::size_t i = 0; i < 6; ++i) {
        auto ys = fixture_column(i);
        auto v = select_bound(ns, ys, kDefaultPair);
        INFO(reference_distributions()[i].to_string());
        CHECK(v.selected == expected[i]);
        CHECK(v.notation == notation_for(expected[i]));
    }

    auto poisson = fixture_column(1);
    auto quad = fit(ns, poisson, ComplexityClass::n_squared);
    auto nlogn = fit(ns, poisson, ComplexityClass::n_log_n);
    CHECK(quad.r_squared > nlogn.r_squared);

    auto v = select_bound(ns, poisson, kDefaultPair);
    auto panels = fit_report(v, ns, poisson);
    REQUIRE(panels.size() == 2);
    auto ss = [](const PlotPanel& p) {
        double s = 0;
        for (const auto& pt : p.points)
            s += (pt.observed - pt.fitted) * (pt.observed - pt.fitted);
        return s;
    };
    const auto& p_nlogn = panels[0].cls == ComplexityClass::n_log_n ? panels[0] : panels[1];
    const auto& p_quad = panels[0].cls == ComplexityClass::n_squared ? panels[0] : panels[1];
    CHECK(ss(p_quad) < ss(p_nlogn));
}

TEST_CASE("exact n ln n data selects n log n among all classes") {
    auto ns = grid();
    std::vector<double> ys;
    for (double n : ns)
        ys.push_back(3.0 * n * std::log(n));
    auto v = select_bound(ns, ys, all_classes());
    CHECK(v.selected == ComplexityClass::n_log_n);
    CHECK(v.result_for(ComplexityClass::n_log_n)->r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(v.per_class.size() == 6);
}

TEST_CASE("fit report on exact quadratic data") {
    auto ns = grid();
    std::vector<double> ys;
    for (double n : ns)
        ys.push_back(0.5 * n * n + 3.0);
    auto v = select_bound(ns, ys, kDefaultPair);
    for (const auto& panel : fit_report(v, ns, ys)) {
        REQUIRE(panel.points.size() == ns.size());
        if (panel.cls == ComplexityClass::n_squared)
            for (const auto& p : panel.points)
                CHECK(p.fitted == doctest::Approx(p.observed).epsilon(1e-12));
    }
}

TEST_CASE("ties break toward the slower-growing class") {
    std::vector<double> ns{1, 2, 3, 4};
    std::vector<double> ys{5, 5, 5, 5};
    std::vector<ComplexityClass> reversed = {ComplexityClass::n_squared, ComplexityClass::n,
                                             ComplexityClass::n_log_n};
    CHECK(select_bound(ns, ys, reversed).selected == ComplexityClass::n);
}

TEST_CASE("R^2 stays in [0, 1]") {
    std::vector<double> ns{1, 2, 3, 4, 5};
    std::vector<double> ys{5, -3, 8, -10, 2};
    for (auto c : all_classes())
        for (auto mode : {FitMode::intercept, FitMode::origin}) {
            auto r = fit(ns, ys, c, mode);
            CHECK(r.r_squared >= 0.0);
            CHECK(r.r_squared <= 1.0);
        }
}

TEST_CASE("property: exact recovery for every class") {
    Rng rng(606);
    auto ns = grid();
    for (int iter = 0; iter < 40; ++iter) {
        for (auto c : all_classes()) {
            const double a = 0.01 + 100.0 * rng.next_unit();
            const double b = 0.001 + 10.0 * rng.next_unit();
            std::vector<double> ys;
            for (double n : ns)
                ys.push_back(a + b * evaluate(c, n));
            auto v = select_bound(ns, ys, all_classes());
            INFO("class ", token(c), " a=", a, " b=", b);
            CHECK(v.selected == c);
            CHECK(v.result_for(c)->r_squared == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("property: affine change of the response leaves R^2 and verdict unchanged") {
    Rng rng(707);
    auto ns = grid();
    for (std::size_t col = 0; col < 6; ++col) {
        auto ys = fixture_column(col);
        auto base = select_bound(ns, ys, all_classes());
        for (int iter = 0; iter < 20; ++iter) {
            const double c = std::pow(10.0, 6.0 * rng.next_unit() - 3.0);
            const double d = 200.0 * rng.next_unit() - 100.0;
            std::vector<double> scaled;
            for (double y : ys)
                scaled.push_back(c * y + d);
            auto v = select_bound(ns, scaled, all_classes());
            CHECK(v.selected == base.selected);
            for (std::size_t k = 0; k < v.per_class.size(); ++k)
                CHECK(std::abs(v.per_class[k].r_squared - base.per_class[k].r_squared) < 1e-9);
        }
    }
}

TEST_CASE("property: log base does not change the n log n fit") {
    auto ns = grid();
    for (std::size_t col = 0; col < 6; ++col) {
        auto ys = fixture_column(col);
        std::vector<double> f2, fe, f10;
        for (double n : ns) {
            f2.push_back(n * std::log2(n));
            fe.push_back(n * std::log(n));
            f10.push_back(n * std::log10(n));
        }
        auto r2 = fit_column(f2, ys, ComplexityClass::n_log_n).r_squared;
        auto re = fit_column(fe, ys, ComplexityClass::n_log_n).r_squared;
        auto r10 = fit_column(f10, ys, ComplexityClass::n_log_n).r_squared;
        CHECK(std::abs(r2 - re) < 1e-12);
        CHECK(std::abs(r10 - re) < 1e-12);
    }
}
