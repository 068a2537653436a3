#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "empo/cli.hpp"
#include "empo/rng.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "empirical-o");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = empo::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    static empo::Rng rng(static_cast<std::uint64_t>(::getpid()));
    auto dir = fs::temp_directory_path() / ("empo_cli_" + name + "_" + std::to_string(rng.next_u64() % 1000000));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("run with comparisons is byte-reproducible") {
    auto a = scratch("run_a");
    auto b = scratch("run_b");
    std::vector<std::string> common = {"run", "--metric", "comparisons", "--n-min", "1000",
                                       "--n-max", "8000", "--n-step", "1000", "--trials", "5",
                                       "--seed", "42"};
    auto args_a = common;
    args_a.insert(args_a.end(), {"--out-dir", a.string()});
    auto args_b = common;
    args_b.insert(args_b.end(), {"--out-dir", b.string(), "--threads", "1"});
    auto ra = invoke(args_a);
    auto rb = invoke(args_b);
    REQUIRE(ra.code == 0);
    REQUIRE(rb.code == 0);
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
        auto other = b / entry.path().filename();
        REQUIRE(fs::exists(other));
        CHECK(slurp(entry.path()) == slurp(other));
        ++files;
    }
    // means, sds, verdicts, 6 distributions x 2 classes of plot data
    CHECK(files == 3 + 12);
    CHECK(ra.out.find("y_avg(n) = O_emp(n^2)") != std::string::npos);

    auto sds = lines(slurp(a / "sds.csv"));
    CHECK(sds.size() == 9);
    CHECK(sds[0].rfind("n,", 0) == 0);
    auto plot = lines(slurp(a / "poisson_lambda_1_n2.csv"));
    CHECK(plot[0] == "n,observed,fitted");
    CHECK(plot.size() == 9);
}

TEST_CASE("run: poisson over the default grid is quadratic, continuous uniform is n log n") {
    auto dir = scratch("run_default");
    auto r = invoke({"run", "--metric", "comparisons", "--dist", "poisson:lambda=1", "--dist",
                     "cuniform:theta=1", "--trials", "2", "--out-dir", dir.string()});
    REQUIRE(r.code == 0);
    auto verdicts = lines(slurp(dir / "verdicts.csv"));
    REQUIRE(verdicts.size() == 3);
    CHECK(verdicts[0] == "distribution,selected_class,r2_nlogn,r2_n2");
    CHECK(verdicts[1].rfind("poisson:lambda=1,n2,", 0) == 0);
    CHECK(verdicts[2].rfind("cuniform:theta=1,nlogn,", 0) == 0);
    auto means = lines(slurp(dir / "means.csv"));
    // metric and seed comments, header, 10 sizes x 2 distributions
    CHECK(means.size() == 2 + 1 + 20);
}

TEST_CASE("refit-fixture reproduces the six published verdicts") {
    auto dir = scratch("refit");
    auto r = invoke({"refit-fixture", "--out-dir", dir.string()});
    REQUIRE(r.code == 0);
    auto verdicts = lines(slurp(dir / "verdicts.csv"));
    REQUIRE(verdicts.size() == 7);
    CHECK(verdicts[1].rfind("\"binomial:m=100,p=0.5\",n2,", 0) == 0);
    CHECK(verdicts[2].rfind("poisson:lambda=1,n2,", 0) == 0);
    CHECK(verdicts[3].rfind("duniform:k=50,n2,", 0) == 0);
    CHECK(verdicts[4].rfind("cuniform:theta=1,nlogn,", 0) == 0);
    CHECK(verdicts[5].rfind("exponential:theta=1,nlogn,", 0) == 0);
    CHECK(verdicts[6].rfind("\"normal:mean=0,sd=1\",nlogn,", 0) == 0);

    auto single = scratch("refit_single");
    auto s = invoke({"refit-fixture", "--classes", "nlogn", "--out-dir", single.string()});
    REQUIRE(s.code == 0);
    auto sv = lines(slurp(single / "verdicts.csv"));
    REQUIRE(sv.size() == 7);
    for (std::size_t i = 1; i < sv.size(); ++i) {
        CHECK(sv[i].find(",nlogn,") != std::string::npos);
        CHECK(sv[i].back() == ',');  // no n^2 candidate, empty r2_n2
    }
}

TEST_CASE("fit reproduces the verdicts of the run that wrote the table") {
    auto dir = scratch("fit_roundtrip");
    auto run = invoke({"run", "--metric", "comparisons", "--n-min", "500", "--n-max", "3000",
                       "--n-step", "500", "--trials", "3", "--out-dir", dir.string()});
    REQUIRE(run.code == 0);
    auto again = scratch("fit_roundtrip_out");
    auto fit = invoke({"fit", (dir / "means.csv").string(), "--out-dir", again.string()});
    REQUIRE(fit.code == 0);
    CHECK(slurp(dir / "verdicts.csv") == slurp(again / "verdicts.csv"));
}

TEST_CASE("fit on synthetic quadratic data") {
    auto dir = scratch("fit_synth");
    {
        std::ofstream f(dir / "quad.csv");
        f << "metric,n,distribution,mean,sd,trials\n";
        for (int n = 1000; n <= 5000; n += 1000)
            f << "comparisons," << n << ",duniform:k=5," << double(n) * n << ",0,1\n";
    }
    auto r = invoke({"fit", (dir / "quad.csv").string(), "--out-dir", dir.string(), "--classes",
                     "n,nlogn,n2"});
    REQUIRE(r.code == 0);
    auto verdicts = lines(slurp(dir / "verdicts.csv"));
    CHECK(verdicts[1].rfind("duniform:k=5,n2,", 0) == 0);
    CHECK(fs::exists(dir / "duniform_k_5_n.csv"));
}

TEST_CASE("fit rejects tables with fewer than 3 points per distribution") {
    auto dir = scratch("fit_short");
    {
        std::ofstream f(dir / "short.csv");
        f << "metric,n,distribution,mean,sd,trials\n"
          << "time,100,poisson:lambda=1,0.1,0,10\n"
          << "time,200,poisson:lambda=1,0.4,0,10\n";
    }
    auto r = invoke({"fit", (dir / "short.csv").string(), "--out-dir", dir.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("at least 3 points") != std::string::npos);
}

TEST_CASE("fit reports malformed CSV with the line number") {
    auto dir = scratch("fit_bad");
    {
        std::ofstream f(dir / "bad.csv");
        f << "# seed=3\nmetric,n,distribution,mean,sd,trials\n"
          << "time,100,poisson:lambda=1,0.1,0,10\n"
          << "time,200,poisson:lambda=1,zero,0,10\n";
    }
    auto r = invoke({"fit", (dir / "bad.csv").string(), "--out-dir", dir.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("bad.csv:4:") != std::string::npos);

    auto missing = invoke({"fit", (dir / "nope.csv").string()});
    CHECK(missing.code == 2);
}

TEST_CASE("configuration errors exit with code 2") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"run", "--bogus"}).code == 2);
    CHECK(invoke({"run", "--dist", "gamma:k=1"}).code == 2);
    CHECK(invoke({"run", "--metric", "cycles"}).code == 2);
    CHECK(invoke({"run", "--n-min", "10", "--n-max", "5"}).code == 2);
    CHECK(invoke({"run", "--n-min", "10", "--n-max", "20", "--n-step", "10"}).code == 2);
    CHECK(invoke({"run", "--trials", "0", "--n-min", "10", "--n-max", "30", "--n-step", "10"}).code == 2);
    CHECK(invoke({"refit-fixture", "--classes", "n^3"}).code == 2);
    CHECK(invoke({"refit-fixture", "--fit-mode", "lasso"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("origin fit mode is selectable") {
    auto dir = scratch("origin");
    auto r = invoke({"refit-fixture", "--fit-mode", "origin", "--out-dir", dir.string()});
    CHECK(r.code == 0);
    CHECK(lines(slurp(dir / "verdicts.csv")).size() == 7);
}
