#include <algorithm>
#include <cstdlib>

#include "doctest.h"
#include "idealcalc/config.hpp"
#include "idealcalc/errors.hpp"
#include "idealcalc/report.hpp"
#include "idealcalc/suites.hpp"
#include "json.hpp"

using idealcalc::CheckRecord;
using idealcalc::ConfigError;
using idealcalc::ExperimentConfig;
using idealcalc::ExperimentReport;
using idealcalc::parse_config;

namespace {

const char* kSmallConfig =
    "# plenty of comments\n"
    "seed = 11\n"
    "format = csv\n"
    "\n"
    "suite rearrangement n=6 samples=4\n"
    "suite calkin-roundtrip n=4 samples=3 spaces=schatten:p=1,uniform\n";

std::string strip_generated(const std::string& csv) {
    std::string out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        const auto end = csv.find('\n', pos);
        const std::string line = csv.substr(pos, end - pos);
        if (line.rfind("# generated", 0) != 0) {
            out += line;
            out += '\n';
        }
        pos = end == std::string::npos ? csv.size() : end + 1;
    }
    return out;
}

}  // namespace

TEST_CASE("config parsing round trips the small grammar") {
    const ExperimentConfig cfg = parse_config(kSmallConfig);
    CHECK(cfg.seed == 11);
    CHECK(cfg.format == "csv");
    REQUIRE(cfg.suites.size() == 2);
    CHECK(cfg.suites[0].name == "rearrangement");
    CHECK(cfg.suites[0].get_int("n", 0) == 6);
    CHECK(cfg.suites[0].get_int("samples", 0) == 4);
    CHECK(cfg.suites[1].get("spaces", "") == "schatten:p=1,uniform");
    CHECK(cfg.suites[1].get_int("missing", 42) == 42);
}

TEST_CASE("config parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_config("bogus line"), ConfigError);
    CHECK_THROWS_AS(parse_config("color = red"), ConfigError);
    CHECK_THROWS_AS(parse_config("format = yaml"), ConfigError);
    CHECK_THROWS_AS(parse_config("seed = -4"), ConfigError);
    CHECK_THROWS_AS(parse_config("seed = seven"), ConfigError);
    CHECK_THROWS_AS(parse_config("suite"), ConfigError);
    CHECK_THROWS_AS(parse_config("suite no-such-suite"), ConfigError);
    CHECK_THROWS_AS(parse_config("suite rearrangement n"), ConfigError);
    CHECK_THROWS_AS(parse_config("suite rearrangement n=0"), ConfigError);
    CHECK_THROWS_AS(parse_config("suite rearrangement samples=x"), ConfigError);
    CHECK_THROWS_AS(parse_config("suite calkin-roundtrip spaces=schatten:p=oops"),
                    ConfigError);
}

TEST_CASE("default config lists every built-in suite once") {
    const ExperimentConfig cfg = idealcalc::default_config();
    REQUIRE(cfg.suites.size() == idealcalc::known_suites().size());
    for (std::size_t i = 0; i < cfg.suites.size(); ++i)
        CHECK(cfg.suites[i].name == idealcalc::known_suites()[i]);
}

TEST_CASE("empty config runs to an empty passing report") {
    const ExperimentReport report = idealcalc::run(parse_config("seed = 5"));
    CHECK(report.seed == 5);
    CHECK(report.records.empty());
    CHECK(report.all_pass());
    CHECK(report.summary().total == 0);
}

TEST_CASE("runs are deterministic and canonically ordered") {
    const ExperimentConfig cfg = parse_config(kSmallConfig);
    const ExperimentReport a = idealcalc::run(cfg);
    const ExperimentReport b = idealcalc::run(cfg);

    CHECK(a.records.size() == 4 * 2 + 3 * 2 * 2);
    CHECK(a.all_pass());
    CHECK(strip_generated(idealcalc::to_csv(a)) == strip_generated(idealcalc::to_csv(b)));

    const bool sorted = std::is_sorted(
        a.records.begin(), a.records.end(), [](const CheckRecord& x, const CheckRecord& y) {
            return x.suite != y.suite ? x.suite < y.suite : x.params <= y.params;
        });
    CHECK(sorted);

    ExperimentConfig reseeded = cfg;
    reseeded.seed = 12;
    const ExperimentReport c = idealcalc::run(reseeded);
    CHECK(strip_generated(idealcalc::to_csv(a)) != strip_generated(idealcalc::to_csv(c)));
}

TEST_CASE("thread count never changes the records") {
    const ExperimentConfig cfg = parse_config(kSmallConfig);
    const ExperimentReport sequential = idealcalc::run(cfg);
    setenv("IDEALCALC_THREADS", "3", 1);
    const ExperimentReport pooled = idealcalc::run(cfg);
    unsetenv("IDEALCALC_THREADS");
    CHECK(strip_generated(idealcalc::to_csv(sequential)) ==
          strip_generated(idealcalc::to_csv(pooled)));
}

TEST_CASE("numeric failures become failing records instead of aborts") {
    // An 8 dimensional matrix cannot be measured against a length 4 weight
    // table; the suite must catch that and report it.
    const ExperimentConfig cfg =
        parse_config("suite calkin-roundtrip n=8 samples=2 spaces=lorentz:p=1:w=harmonic:n=4\n");
    const ExperimentReport report = idealcalc::run(cfg);
    REQUIRE(report.records.size() == 1);
    CHECK(!report.records[0].pass);
    CHECK(report.records[0].params.rfind("check=numeric-failure", 0) == 0);
    CHECK(!report.all_pass());
    CHECK(report.summary().max_violation > 0.0);
}

TEST_CASE("csv and json serializations carry the same content") {
    const ExperimentReport report = idealcalc::run(parse_config(kSmallConfig));
    const std::string csv = idealcalc::to_csv(report);
    CHECK(csv.rfind("# generated = ", 0) == 0);
    CHECK(csv.find("suite,params,lhs,rhs,margin,tol,pass\n") != std::string::npos);
    CHECK(csv.find("# summary total=" + std::to_string(report.records.size())) !=
          std::string::npos);

    const auto doc = nlohmann::json::parse(idealcalc::to_json(report));
    CHECK(doc.at("seed").get<std::uint64_t>() == report.seed);
    CHECK(doc.at("records").size() == report.records.size());
    CHECK(doc.at("summary").at("total").get<std::size_t>() == report.records.size());
    CHECK(doc.at("summary").at("passed").get<std::size_t>() == report.summary().passed);

    const std::string table = idealcalc::to_table(report);
    CHECK(table.find("rearrangement") != std::string::npos);
    CHECK(table.find("all pass") != std::string::npos);
}
