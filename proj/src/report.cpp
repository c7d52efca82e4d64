#include "idealcalc/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <map>

#include "json.hpp"

namespace idealcalc {

namespace {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

ReportSummary ExperimentReport::summary() const {
    ReportSummary s;
    s.total = records.size();
    for (const CheckRecord& r : records) {
        if (r.pass)
            ++s.passed;
        else
            s.max_violation = std::max(s.max_violation, -r.margin);
    }
    return s;
}

bool ExperimentReport::all_pass() const {
    return std::all_of(records.begin(), records.end(),
                       [](const CheckRecord& r) { return r.pass; });
}

std::string to_csv(const ExperimentReport& report) {
    const ReportSummary s = report.summary();
    std::string out;
    out += "# generated = " + report.generated + "\n";
    out += "# seed = " + std::to_string(report.seed) + "\n";
    out += "suite,params,lhs,rhs,margin,tol,pass\n";
    for (const CheckRecord& r : report.records) {
        out += r.suite;
        out += ',';
        out += r.params;
        out += ',';
        out += format_double(r.lhs);
        out += ',';
        out += format_double(r.rhs);
        out += ',';
        out += format_double(r.margin);
        out += ',';
        out += format_double(r.tol);
        out += ',';
        out += r.pass ? '1' : '0';
        out += '\n';
    }
    out += "# summary total=" + std::to_string(s.total) + " passed=" + std::to_string(s.passed) +
           " max_violation=" + format_double(s.max_violation) + "\n";
    return out;
}

std::string to_json(const ExperimentReport& report) {
    const ReportSummary s = report.summary();
    nlohmann::ordered_json doc;
    doc["generated"] = report.generated;
    doc["seed"] = report.seed;
    doc["records"] = nlohmann::ordered_json::array();
    for (const CheckRecord& r : report.records) {
        nlohmann::ordered_json rec;
        rec["suite"] = r.suite;
        rec["params"] = r.params;
        rec["lhs"] = r.lhs;
        rec["rhs"] = r.rhs;
        rec["margin"] = r.margin;
        rec["tol"] = r.tol;
        rec["pass"] = r.pass;
        doc["records"].push_back(std::move(rec));
    }
    doc["summary"] = {{"total", s.total}, {"passed", s.passed}, {"max_violation", s.max_violation}};
    return doc.dump(2) + "\n";
}

std::string to_table(const ExperimentReport& report) {
    struct Row {
        std::size_t total = 0;
        std::size_t passed = 0;
        double worst = 0.0;  // smallest margin
        bool seen = false;
    };
    std::map<std::string, Row> rows;
    for (const CheckRecord& r : report.records) {
        Row& row = rows[r.suite];
        ++row.total;
        if (r.pass) ++row.passed;
        row.worst = row.seen ? std::min(row.worst, r.margin) : r.margin;
        row.seen = true;
    }
    std::string out;
    char line[160];
    std::snprintf(line, sizeof(line), "%-34s %8s %8s %14s\n", "suite", "checks", "passed",
                  "min margin");
    out += line;
    for (const auto& [name, row] : rows) {
        std::snprintf(line, sizeof(line), "%-34s %8zu %8zu %14.3e\n", name.c_str(), row.total,
                      row.passed, row.worst);
        out += line;
    }
    const ReportSummary s = report.summary();
    std::snprintf(line, sizeof(line), "%-34s %8zu %8zu %14s\n", "total", s.total, s.passed,
                  report.all_pass() ? "all pass" : "FAILURES");
    out += line;
    return out;
}

std::string current_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace idealcalc
