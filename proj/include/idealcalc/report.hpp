#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace idealcalc {

// One verified inequality: asserts lhs <= rhs + tol, margin = rhs - lhs.
// Equality checks record lhs = |difference| against an explicit allowance.
struct CheckRecord {
    std::string suite;
    std::string params;  // canonical "key=value ..." text, sortable
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct ReportSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    double max_violation = 0.0;  // worst -margin among failing records, else 0
};

struct ExperimentReport {
    std::uint64_t seed = 0;
    std::string generated;  // wall-clock stamp, excluded from determinism
    std::vector<CheckRecord> records;

    ReportSummary summary() const;
    bool all_pass() const;
};

// Fixed column order: suite,params,lhs,rhs,margin,tol,pass.  The generated
// stamp lives on its own comment line so reports diff cleanly.
std::string to_csv(const ExperimentReport& report);

// Flat array of records under "records", with seed and summary alongside.
std::string to_json(const ExperimentReport& report);

// Per-suite totals for terminal output.
std::string to_table(const ExperimentReport& report);

std::string current_timestamp();

}  // namespace idealcalc
