#pragma once

#include "idealcalc/config.hpp"
#include "idealcalc/report.hpp"

namespace idealcalc {

// Executes every requested suite and returns the canonically ordered report
// (sorted by suite then params, independent of execution order).  Suites run
// concurrently up to IDEALCALC_THREADS; each one derives its randomness from
// (config seed, suite name), so the records never depend on scheduling.
// Numeric failures inside a suite become failing records, not exceptions.
ExperimentReport run(const ExperimentConfig& config);

}  // namespace idealcalc
