#pragma once

namespace idealcalc {

// Comparison tolerances shared by the library, the suites and the tests.
// Inequalities get an absolute slack; equalities are checked relatively.
inline constexpr double kIneqSlack = 1e-10;        // absolute slack for order comparisons
inline constexpr double kEqRel = 1e-8;             // relative tolerance for equalities
inline constexpr double kWitnessRecompute = 1e-9;  // witness image norm must reproduce the estimate
inline constexpr double kRecoveryTol = 1e-9;       // generator recovery residual ceiling
inline constexpr double kSearchWindow = 0.02;      // search estimate vs analytic value (relative)

// Singular values below this fraction of the largest are rounding noise
// (the decomposition's backward error is a few ulps of s_1) and are
// clamped to zero.  Quasi-norms with p < 1 amplify such noise: a spurious
// 1e-16 contributes 1e-8 to a schatten:p=0.5 norm.
inline constexpr double kSvNoiseRel = 1e-13;

}  // namespace idealcalc
