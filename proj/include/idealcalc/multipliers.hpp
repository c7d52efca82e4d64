#pragma once

#include <cstdint>
#include <string>

#include "idealcalc/operators.hpp"
#include "idealcalc/sequences.hpp"
#include "idealcalc/spaces.hpp"

namespace idealcalc {

struct SearchBudget {
    int restarts = 32;
    int ascent_steps = 200;
    std::uint64_t seed = 1;
};

enum class EstimateStatus {
    exact_analytic,  // value from a registered closed form, witness attains it
    lower_bound,     // best value found by search; the supremum may be larger
};

// A one-sided estimate of a supremum together with the point attaining it.
// The witness always satisfies the unit-ball constraint, and re-evaluating
// the objective at the witness reproduces value to kWitnessRecompute.
struct NormEstimate {
    double value = 0.0;
    EstimateStatus status = EstimateStatus::lower_bound;
    std::string method;
    std::int64_t evaluations = 0;
    Sequence witness_seq;  // sequence estimates
    Matrix witness_mat;    // operator estimates

    // FNV-1a over the witness bytes; stable across runs with equal seeds.
    std::string witness_digest() const;
};

struct MultiplierOptions {
    bool use_analytic = true;  // take registered closed forms when they apply
    bool right_side = false;   // operator case: sup of ||x a|| instead of ||a x||
};

// sup { ||xi . eta||_F : ||eta||_G <= 1 } over coordinatewise multipliers.
// Closed forms when registered (see analytic_multiplier_space); otherwise
// projected coordinate ascent over nonnegative decreasing eta from a
// deterministic witness family plus seeded restarts.
NormEstimate multiplier_norm_seq(const SpaceSpec& F, const SpaceSpec& G, const Sequence& xi,
                                 const SearchBudget& budget = {},
                                 const MultiplierOptions& options = {});

// Closed form for the schatten pair: ||xi||_q with 1/q = 1/r - 1/p.
// Requires r < p; otherwise every bounded sequence multiplies and the
// supremum is the top entry, which this oracle refuses to conflate.
double holder_oracle(double r, double p, const Sequence& xi);

// sup { ||a x||_J : ||x||_I <= 1 } (or ||x a|| with right_side).  Closed
// forms reduce to the singular value sequence of a; the search aligns
// diagonal witnesses with the singular frame of a and polishes with
// random-direction ascent over the unit ball of I.
NormEstimate multiplier_norm_op(const SpaceSpec& J, const SpaceSpec& I, const Matrix& a,
                                const SearchBudget& budget = {},
                                const MultiplierOptions& options = {});

}  // namespace idealcalc
