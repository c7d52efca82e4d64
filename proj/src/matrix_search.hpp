#pragma once

// Internal: hill climbing over the unit sphere of an ideal norm.  Shared by
// the multiplier and derivation estimators; not part of the public API.

#include <cstdint>
#include <functional>
#include <utility>

#include "idealcalc/operators.hpp"
#include "idealcalc/random.hpp"
#include "idealcalc/spaces.hpp"

namespace idealcalc::detail {

using MatrixObjective = std::function<double(const Matrix&)>;

struct MatrixSearchState {
    Matrix best_x;
    double best_value = -1.0;
    std::int64_t evaluations = 0;
};

// Normalize in I and evaluate once.
inline void consider_matrix(MatrixSearchState& state, const SpaceSpec& I,
                            const MatrixObjective& objective, Matrix x) {
    const double norm = ideal_norm(I, x);
    if (!(norm > 0.0)) return;
    x /= norm;
    ++state.evaluations;
    const double value = objective(x);
    if (value > state.best_value) {
        state.best_value = value;
        state.best_x = std::move(x);
    }
}

// Random-direction ascent with a decaying step; stops a restart after a
// stale stretch.  Deterministic for a fixed rng state.
inline void ascend_matrix(MatrixSearchState& state, const SpaceSpec& I,
                          const MatrixObjective& objective, Matrix x, int steps, Rng& rng) {
    const double norm = ideal_norm(I, x);
    if (!(norm > 0.0)) return;
    x /= norm;
    ++state.evaluations;
    double current = objective(x);
    if (current > state.best_value) {
        state.best_value = current;
        state.best_x = x;
    }
    const int n = static_cast<int>(x.rows());
    int stale = 0;
    for (int step = 0; step < steps && stale < 60; ++step) {
        const double frac = steps > 1 ? static_cast<double>(step) / (steps - 1) : 1.0;
        const double delta = 0.4 * std::pow(0.02, frac);
        Matrix proposal = x;
        if (step % 3 == 0) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) proposal(i, j) += delta * rng.cnormal();
        } else {
            proposal(rng.index(n), rng.index(n)) += 3.0 * delta * rng.cnormal();
        }
        const double pnorm = ideal_norm(I, proposal);
        if (!(pnorm > 0.0)) continue;
        proposal /= pnorm;
        ++state.evaluations;
        const double value = objective(proposal);
        if (value > current) {
            current = value;
            x = std::move(proposal);
            stale = 0;
            if (current > state.best_value) {
                state.best_value = current;
                state.best_x = x;
            }
        } else {
            ++stale;
        }
    }
}

}  // namespace idealcalc::detail
