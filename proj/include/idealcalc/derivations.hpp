#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "idealcalc/multipliers.hpp"
#include "idealcalc/operators.hpp"
#include "idealcalc/spaces.hpp"

namespace idealcalc {

// Inner derivation x -> [generator, x].  Scalar shifts of the generator
// induce the same map, so every report below works with the gauge
// representative that annihilates the first basis vector.
struct DerivationSpec {
    Matrix generator;
};

// [a, x].
Matrix apply(const DerivationSpec& d, const Matrix& x);

// Splits d into two derivations with skew-hermitian generators,
// d = first + i . second; both halves then commute with the adjoint:
// first(x*) = (first(x))*.
std::pair<DerivationSpec, DerivationSpec> split_star(const DerivationSpec& d);

// Everything norm_estimate knows about sup { ||[a,x]||_J : ||x||_I <= 1 }.
struct DerivationNormReport {
    std::string space_i;  // domain ideal
    std::string space_j;  // target ideal
    int n = 0;
    std::uint64_t seed = 0;

    NormEstimate estimate;   // lower bound with matrix witness
    Matrix gauge_generator;  // a - a_11 * id
    double op_norm_gauge = 0.0;

    // The product bound 2 C ||a||_{J:I}; an upper bound for the true norm
    // whenever the multiplier value is exact (multiplier_exact).
    double concavity = 1.0;
    double multiplier_value = 0.0;
    bool multiplier_exact = false;
    double upper_bound = 0.0;
};

// Estimate the derivation norm from I to J.  The witness family seeds the
// search with rank-one frames of the gauge generator and matrix units; the
// estimate is always a certified lower bound, and op_norm_gauge <= estimate
// up to tolerance by construction.
DerivationNormReport norm_estimate(const DerivationSpec& d, const SpaceSpec& I,
                                   const SpaceSpec& J, const SearchBudget& budget = {});

// Result of probing a black-box linear map for its commutator generator.
struct GeneratorRecovery {
    Matrix gauge_generator;     // candidate generator, gauge fixed
    double max_probe_residual;  // max ||delta(x) - [generator, x]||_F over unit probes
    int probes;
};

// Reads the generator off the images of the first-column matrix units:
// the candidate's k-th column is delta(E_k1) e_1.  Raises NotLinearError
// when the map fails random linearity probes; a large residual means the
// map is linear but not an inner derivation.
GeneratorRecovery recover_generator(const std::function<Matrix(const Matrix&)>& delta, int n,
                                    int probe_count = 8, std::uint64_t seed = 1);

}  // namespace idealcalc
