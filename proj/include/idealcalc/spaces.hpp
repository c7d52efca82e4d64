#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idealcalc/sequences.hpp"

namespace idealcalc {

enum class SpaceKind { schatten, lorentz, marcinkiewicz, uniform };

enum class WeightFamily { harmonic, power, ones, custom };

// Weight table for Lorentz / Marcinkiewicz spaces.  Families:
//   harmonic    w_n = 1/n
//   power:alpha w_n = n^-alpha, 0 < alpha < 1
//   ones        w_n = 1
// Tables are positive and nonincreasing; w_1 = 1 normalizes the span of e_1.
std::vector<double> make_weights(WeightFamily family, int n, double alpha = 0.0);

// A symmetric sequence space, doubling as the ideal it generates.
// Construct through the factories; they validate parameters.
class SpaceSpec {
public:
    static SpaceSpec schatten(double p);
    static SpaceSpec lorentz(WeightFamily family, int n, double p, double alpha = 0.0);
    static SpaceSpec marcinkiewicz(WeightFamily family, int n, double p, double alpha = 0.0);
    // Custom weight tables; unnormalized (w_1 != 1) only behind the flag.
    static SpaceSpec lorentz_custom(const std::vector<double>& w, double p,
                                    bool allow_unnormalized = false);
    static SpaceSpec marcinkiewicz_custom(const std::vector<double>& w, double p,
                                          bool allow_unnormalized = false);
    static SpaceSpec uniform();

    // Canonical textual form, e.g. "schatten:p=0.5",
    // "lorentz:p=1:w=harmonic:n=64", "marcinkiewicz:p=2:w=power:0.5:n=64",
    // "uniform".  parse() accepts exactly what to_string() emits.
    static SpaceSpec parse(const std::string& text);
    std::string to_string() const;

    SpaceKind kind() const { return kind_; }
    double exponent() const { return p_; }
    WeightFamily weight_family() const { return family_; }
    double weight_alpha() const { return alpha_; }
    const std::vector<double>& weights() const { return weights_; }
    // Prefix sums W_k of the weight table.
    const std::vector<double>& weight_sums() const { return weight_sums_; }
    bool normalized() const { return normalized_; }

    bool operator==(const SpaceSpec& other) const;
    bool operator!=(const SpaceSpec& other) const { return !(*this == other); }

private:
    SpaceSpec() = default;

    SpaceKind kind_ = SpaceKind::uniform;
    double p_ = 0.0;
    WeightFamily family_ = WeightFamily::custom;
    double alpha_ = 0.0;
    std::vector<double> weights_;
    std::vector<double> weight_sums_;
    bool normalized_ = true;
};

// Norm of the decreasing rearrangement of xi in the given space.
// Weighted kinds require len(xi) <= len(weights).
double seq_norm(const SpaceSpec& space, const Sequence& xi);

// Modulus of concavity of the quasi-triangle inequality:
// 2^(1/p - 1) for schatten p < 1, otherwise 1.
double concavity_modulus(const SpaceSpec& space);

// Constant D_m with ||sigma_m(xi)||_E <= D_m ||xi||_E:
// D_1 = 1 and D_m = C + C^2 + ... + C^(m-2) + 2 C^(m-1) for m >= 2,
// where C is the modulus of concavity.  At C = 1 this equals m, which is
// attained by sigma_m on the trace norm, so the constant is sharp there.
double dilation_constant(const SpaceSpec& space, int m);

// Result of the analytic multiplier-space lookup for a pair (F, G):
// the space of coordinatewise multipliers G -> F when a closed form is
// registered, the whole bounded algebra when every bounded sequence
// multiplies, and unknown otherwise.
struct MultiplierSpace {
    enum class Kind { space, whole_space, unknown };
    Kind kind = Kind::unknown;
    std::optional<SpaceSpec> space;  // set iff kind == Kind::space
};

// Registered closed forms:
//   F == G                                  -> whole space
//   F uniform                               -> whole space
//   G uniform                               -> F
//   schatten r : schatten p, r < p          -> schatten q, 1/q = 1/r - 1/p
//   schatten r : schatten p, r >= p         -> whole space
//   schatten p : lorentz(w, p)              -> marcinkiewicz(w, p)
MultiplierSpace analytic_multiplier_space(const SpaceSpec& F, const SpaceSpec& G);

// Spaces exercised by the default experiment suites.
std::vector<SpaceSpec> default_space_registry();

}  // namespace idealcalc
