#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "idealcalc/operators.hpp"
#include "idealcalc/sequences.hpp"

namespace idealcalc {

// Deterministic random source.  The engine output is fixed by the standard
// and the transforms below avoid std::normal_distribution, whose streams
// differ between standard libraries; reports must be reproducible bytewise.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return (eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int index(int n) {
        return static_cast<int>(eng_() % static_cast<std::uint64_t>(n));
    }

    // Standard normal via Box-Muller on the uniform above.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        constexpr double two_pi = 6.283185307179586476925286766559;
        spare_ = r * std::sin(two_pi * u2);
        have_spare_ = true;
        return r * std::cos(two_pi * u2);
    }

    // Standard complex normal: unit total variance.
    Complex cnormal() {
        const double re = normal();
        const double im = normal();
        return {re * 0.7071067811865475244, im * 0.7071067811865475244};
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Stable sub-seed derivation (FNV-1a over the tag, mixed into the base).
std::uint64_t mix_seed(std::uint64_t base, std::string_view tag);

enum class Ensemble { gaussian, unitary, diagonal };

// gaussian: i.i.d. standard complex normal entries.
// unitary:  Haar distributed, via QR of a gaussian draw with phase fixing.
// diagonal: real standard normal diagonal, zero elsewhere.
Matrix random_matrix(Ensemble ensemble, int n, Rng& rng);

// Entries uniform in [-1, 1].
Sequence random_sequence(int len, Rng& rng);

// Nonnegative, nonincreasing, first entry 1; decays by uniform factors.
Sequence random_decreasing(int len, Rng& rng);

}  // namespace idealcalc
