#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "idealcalc/operators.hpp"
#include "idealcalc/sequences.hpp"
#include "idealcalc/spaces.hpp"

namespace testsupport {

// Exhaustive maximization of ||xi . eta||_F / ||eta||_G over nonincreasing
// eta with entries on the grid {0, 1/k, ..., 1}.  Homogeneity makes the
// scale irrelevant, so grid directions cover the unit ball.  Validation
// only: the cost is the number of nonincreasing level tuples, about 9.4e6
// at length 6 with k = 40.  Targets F must be schatten; sources G may be
// schatten, lorentz or marcinkiewicz.
class SeqGridOracle {
public:
    SeqGridOracle(const idealcalc::SpaceSpec& F, const idealcalc::SpaceSpec& G,
                  const idealcalc::Sequence& xi, int k)
        : G_(G), k_(k), len_(xi.size()) {
        using idealcalc::SpaceKind;
        if (F.kind() != SpaceKind::schatten)
            throw std::invalid_argument("grid oracle: target space must be schatten");
        if (len_ == 0) throw std::invalid_argument("grid oracle: empty sequence");
        r_ = F.exponent();
        p_ = G.kind() == SpaceKind::uniform ? 1.0 : G.exponent();
        const idealcalc::Sequence sorted = idealcalc::decreasing_rearrangement(xi);
        f_table_.resize(len_);
        g_table_.resize(len_);
        for (std::size_t i = 0; i < len_; ++i) {
            f_table_[i].resize(static_cast<std::size_t>(k) + 1);
            g_table_[i].resize(static_cast<std::size_t>(k) + 1);
            for (int v = 0; v <= k; ++v) {
                const double level = static_cast<double>(v) / k;
                f_table_[i][static_cast<std::size_t>(v)] = std::pow(sorted[i] * level, r_);
                double g = 0.0;
                switch (G.kind()) {
                    case SpaceKind::schatten:
                    case SpaceKind::marcinkiewicz:
                        g = std::pow(level, p_);
                        break;
                    case SpaceKind::lorentz:
                        g = std::pow(level, p_) * G.weights()[i];
                        break;
                    case SpaceKind::uniform:
                        g = 0.0;  // handled separately: sup norm is the first level
                        break;
                }
                g_table_[i][static_cast<std::size_t>(v)] = g;
            }
        }
    }

    double value() {
        best_ = 0.0;
        recurse(0, k_, 0.0, 0.0, 0.0);
        return best_;
    }

private:
    void recurse(std::size_t i, int vmax, double acc_f, double acc_g, double marc_best) {
        using idealcalc::SpaceKind;
        if (i == len_) {
            double g_norm = 0.0;
            switch (G_.kind()) {
                case SpaceKind::schatten:
                case SpaceKind::lorentz:
                    g_norm = std::pow(acc_g, 1.0 / p_);
                    break;
                case SpaceKind::marcinkiewicz:
                    g_norm = std::pow(marc_best, 1.0 / p_);
                    break;
                case SpaceKind::uniform:
                    g_norm = top_level_;
                    break;
            }
            if (g_norm > 0.0) best_ = std::max(best_, std::pow(acc_f, 1.0 / r_) / g_norm);
            return;
        }
        for (int v = vmax; v >= 0; --v) {
            if (i == 0) top_level_ = static_cast<double>(v) / k_;
            double next_marc = marc_best;
            double next_g = acc_g + g_table_[i][static_cast<std::size_t>(v)];
            if (G_.kind() == SpaceKind::marcinkiewicz)
                next_marc = std::max(marc_best, next_g / G_.weight_sums()[i]);
            recurse(i + 1, v, acc_f + f_table_[i][static_cast<std::size_t>(v)], next_g, next_marc);
        }
    }

    const idealcalc::SpaceSpec G_;
    int k_;
    std::size_t len_;
    double r_ = 1.0, p_ = 1.0;
    double best_ = 0.0;
    double top_level_ = 0.0;
    std::vector<std::vector<double>> f_table_, g_table_;
};

inline double seq_grid_oracle(const idealcalc::SpaceSpec& F, const idealcalc::SpaceSpec& G,
                              const idealcalc::Sequence& xi, int k) {
    return SeqGridOracle(F, G, xi, k).value();
}

// Exhaustive sweep of real 2x2 operators on the unit sphere of I at the
// given angular resolution (radians, roughly); singular values of the
// 2x2 commutator come from the closed form s^2 = (f +- sqrt(f^2-4d^2))/2.
inline double derivation_grid_oracle_2x2(const idealcalc::SpaceSpec& I,
                                         const idealcalc::SpaceSpec& J,
                                         const idealcalc::Matrix& a, double resolution) {
    using idealcalc::Matrix;
    const double pi = 3.14159265358979323846;
    const int n1 = static_cast<int>(pi / resolution);
    const int n3 = static_cast<int>(2.0 * pi / resolution);
    double best = 0.0;
    Matrix x(2, 2);
    for (int i1 = 0; i1 <= n1; ++i1) {
        const double t1 = pi * i1 / n1;
        for (int i2 = 0; i2 <= n1; ++i2) {
            const double t2 = pi * i2 / n1;
            for (int i3 = 0; i3 < n3; ++i3) {
                const double t3 = 2.0 * pi * i3 / n3;
                // Hypersphere direction in R^4.
                const double c[4] = {std::cos(t1), std::sin(t1) * std::cos(t2),
                                     std::sin(t1) * std::sin(t2) * std::cos(t3),
                                     std::sin(t1) * std::sin(t2) * std::sin(t3)};
                x(0, 0) = c[0];
                x(0, 1) = c[1];
                x(1, 0) = c[2];
                x(1, 1) = c[3];
                const double x_norm = idealcalc::ideal_norm(I, x);
                if (!(x_norm > 0.0)) continue;
                const Matrix d = idealcalc::commutator(a, x) / x_norm;
                const double f = d.squaredNorm();
                const double det = std::abs(d.determinant());
                const double disc = std::max(0.0, f * f - 4.0 * det * det);
                const double s1 = std::sqrt(std::max(0.0, (f + std::sqrt(disc)) / 2.0));
                const double s2 = std::sqrt(std::max(0.0, (f - std::sqrt(disc)) / 2.0));
                best = std::max(best, idealcalc::seq_norm(J, {s1, s2}));
            }
        }
    }
    return best;
}

}  // namespace testsupport
