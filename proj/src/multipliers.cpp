#include "idealcalc/multipliers.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "idealcalc/errors.hpp"
#include "idealcalc/random.hpp"
#include "idealcalc/tolerances.hpp"
#include "matrix_search.hpp"

namespace idealcalc {

namespace {

std::uint64_t fnv1a_bytes(const unsigned char* data, std::size_t len, std::uint64_t h) {
    for (std::size_t i = 0; i < len; ++i) {
        h ^= data[i];
        h *= 1099511628211ULL;
    }
    return h;
}

std::string to_hex(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

// L2 projection onto the nonincreasing cone (pool adjacent violators),
// then onto the nonnegative orthant.  Feasibility is all the search needs.
void project_decreasing(Sequence& v) {
    const std::size_t n = v.size();
    if (n == 0) return;
    std::vector<double> level(n), weight(n);
    std::size_t blocks = 0;
    for (std::size_t i = 0; i < n; ++i) {
        level[blocks] = v[i];
        weight[blocks] = 1.0;
        ++blocks;
        while (blocks >= 2 && level[blocks - 1] > level[blocks - 2]) {
            const double w = weight[blocks - 2] + weight[blocks - 1];
            level[blocks - 2] =
                (level[blocks - 2] * weight[blocks - 2] + level[blocks - 1] * weight[blocks - 1]) / w;
            weight[blocks - 2] = w;
            --blocks;
        }
    }
    std::size_t pos = 0;
    for (std::size_t b = 0; b < blocks; ++b)
        for (int k = 0; k < static_cast<int>(weight[b] + 0.5); ++k)
            v[pos++] = std::max(0.0, level[b]);
}

// Scale eta onto the unit sphere of G; returns false for the zero vector.
bool normalize_in(const SpaceSpec& G, Sequence& eta) {
    const double norm = seq_norm(G, eta);
    if (!(norm > 0.0)) return false;
    for (double& v : eta) v /= norm;
    return true;
}

struct SeqObjective {
    const SpaceSpec& F;
    const Sequence& xi;  // decreasing
    std::int64_t evaluations = 0;

    double operator()(const Sequence& eta) {
        ++evaluations;
        return seq_norm(F, hadamard(xi, eta));
    }
};

Sequence flat_top(std::size_t k, std::size_t len) {
    Sequence eta(len, 0.0);
    for (std::size_t i = 0; i < k; ++i) eta[i] = 1.0;
    return eta;
}

Sequence power_shape(const Sequence& xi, double t) {
    Sequence eta(xi.size(), 0.0);
    for (std::size_t i = 0; i < xi.size(); ++i)
        eta[i] = xi[i] > 0.0 ? std::pow(xi[i], t) : 0.0;
    return eta;
}

// Shared ascent driver over the unit sphere of G restricted to the
// nonnegative decreasing cone.  Multiplicative coordinate proposals with a
// decaying step, restart breaks after a stale stretch.
struct SeqSearchState {
    Sequence best_eta;
    double best_value = -1.0;
};

void consider(SeqSearchState& state, SeqObjective& objective, const SpaceSpec& G, Sequence eta) {
    project_decreasing(eta);
    if (!normalize_in(G, eta)) return;
    const double value = objective(eta);
    if (value > state.best_value) {
        state.best_value = value;
        state.best_eta = std::move(eta);
    }
}

void ascend(SeqSearchState& state, SeqObjective& objective, const SpaceSpec& G,
            Sequence eta, int steps, Rng& rng) {
    project_decreasing(eta);
    if (!normalize_in(G, eta)) return;
    double current = objective(eta);
    if (current > state.best_value) {
        state.best_value = current;
        state.best_eta = eta;
    }
    const std::size_t n = eta.size();
    int stale = 0;
    for (int step = 0; step < steps && stale < 60; ++step) {
        const double frac = steps > 1 ? static_cast<double>(step) / (steps - 1) : 1.0;
        const double delta = 0.5 * std::pow(0.02, frac);
        Sequence proposal = eta;
        const std::size_t i = static_cast<std::size_t>(rng.index(static_cast<int>(n)));
        const double bump = rng.uniform() < 0.5 ? 1.0 + delta : 1.0 / (1.0 + delta);
        proposal[i] = proposal[i] > 0.0 ? proposal[i] * bump : delta * (eta[0] > 0 ? eta[0] : 1.0);
        project_decreasing(proposal);
        if (!normalize_in(G, proposal)) continue;
        const double value = objective(proposal);
        if (value > current) {
            current = value;
            eta = std::move(proposal);
            stale = 0;
            if (current > state.best_value) {
                state.best_value = current;
                state.best_eta = eta;
            }
        } else {
            ++stale;
        }
    }
}

NormEstimate analytic_seq_estimate(const MultiplierSpace& ms, const SpaceSpec& F,
                                   const SpaceSpec& G, const Sequence& xi) {
    NormEstimate est;
    est.status = EstimateStatus::exact_analytic;
    const std::size_t len = xi.size();
    if (ms.kind == MultiplierSpace::Kind::whole_space) {
        est.method = "analytic:whole-space";
        est.value = len > 0 ? xi[0] : 0.0;
        est.witness_seq = flat_top(len > 0 ? 1 : 0, len);
        est.evaluations = 1;
        return est;
    }
    const SpaceSpec& S = *ms.space;
    est.value = seq_norm(S, xi);
    est.evaluations = 1;
    if (S.kind() == SpaceKind::marcinkiewicz) {
        // Flat top at the level attaining the sup; exact by substitution.
        est.method = "analytic:lorentz-marcinkiewicz";
        const double p = S.exponent();
        double acc = 0.0;
        double best = 0.0;
        std::size_t best_k = len > 0 ? 1 : 0;
        for (std::size_t i = 0; i < len; ++i) {
            acc += std::pow(xi[i], p);
            const double ratio = acc / S.weight_sums()[i];
            if (ratio > best) {
                best = ratio;
                best_k = i + 1;
            }
        }
        Sequence eta = flat_top(best_k, len);
        normalize_in(G, eta);
        est.witness_seq = std::move(eta);
        return est;
    }
    if (G.kind() == SpaceKind::uniform) {
        // Multiplying by the all-ones sequence realizes ||xi||_F.
        est.method = "analytic:uniform-source";
        est.witness_seq = flat_top(len, len);
        return est;
    }
    // Schatten pair: eta proportional to xi^(r/(p-r)) meets the
    // inequality with equality.
    est.method = "analytic:schatten-holder";
    const double r = F.exponent();
    const double p = G.exponent();
    Sequence eta = power_shape(xi, r / (p - r));
    if (!normalize_in(G, eta)) eta = flat_top(len > 0 ? 1 : 0, len);
    est.witness_seq = std::move(eta);
    return est;
}

}  // namespace

std::string NormEstimate::witness_digest() const {
    std::uint64_t h = 1469598103934665603ULL;
    if (!witness_seq.empty())
        h = fnv1a_bytes(reinterpret_cast<const unsigned char*>(witness_seq.data()),
                        witness_seq.size() * sizeof(double), h);
    if (witness_mat.size() > 0)
        h = fnv1a_bytes(reinterpret_cast<const unsigned char*>(witness_mat.data()),
                        static_cast<std::size_t>(witness_mat.size()) * sizeof(Complex), h);
    return to_hex(h);
}

NormEstimate multiplier_norm_seq(const SpaceSpec& F, const SpaceSpec& G, const Sequence& xi,
                                 const SearchBudget& budget, const MultiplierOptions& options) {
    const Sequence sorted = decreasing_rearrangement(xi);
    const std::size_t len = sorted.size();

    if (options.use_analytic) {
        const MultiplierSpace ms = analytic_multiplier_space(F, G);
        if (ms.kind != MultiplierSpace::Kind::unknown)
            return analytic_seq_estimate(ms, F, G, sorted);
    }

    NormEstimate est;
    est.status = EstimateStatus::lower_bound;
    est.method = "search:coordinate-ascent";
    if (len == 0 || sorted[0] == 0.0) {
        est.witness_seq = flat_top(len > 0 ? 1 : 0, len);
        if (!est.witness_seq.empty()) normalize_in(G, est.witness_seq);
        est.value = 0.0;
        return est;
    }

    SeqObjective objective{F, sorted};
    SeqSearchState state;

    // Deterministic witness family: the top coordinate, every flat top and a
    // ladder of power shapes of xi itself.
    consider(state, objective, G, flat_top(1, len));
    for (std::size_t k = 2; k <= len; ++k) consider(state, objective, G, flat_top(k, len));
    for (int j = 0; j < 25; ++j) {
        const double t = 0.05 * std::pow(400.0, j / 24.0);  // 0.05 .. 20, log spaced
        consider(state, objective, G, power_shape(sorted, t));
    }

    for (int restart = 0; restart < budget.restarts; ++restart) {
        Rng rng(mix_seed(budget.seed, "multiplier-seq") + static_cast<std::uint64_t>(restart));
        Sequence init;
        switch (restart % 4) {
            case 0:
                init = state.best_eta;
                break;
            case 1:
                init = flat_top(1 + static_cast<std::size_t>(rng.index(static_cast<int>(len))), len);
                break;
            case 2:
                init = power_shape(sorted, std::exp(rng.uniform(-2.3, 2.3)));
                break;
            default:
                init = random_decreasing(static_cast<int>(len), rng);
                break;
        }
        ascend(state, objective, G, std::move(init), budget.ascent_steps, rng);
    }

    est.value = state.best_value;
    est.witness_seq = std::move(state.best_eta);
    est.evaluations = objective.evaluations;
    return est;
}

double holder_oracle(double r, double p, const Sequence& xi) {
    if (!(r > 0.0) || !(p > 0.0) || !(r < p))
        throw std::invalid_argument("holder_oracle: exponents must satisfy 0 < r < p");
    const double q = 1.0 / (1.0 / r - 1.0 / p);
    return seq_norm(SpaceSpec::schatten(q), xi);
}

// Matrix-ball search machinery shared with the derivation estimator lives
// in matrix_search.hpp.

NormEstimate multiplier_norm_op(const SpaceSpec& J, const SpaceSpec& I, const Matrix& a,
                                const SearchBudget& budget, const MultiplierOptions& options) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("multiplier_norm_op: the multiplier must be square");
    const int n = static_cast<int>(a.rows());
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Sequence s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = svd.singularValues()(i);
    if (!s.empty()) {
        const double floor = s[0] * kSvNoiseRel;
        for (double& v : s)
            if (v < floor) v = 0.0;
    }
    const Matrix u = svd.matrixU();
    const Matrix v = svd.matrixV();

    if (options.use_analytic) {
        const MultiplierSpace ms = analytic_multiplier_space(J, I);
        if (ms.kind == MultiplierSpace::Kind::whole_space) {
            NormEstimate est;
            est.status = EstimateStatus::exact_analytic;
            est.method = "analytic:operator-norm";
            est.value = s.empty() ? 0.0 : s[0];
            est.witness_mat = rank_one(v.col(0), u.col(0));
            est.evaluations = 1;
            return est;
        }
        if (ms.kind == MultiplierSpace::Kind::space) {
            NormEstimate seq_est = analytic_seq_estimate(ms, J, I, s);
            NormEstimate est;
            est.status = EstimateStatus::exact_analytic;
            est.method = seq_est.method;
            est.value = seq_est.value;
            est.evaluations = seq_est.evaluations;
            const Matrix frame = options.right_side ? u : v;
            est.witness_mat =
                frame * diagonal_operator(seq_est.witness_seq) * frame.adjoint();
            return est;
        }
    }

    const bool right = options.right_side;
    detail::MatrixObjective objective = [&J, &a, right](const Matrix& x) {
        return ideal_norm(J, right ? Matrix(x * a) : Matrix(a * x));
    };
    detail::MatrixSearchState state;

    // Diagonal witnesses aligned with the singular frame reduce the problem
    // to the sequence search; the frame turns them back into matrices.  The
    // inner call matches a standalone sequence search bit for bit, so the
    // matrix estimate always dominates the diagonal-restricted one.
    MultiplierOptions inner_options;
    inner_options.use_analytic = options.use_analytic;
    const NormEstimate diag_est = multiplier_norm_seq(J, I, s, budget, inner_options);
    const Matrix frame = options.right_side ? u : v;
    detail::consider_matrix(state, I, objective,
                            frame * diagonal_operator(diag_est.witness_seq) * frame.adjoint());
    detail::consider_matrix(state, I, objective, rank_one(v.col(0), u.col(0)));

    for (int restart = 0; restart < budget.restarts; ++restart) {
        Rng rng(mix_seed(budget.seed, "multiplier-op") + static_cast<std::uint64_t>(restart));
        Matrix init;
        if (restart % 3 == 0 && state.best_x.size() > 0) {
            init = state.best_x;
        } else {
            init = random_matrix(Ensemble::gaussian, n, rng);
        }
        detail::ascend_matrix(state, I, objective, std::move(init), budget.ascent_steps, rng);
    }

    NormEstimate est;
    est.status = EstimateStatus::lower_bound;
    est.method = "search:matrix-ascent";
    est.value = std::max(0.0, state.best_value);
    est.witness_mat = state.best_x;
    est.evaluations = state.evaluations + diag_est.evaluations;
    return est;
}

}  // namespace idealcalc
