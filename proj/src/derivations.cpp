#include "idealcalc/derivations.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "idealcalc/errors.hpp"
#include "idealcalc/random.hpp"
#include "idealcalc/tolerances.hpp"
#include "matrix_search.hpp"

namespace idealcalc {

Matrix apply(const DerivationSpec& d, const Matrix& x) {
    return commutator(d.generator, x);
}

std::pair<DerivationSpec, DerivationSpec> split_star(const DerivationSpec& d) {
    const Matrix& a = d.generator;
    const Complex i_unit(0.0, 1.0);
    DerivationSpec re{(a - a.adjoint()) / 2.0};
    DerivationSpec im{(a + a.adjoint()) / (2.0 * i_unit)};
    return {std::move(re), std::move(im)};
}

namespace {

Matrix gauge_fix(const Matrix& a) {
    return a - a(0, 0) * Matrix::Identity(a.rows(), a.cols());
}

}  // namespace

DerivationNormReport norm_estimate(const DerivationSpec& d, const SpaceSpec& I,
                                   const SpaceSpec& J, const SearchBudget& budget) {
    const Matrix& a = d.generator;
    if (a.rows() != a.cols() || a.rows() < 1)
        throw std::invalid_argument("norm_estimate: generator must be square and nonempty");
    const int n = static_cast<int>(a.rows());

    DerivationNormReport report;
    report.space_i = I.to_string();
    report.space_j = J.to_string();
    report.n = n;
    report.seed = budget.seed;

    // All objective evaluations go through the gauge representative: the map
    // is unchanged and estimates become invariant under scalar shifts.
    const Matrix gauge = gauge_fix(a);
    report.gauge_generator = gauge;
    report.op_norm_gauge = operator_norm(gauge);
    report.concavity = concavity_modulus(J);

    detail::MatrixObjective objective = [&J, &gauge](const Matrix& x) {
        return ideal_norm(J, commutator(gauge, x));
    };
    detail::MatrixSearchState state;

    // Rank-one frames of the gauge generator: [a, v e_1*] e_1 = gauge v
    // whenever (a e_1, e_1) drops out, so the top singular pair pushes the
    // estimate to at least ||gauge||_op.
    if (report.op_norm_gauge > 0.0) {
        Eigen::JacobiSVD<Matrix> svd(gauge, Eigen::ComputeThinU | Eigen::ComputeThinV);
        Vector e1 = Vector::Zero(n);
        e1(0) = 1.0;
        detail::consider_matrix(state, I, objective, rank_one(svd.matrixV().col(0), e1));
        detail::consider_matrix(state, I, objective, rank_one(e1, svd.matrixU().col(0)));
        detail::consider_matrix(state, I, objective,
                                rank_one(svd.matrixV().col(0), svd.matrixU().col(0)));
    }

    // Matrix units and their symmetrized combinations; these attain the
    // norm for diagonal generators and seed the climb elsewhere.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix unit = Matrix::Zero(n, n);
            unit(i, j) = 1.0;
            detail::consider_matrix(state, I, objective, unit);
            if (i < j) {
                Matrix sym = Matrix::Zero(n, n);
                sym(i, j) = 1.0;
                sym(j, i) = 1.0;
                detail::consider_matrix(state, I, objective, sym);
                sym(j, i) = -1.0;
                detail::consider_matrix(state, I, objective, sym);
                sym(j, i) = Complex(0.0, 1.0);
                detail::consider_matrix(state, I, objective, sym);
            }
        }

    for (int restart = 0; restart < budget.restarts; ++restart) {
        Rng rng(mix_seed(budget.seed, "derivation") + static_cast<std::uint64_t>(restart));
        Matrix init;
        if (restart % 3 == 0 && state.best_x.size() > 0) {
            init = state.best_x;
        } else {
            init = random_matrix(Ensemble::gaussian, n, rng);
        }
        detail::ascend_matrix(state, I, objective, std::move(init), budget.ascent_steps, rng);
    }

    report.estimate.status = EstimateStatus::lower_bound;
    report.estimate.method = "search:commutator-ascent";
    report.estimate.value = std::max(0.0, state.best_value);
    report.estimate.witness_mat = state.best_x;
    report.estimate.evaluations = state.evaluations;

    // Product bound through the multiplier norm of the original generator.
    const NormEstimate mult = multiplier_norm_op(J, I, a, budget);
    report.multiplier_value = mult.value;
    report.multiplier_exact = mult.status == EstimateStatus::exact_analytic;
    report.upper_bound = 2.0 * report.concavity * mult.value;
    return report;
}

GeneratorRecovery recover_generator(const std::function<Matrix(const Matrix&)>& delta, int n,
                                    int probe_count, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("recover_generator: size must be >= 1");

    Rng rng(mix_seed(seed, "recovery"));

    // Linearity probes with random operators and scalars.
    for (int probe = 0; probe < probe_count; ++probe) {
        const Matrix x = random_matrix(Ensemble::gaussian, n, rng);
        const Matrix y = random_matrix(Ensemble::gaussian, n, rng);
        const Complex alpha = rng.cnormal();
        const Complex beta = rng.cnormal();
        const Matrix lhs = delta(alpha * x + beta * y);
        const Matrix rhs = alpha * delta(x) + beta * delta(y);
        const double scale =
            1.0 + lhs.norm() + std::abs(alpha) * x.norm() + std::abs(beta) * y.norm();
        const double residual = (lhs - rhs).norm();
        if (residual > kEqRel * scale) {
            std::ostringstream msg;
            msg << "recover_generator: linearity probe " << probe << " failed, residual "
                << residual << " against scale " << scale;
            throw NotLinearError(msg.str());
        }
    }

    // delta(E_k1) e_1 = a e_k - (a e_1, e_1) e_k for inner maps, so reading
    // first columns recovers the generator up to the gauge constant.
    Matrix candidate(n, n);
    for (int k = 0; k < n; ++k) {
        Matrix unit = Matrix::Zero(n, n);
        unit(k, 0) = 1.0;
        candidate.col(k) = delta(unit).col(0);
    }
    candidate = gauge_fix(candidate);

    double max_residual = 0.0;
    for (int probe = 0; probe < probe_count; ++probe) {
        Matrix x = random_matrix(Ensemble::gaussian, n, rng);
        x /= x.norm();
        max_residual = std::max(max_residual, (delta(x) - commutator(candidate, x)).norm());
    }
    return {std::move(candidate), max_residual, probe_count};
}

}  // namespace idealcalc
