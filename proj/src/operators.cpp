#include "idealcalc/operators.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "idealcalc/errors.hpp"
#include "idealcalc/tolerances.hpp"

namespace idealcalc {

namespace {

void require_finite(const Matrix& x, const char* where) {
    if (x.allFinite()) return;
    std::ostringstream msg;
    msg << where << ": non-finite entry in " << x.rows() << "x" << x.cols()
        << " matrix";
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            if (!std::isfinite(x(i, j).real()) || !std::isfinite(x(i, j).imag())) {
                msg << " at (" << i << "," << j << ")";
                throw NumericFailure(msg.str());
            }
    throw NumericFailure(msg.str());
}

}  // namespace

Sequence singular_values(const Matrix& x) {
    require_finite(x, "singular_values");
    if (x.rows() == 0 || x.cols() == 0) return {};
    Eigen::JacobiSVD<Matrix> svd(x);
    const auto& sv = svd.singularValues();
    Sequence out(static_cast<std::size_t>(sv.size()));
    for (Eigen::Index i = 0; i < sv.size(); ++i) out[static_cast<std::size_t>(i)] = sv(i);
    // Zero out rounding noise; see kSvNoiseRel.
    if (!out.empty()) {
        const double floor = out[0] * kSvNoiseRel;
        for (double& v : out)
            if (v < floor) v = 0.0;
    }
    if (!is_nonneg_decreasing(out)) {
        std::ostringstream msg;
        msg << "singular_values: decomposition returned an unsorted spectrum for a "
            << x.rows() << "x" << x.cols() << " matrix with max entry "
            << x.cwiseAbs().maxCoeff();
        throw NumericFailure(msg.str());
    }
    return out;
}

double operator_norm(const Matrix& x) {
    const Sequence s = singular_values(x);
    return s.empty() ? 0.0 : s[0];
}

double ideal_norm(const SpaceSpec& space, const Matrix& x) {
    return seq_norm(space, singular_values(x));
}

Matrix commutator(const Matrix& a, const Matrix& x) {
    if (a.rows() != a.cols() || x.rows() != x.cols() || a.rows() != x.rows())
        throw std::invalid_argument("commutator: both operators must be square and of equal size");
    return a * x - x * a;
}

Matrix diagonal_operator(const Sequence& entries) {
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(entries.size()),
                              static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i)
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = entries[i];
    return out;
}

Matrix diagonal_operator(const std::vector<Complex>& entries) {
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(entries.size()),
                              static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i)
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = entries[i];
    return out;
}

Matrix absolute_value(const Matrix& x) {
    require_finite(x, "absolute_value");
    if (x.rows() != x.cols())
        throw std::invalid_argument("absolute_value: operator must be square");
    if (x.rows() == 0) return x;
    // x = U S V*  =>  |x| = V S V*.
    Eigen::JacobiSVD<Matrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return svd.matrixV() * svd.singularValues().asDiagonal() *
           svd.matrixV().adjoint();
}

Matrix rank_one(const Vector& u, const Vector& v) {
    return u * v.adjoint();
}

}  // namespace idealcalc
