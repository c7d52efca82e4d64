#pragma once

#include <Eigen/Dense>
#include <complex>

#include "idealcalc/sequences.hpp"
#include "idealcalc/spaces.hpp"

namespace idealcalc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Singular values in decreasing order.  Non-finite entries raise
// NumericFailure with entry diagnostics.  Values below kSvNoiseRel times
// the largest are clamped to zero: they are decomposition noise, and the
// p < 1 quasi-norms would amplify them.
Sequence singular_values(const Matrix& x);

// Largest singular value.
double operator_norm(const Matrix& x);

// Norm of the singular value sequence in the given space.  This is the
// whole point of the construction: matrix norms reduce to sequence norms.
double ideal_norm(const SpaceSpec& space, const Matrix& x);

// [a, x] = a x - x a.  Dimensions must agree.
Matrix commutator(const Matrix& a, const Matrix& x);

Matrix diagonal_operator(const Sequence& entries);
Matrix diagonal_operator(const std::vector<Complex>& entries);

// |x| = (x* x)^(1/2), via the SVD.
Matrix absolute_value(const Matrix& x);

// u v*; rank one whenever u, v are nonzero.
Matrix rank_one(const Vector& u, const Vector& v);

}  // namespace idealcalc
