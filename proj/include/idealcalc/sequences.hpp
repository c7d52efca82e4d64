#pragma once

#include <complex>
#include <vector>

namespace idealcalc {

// A finite real sequence.  Every norm in this library passes through the
// decreasing rearrangement of absolute values, so entry order never matters
// to a norm; it only matters to coordinatewise products.
using Sequence = std::vector<double>;

// |xi| sorted in decreasing order.
Sequence decreasing_rearrangement(const Sequence& xi);

// Complex input is reduced to moduli, then rearranged.
Sequence modulus_rearrangement(const std::vector<std::complex<double>>& xi);

// Dilation: every entry repeated m times, length m * n.  Requires m >= 1.
Sequence dilate(const Sequence& xi, int m);

// Coordinatewise product; the shorter argument is zero-padded.
Sequence hadamard(const Sequence& a, const Sequence& b);

// True when xi is nonnegative and nonincreasing up to the given slack.
bool is_nonneg_decreasing(const Sequence& xi, double slack = 0.0);

struct RearrangementCheck {
    bool ok;        // margin >= -kIneqSlack
    double margin;  // min over compared entries of (bound - value)
};

// value_i <= bound_i for every i, with bound zero-extended past its length.
RearrangementCheck check_entrywise_domination(const Sequence& value, const Sequence& bound);

// Entrywise comparison of (xi + eta)* against the 2-dilation of xi* + eta*.
RearrangementCheck check_sum_rearrangement(const Sequence& xi, const Sequence& eta);

// Entrywise comparison of (xi . eta)* against the 2-dilation of xi* . eta*.
RearrangementCheck check_product_rearrangement(const Sequence& xi, const Sequence& eta);

}  // namespace idealcalc
