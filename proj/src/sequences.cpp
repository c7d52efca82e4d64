#include "idealcalc/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>

#include "idealcalc/tolerances.hpp"

namespace idealcalc {

Sequence decreasing_rearrangement(const Sequence& xi) {
    Sequence out(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) out[i] = std::abs(xi[i]);
    std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

Sequence modulus_rearrangement(const std::vector<std::complex<double>>& xi) {
    Sequence out(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) out[i] = std::abs(xi[i]);
    std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

Sequence dilate(const Sequence& xi, int m) {
    if (m < 1) throw std::invalid_argument("dilate: repetition count must be >= 1");
    Sequence out;
    out.reserve(xi.size() * static_cast<std::size_t>(m));
    for (double v : xi)
        for (int k = 0; k < m; ++k) out.push_back(v);
    return out;
}

Sequence hadamard(const Sequence& a, const Sequence& b) {
    const std::size_t n = std::max(a.size(), b.size());
    Sequence out(n, 0.0);
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < common; ++i) out[i] = a[i] * b[i];
    return out;
}

bool is_nonneg_decreasing(const Sequence& xi, double slack) {
    for (std::size_t i = 0; i < xi.size(); ++i) {
        if (xi[i] < -slack) return false;
        if (i > 0 && xi[i] > xi[i - 1] + slack) return false;
    }
    return true;
}

namespace {

Sequence zero_pad(const Sequence& xi, std::size_t n) {
    Sequence out = xi;
    out.resize(n, 0.0);
    return out;
}

// value must sit below bound entrywise; bound may be longer.
RearrangementCheck compare_below(const Sequence& value, const Sequence& bound) {
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < value.size(); ++i) {
        const double b = i < bound.size() ? bound[i] : 0.0;
        margin = std::min(margin, b - value[i]);
    }
    if (value.empty()) margin = 0.0;
    return {margin >= -kIneqSlack, margin};
}

}  // namespace

RearrangementCheck check_entrywise_domination(const Sequence& value, const Sequence& bound) {
    return compare_below(value, bound);
}

RearrangementCheck check_sum_rearrangement(const Sequence& xi, const Sequence& eta) {
    const std::size_t n = std::max(xi.size(), eta.size());
    const Sequence a = zero_pad(xi, n);
    const Sequence b = zero_pad(eta, n);
    Sequence sum(n);
    for (std::size_t i = 0; i < n; ++i) sum[i] = a[i] + b[i];
    const Sequence lhs = decreasing_rearrangement(sum);

    const Sequence ra = decreasing_rearrangement(a);
    const Sequence rb = decreasing_rearrangement(b);
    Sequence rsum(n);
    for (std::size_t i = 0; i < n; ++i) rsum[i] = ra[i] + rb[i];
    return compare_below(lhs, dilate(rsum, 2));
}

RearrangementCheck check_product_rearrangement(const Sequence& xi, const Sequence& eta) {
    const Sequence lhs = decreasing_rearrangement(hadamard(xi, eta));
    const Sequence prod =
        hadamard(decreasing_rearrangement(xi), decreasing_rearrangement(eta));
    return compare_below(lhs, dilate(prod, 2));
}

}  // namespace idealcalc
