#include "idealcalc/sequences.hpp"

#include <complex>
#include <vector>

#include "doctest.h"
#include "idealcalc/tolerances.hpp"
#include "test_support.hpp"

using idealcalc::Sequence;
using idealcalc::check_product_rearrangement;
using idealcalc::check_sum_rearrangement;
using idealcalc::decreasing_rearrangement;
using idealcalc::dilate;
using idealcalc::hadamard;
using idealcalc::is_nonneg_decreasing;

TEST_CASE("rearrangement of fixed inputs") {
    CHECK(decreasing_rearrangement({1.0, -3.0, 2.0}) == Sequence{3.0, 2.0, 1.0});
    CHECK(decreasing_rearrangement({5.0, 4.0, 1.0}) == Sequence{5.0, 4.0, 1.0});
    CHECK(decreasing_rearrangement({}) == Sequence{});
    CHECK(decreasing_rearrangement({0.0, 0.0}) == Sequence{0.0, 0.0});

    const std::vector<std::complex<double>> z{{3.0, 4.0}, {0.0, -1.0}};
    CHECK(idealcalc::modulus_rearrangement(z) == Sequence{5.0, 1.0});
}

TEST_CASE("rearrangement matches the extraction oracle") {
    testsupport::Gen gen(101);
    for (int trial = 0; trial < 50; ++trial) {
        const Sequence xi = gen.sequence(20, -5.0, 5.0);
        CHECK(decreasing_rearrangement(xi) == testsupport::rearrangement_oracle(xi));
    }
}

TEST_CASE("rearrangement properties") {
    testsupport::Gen gen(202);
    for (int trial = 0; trial < 50; ++trial) {
        const Sequence xi = gen.sequence(12, -2.0, 2.0);
        const Sequence r = decreasing_rearrangement(xi);

        CHECK(is_nonneg_decreasing(r));
        CHECK(decreasing_rearrangement(r) == r);  // idempotent

        Sequence shuffled(xi.size());
        const auto perm = gen.permutation(static_cast<int>(xi.size()));
        for (std::size_t i = 0; i < xi.size(); ++i)
            shuffled[i] = xi[static_cast<std::size_t>(perm[i])];
        CHECK(decreasing_rearrangement(shuffled) == r);  // permutation invariant
    }
}

TEST_CASE("dilation repeats entries in place") {
    CHECK(dilate({3.0, 1.0}, 2) == Sequence{3.0, 3.0, 1.0, 1.0});
    CHECK(dilate({2.0}, 3) == Sequence{2.0, 2.0, 2.0});
    CHECK(dilate({4.0, 2.0, 1.0}, 1) == Sequence{4.0, 2.0, 1.0});
    CHECK(dilate({}, 2) == Sequence{});
    CHECK_THROWS_AS(dilate({1.0}, 0), std::invalid_argument);

    // Dilation of a decreasing sequence stays decreasing.
    testsupport::Gen gen(303);
    for (int m = 2; m <= 4; ++m) {
        const Sequence r = decreasing_rearrangement(gen.sequence(9));
        CHECK(is_nonneg_decreasing(dilate(r, m)));
    }
}

TEST_CASE("hadamard zero-pads the shorter factor") {
    CHECK(hadamard({1.0, 2.0}, {3.0, 4.0, 5.0}) == Sequence{3.0, 8.0, 0.0});
    CHECK(hadamard({2.0, -1.0}, {0.5, 0.5}) == Sequence{1.0, -0.5});
    CHECK(hadamard({}, {1.0}) == Sequence{0.0});
}

TEST_CASE("sum rearrangement check on fixed inputs") {
    // Disjointly supported unit masses: (xi+eta)* = (1,1) while
    // sigma_2(xi* + eta*) = (2,2,0,0), leaving margin 1 on both entries.
    const auto disjoint = check_sum_rearrangement({1.0, 0.0}, {0.0, 1.0});
    CHECK(disjoint.ok);
    CHECK(disjoint.margin == doctest::Approx(1.0));

    // Equal singletons: (xi+eta)* = (2) meets sigma_2(2, ...) exactly.
    const auto tight = check_sum_rearrangement({1.0}, {1.0});
    CHECK(tight.ok);
    CHECK(tight.margin == doctest::Approx(0.0).epsilon(1e-12));

    const auto zero = check_sum_rearrangement({0.0, 0.0}, {0.0});
    CHECK(zero.ok);
}

TEST_CASE("sum and product rearrangement checks on random pairs") {
    testsupport::Gen gen(404);
    for (int trial = 0; trial < 100; ++trial) {
        const int la = 1 + gen.index(10);
        const int lb = 1 + gen.index(10);
        const Sequence xi = gen.sequence(la, -3.0, 3.0);
        const Sequence eta = gen.sequence(lb, -3.0, 3.0);

        const auto sum = check_sum_rearrangement(xi, eta);
        CHECK(sum.ok);
        CHECK(sum.margin >= -idealcalc::kIneqSlack);

        const auto prod = check_product_rearrangement(xi, eta);
        CHECK(prod.ok);
        CHECK(prod.margin >= -idealcalc::kIneqSlack);
    }
}
