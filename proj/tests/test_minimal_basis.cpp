#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ratroot;
using namespace ratroot::testing;

TEST_CASE("kernel basis of [[l, l^2]]") {
    PolyMat<Rational> N = minimal_kernel_basis(rm("l, l^2"));
    REQUIRE(N.cols() == 1);
    CHECK(minimal_indices(N) == std::vector<int>{1});
    CHECK(is_minimal_basis(N));
    CHECK((to_ratmat(N).transpose() * rm("l, l^2").transpose()).is_zero());
    // the basis vector is [-l, 1] up to a constant
    Rational c = N(1, 0).coeff(0);
    CHECK(N(0, 0) == Poly<Rational>(-c) * Poly<Rational>::variable());
}

TEST_CASE("kernel basis of [[1, 1, 1]]") {
    PolyMat<Rational> N = minimal_kernel_basis(rm("1, 1, 1"));
    REQUIRE(N.cols() == 2);
    CHECK(minimal_indices(N) == std::vector<int>{0, 0});
    CHECK(is_minimal_basis(N));
}

TEST_CASE("full column rank gives an empty basis") {
    PolyMat<Rational> N = minimal_kernel_basis(rm("1, 0; 1/l, 1"));
    CHECK(N.cols() == 0);
    CHECK(is_minimal_basis(N));
}

TEST_CASE("random kernels: minimality and annihilation") {
    SeededRng rng(31);
    for (int t = 0; t < 30; ++t) {
        size_t m = size_t(rng.next_int(1, 4)), n = size_t(rng.next_int(1, 5));
        RatMat<Rational> A = random_ratmat(rng, m, n);
        PolyMat<Rational> N = minimal_kernel_basis(A);
        CHECK(N.cols() == n - normal_rank(A));
        if (N.cols() > 0) {
            CHECK((A * to_ratmat(N)).is_zero());
            CHECK(is_minimal_basis(N));
        }
    }
}

TEST_CASE("minimal indices are invariant under row scaling of R") {
    SeededRng rng(32);
    for (int t = 0; t < 10; ++t) {
        RatMat<Rational> A = random_ratmat(rng, 2, 4);
        RatMat<Rational> B = A;
        for (size_t j = 0; j < B.cols(); ++j) B(0, j) = rf("(l+1)") * B(0, j);
        auto ia = minimal_indices(minimal_kernel_basis(A));
        auto ib = minimal_indices(minimal_kernel_basis(B));
        CHECK(ia == ib);  // same rational kernel
    }
}

TEST_CASE("kernel span at a point") {
    PolyMat<Rational> N = minimal_kernel_basis(rm("l, l^2"));
    Matrix<Rational> S = kernel_span_at(N, Rational(2));
    REQUIRE(S.cols() == 1);
    // direction [-2c, c]
    CHECK(S(0, 0) == Rational(-2) * S(1, 0));
}
