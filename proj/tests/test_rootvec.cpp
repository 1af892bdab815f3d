#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ratroot;
using namespace ratroot::testing;
using RM = RatMat<Rational>;
using RF = RatFun<Rational>;

namespace {
std::vector<RF> vec(const std::string& a, const std::string& b) { return {rf(a), rf(b)}; }
}  // namespace

TEST_CASE("root vector order oracles") {
    RM A = rm("0, l; 1, 1");
    PolyMat<Rational> NA = minimal_kernel_basis(A);
    CHECK(root_vector_order(A, vec("-1", "1"), Rational(0), NA) == 1);

    RM R = rm("1, 0; 1/l, 1");
    PolyMat<Rational> NR = minimal_kernel_basis(R);
    CHECK(root_vector_order(R, vec("l", "-1"), Rational(0), NR) == 1);

    long k = 0;
    CHECK(try_root_vector_order(R, vec("0", "1"), Rational(0), NR, k) ==
          RootVectorStatus::order_not_positive);
    CHECK(try_root_vector_order(R, vec("1/l", "1"), Rational(0), NR, k) ==
          RootVectorStatus::bad_valuation);
    RM S = rm("l, 0; 0, 1");
    PolyMat<Rational> NS = minimal_kernel_basis(S);
    CHECK(NS.cols() == 0);
    CHECK(root_vector_order(S, vec("1", "0"), Rational(0), NS) == 1);
    // a vector inside the rational kernel is rejected
    RM T = rm("0, 0; 0, 1");
    PolyMat<Rational> NT = minimal_kernel_basis(T);
    REQUIRE(NT.cols() == 1);
    CHECK(try_root_vector_order(T, vec("1", "0"), Rational(0), NT, k) ==
          RootVectorStatus::in_kernel);
}

TEST_CASE("maximal set of diag(l^2, l, 1)") {
    RM D = rm("l^2, 0, 0; 0, l, 0; 0, 0, 1");
    MaximalSet<Rational> s = maximal_set(D, Rational(0));
    CHECK(s.sigmas == std::vector<long>{2, 1, 0});
    CHECK(s.orders() == std::vector<long>{2, 1});
    CHECK(set_is_maximal(s));
}

TEST_CASE("maximal set of the coalescent example via the Smith route") {
    RM R = rm("1, 0; 1/l, 1");
    MaximalSet<Rational> s = maximal_set(R, Rational(0));
    CHECK(s.sigmas == std::vector<long>{1, -1});
    REQUIRE(s.vectors.size() == 1);
    CHECK(s.vectors[0].order == 1);
    CHECK(set_is_maximal(s));
}

TEST_CASE("canonical scaling of returned vectors") {
    MaximalSet<Rational> s = maximal_set(rm("l^2, 0; 0, 1"), Rational(0));
    REQUIRE(s.vectors.size() == 1);
    Matrix<Rational> e = ratfun_vec_eval(s.vectors[0].x, Rational(0));
    size_t i = 0;
    while (i < e.rows() && e(i, 0) == 0) ++i;
    REQUIRE(i < e.rows());
    CHECK(e(i, 0) == 1);
}

TEST_CASE("infinity: diag(1/l, 1) and the polynomial example") {
    MaximalSet<Rational> s = maximal_set_at_infinity(rm("1/l, 0; 0, 1"));
    CHECK(s.at_infinity);
    CHECK(s.orders() == std::vector<long>{1});
    Matrix<Rational> e = ratfun_vec_eval(s.vectors[0].x, Rational(0));
    CHECK(e(0, 0) != 0);  // along e1
    CHECK(e(1, 0) == 0);

    // P = [[1, l], [0, 1]]: the vector l^{-1}[-l, 1] has order 1 at infinity
    RM P = rm("1, l; 0, 1");
    RM Pm = subst_inverse(P);  // P(1/l)
    std::vector<RF> x = vec("-1", "l");  // mu-substituted form of l^{-1}[-l, 1]
    CHECK(root_vector_order(Pm, x, Rational(0), minimal_kernel_basis(Pm)) == 1);
    MaximalSet<Rational> si = maximal_set_at_infinity(P);
    CHECK(si.orders() == std::vector<long>{1});
}

TEST_CASE("eigenvectors and ker at a point") {
    RM R = rm("1, 0; 1/l, 1");
    Matrix<Rational> K = ker_at(R, Rational(0));
    REQUIRE(K.cols() == 1);
    CHECK(K(0, 0) == 0);
    CHECK(K(1, 0) != 0);  // span of [0, -1]
    auto ev = eigenvectors(R, Rational(0));
    REQUIRE(ev.size() == 1);
    CHECK(ev[0].kernel_basis.cols() == 0);
    CHECK(ev[0].representative(1, 0) != 0);
}

TEST_CASE("polynomialization preserves the order") {
    RM R = rm("1, 0; 1/l, 1");
    MaximalSet<Rational> s = coalescent_maximal_set(R, Rational(0), /*exact_k=*/true).set;
    REQUIRE(s.vectors.size() == 1);
    CHECK_FALSE(s.vectors[0].is_polynomial());
    RootVector<Rational> p = polynomialize(R, s.vectors[0], Rational(0), s.kernel);
    CHECK(p.is_polynomial());
    CHECK(p.order == s.vectors[0].order);
    // degree bound k + m - 1 = 1
    for (const auto& e : p.x) CHECK(e.num().degree() <= 1);
}

TEST_CASE("transform through locally unimodular factors preserves orders") {
    SeededRng rng(41);
    for (int t = 0; t < 15; ++t) {
        auto sm = random_structured(rng, Rational(0), 4, 4, 0, 2);
        MaximalSet<Rational> s = maximal_set(sm.R, Rational(0));
        RM B = random_unimodular(rng, sm.R.cols());
        RM Q = sm.R * B;
        MaximalSet<Rational> sq = transform_set(B, s, Q, /*pull=*/true);
        CHECK(sq.orders() == s.orders());
        CHECK(set_is_maximal(sq));
    }
}

TEST_CASE("maximal set orders equal positive sigmas on structured inputs") {
    SeededRng rng(42);
    for (int t = 0; t < 20; ++t) {
        auto sm = random_structured(rng, Rational(0), 4, 5, -2, 2);
        MaximalSet<Rational> s = maximal_set(sm.R, Rational(0));
        CHECK(s.orders() == positive_part(sm.sigmas));
        CHECK(set_is_maximal(s));
    }
}
