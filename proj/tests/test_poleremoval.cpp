#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ratroot;
using namespace ratroot::testing;
using M = Matrix<Rational>;
using RM = RatMat<Rational>;

TEST_CASE("feedback data of the worked example") {
    // R = [[1, 0], [1/l, 1]] realizes with a single pole at 0
    StateSpace<Rational> s = realize(rm("1, 0; 1/l, 1"));
    REQUIRE(s.order() == 1);
    std::vector<Rational> targets{Rational(-1)};
    M Fg = assign_poles(s.A, s.E, s.B, targets);
    FeedbackData<Rational> fd = feedback_system(s, Fg, targets);
    // closed loop has its pole at -1
    CHECK(char_poly(solve_linear(fd.sysY.E, fd.sysY.A)) == Poly<Rational>::linear(Rational(-1)));
    // K and K^{-1} multiply to the identity
    RM prod = fd.sysK.transfer() * fd.sysKinv.transfer();
    CHECK(prod == RM::identity(2));
    // Y = R K has no pole at 0 and the same zero there
    RM Y = fd.sysY.transfer();
    CHECK_FALSE(matrix_valuation(Y, Rational(0)) < Valuation(0));
    CHECK(smith_mcmillan_local(Y, Rational(0)).positive_sigmas() == std::vector<long>{1});
}

TEST_CASE("both recovery routes on the worked example") {
    CoalescentResult<Rational> res = coalescent_maximal_set(rm("1, 0; 1/l, 1"), Rational(0));
    CHECK(res.pole_order == 1);
    REQUIRE(res.set.vectors.size() == 1);
    CHECK(res.set.vectors[0].order == 1);
    CHECK(res.set.sigmas == std::vector<long>{1, -1});
    // truncated route: [l, l-1] up to scaling
    std::vector<RatFun<Rational>> x = res.set.vectors[0].x;
    RatFun<Rational> c = x[0] / rf("l");
    CHECK(c.is_constant());
    CHECK(x[1] == c * rf("l-1"));
    // exact route: [l/(l+1), -1/(l+1)] up to scaling
    CoalescentResult<Rational> ex = coalescent_maximal_set(rm("1, 0; 1/l, 1"), Rational(0), true);
    std::vector<RatFun<Rational>> y = ex.set.vectors[0].x;
    RatFun<Rational> d = y[0] / rf("l/(l+1)");
    CHECK(d.is_constant());
    CHECK(y[1] == d * rf("-1/(l+1)"));
    // truncated equals the Taylor window of exact through degree k+m-1
    for (size_t i = 0; i < 2; ++i) {
        auto w = (y[i] / d).laurent_expand(Rational(0), 0, 1);
        Poly<Rational> p = Poly<Rational>(w);
        CHECK(p == (x[i] / c).num());
    }
}

TEST_CASE("choose_targets avoids the point and the zeros") {
    StateSpace<Rational> s = realize(rm("(l+1)/l"));  // zero at -1, pole at 0
    std::vector<Rational> t = choose_targets(s, 3, Rational(-2));
    for (const Rational& c : t) {
        CHECK(c != Rational(-2));
        CHECK(c != Rational(-1));  // the zero
        CHECK(sgn(c) < 0);
    }
}

TEST_CASE("coprime factorization of the worked example") {
    StateSpace<Rational> ss = realize(rm("1, 0; 1/l, 1"));
    PolySystemMatrix<Rational> P = ss.system();
    CoprimePair<Rational> cp = coprime_factor_polynomial(P);
    RM R = rm("1, 0; 1/l, 1");
    RM K = to_ratmat(cp.K);
    RM Y = to_ratmat(cp.Y);
    // the five defining predicates
    // 1. Y polynomial (by construction) and equal to R K
    CHECK(Y == R * K);
    // 2. K regular
    CHECK(normal_rank(K) == 2);
    // 3. same positive sigmas at 0 as R
    CHECK(smith_mcmillan_local(Y, Rational(0)).positive_sigmas() ==
          smith_mcmillan_local(R, Rational(0)).positive_sigmas());
    // 4. no pole of Y at 0
    CHECK_FALSE(matrix_valuation(Y, Rational(0)) < Valuation(0));
    // 5. stacked factor [-K; Y] has trivial Smith form
    CHECK(has_trivial_smith_form(PolyMat<Rational>::vcat(cp.K, cp.Y)));
    // the reference factorization Y = [[0, l], [1, 1]] is equivalent up
    // to unimodular column transforms: same Smith invariants
    auto inv = smith_poly(cp.Y).invariants;
    auto ref = smith_poly(to_polymat(rm("0, l; 1, 1"))).invariants;
    CHECK(inv == ref);
    // [l, -1] is an order-1 root vector of the reference factor at 0
    RM Yref = rm("0, l; 1, 1");
    CHECK(root_vector_order(Yref, {rf("l"), rf("-1")}, Rational(0), minimal_kernel_basis(Yref)) == 1);
}

TEST_CASE("coalescent route on a non-proper matrix") {
    RM R = rm("l, 0; 0, 1/l");
    CoalescentResult<Rational> res = coalescent_maximal_set(R, Rational(0));
    CHECK(res.substituted);
    CHECK(res.set.sigmas == std::vector<long>{1, -1});
    REQUIRE(res.set.vectors.size() == 1);
    CHECK(res.set.vectors[0].order == 1);
    CHECK(set_is_maximal(res.set));
}

TEST_CASE("coalescent route matches the Smith route on structured inputs") {
    SeededRng rng(71);
    for (int t = 0; t < 12; ++t) {
        auto sm = random_structured(rng, Rational(0), 3, 4, -2, 2);
        CoalescentResult<Rational> res = coalescent_maximal_set(sm.R, Rational(0));
        CHECK(res.set.orders() == positive_part(sm.sigmas));
        CHECK(set_is_maximal(res.set));
    }
}

TEST_CASE("truncated recovery is the Taylor window of exact recovery") {
    SeededRng rng(72);
    int done = 0;
    for (int t = 0; t < 40 && done < 8; ++t) {
        auto sm = random_structured(rng, Rational(0), 3, 3, -2, 2);
        bool pole = false, zero = false;
        for (long s : sm.sigmas) {
            pole = pole || s < 0;
            zero = zero || s > 0;
        }
        if (!pole || !zero) continue;  // want a coalescent point
        RM R = make_proper(sm.R);  // keeps the structure at 0
        CoalescentResult<Rational> tr = coalescent_maximal_set(R, Rational(0), false);
        CoalescentResult<Rational> ex = coalescent_maximal_set(R, Rational(0), true);
        REQUIRE(tr.set.vectors.size() == ex.set.vectors.size());
        for (size_t i = 0; i < tr.set.vectors.size(); ++i) {
            long k = ex.set.vectors[i].order;
            long deg = k + tr.pole_order - 1;
            for (size_t j = 0; j < R.cols(); ++j) {
                auto w = ex.set.vectors[i].x[j].laurent_expand(Rational(0), 0, deg);
                auto v = tr.set.vectors[i].x[j].laurent_expand(Rational(0), 0, deg);
                CHECK(w == v);
            }
        }
        ++done;
    }
    CHECK(done > 0);
}

TEST_CASE("float backend agrees on the worked example") {
    RatMat<Complex> R = to_backend<Complex>(rm("1, 0; 1/l, 1"));
    CoalescentResult<Complex> res = coalescent_maximal_set(R, Complex(0.0, 0.0));
    CHECK(res.set.sigmas == std::vector<long>{1, -1});
    REQUIRE(res.set.vectors.size() == 1);
    // match [l, l-1] up to column scaling, coefficients to 1e-8
    const auto& x = res.set.vectors[0].x;
    Complex c = x[0].num().leading();
    auto close = [](const Complex& a, const Complex& b) { return std::abs(a - b) < 1e-8; };
    CHECK(close(x[0].num().coeff(1) / c, Complex(1, 0)));
    CHECK(close(x[1].num().coeff(0) / c, Complex(-1, 0)));
    CHECK(close(x[1].num().coeff(1) / c, Complex(1, 0)));
}
