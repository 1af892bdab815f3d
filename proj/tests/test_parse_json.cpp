#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ratroot;
using namespace ratroot::testing;

TEST_CASE("scalar and ratfun grammar") {
    CHECK(parse_scalar<Rational>("3/4") == Rational(3, 4));
    CHECK(parse_scalar<Rational>("-2") == Rational(-2));
    CHECK(parse_scalar<Rational>("0.25") == Rational(1, 4));  // exact decimal
    CHECK(rf("(l^2-1)/(l+2)") == RatFun<Rational>(
              Poly<Rational>::variable() * Poly<Rational>::variable() - Poly<Rational>::one(),
              Poly<Rational>::variable() + Poly<Rational>(Rational(2))));
    CHECK(rf("2l") == rf("2*l"));          // implicit multiplication
    CHECK(rf("\xce\xbb^2") == rf("l^2"));  // UTF-8 lambda
    CHECK(rf("l^-1") == rf("1/l"));
    CHECK(rf("(l+1)(l-1)") == rf("l^2-1"));
}

TEST_CASE("complex literals only on the float backend") {
    CHECK_THROWS_AS(parse_ratfun<Rational>("i"), ParseError);
    RatFun<Complex> z = parse_ratfun<Complex>("2i+1");
    CHECK(z.num().coeff(0) == Complex(1.0, 2.0));
}

TEST_CASE("matrix grammar and diagnostics") {
    RatMat<Rational> A = rm("1, 0; 1/l, 1");
    CHECK(A.rows() == 2);
    CHECK(A(1, 0) == rf("1/l"));
    CHECK_THROWS_AS(rm("1, 2; 3"), ParseError);
    try {
        rm("1, $");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 4);
    }
    // trailing separator tolerated
    CHECK(rm("1, 2; 3, 4;").rows() == 2);
}

TEST_CASE("ratmat JSON round trip") {
    RatMat<Rational> A = rm("1, 0; 1/l, (l-1)/3");
    json j = ratmat_to_json(A);
    RatMat<Rational> B = ratmat_from_json<Rational>(j);
    CHECK(A == B);
    // exact coefficients survive as strings
    CHECK(j[1][1]["num"][0].get<std::string>() == "-1/3");
}

TEST_CASE("state space JSON round trip") {
    StateSpace<Rational> s = realize(rm("1, 0; 1/l, 1"));
    json j = state_space_to_json(s);
    StateSpace<Rational> t = state_space_from_json<Rational>(j);
    CHECK(t.A == s.A);
    CHECK(t.E == s.E);
    CHECK(t.B == s.B);
    CHECK(t.C == s.C);
    CHECK(t.D == s.D);
    CHECK(t.transfer() == s.transfer());
}

TEST_CASE("report schema and determinism") {
    MaximalSet<Rational> set = maximal_set(rm("l^2, 0; 0, 1"), Rational(0));
    json rep = rootvector_report(set, "0");
    CHECK(rep["schema"] == 1);
    CHECK(rep.contains("sigmas"));
    CHECK(rep.contains("maximal_set"));
    CHECK(rep.contains("eigenvectors"));
    // byte-identical across repeated runs
    MaximalSet<Rational> set2 = maximal_set(rm("l^2, 0; 0, 1"), Rational(0));
    CHECK(rep.dump() == rootvector_report(set2, "0").dump());
}

TEST_CASE("complex JSON scalars") {
    json j = scalar_to_json(Complex(1.5, -2.0));
    Complex z = scalar_from_json<Complex>(j);
    CHECK(z == Complex(1.5, -2.0));
}
