// Shared fixtures for the test suite: parsing shortcuts, random
// rational functions / matrices, and generators with known local
// structure (R = U D V with unimodular U, V over F[l]).
#pragma once

#include "ratroot/json_io.hpp"

namespace ratroot::testing {

inline RatMat<Rational> rm(const std::string& text) { return parse_ratmat<Rational>(text); }
inline RatFun<Rational> rf(const std::string& text) { return parse_ratfun<Rational>(text); }

template <class F>
RatMat<F> to_backend(const RatMat<Rational>& A) {
    if constexpr (std::is_same_v<F, Rational>) {
        return A;
    } else {
        return A.template map<RatFun<Complex>>([](const RatFun<Rational>& r) {
            auto conv = [](const Poly<Rational>& p) {
                std::vector<Complex> c;
                for (int t = 0; t <= p.degree(); ++t) c.push_back(to_complex(p.coeff(t)));
                return Poly<Complex>(std::move(c));
            };
            if (r.is_zero()) return RatFun<Complex>::zero();
            return RatFun<Complex>(conv(r.num()), conv(r.den()));
        });
    }
}

inline Poly<Rational> random_poly(SeededRng& rng, int maxdeg) {
    std::vector<Rational> c(size_t(rng.next_int(0, maxdeg)) + 1);
    for (auto& x : c) x = Rational(rng.next_int(-4, 4));
    Poly<Rational> p(std::move(c));
    if (p.is_zero()) p = Poly<Rational>(Rational(rng.next_int(1, 4)));
    return p;
}

// random nonzero rational function with controlled degrees
inline RatFun<Rational> random_ratfun(SeededRng& rng, int maxdeg = 3) {
    return RatFun<Rational>(random_poly(rng, maxdeg), random_poly(rng, maxdeg));
}

// possibly-zero rational function
inline RatFun<Rational> random_entry(SeededRng& rng, int maxdeg = 2) {
    if (rng.next_int(0, 4) == 0) return RatFun<Rational>::zero();
    return random_ratfun(rng, maxdeg);
}

inline RatMat<Rational> random_ratmat(SeededRng& rng, size_t m, size_t n, int maxdeg = 2) {
    RatMat<Rational> A(m, n);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) A(i, j) = random_entry(rng, maxdeg);
    return A;
}

// unimodular over F[l]: a product of elementary operations, so the
// determinant is a nonzero constant and the matrix is locally
// unimodular at every finite point
inline RatMat<Rational> random_unimodular(SeededRng& rng, size_t n, int ops = -1) {
    PolyMat<Rational> U = PolyMat<Rational>::identity(n);
    if (ops < 0) ops = int(2 * n);
    for (int t = 0; t < ops; ++t) {
        size_t i = size_t(rng.next_int(0, long(n) - 1));
        size_t j = size_t(rng.next_int(0, long(n) - 1));
        switch (rng.next_int(0, 2)) {
            case 0:
                U.swap_rows(i, j);
                break;
            case 1: {
                Rational c(rng.next_int(1, 3));
                for (size_t k = 0; k < n; ++k) U(i, k) = Poly<Rational>(c) * U(i, k);
                break;
            }
            default: {
                if (i == j) break;
                Poly<Rational> f = random_poly(rng, 1);
                for (size_t k = 0; k < n; ++k) U(i, k) = U(i, k) + f * U(j, k);
                break;
            }
        }
    }
    return to_ratmat(U);
}

// R = U D V with D = diag((l-x0)^{sigmas[i]}) padded to m x n; the
// sigmas (non-increasing) are the exact local structure of R at x0
struct StructuredMatrix {
    RatMat<Rational> R;
    std::vector<long> sigmas;
    size_t rank;
};

inline StructuredMatrix random_structured(SeededRng& rng, const Rational& x0, size_t max_m = 5,
                                          size_t max_n = 6, long sig_lo = -3, long sig_hi = 3) {
    size_t m = size_t(rng.next_int(1, long(max_m)));
    size_t n = size_t(rng.next_int(1, long(max_n)));
    size_t r = size_t(rng.next_int(1, long(std::min(m, n))));
    std::vector<long> sigmas(r);
    for (auto& s : sigmas) s = rng.next_int(sig_lo, sig_hi);
    std::sort(sigmas.rbegin(), sigmas.rend());
    RatMat<Rational> D(m, n);
    RatFun<Rational> lin(Poly<Rational>::linear(x0));
    for (size_t i = 0; i < r; ++i) {
        RatFun<Rational> p = RatFun<Rational>::one();
        for (long k = 0; k < std::labs(sigmas[i]); ++k) p = p * lin;
        D(i, i) = sigmas[i] >= 0 ? p : p.inverse();
    }
    StructuredMatrix out;
    out.R = random_unimodular(rng, m) * D * random_unimodular(rng, n);
    out.sigmas = std::move(sigmas);
    out.rank = r;
    return out;
}

// divide by a power of (l+1) until proper; (l+1) is a local unit at 0,
// so the structure at 0 is untouched
inline RatMat<Rational> make_proper(const RatMat<Rational>& R) {
    Valuation v = matrix_valuation_at_infinity(R);
    if (v.is_infinite() || !(v < Valuation(0))) return R;
    RatFun<Rational> u = RatFun<Rational>::one();
    RatFun<Rational> lin(Poly<Rational>::variable() + Poly<Rational>::one());
    for (long t = 0; t < -v.value(); ++t) u = u / lin;
    return u * R;
}

// one pass over the seven valuation properties on random matrices;
// returns the number of violated checks (0 expected)
inline int valuation_axiom_failures(SeededRng& rng, int item) {
    Rational x0(rng.next_int(-1, 1));
    auto kappa = [&](const RatMat<Rational>& M) { return matrix_valuation(M, x0); };
    size_t m = size_t(rng.next_int(1, 3)), n = size_t(rng.next_int(1, 3));
    int bad = 0;
    switch (item) {
        case 1: {
            RatMat<Rational> A = random_ratmat(rng, m, n), B = random_ratmat(rng, n, m);
            if (!(kappa(A * B) >= kappa(A) + kappa(B))) ++bad;
            break;
        }
        case 2: {
            RatMat<Rational> A = random_ratmat(rng, m, n), B = random_ratmat(rng, m, n);
            if (!(kappa(A + B) >= min(kappa(A), kappa(B)))) ++bad;
            break;
        }
        case 3: {
            RatMat<Rational> A = random_ratmat(rng, m, n);
            if (kappa(A).is_infinite() != A.is_zero()) ++bad;
            if (!kappa(RatMat<Rational>(m, n)).is_infinite()) ++bad;
            break;
        }
        case 4: {
            RatMat<Rational> A = random_unimodular(rng, m);  // kappa[A]=kappa[det A]=0
            RatMat<Rational> Ai = inverse_of(A);
            if (kappa(Ai) != Valuation(0)) ++bad;
            if (ratmat_det(Ai).valuation_at(x0) != Valuation(0)) ++bad;
            break;
        }
        case 5: {
            RatMat<Rational> A = random_unimodular(rng, m);
            RatMat<Rational> B = random_ratmat(rng, m, n);
            if (kappa(A * B) != kappa(B)) ++bad;
            if (kappa(B.transpose() * A) != kappa(B.transpose())) ++bad;
            break;
        }
        case 6: {
            RatMat<Rational> A = random_ratmat(rng, m, n);
            auto ls = smith_mcmillan_local(A, x0);
            if (kappa(A) != kappa(ls.diagonal(m, n))) ++bad;
            break;
        }
        case 7: {
            RatMat<Rational> A = random_ratmat(rng, m + 1, n);
            RatMat<Rational> B = A.block(0, 0, m, n);
            RatMat<Rational> C = A.block(m, 0, 1, n);
            if (kappa(A) != min(kappa(B), kappa(C))) ++bad;
            break;
        }
        default:
            ++bad;
    }
    return bad;
}

inline std::vector<long> positive_part(const std::vector<long>& sigmas) {
    std::vector<long> p;
    for (long s : sigmas)
        if (s > 0) p.push_back(s);
    return p;
}

}  // namespace ratroot::testing
