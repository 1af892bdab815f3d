// Rational matrices: valuations, normal rank, local unimodularity,
// and conversions to and from polynomial matrices.
#pragma once

#include <optional>
#include <vector>

#include "matrix.hpp"
#include "numeric.hpp"

namespace ratroot {

template <class F>
using RatMat = Matrix<RatFun<F>>;

template <class F>
using PolyMat = Matrix<Poly<F>>;

template <class F>
RatMat<F> to_ratmat(const PolyMat<F>& P) {
    return P.template map<RatFun<F>>([](const Poly<F>& p) { return RatFun<F>(p); });
}

template <class F>
RatMat<F> scalar_to_ratmat(const Matrix<F>& A) {
    return A.template map<RatFun<F>>([](const F& x) { return RatFun<F>(Poly<F>(x)); });
}

// requires every entry polynomial
template <class F>
PolyMat<F> to_polymat(const RatMat<F>& A) {
    return A.template map<Poly<F>>([](const RatFun<F>& r) {
        if (!r.is_polynomial()) throw std::domain_error("to_polymat: non-polynomial entry");
        return r.num();
    });
}

// entrywise evaluation; throws if the point is a pole of an entry
template <class F>
Matrix<F> eval_at(const RatMat<F>& A, const F& x0) {
    return A.template map<F>([&](const RatFun<F>& r) { return r.is_zero() ? FieldOps<F>::zero() : r.eval(x0); });
}

template <class F>
Matrix<F> eval_at(const PolyMat<F>& A, const F& x0) {
    return A.template map<F>([&](const Poly<F>& p) { return p.eval(x0); });
}

// elementwise minimum of local discrete valuations; +inf iff A == 0
template <class F>
Valuation matrix_valuation(const RatMat<F>& A, const F& x0) {
    Valuation v = Valuation::infinity();
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) v = min(v, A(i, j).valuation_at(x0));
    return v;
}

template <class F>
Valuation matrix_valuation_at_infinity(const RatMat<F>& A) {
    Valuation v = Valuation::infinity();
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) v = min(v, A(i, j).valuation_at_infinity());
    return v;
}

template <class F>
RatFun<F> ratmat_det(const RatMat<F>& A) {
    return det_elim(A);
}

// rank over the rational-function field
inline size_t normal_rank(const RatMat<Rational>& A) {
    return rank_elim(A);
}

// float backend: rank of evaluations at pseudo-random points, majority of 3
inline size_t normal_rank(const RatMat<Complex>& A, std::uint64_t seed = 12345) {
    if (A.empty()) return 0;
    SeededRng rng(seed);
    std::vector<size_t> ranks;
    for (int t = 0; t < 3; ++t) {
        for (int attempt = 0; attempt < 32; ++attempt) {
            double ang = rng.next_double() * 6.283185307179586;
            double rad = 1.0 + rng.next_double();
            Complex x0(rad * std::cos(ang), rad * std::sin(ang));
            try {
                ranks.push_back(mat_rank(eval_at(A, x0)));
                break;
            } catch (const std::domain_error&) {
                continue;  // hit a pole, redraw
            }
        }
    }
    if (ranks.empty()) throw std::runtime_error("normal_rank: could not find pole-free sample points");
    size_t best = ranks[0];
    for (size_t r : ranks)
        if (r > best) best = r;  // rank can only drop at special points
    return best;
}

template <class F>
bool is_local_unimodular(const RatMat<F>& M, const F& x0) {
    if (M.rows() != M.cols()) throw std::invalid_argument("is_local_unimodular: non-square matrix");
    if (M.empty()) return true;
    if (matrix_valuation(M, x0) != Valuation(0)) return false;
    return ratmat_det(M).valuation_at(x0) == Valuation(0);
}

// entrywise substitution lambda -> 1/lambda
template <class F>
RatMat<F> subst_inverse(const RatMat<F>& A) {
    return A.template map<RatFun<F>>([](const RatFun<F>& r) { return r.subst_inverse(); });
}

template <class F>
RatMat<F> shifted(const RatMat<F>& A, const F& c) {
    return A.template map<RatFun<F>>([&](const RatFun<F>& r) { return r.shifted(c); });
}

// monic least common multiple of all entry denominators in a row
template <class F>
Poly<F> row_denominator_lcm(const RatMat<F>& A, size_t i) {
    Poly<F> l = Poly<F>::one();
    for (size_t j = 0; j < A.cols(); ++j) {
        const Poly<F>& d = A(i, j).den();
        Poly<F> g = Poly<F>::gcd(l, d);
        l = (l * d) / g;
    }
    return l.monic();
}

template <class F>
Poly<F> col_denominator_lcm(const RatMat<F>& A, size_t j) {
    Poly<F> l = Poly<F>::one();
    for (size_t i = 0; i < A.rows(); ++i) {
        const Poly<F>& d = A(i, j).den();
        Poly<F> g = Poly<F>::gcd(l, d);
        l = (l * d) / g;
    }
    return l.monic();
}

// clear denominators row by row; kernel is unchanged
template <class F>
PolyMat<F> clear_denominators_rows(const RatMat<F>& A) {
    PolyMat<F> P(A.rows(), A.cols());
    for (size_t i = 0; i < A.rows(); ++i) {
        Poly<F> l = row_denominator_lcm(A, i);
        // inexact gcds may under-estimate the lcm; patch up until clear
        for (int pass = 0; pass < 8; ++pass) {
            bool clean = true;
            for (size_t j = 0; j < A.cols(); ++j) {
                RatFun<F> e = RatFun<F>(l) * A(i, j);
                if (!e.is_polynomial()) {
                    l = (l * e.den()).monic();
                    clean = false;
                    break;
                }
                P(i, j) = e.num();
            }
            if (clean) break;
        }
    }
    return P;
}

template <class F>
Matrix<F> ratfun_vec_eval(const std::vector<RatFun<F>>& v, const F& x0) {
    Matrix<F> r(v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) r(i, 0) = v[i].is_zero() ? FieldOps<F>::zero() : v[i].eval(x0);
    return r;
}

template <class F>
Valuation vector_valuation(const std::vector<RatFun<F>>& v, const F& x0) {
    Valuation k = Valuation::infinity();
    for (const auto& e : v) k = min(k, e.valuation_at(x0));
    return k;
}

template <class F>
std::vector<RatFun<F>> matvec(const RatMat<F>& A, const std::vector<RatFun<F>>& x) {
    if (A.cols() != x.size()) throw std::invalid_argument("matvec: shape mismatch");
    std::vector<RatFun<F>> y(A.rows(), RatFun<F>::zero());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) y[i] = y[i] + A(i, j) * x[j];
    return y;
}

}  // namespace ratroot
