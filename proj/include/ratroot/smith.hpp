// Smith-style reductions: the local Smith-McMillan form at a point
// (over the local ring, valuation as pivot size) with transform
// witnesses, and the Smith normal form of polynomial matrices.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ratmat.hpp"

namespace ratroot {

// U * R * V = diag((l-x0)^{sigmas[i]}) padded with zeros; sigmas sorted
// non-increasingly, U and V unimodular over the local ring at x0.
template <class F>
struct LocalStructure {
    F point;
    std::vector<long> sigmas;
    RatMat<F> U;
    RatMat<F> V;

    size_t rank() const { return sigmas.size(); }
    std::vector<long> positive_sigmas() const {
        std::vector<long> p;
        for (long s : sigmas)
            if (s > 0) p.push_back(s);
        return p;
    }
    // largest pole order at the point (0 when not a pole)
    long pole_order() const {
        long m = 0;
        for (long s : sigmas) m = std::min(m, s);
        return -m;
    }
    RatMat<F> diagonal(size_t rows, size_t cols) const {
        RatMat<F> D(rows, cols);
        RatFun<F> lin(Poly<F>::linear(point));
        for (size_t i = 0; i < sigmas.size(); ++i) {
            RatFun<F> p = RatFun<F>::one();
            long s = sigmas[i];
            for (long k = 0; k < std::abs(s); ++k) p = p * lin;
            D(i, i) = s >= 0 ? p : p.inverse();
        }
        return D;
    }
};

template <class F>
LocalStructure<F> smith_mcmillan_local(const RatMat<F>& A, const F& x0) {
    size_t m = A.rows(), n = A.cols();
    RatMat<F> W = A;
    RatMat<F> U = RatMat<F>::identity(m);
    RatMat<F> V = RatMat<F>::identity(n);
    size_t r = 0;
    for (size_t t = 0; t < std::min(m, n); ++t) {
        // pivot: minimal valuation, ties by lexicographic index (exact)
        // or by magnitude (inexact)
        size_t pi = m, pj = n;
        Valuation pv = Valuation::infinity();
        double pw = -1;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j) {
                if (W(i, j).is_zero()) continue;
                Valuation v = W(i, j).valuation_at(x0);
                double w = ElemOps<RatFun<F>>::pivot_weight(W(i, j));
                if (pi == m || v < pv || (!FieldOps<F>::exact && v == pv && w > pw)) {
                    pi = i;
                    pj = j;
                    pv = v;
                    pw = w;
                }
            }
        if (pi == m) break;  // trailing block is zero
        W.swap_rows(t, pi);
        U.swap_rows(t, pi);
        W.swap_cols(t, pj);
        V.swap_cols(t, pj);
        const RatFun<F> pivot = W(t, t);
        for (size_t i = t + 1; i < m; ++i) {
            if (W(i, t).is_zero()) continue;
            RatFun<F> f = W(i, t) / pivot;  // in the local ring: val >= 0
            for (size_t j = t; j < n; ++j) W(i, j) = W(i, j) - f * W(t, j);
            for (size_t j = 0; j < m; ++j) U(i, j) = U(i, j) - f * U(t, j);
        }
        for (size_t j = t + 1; j < n; ++j) {
            if (W(t, j).is_zero()) continue;
            RatFun<F> f = W(t, j) / pivot;
            for (size_t i = t; i < m; ++i) W(i, j) = W(i, j) - f * W(i, t);
            for (size_t i = 0; i < n; ++i) V(i, j) = V(i, j) - f * V(i, t);
        }
        ++r;
    }
    // normalize diagonal entries to pure powers of (l - x0)
    RatFun<F> lin(Poly<F>::linear(x0));
    std::vector<long> sigmas(r, 0);
    for (size_t t = 0; t < r; ++t) {
        long v = W(t, t).valuation_at(x0).value();
        sigmas[t] = v;
        RatFun<F> p = RatFun<F>::one();
        for (long k = 0; k < std::labs(v); ++k) p = p * lin;
        if (v < 0) p = p.inverse();
        RatFun<F> unit_inv = p / W(t, t);  // local unit
        for (size_t i = 0; i < n; ++i) V(i, t) = V(i, t) * unit_inv;
        W(t, t) = p;
    }
    // valuations are non-decreasing along the diagonal; store them
    // non-increasingly and let the witnesses absorb the reversal
    for (size_t t = 0; t < r / 2; ++t) {
        size_t u = r - 1 - t;
        std::swap(sigmas[t], sigmas[u]);
        U.swap_rows(t, u);
        V.swap_cols(t, u);
    }
    LocalStructure<F> ls;
    ls.point = x0;
    ls.sigmas = std::move(sigmas);
    ls.U = std::move(U);
    ls.V = std::move(V);
    return ls;
}

// --- Smith normal form over F[lambda] --------------------------------------

template <class F>
struct SmithPoly {
    PolyMat<F> U;  // m x m unimodular
    PolyMat<F> V;  // n x n unimodular
    std::vector<Poly<F>> invariants;  // monic, d_i | d_{i+1}

    size_t rank() const { return invariants.size(); }
    bool trivial(size_t expected_rank) const {
        if (invariants.size() != expected_rank) return false;
        for (const auto& d : invariants)
            if (d.degree() != 0) return false;
        return true;
    }
};

template <class F>
SmithPoly<F> smith_poly(const PolyMat<F>& P) {
    size_t m = P.rows(), n = P.cols();
    PolyMat<F> W = P;
    PolyMat<F> U(m, m), V(n, n);
    for (size_t i = 0; i < m; ++i) U(i, i) = Poly<F>::one();
    for (size_t j = 0; j < n; ++j) V(j, j) = Poly<F>::one();
    size_t r = 0;
    for (size_t t = 0; t < std::min(m, n); ++t) {
        bool have_pivot = false;
        for (int guard = 0; guard < 10000; ++guard) {
            // min-degree nonzero entry of the trailing block
            size_t pi = m, pj = n;
            int pd = 0;
            for (size_t i = t; i < m; ++i)
                for (size_t j = t; j < n; ++j) {
                    if (W(i, j).is_zero()) continue;
                    if (pi == m || W(i, j).degree() < pd) {
                        pi = i;
                        pj = j;
                        pd = W(i, j).degree();
                    }
                }
            if (pi == m) break;  // zero block
            have_pivot = true;
            W.swap_rows(t, pi);
            U.swap_rows(t, pi);
            W.swap_cols(t, pj);
            V.swap_cols(t, pj);
            bool dirty = false;
            for (size_t i = t + 1; i < m; ++i) {
                if (W(i, t).is_zero()) continue;
                auto [q, rem] = Poly<F>::divmod(W(i, t), W(t, t));
                for (size_t j = t; j < n; ++j) W(i, j) = W(i, j) - q * W(t, j);
                for (size_t j = 0; j < m; ++j) U(i, j) = U(i, j) - q * U(t, j);
                if (!rem.is_zero()) dirty = true;
            }
            if (dirty) continue;
            for (size_t j = t + 1; j < n; ++j) {
                if (W(t, j).is_zero()) continue;
                auto [q, rem] = Poly<F>::divmod(W(t, j), W(t, t));
                for (size_t i = t; i < m; ++i) W(i, j) = W(i, j) - W(i, t) * q;
                for (size_t i = 0; i < n; ++i) V(i, j) = V(i, j) - V(i, t) * q;
                if (!rem.is_zero()) dirty = true;
            }
            if (dirty) continue;
            // pivot must divide the rest of the block
            size_t bi = m;
            for (size_t i = t + 1; i < m && bi == m; ++i)
                for (size_t j = t + 1; j < n; ++j) {
                    if (W(i, j).is_zero()) continue;
                    if (!(W(i, j) % W(t, t)).is_zero()) {
                        bi = i;
                        break;
                    }
                }
            if (bi != m) {
                for (size_t j = t; j < n; ++j) W(t, j) = W(t, j) + W(bi, j);
                for (size_t j = 0; j < m; ++j) U(t, j) = U(t, j) + U(bi, j);
                continue;
            }
            break;
        }
        if (!have_pivot) break;
        // monic pivot
        F inv = FieldOps<F>::one() / W(t, t).leading();
        for (size_t j = t; j < n; ++j) W(t, j) = inv * W(t, j);
        for (size_t j = 0; j < m; ++j) U(t, j) = inv * U(t, j);
        ++r;
    }
    SmithPoly<F> out;
    out.U = std::move(U);
    out.V = std::move(V);
    out.invariants.reserve(r);
    for (size_t t = 0; t < r; ++t) out.invariants.push_back(W(t, t));
    return out;
}

// true iff the Smith form of P is [I 0] (or its transpose), i.e. P has
// full min-dimension rank with all invariant factors equal to 1
template <class F>
bool has_trivial_smith_form(const PolyMat<F>& P) {
    if (P.empty()) return true;
    return smith_poly(P).trivial(std::min(P.rows(), P.cols()));
}

}  // namespace ratroot
