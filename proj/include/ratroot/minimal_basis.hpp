// Minimal polynomial bases of the right null space of a rational
// matrix: Smith-form kernel extraction followed by column reduction.
#pragma once

#include <numeric>
#include <vector>

#include "smith.hpp"

namespace ratroot {

template <class F>
int column_degree(const PolyMat<F>& N, size_t j) {
    int d = -1;
    for (size_t i = 0; i < N.rows(); ++i) d = std::max(d, N(i, j).degree());
    return d;
}

// coefficient of lambda^{deg col j} in column j, stacked as a matrix
template <class F>
Matrix<F> leading_column_matrix(const PolyMat<F>& N) {
    Matrix<F> L(N.rows(), N.cols());
    for (size_t j = 0; j < N.cols(); ++j) {
        int d = column_degree(N, j);
        if (d < 0) continue;
        for (size_t i = 0; i < N.rows(); ++i) L(i, j) = N(i, j).coeff(d);
    }
    return L;
}

// divide each column by the gcd of its entries, monic leading gcd
template <class F>
void make_columns_primitive(PolyMat<F>& N) {
    for (size_t j = 0; j < N.cols(); ++j) {
        Poly<F> g = Poly<F>::zero();
        for (size_t i = 0; i < N.rows(); ++i) g = Poly<F>::gcd(g, N(i, j));
        if (g.degree() < 1) continue;
        for (size_t i = 0; i < N.rows(); ++i) N(i, j) = N(i, j) / g;
    }
}

// column-reduce in place: afterwards the leading column coefficient
// matrix has full column rank; the column span over F[l] is preserved
// only up to unimodular right transforms, the rational span exactly
template <class F>
void column_reduce(PolyMat<F>& N) {
    if (N.empty()) return;
    for (int guard = 0; guard < 100000; ++guard) {
        Matrix<F> L = leading_column_matrix(N);
        Matrix<F> K = mat_kernel(L);
        if (K.cols() == 0) return;
        // take the kernel direction and cancel the top coefficient of
        // the highest-degree participating column
        size_t jstar = 0;
        int dmax = -2;
        for (size_t j = 0; j < N.cols(); ++j) {
            if (ElemOps<F>::is_zero(K(j, 0))) continue;
            int d = column_degree(N, j);
            if (d > dmax) {
                dmax = d;
                jstar = j;
            }
        }
        F cinv = FieldOps<F>::one() / K(jstar, 0);
        for (size_t j = 0; j < N.cols(); ++j) {
            if (j == jstar || ElemOps<F>::is_zero(K(j, 0))) continue;
            Poly<F> f = Poly<F>(K(j, 0) * cinv).times_power(dmax - column_degree(N, j));
            for (size_t i = 0; i < N.rows(); ++i) N(i, jstar) = N(i, jstar) + f * N(i, j);
        }
        // zero columns would mean the basis was dependent
        if (column_degree(N, jstar) < 0)
            throw std::logic_error("column_reduce: dependent columns");
    }
    throw std::runtime_error("column_reduce: did not converge");
}

// minimal polynomial basis of { x : R x = 0 }, one column per basis
// vector; n x 0 when R has full column normal rank
template <class F>
PolyMat<F> minimal_kernel_basis(const RatMat<F>& R) {
    if (R.empty()) return PolyMat<F>::identity(R.cols());
    PolyMat<F> P = clear_denominators_rows(R);
    SmithPoly<F> s = smith_poly(P);
    size_t r = s.rank();
    PolyMat<F> N = s.V.block(0, r, P.cols(), P.cols() - r);
    make_columns_primitive(N);
    column_reduce(N);
    // deterministic order: ascending column degree, then original index
    std::vector<size_t> idx(N.cols());
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return column_degree(N, a) < column_degree(N, b);
    });
    PolyMat<F> out(N.rows(), N.cols());
    for (size_t j = 0; j < N.cols(); ++j)
        for (size_t i = 0; i < N.rows(); ++i) out(i, j) = N(i, idx[j]);
    return out;
}

template <class F>
std::vector<int> minimal_indices(const PolyMat<F>& N) {
    std::vector<int> d(N.cols());
    for (size_t j = 0; j < N.cols(); ++j) d[j] = column_degree(N, j);
    return d;
}

// checks the two defining properties: full column rank at every point
// (trivial Smith form) and full-rank leading column coefficient matrix
template <class F>
bool is_minimal_basis(const PolyMat<F>& N) {
    if (N.cols() == 0) return true;
    if (mat_rank(leading_column_matrix(N)) != N.cols()) return false;
    SmithPoly<F> s = smith_poly(N);
    return s.trivial(N.cols());
}

// basis vectors evaluated at x0 span ker R(x0) "from below": the
// subspace of kernel directions that extend to local rational kernels
template <class F>
Matrix<F> kernel_span_at(const PolyMat<F>& N, const F& x0) {
    return eval_at(N, x0);
}

}  // namespace ratroot
