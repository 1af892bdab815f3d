// Maximal sets of root polynomials for matrix pencils via block
// Toeplitz kernels, and Jordan structure of a regular pencil at a
// point. Constant linear algebra only, so this is the numerically
// robust path for the inexact backend.
#pragma once

#include <vector>

#include "realization.hpp"

namespace ratroot {

// particular solution of a consistent system A c = b
template <class T>
Matrix<T> solve_consistent(const Matrix<T>& A, const Matrix<T>& b) {
    Matrix<T> aug = Matrix<T>::hcat(A, b);
    std::vector<size_t> piv = rref_in_place(aug);
    Matrix<T> c(A.cols(), 1);
    size_t r = 0;
    for (size_t p : piv) {
        if (p >= A.cols()) throw std::domain_error("solve_consistent: inconsistent system");
        c(p, 0) = aug(r, A.cols());
        ++r;
    }
    return c;
}

inline Matrix<Complex> solve_consistent(const Matrix<Complex>& A, const Matrix<Complex>& b) {
    Eigen::MatrixXcd x = to_eigen(A).bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(to_eigen(b));
    return from_eigen(x);
}

// zero out columns of the leading-block projection P that are
// negligible against the corresponding full kernel column; SVD kernels
// are orthonormal, so a tiny leading block means the chain starts with
// x_0 = 0 and must not contribute a direction
template <class F>
void clean_projection(Matrix<F>& P, const Matrix<F>& Z) {
    if constexpr (!FieldOps<F>::exact) {
        for (size_t j = 0; j < P.cols(); ++j) {
            double top = 0, full = 0;
            for (size_t i = 0; i < P.rows(); ++i) top = std::max(top, FieldOps<F>::magnitude(P(i, j)));
            for (size_t i = 0; i < Z.rows(); ++i) full = std::max(full, FieldOps<F>::magnitude(Z(i, j)));
            if (top <= std::sqrt(numeric_context().rank_tol) * full)
                for (size_t i = 0; i < P.rows(); ++i) P(i, j) = FieldOps<F>::zero();
        }
    }
}

// T_k for L(mu) = M0 + mu M1: block lower bidiagonal, k blocks
template <class F>
Matrix<F> toeplitz_block(const Matrix<F>& M0, const Matrix<F>& M1, size_t k) {
    size_t m = M0.rows(), n = M0.cols();
    Matrix<F> T(k * m, k * n);
    for (size_t t = 0; t < k; ++t) {
        T.set_block(t * m, t * n, M0);
        if (t > 0) T.set_block(t * m, (t - 1) * n, M1);
    }
    return T;
}

// maximal set of root polynomials at x0 for the pencil L(l) = L0 + l L1
// (possibly singular / rectangular). Chains [x_0 .. x_{k-1}] live in
// ker T_k; the maximal set is picked greedily by descending depth,
// requiring each new direction x_0 to be independent of the kernel
// span and the previously selected directions.
template <class F>
MaximalSet<F> pencil_maximal_set(const Matrix<F>& L0, const Matrix<F>& L1, const F& x0) {
    size_t m = L0.rows(), n = L0.cols();
    Matrix<F> M0 = L0 + x0 * L1;  // local variable mu = l - x0
    const Matrix<F>& M1 = L1;
    size_t cap = std::min(m, n) + 1;  // depths beyond min(m,n) only see the kernel
    std::vector<Matrix<F>> Z(cap + 1);  // Z[k] = ker T_k
    for (size_t k = 1; k <= cap; ++k) Z[k] = mat_kernel(toeplitz_block(M0, M1, k));
    // x_0-projections of the deepest chains; the greedy loop below adds
    // the directions of shorter chains
    Matrix<F> Wp = Z[cap].block(0, 0, n, Z[cap].cols());
    clean_projection(Wp, Z[cap]);
    Matrix<F> W = image_basis(Wp);

    MaximalSet<F> out;
    out.point = x0;
    RatMat<F> Lr(m, n);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j)
            Lr(i, j) = RatFun<F>(Poly<F>(std::vector<F>{L0(i, j), L1(i, j)}));
    out.kernel = minimal_kernel_basis(Lr);

    Matrix<F> sel = W;
    for (size_t k = cap - 1; k >= 1; --k) {
        if (Z[k].cols() == 0) continue;
        Matrix<F> P = Z[k].block(0, 0, n, Z[k].cols());
        clean_projection(P, Z[k]);
        Matrix<F> Pb = image_basis(P);
        for (size_t j = 0; j < Pb.cols(); ++j) {
            Matrix<F> v = Pb.col(j);
            size_t r0 = mat_rank(sel);
            if (mat_rank(Matrix<F>::hcat(sel, v)) == r0) continue;
            Matrix<F> c = solve_consistent(P, v);
            Matrix<F> chain = Z[k] * c;
            RootVector<F> rv;
            rv.x.reserve(n);
            Valuation ord = Valuation::infinity();
            {
                // x(l) = sum_t chain_t (l - x0)^t, and its order
                std::vector<Poly<F>> xp(n);
                for (size_t i = 0; i < n; ++i) {
                    std::vector<F> cf(k, FieldOps<F>::zero());
                    for (size_t t = 0; t < k; ++t) cf[t] = chain(t * n + i, 0);
                    xp[i] = Poly<F>(std::move(cf)).shifted(-x0);
                    rv.x.push_back(RatFun<F>(xp[i]));
                }
                for (size_t i = 0; i < m; ++i) {
                    Poly<F> y = Poly<F>::zero();
                    for (size_t jj = 0; jj < n; ++jj)
                        y = y + Poly<F>(std::vector<F>{L0(i, jj), L1(i, jj)}) * xp[jj];
                    if (!y.is_zero()) ord = min(ord, Valuation(y.root_multiplicity(x0)));
                }
            }
            if (ord.is_infinite() || ord < Valuation(long(k))) continue;  // numerically degenerate chain
            rv.order = ord.value();
            out.vectors.push_back(std::move(rv));
            sel = Matrix<F>::hcat(sel, v);
        }
    }
    std::stable_sort(out.vectors.begin(), out.vectors.end(),
                     [](const RootVector<F>& a, const RootVector<F>& b) { return a.order > b.order; });
    out.sigmas = out.orders();
    return out;
}

// the system matrix of a pencil realization, as a pencil L0 + l L1
template <class F>
std::pair<Matrix<F>, Matrix<F>> system_pencil(const StateSpace<F>& s) {
    size_t q = s.order(), m = s.C.rows(), n = s.B.cols();
    Matrix<F> L0(q + m, q + n), L1(q + m, q + n);
    L0.set_block(0, 0, s.A);
    L0.set_block(0, q, s.B);
    L0.set_block(q, 0, s.C);
    L0.set_block(q, q, s.D);
    L1.set_block(0, 0, -s.E);
    return {L0, L1};
}

template <class F>
MaximalSet<F> system_pencil_maximal_set(const StateSpace<F>& s, const F& x0) {
    auto [L0, L1] = system_pencil(s);
    return pencil_maximal_set(L0, L1, x0);
}

// sizes (non-increasing) of the Jordan blocks of the regular pencil
// A - l E at x0, from the rank sequence of powers; empty when x0 is
// not an eigenvalue. Singular E is handled through the shifted
// resolvent G = (A - mu E)^{-1} E, whose eigenvalue 1/(x0 - mu)
// carries the same block structure.
template <class F>
std::vector<long> nilpotent_structure(const Matrix<F>& A, const Matrix<F>& E, const F& x0) {
    size_t q = A.rows();
    if (q == 0) return {};
    if (A.cols() != q || E.rows() != q || E.cols() != q)
        throw std::invalid_argument("nilpotent_structure: non-square pencil");
    F mu = FieldOps<F>::zero();
    bool found = false;
    for (long t = 0; t <= long(2 * q) + 2 && !found; ++t) {
        long c = (t % 2 == 0) ? t / 2 : -(t / 2 + 1);
        mu = FieldOps<F>::from_int(c);
        if (FieldOps<F>::is_zero(mu - x0)) continue;
        found = mat_rank(A - mu * E) == q;
    }
    if (!found) throw std::domain_error("nilpotent_structure: singular pencil");
    Matrix<F> G = solve_linear(A - mu * E, E);
    F nu = FieldOps<F>::one() / (x0 - mu);
    Matrix<F> N = G - nu * Matrix<F>::identity(q);
    std::vector<size_t> ranks{q};  // rank of N^0
    Matrix<F> P = Matrix<F>::identity(q);
    for (size_t j = 1; j <= q; ++j) {
        P = P * N;
        ranks.push_back(mat_rank(P));
        if (ranks[j] == ranks[j - 1]) break;
    }
    std::vector<long> sizes;
    // w_j = #blocks of size >= j
    std::vector<size_t> w;
    for (size_t j = 1; j < ranks.size(); ++j) w.push_back(ranks[j - 1] - ranks[j]);
    for (size_t j = w.size(); j >= 1; --j) {
        size_t count = w[j - 1] - (j < w.size() ? w[j] : 0);
        for (size_t t = 0; t < count; ++t) sizes.push_back(long(j));
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

}  // namespace ratroot
