// State-space realizations R(l) = C (lE - A)^{-1} B + D, polynomial
// system matrices, exact minimization, and lifting / projecting root
// vectors between a rational matrix and its system matrix.
#pragma once

#include <vector>

#include "rootvec.hpp"

namespace ratroot {

template <class F>
RatMat<F> col_from_vec(const std::vector<RatFun<F>>& v) {
    RatMat<F> c(v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) c(i, 0) = v[i];
    return c;
}

template <class F>
std::vector<RatFun<F>> vec_from_col(const RatMat<F>& c) {
    std::vector<RatFun<F>> v;
    v.reserve(c.rows());
    for (size_t i = 0; i < c.rows(); ++i) v.push_back(c(i, 0));
    return v;
}

template <class T>
Matrix<T> adjoint(const Matrix<T>& A) {
    return A.transpose().template map<T>([](const T& x) { return FieldOps<T>::conj(x); });
}

// basis of the column space: pivot columns (exact) / left singular
// vectors (inexact)
template <class T>
Matrix<T> image_basis(const Matrix<T>& M) {
    Matrix<T> W = M;
    std::vector<size_t> piv = rref_in_place(W);
    Matrix<T> B(M.rows(), piv.size());
    for (size_t j = 0; j < piv.size(); ++j)
        for (size_t i = 0; i < M.rows(); ++i) B(i, j) = M(i, piv[j]);
    return B;
}

inline Matrix<Complex> image_basis(const Matrix<Complex>& M) {
    if (M.empty()) return Matrix<Complex>(M.rows(), 0);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(M), Eigen::ComputeThinU);
    const Eigen::VectorXd& sv = svd.singularValues();
    double thr = svd_threshold(sv, M.rows(), M.cols());
    long r = 0;
    for (long i = 0; i < sv.size(); ++i)
        if (sv(i) > thr) ++r;
    return from_eigen(svd.matrixU().leftCols(r));
}

// restrict (M, B, C) to the smallest M-invariant subspace containing
// im B; the transfer contribution of the dropped states is zero
template <class F>
void controllable_trim(Matrix<F>& M, Matrix<F>& B, Matrix<F>& C) {
    size_t q = M.rows();
    Matrix<F> X = image_basis(B);
    for (size_t it = 0; it < q && X.cols() < q; ++it) {
        Matrix<F> X2 = image_basis(Matrix<F>::hcat(X, M * X));
        if (X2.cols() == X.cols()) break;
        X = std::move(X2);
    }
    if (X.cols() == q) return;
    Matrix<F> T = Matrix<F>::hcat(X, mat_kernel(adjoint(X)));
    Matrix<F> Tin = inverse_of(T);
    size_t r = X.cols();
    M = (Tin * M * T).block(0, 0, r, r);
    B = (Tin * B).block(0, 0, r, B.cols());
    C = (C * T).block(0, 0, C.rows(), r);
}

template <class F>
void observable_trim(Matrix<F>& M, Matrix<F>& B, Matrix<F>& C) {
    Matrix<F> Mt = M.transpose(), Bt = C.transpose(), Ct = B.transpose();
    controllable_trim(Mt, Bt, Ct);
    M = Mt.transpose();
    B = Ct.transpose();
    C = Bt.transpose();
}

// --- polynomial system matrices --------------------------------------------

// P = [[-A, B], [C, D]] with A square and regular; the transfer
// function is C A^{-1} B + D
template <class F>
struct PolySystemMatrix {
    PolyMat<F> A, B, C, D;

    size_t state_dim() const { return A.rows(); }
    size_t out_dim() const { return C.rows(); }
    size_t in_dim() const { return B.cols(); }

    PolyMat<F> full() const {
        return PolyMat<F>::vcat(PolyMat<F>::hcat(-A, B), PolyMat<F>::hcat(C, D));
    }
    RatMat<F> transfer() const {
        RatMat<F> W = solve_linear(to_ratmat(A), to_ratmat(B));
        return to_ratmat(C) * W + to_ratmat(D);
    }
    // minimal iff both compounds [-A B] and [-A; C] have trivial Smith
    // form; the sign is irrelevant there
    bool is_minimal() const {
        return has_trivial_smith_form(PolyMat<F>::hcat(A, B)) &&
               has_trivial_smith_form(PolyMat<F>::vcat(A, C));
    }
    bool is_minimal_at(const F& x0) const {
        size_t q = state_dim();
        return mat_rank(eval_at(PolyMat<F>::hcat(A, B), x0)) == q &&
               mat_rank(eval_at(PolyMat<F>::vcat(A, C), x0)) == q;
    }
};

// --- state space -----------------------------------------------------------

template <class F>
struct StateSpace {
    Matrix<F> A, E, B, C, D;

    size_t order() const { return A.rows(); }

    // A(l) = l E - A, so the top-left block of the system matrix reads
    // A - l E as usual
    PolySystemMatrix<F> system() const {
        size_t q = order();
        PolySystemMatrix<F> P;
        P.A = PolyMat<F>(q, q);
        for (size_t i = 0; i < q; ++i)
            for (size_t j = 0; j < q; ++j)
                P.A(i, j) = Poly<F>(std::vector<F>{-A(i, j), E(i, j)});
        auto constant = [](const Matrix<F>& M) {
            return M.template map<Poly<F>>([](const F& x) { return Poly<F>(x); });
        };
        P.B = constant(B);
        P.C = constant(C);
        P.D = constant(D);
        return P;
    }

    RatMat<F> transfer() const {
        if (order() == 0) return scalar_to_ratmat(D);
        return system().transfer();
    }
    bool is_minimal() const { return order() == 0 || system().is_minimal(); }
    bool is_minimal_at(const F& x0) const { return order() == 0 || system().is_minimal_at(x0); }
};

// exact minimization: Fitting split of the pencil at a regular shift
// into a finite part (invertible E) and an infinite part (nilpotent),
// then Kalman controllability/observability trims on each
template <class F>
StateSpace<F> minimize(const StateSpace<F>& s) {
    size_t q = s.order();
    if (q == 0) return s;
    // regular shift: det(A - mu E) != 0
    F mu = FieldOps<F>::zero();
    bool found = false;
    for (long t = 0; t <= long(2 * q) + 1 && !found; ++t) {
        long c = (t % 2 == 0) ? t / 2 : -(t / 2 + 1);
        mu = FieldOps<F>::from_int(c);
        found = mat_rank(s.A - mu * s.E) == q;
    }
    if (!found) throw std::domain_error("minimize: singular pencil");
    Matrix<F> AmE = s.A - mu * s.E;
    Matrix<F> G = solve_linear(AmE, s.E);
    Matrix<F> Bh = solve_linear(AmE, s.B);
    // Fitting decomposition along G^q
    Matrix<F> Gq = Matrix<F>::identity(q);
    for (size_t i = 0; i < q; ++i) Gq = Gq * G;
    Matrix<F> V1 = image_basis(Gq);
    Matrix<F> V2 = mat_kernel(Gq);
    Matrix<F> T = Matrix<F>::hcat(V1, V2);
    Matrix<F> Tin = inverse_of(T);
    size_t r = V1.cols();
    Matrix<F> Gs = Tin * G * T;
    Matrix<F> Bs = Tin * Bh;
    Matrix<F> Cs = s.C * T;
    // finite part: E invertible, standard form A_f = G1^{-1} + mu I
    Matrix<F> Af, Bf, Cf;
    if (r > 0) {
        Matrix<F> G1 = Gs.block(0, 0, r, r);
        Matrix<F> G1inv = inverse_of(G1);
        Af = G1inv + mu * Matrix<F>::identity(r);
        Bf = G1inv * Bs.block(0, 0, r, s.B.cols());
        Cf = Cs.block(0, 0, s.C.rows(), r);
        controllable_trim(Af, Bf, Cf);
        observable_trim(Af, Bf, Cf);
    } else {
        Bf = Matrix<F>(0, s.B.cols());
        Cf = Matrix<F>(s.C.rows(), 0);
    }
    // infinite part: l Gt - I with Gt nilpotent
    size_t ri = q - r;
    Matrix<F> Gi, Bi, Ci;
    if (ri > 0) {
        Matrix<F> G2 = Gs.block(r, r, ri, ri);
        Matrix<F> A2 = Matrix<F>::identity(ri) + mu * G2;
        Matrix<F> A2inv = inverse_of(A2);
        Gi = A2inv * G2;
        Bi = A2inv * Bs.block(r, 0, ri, s.B.cols());
        Ci = Cs.block(0, r, s.C.rows(), ri);
        controllable_trim(Gi, Bi, Ci);
        observable_trim(Gi, Bi, Ci);
    } else {
        Bi = Matrix<F>(0, s.B.cols());
        Ci = Matrix<F>(s.C.rows(), 0);
    }
    StateSpace<F> out;
    out.A = Matrix<F>::diag_cat(Af, Matrix<F>::identity(Gi.rows()));
    out.E = Matrix<F>::diag_cat(Matrix<F>::identity(Af.rows()), Gi);
    out.B = Matrix<F>::vcat(Bf, Bi);
    out.C = Matrix<F>::hcat(Cf, Ci);
    out.D = s.D;
    return out;
}

// pencil realization of a rational matrix: companion blocks per column
// for the strictly proper part, a nilpotent block for the polynomial
// part, followed by exact minimization
template <class F>
StateSpace<F> realize(const RatMat<F>& R) {
    size_t m = R.rows(), n = R.cols();
    RatMat<F> SP(m, n);
    PolyMat<F> PP(m, n);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto [qq, rem] = Poly<F>::divmod(R(i, j).num(), R(i, j).den());
            PP(i, j) = qq;
            SP(i, j) = RatFun<F>(rem, R(i, j).den());
        }
    StateSpace<F> s;
    s.A = Matrix<F>(0, 0);
    s.E = Matrix<F>(0, 0);
    s.B = Matrix<F>(0, n);
    s.C = Matrix<F>(m, 0);
    s.D = Matrix<F>(m, n);
    // strictly proper part, one companion block per column
    for (size_t j = 0; j < n; ++j) {
        Poly<F> d = col_denominator_lcm(SP, j);
        // inexact gcds may under-estimate the lcm; patch until clear
        std::vector<Poly<F>> num(m);
        for (int pass = 0; pass < 8; ++pass) {
            bool clean = true;
            for (size_t i = 0; i < m; ++i) {
                RatFun<F> e = RatFun<F>(d) * SP(i, j);
                if (!e.is_polynomial()) {
                    d = (d * e.den()).monic();
                    clean = false;
                    break;
                }
                num[i] = e.num();
            }
            if (clean) break;
        }
        int k = d.degree();
        if (k <= 0) continue;
        size_t kk = size_t(k);
        Matrix<F> Aj(kk, kk);
        for (size_t i = 0; i + 1 < kk; ++i) Aj(i, i + 1) = FieldOps<F>::one();
        for (size_t t = 0; t < kk; ++t) Aj(kk - 1, t) = -d.coeff(int(t));
        Matrix<F> Bj(kk, n);
        Bj(kk - 1, j) = FieldOps<F>::one();
        Matrix<F> Cj(m, kk);
        for (size_t i = 0; i < m; ++i)
            for (size_t t = 0; t < kk; ++t) Cj(i, t) = num[i].coeff(int(t));
        s.A = Matrix<F>::diag_cat(s.A, Aj);
        s.E = Matrix<F>::diag_cat(s.E, Matrix<F>::identity(kk));
        s.B = Matrix<F>::vcat(s.B, Bj);
        s.C = Matrix<F>::hcat(s.C, Cj);
    }
    // polynomial part: constant term into D, higher terms through a
    // nilpotent pencil block (A = -I, E = -shift)
    int k = -1;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) {
            s.D(i, j) = PP(i, j).coeff(0);
            k = std::max(k, PP(i, j).degree());
        }
    if (k >= 1) {
        size_t nb = n, dim = size_t(k + 1) * nb;
        Matrix<F> Ai(dim, dim), Ei(dim, dim), Bi(dim, n), Ci(m, dim);
        for (size_t i = 0; i < dim; ++i) Ai(i, i) = -FieldOps<F>::one();
        for (int blk = 0; blk + 1 <= k; ++blk)
            for (size_t i = 0; i < nb; ++i)
                Ei(size_t(blk + 1) * nb + i, size_t(blk) * nb + i) = -FieldOps<F>::one();
        for (size_t i = 0; i < nb; ++i) Bi(i, i) = FieldOps<F>::one();
        for (int t = 1; t <= k; ++t)
            for (size_t i = 0; i < m; ++i)
                for (size_t j = 0; j < nb; ++j) Ci(i, size_t(t) * nb + j) = PP(i, j).coeff(t);
        s.A = Matrix<F>::diag_cat(s.A, Ai);
        s.E = Matrix<F>::diag_cat(s.E, Ei);
        s.B = Matrix<F>::vcat(s.B, Bi);
        s.C = Matrix<F>::hcat(s.C, Ci);
    }
    return minimize(s);
}

// --- root vectors through system matrices ----------------------------------

// lift a root vector x of the transfer function at x0 to the system
// matrix: y = [A^{-1} B x; x], with the order recomputed
template <class F>
RootVector<F> lift_root_vector(const PolySystemMatrix<F>& P, const RootVector<F>& rv, const F& x0) {
    RatMat<F> W = solve_linear(to_ratmat(P.A), to_ratmat(P.B) * col_from_vec(rv.x));
    RootVector<F> y;
    y.x = vec_from_col(W);
    for (const auto& e : rv.x) y.x.push_back(e);
    RatMat<F> S = to_ratmat(P.full());
    y.order = root_vector_order(S, y.x, x0, minimal_kernel_basis(S));
    return y;
}

// project a root vector of the system matrix back to the transfer
// function by dropping the state part; valid when x0 is not a pole
template <class F>
RootVector<F> project_root_vector(const PolySystemMatrix<F>& P, const RootVector<F>& y, const F& x0) {
    size_t q = P.state_dim();
    RootVector<F> x;
    x.x.assign(y.x.begin() + long(q), y.x.end());
    RatMat<F> R = P.transfer();
    x.order = root_vector_order(R, x.x, x0, minimal_kernel_basis(R));
    return x;
}

}  // namespace ratroot
