// Removing poles by state feedback: pole assignment, the feedback
// system matrices, right coprime factorizations, and the pipeline that
// computes maximal sets at points where poles and zeros coalesce.
#pragma once

#include <vector>

#include "pencilroots.hpp"

namespace ratroot {

// det(l I - M) as a polynomial
template <class F>
Poly<F> char_poly(const Matrix<F>& M) {
    size_t q = M.rows();
    RatMat<F> L(q, q);
    for (size_t i = 0; i < q; ++i)
        for (size_t j = 0; j < q; ++j)
            L(i, j) = RatFun<F>(Poly<F>(std::vector<F>{
                -M(i, j), i == j ? FieldOps<F>::one() : FieldOps<F>::zero()}));
    RatFun<F> d = ratmat_det(L);
    return d.num() * (FieldOps<F>::one() / d.den().coeff(0));
}

template <class F>
bool poly_matches(const Poly<F>& a, const Poly<F>& b) {
    if constexpr (FieldOps<F>::exact) {
        return a == b;
    } else {
        double scale = std::max(a.max_magnitude(), b.max_magnitude());
        Poly<F> d = a - b;
        for (int t = 0; t <= d.degree(); ++t)
            if (FieldOps<F>::magnitude(d.coeff(t)) > 1e-6 * std::max(1.0, scale)) return false;
        return true;
    }
}

// state feedback F (n x q) placing the generalized eigenvalues of
// (A + B F) - l E at the targets; single-input reduction followed by
// Ackermann's formula, verified against the characteristic polynomial
template <class F>
Matrix<F> assign_poles(const Matrix<F>& A, const Matrix<F>& E, const Matrix<F>& B,
                       const std::vector<F>& targets, std::uint64_t seed = 7777) {
    size_t q = A.rows(), n = B.cols();
    if (targets.size() != q) throw std::invalid_argument("assign_poles: need one target per state");
    if (q == 0) return Matrix<F>(n, 0);
    Matrix<F> At = solve_linear(E, A);
    Matrix<F> Bt = solve_linear(E, B);
    Poly<F> chi = Poly<F>::one();
    for (const F& t : targets) chi = chi * Poly<F>::linear(t);
    SeededRng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix<F> F0(n, q);
        Matrix<F> v(n, 1, FieldOps<F>::one());
        if (attempt > 0) {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < q; ++j) F0(i, j) = FieldOps<F>::from_int(rng.next_int(-3, 3));
            bool nz = false;
            for (size_t i = 0; i < n; ++i) {
                v(i, 0) = FieldOps<F>::from_int(rng.next_int(-3, 3));
                nz = nz || !FieldOps<F>::is_zero(v(i, 0));
            }
            if (!nz) continue;
        }
        Matrix<F> Ah = At + Bt * F0;
        Matrix<F> b = Bt * v;
        Matrix<F> Ctrb(q, q), col = b;
        for (size_t j = 0; j < q; ++j) {
            Ctrb.set_block(0, j, col);
            col = Ah * col;
        }
        if (mat_rank(Ctrb) != q) continue;
        // Ackermann: f^T = -e_q^T Ctrb^{-1} chi(Ah)
        Matrix<F> chiA(q, q);
        Matrix<F> pw = Matrix<F>::identity(q);
        for (int t = 0; t <= chi.degree(); ++t) {
            chiA = chiA + chi.coeff(t) * pw;
            pw = pw * Ah;
        }
        Matrix<F> eq(q, 1);
        eq(q - 1, 0) = FieldOps<F>::one();
        Matrix<F> w = solve_linear(Ctrb.transpose(), eq);
        Matrix<F> fT = -(w.transpose() * chiA);
        Matrix<F> Fg = F0 + v * fT;
        if (poly_matches(char_poly(At + Bt * Fg), chi)) return Fg;
    }
    throw std::domain_error("assign_poles: pair is not controllable");
}

// the three systems tied to a feedback gain: S_Y = S_R [[I,0],[F,I]],
// the factor K with S_K = [[A+BF-lE, B],[F, I]], and its inverse
template <class F>
struct FeedbackData {
    Matrix<F> gain;
    std::vector<F> targets;  // assigned closed-loop eigenvalues
    StateSpace<F> sysY;
    StateSpace<F> sysK;
    StateSpace<F> sysKinv;
};

template <class F>
FeedbackData<F> feedback_system(const StateSpace<F>& s, const Matrix<F>& Fg,
                                std::vector<F> targets = {}) {
    size_t n = s.B.cols();
    Matrix<F> M = s.A + s.B * Fg;
    FeedbackData<F> fd;
    fd.gain = Fg;
    fd.targets = std::move(targets);
    fd.sysY = StateSpace<F>{M, s.E, s.B, s.C + s.D * Fg, s.D};
    fd.sysK = StateSpace<F>{M, s.E, s.B, Fg, Matrix<F>::identity(n)};
    fd.sysKinv = StateSpace<F>{s.A, s.E, s.B, -Fg, Matrix<F>::identity(n)};
    return fd;
}

// new pole locations: negative integers that avoid the given point and
// the zeros of the transfer function (rank drop of the system pencil)
template <class F>
std::vector<F> choose_targets(const StateSpace<F>& s, size_t count, const F& avoid) {
    size_t rn = normal_rank(s.transfer());
    auto [L0, L1] = system_pencil(s);
    std::vector<F> out;
    for (long c = -1; out.size() < count; --c) {
        F fc = FieldOps<F>::from_int(c);
        if (FieldOps<F>::is_zero(fc - avoid)) continue;
        if (mat_rank(L0 + fc * L1) < s.order() + rn) continue;  // a zero
        out.push_back(fc);
        if (c < -1000) throw std::runtime_error("choose_targets: no admissible points");
    }
    return out;
}

// feedback that moves only the eigenvalues at x0 (block-triangular
// closed loop): spectral split at x0, pole assignment on that block
template <class F>
FeedbackData<F> local_pole_split(const StateSpace<F>& s, const F& x0) {
    size_t q = s.order(), n = s.B.cols();
    if (q == 0) return feedback_system(s, Matrix<F>(n, 0));
    if (mat_rank(s.E) != q) throw std::domain_error("local_pole_split: singular E");
    Matrix<F> At = solve_linear(s.E, s.A);
    Matrix<F> Bt = solve_linear(s.E, s.B);
    Matrix<F> N = At - x0 * Matrix<F>::identity(q);
    Matrix<F> Nq = Matrix<F>::identity(q);
    for (size_t i = 0; i < q; ++i) Nq = Nq * N;
    Matrix<F> V1 = mat_kernel(Nq);  // generalized eigenspace at x0
    size_t r = V1.cols();
    if (r == 0) return feedback_system(s, Matrix<F>(n, q));
    Matrix<F> T = Matrix<F>::hcat(V1, image_basis(Nq));
    Matrix<F> Tin = inverse_of(T);
    Matrix<F> A1 = (Tin * At * T).block(0, 0, r, r);
    Matrix<F> B1 = (Tin * Bt).block(0, 0, r, n);
    std::vector<F> targets = choose_targets(s, r, x0);
    Matrix<F> F1 = assign_poles(A1, Matrix<F>::identity(r), B1, targets);
    Matrix<F> Fpad(n, q);
    Fpad.set_block(0, 0, F1);
    return feedback_system(s, Fpad * Tin, std::move(targets));
}

// exact recovery x = K b of a root vector of R from one of Y = R K
template <class F>
std::vector<RatFun<F>> recover_exact(const FeedbackData<F>& fd, const std::vector<RatFun<F>>& b) {
    return matvec(fd.sysK.transfer(), b);
}

// truncated recovery: K(l) b(l) modulo (l - x0)^{maxdeg+1}, using the
// Neumann series of K about x0; valid since x0 is not a closed-loop
// eigenvalue
template <class F>
std::vector<Poly<F>> recover_truncated(const FeedbackData<F>& fd, const std::vector<Poly<F>>& b,
                                       const F& x0, int maxdeg) {
    size_t q = fd.sysK.order(), n = fd.sysK.B.cols();
    // K = I - F sum_j mu^j G^j M0inv B, mu = l - x0, G = M0^{-1} E
    std::vector<Matrix<F>> Kc(size_t(maxdeg) + 1, Matrix<F>(n, n));
    Kc[0] = Matrix<F>::identity(n);
    if (q > 0) {
        Matrix<F> M0 = fd.sysK.A - x0 * fd.sysK.E;
        Matrix<F> S = solve_linear(M0, Matrix<F>::identity(q));  // M0inv
        Matrix<F> G = S * fd.sysK.E;
        Matrix<F> term = S * fd.sysK.B;
        for (int j = 0; j <= maxdeg; ++j) {
            Kc[size_t(j)] = Kc[size_t(j)] - fd.sysK.C * term;  // C = F gain
            term = G * term;
        }
    }
    std::vector<Poly<F>> out(n);
    for (size_t i = 0; i < n; ++i) {
        Poly<F> acc = Poly<F>::zero();
        for (size_t j = 0; j < n; ++j) {
            Poly<F> bj = b[j].shifted(x0);  // b in powers of mu
            Poly<F> kij = Poly<F>::zero();
            for (int t = 0; t <= maxdeg; ++t)
                kij = kij + Poly<F>(Kc[size_t(t)](i, j)).times_power(t);
            acc = acc + kij * bj;
        }
        out[i] = acc.truncated(maxdeg).shifted(-x0);
    }
    return out;
}

// --- right coprime factorization R = Y K^{-1} ------------------------------

template <class F>
struct CoprimePair {
    PolyMat<F> U;  // unimodular, [-A B] U = [I 0]
    PolyMat<F> K;  // bottom-right n x n block of U
    PolyMat<F> Y;  // bottom-right p x n block of P U
};

template <class F>
CoprimePair<F> coprime_factor_polynomial(const PolySystemMatrix<F>& P) {
    size_t q = P.state_dim(), n = P.in_dim(), p = P.out_dim();
    PolyMat<F> compound = PolyMat<F>::hcat(-P.A, P.B);
    SmithPoly<F> s = smith_poly(compound);
    if (!s.trivial(q)) throw std::domain_error("coprime_factor_polynomial: [-A B] is not irreducible");
    PolyMat<F> In(n, n);
    for (size_t i = 0; i < n; ++i) In(i, i) = Poly<F>::one();
    CoprimePair<F> cp;
    cp.U = s.V * PolyMat<F>::diag_cat(s.U, In);
    PolyMat<F> PU = P.full() * cp.U;
    cp.K = cp.U.block(q, q, n, n);
    cp.Y = PU.block(q, q, p, n);
    return cp;
}

// --- coalescent pole/zero points -------------------------------------------

template <class F>
struct CoalescentResult {
    MaximalSet<F> set;         // maximal set of R at the point
    StateSpace<F> sys;         // minimal pencil realization used
    FeedbackData<F> fb;        // pole-removing feedback
    MaximalSet<F> pencil_set;  // maximal set of the closed-loop system pencil
    long pole_order = 0;       // m, largest pole partial multiplicity at the point
    bool substituted = false;  // a shift-invert substitution was applied first
    F center{};                // its center c, l = c + 1/mu
};

// complete local structure of R at x0 through the state-space pencil
// route: remove the poles at x0 by feedback, read the zero structure
// off the closed-loop system pencil, recover root vectors through the
// truncated series by default or as x = K b when exact_k is set
template <class F>
CoalescentResult<F> coalescent_maximal_set(const RatMat<F>& R, const F& x0, bool exact_k = false) {
    // the pencil route needs a proper matrix; substitute l = c + 1/mu
    // around a pole-free center otherwise
    if (matrix_valuation_at_infinity(R) < Valuation(0)) {
        F c{};
        bool found = false;
        for (long t = 1; t <= 200 && !found; ++t) {
            c = FieldOps<F>::from_int(t);
            if (FieldOps<F>::is_zero(c - x0)) continue;
            found = !(matrix_valuation(R, c) < Valuation(0));
        }
        if (!found) throw std::runtime_error("coalescent_maximal_set: no pole-free center");
        RatMat<F> R2 = subst_inverse(shifted(R, c));  // R(c + 1/mu), proper
        F mu0 = FieldOps<F>::one() / (x0 - c);
        CoalescentResult<F> res = coalescent_maximal_set(R2, mu0, exact_k);
        res.substituted = true;
        res.center = c;
        MaximalSet<F> set;
        set.point = x0;
        set.sigmas = res.set.sigmas;  // the local parameters differ by a unit
        set.kernel = minimal_kernel_basis(R);
        for (const auto& rv : res.set.vectors) {
            RootVector<F> t;
            t.order = rv.order;
            for (const auto& e : rv.x) t.x.push_back(e.subst_inverse().shifted(-c));
            if constexpr (FieldOps<F>::exact)
                t.order = root_vector_order(R, t.x, x0, set.kernel);
            set.vectors.push_back(std::move(t));
        }
        res.set = std::move(set);
        return res;
    }

    CoalescentResult<F> res;
    StateSpace<F> s = realize(R);  // proper, so E is the identity
    res.sys = s;
    std::vector<long> blocks = nilpotent_structure(s.A, s.E, x0);
    res.pole_order = blocks.empty() ? 0 : blocks[0];
    size_t q = s.order(), n = s.B.cols();
    Matrix<F> Fg(n, q);
    std::vector<F> targets;
    if (q > 0 && !blocks.empty()) {
        targets = choose_targets(s, q, x0);
        Fg = assign_poles(s.A, s.E, s.B, targets);
    }
    res.fb = feedback_system(s, Fg, targets);
    res.pencil_set = system_pencil_maximal_set(res.fb.sysY, x0);

    MaximalSet<F> set;
    set.point = x0;
    set.kernel = minimal_kernel_basis(R);
    for (const auto& rv : res.pencil_set.vectors) {
        std::vector<RatFun<F>> b(rv.x.begin() + long(q), rv.x.end());
        RootVector<F> t;
        if (exact_k) {
            t.x = recover_exact(res.fb, b);
        } else {
            std::vector<Poly<F>> bp;
            bp.reserve(b.size());
            for (const auto& e : b) bp.push_back(e.num());  // pencil chains are polynomial
            int maxdeg = int(rv.order + res.pole_order) - 1;
            if (maxdeg < 0) maxdeg = 0;
            for (auto& p : recover_truncated(res.fb, bp, x0, maxdeg)) t.x.push_back(RatFun<F>(p));
        }
        t.order = rv.order;
        if constexpr (FieldOps<F>::exact) t.order = root_vector_order(R, t.x, x0, set.kernel);
        set.vectors.push_back(std::move(t));
    }
    std::stable_sort(set.vectors.begin(), set.vectors.end(),
                     [](const RootVector<F>& a, const RootVector<F>& b) { return a.order > b.order; });
    // partial multiplicities: positive from the orders, negative from
    // the pole blocks, zeros filling up to the normal rank
    size_t rn = normal_rank(R);
    for (const auto& rv : set.vectors) set.sigmas.push_back(rv.order);
    for (size_t t = set.vectors.size() + blocks.size(); t < rn; ++t) set.sigmas.push_back(0);
    for (size_t t = blocks.size(); t >= 1; --t) set.sigmas.push_back(-blocks[t - 1]);
    res.set = std::move(set);
    return res;
}

}  // namespace ratroot
