// Root vectors and root polynomials of rational matrices at a finite
// point or at infinity, maximal sets, and eigenvector representatives.
#pragma once

#include <vector>

#include "minimal_basis.hpp"

namespace ratroot {

template <class F>
struct RootVector {
    std::vector<RatFun<F>> x;
    long order = 0;

    bool is_polynomial() const {
        for (const auto& e : x)
            if (!e.is_polynomial()) return false;
        return true;
    }
    std::vector<Poly<F>> as_polynomials() const {
        std::vector<Poly<F>> p;
        p.reserve(x.size());
        for (const auto& e : x) {
            if (!e.is_polynomial()) throw std::domain_error("root vector is not polynomial");
            p.push_back(e.num());
        }
        return p;
    }
};

// a maximal set of root vectors at one point, together with the full
// local structure it certifies
template <class F>
struct MaximalSet {
    F point;
    bool at_infinity = false;  // when set, vectors are in mu = 1/lambda and point == 0
    std::vector<long> sigmas;  // all partial multiplicities, non-increasing
    std::vector<RootVector<F>> vectors;  // one per positive sigma, orders non-increasing
    PolyMat<F> kernel;  // minimal basis of the rational kernel

    std::vector<long> orders() const {
        std::vector<long> o;
        o.reserve(vectors.size());
        for (const auto& v : vectors) o.push_back(v.order);
        return o;
    }
};

// why a candidate fails to be a root vector (or ok)
enum class RootVectorStatus { ok, bad_valuation, in_kernel, order_not_positive };

// checks the three defining conditions of a root vector of R at x0:
// kappa[x] = 0, x(x0) outside the span of the kernel basis, and
// kappa[R x] = k > 0; on success stores k in order_out
template <class F>
RootVectorStatus try_root_vector_order(const RatMat<F>& R, const std::vector<RatFun<F>>& x,
                                       const F& x0, const PolyMat<F>& kernel_basis,
                                       long& order_out) {
    if (vector_valuation(x, x0) != Valuation(0)) return RootVectorStatus::bad_valuation;
    Matrix<F> W = Matrix<F>::hcat(eval_at(kernel_basis, x0), ratfun_vec_eval(x, x0));
    if (mat_rank(W) != kernel_basis.cols() + 1) return RootVectorStatus::in_kernel;
    Valuation k = vector_valuation(matvec(R, x), x0);
    if (k <= Valuation(0)) return RootVectorStatus::order_not_positive;
    order_out = k.value();
    return RootVectorStatus::ok;
}

template <class F>
long root_vector_order(const RatMat<F>& R, const std::vector<RatFun<F>>& x, const F& x0,
                       const PolyMat<F>& kernel_basis) {
    long k = 0;
    switch (try_root_vector_order(R, x, x0, kernel_basis, k)) {
        case RootVectorStatus::ok: return k;
        case RootVectorStatus::bad_valuation:
            throw std::domain_error("root_vector_order: kappa[x] != 0 at the point");
        case RootVectorStatus::in_kernel:
            throw std::domain_error("root_vector_order: x(x0) lies in the local kernel");
        default:
            throw std::domain_error("root_vector_order: kappa[R x] <= 0");
    }
}

template <class F>
MaximalSet<F> maximal_set(const RatMat<F>& R, const F& x0) {
    MaximalSet<F> out;
    out.point = x0;
    LocalStructure<F> ls = smith_mcmillan_local(R, x0);
    out.sigmas = ls.sigmas;
    out.kernel = minimal_kernel_basis(R);
    for (size_t i = 0; i < ls.sigmas.size(); ++i) {
        if (ls.sigmas[i] <= 0) break;  // sorted non-increasingly
        RootVector<F> rv;
        rv.x.reserve(R.cols());
        for (size_t j = 0; j < R.cols(); ++j) rv.x.push_back(ls.V(j, i));
        rv.order = root_vector_order(R, rv.x, x0, out.kernel);
        // canonical scaling: first nonzero component of x(x0) becomes 1
        Matrix<F> ev = ratfun_vec_eval(rv.x, x0);
        for (size_t j = 0; j < ev.rows(); ++j) {
            if (FieldOps<F>::is_zero(ev(j, 0))) continue;
            RatFun<F> sc(Poly<F>(FieldOps<F>::one() / ev(j, 0)));
            for (auto& e : rv.x) e = sc * e;
            break;
        }
        out.vectors.push_back(std::move(rv));
    }
    // largest orders first; the Smith route already yields this, but
    // recomputed orders are the ones we trust
    std::stable_sort(out.vectors.begin(), out.vectors.end(),
                     [](const RootVector<F>& a, const RootVector<F>& b) { return a.order > b.order; });
    return out;
}

// x is a root vector of order k at infinity for R(l) iff x(1/l) is one
// of order k at 0 for R(1/l)
template <class F>
MaximalSet<F> maximal_set_at_infinity(const RatMat<F>& R) {
    MaximalSet<F> out = maximal_set(subst_inverse(R), FieldOps<F>::zero());
    out.at_infinity = true;
    return out;
}

template <class F>
std::vector<std::vector<RatFun<F>>> vectors_in_lambda(const MaximalSet<F>& s) {
    std::vector<std::vector<RatFun<F>>> out;
    for (const auto& rv : s.vectors) {
        std::vector<RatFun<F>> v;
        v.reserve(rv.x.size());
        for (const auto& e : rv.x) v.push_back(s.at_infinity ? e.subst_inverse() : e);
        out.push_back(std::move(v));
    }
    return out;
}

// evaluations of the set together with the kernel span are linearly
// independent (the defining independence notion at the point)
template <class F>
bool set_is_independent(const MaximalSet<F>& s) {
    Matrix<F> W = eval_at(s.kernel, s.point);
    for (const auto& rv : s.vectors) W = Matrix<F>::hcat(W, ratfun_vec_eval(rv.x, s.point));
    return mat_rank(W) == W.cols();
}

template <class F>
bool set_is_complete(const MaximalSet<F>& s) {
    size_t pos = 0;
    for (long sg : s.sigmas)
        if (sg > 0) ++pos;
    return s.vectors.size() == pos && set_is_independent(s);
}

template <class F>
bool set_is_maximal(const MaximalSet<F>& s) {
    if (!set_is_complete(s)) return false;
    size_t i = 0;
    for (long sg : s.sigmas) {
        if (sg <= 0) break;
        if (s.vectors[i].order != sg) return false;
        ++i;
    }
    return true;
}

// root vectors of Q = A R B from those of R for A, B locally unimodular
// at the point: the set maps through B (pull applies B^{-1} instead,
// going the other way); orders are preserved and re-verified against Q
template <class F>
MaximalSet<F> transform_set(const RatMat<F>& B, const MaximalSet<F>& s, const RatMat<F>& Q,
                            bool pull = true) {
    if (!is_local_unimodular(B, s.point))
        throw std::domain_error("transform_set: B is not locally unimodular at the point");
    RatMat<F> M = pull ? inverse_of(B) : B;
    MaximalSet<F> out;
    out.point = s.point;
    out.at_infinity = s.at_infinity;
    out.sigmas = s.sigmas;
    out.kernel = minimal_kernel_basis(Q);
    for (const auto& rv : s.vectors) {
        RootVector<F> t;
        t.x = matvec(M, rv.x);
        t.order = root_vector_order(Q, t.x, s.point, out.kernel);
        out.vectors.push_back(std::move(t));
    }
    return out;
}

// eigenvector representatives: the evaluations x_i(x0), one nonzero
// class per positive partial multiplicity
template <class F>
Matrix<F> eigenvector_representatives(const MaximalSet<F>& s) {
    Matrix<F> E;
    for (const auto& rv : s.vectors) E = Matrix<F>::hcat(E, ratfun_vec_eval(rv.x, s.point));
    return E;
}

// basis of ker R(x0) in the valuation sense: the evaluated kernel
// basis together with the evaluated maximal set
template <class F>
Matrix<F> ker_at(const RatMat<F>& R, const F& x0) {
    MaximalSet<F> s = maximal_set(R, x0);
    return Matrix<F>::hcat(eval_at(s.kernel, x0), eigenvector_representatives(s));
}

// a nonzero class in ker R(x0) / ker_{x0} R
template <class F>
struct Eigenvector {
    Matrix<F> representative;  // n x 1
    Matrix<F> kernel_basis;    // N(x0), defines the quotient
};

template <class F>
std::vector<Eigenvector<F>> eigenvectors(const RatMat<F>& R, const F& x0) {
    MaximalSet<F> s = maximal_set(R, x0);
    Matrix<F> N = eval_at(s.kernel, x0);
    std::vector<Eigenvector<F>> out;
    for (const auto& rv : s.vectors) out.push_back({ratfun_vec_eval(rv.x, x0), N});
    return out;
}

// Taylor truncation of a root vector to a root polynomial; degree
// k + m - 1 suffices where m is the pole order of R at the point
template <class F>
RootVector<F> polynomialize(const RatMat<F>& R, const RootVector<F>& rv, const F& x0,
                            const PolyMat<F>& kernel_basis) {
    long m = smith_mcmillan_local(R, x0).pole_order();
    long maxdeg = rv.order + m - 1;
    if (maxdeg < 0) maxdeg = 0;
    RootVector<F> out;
    out.x.reserve(rv.x.size());
    for (const auto& e : rv.x) {
        std::vector<F> c = e.laurent_expand(x0, 0, maxdeg);
        Poly<F> p = Poly<F>(std::move(c)).shifted(-x0);  // back to powers of lambda
        out.x.push_back(RatFun<F>(std::move(p)));
    }
    out.order = root_vector_order(R, out.x, x0, kernel_basis);
    if (out.order != rv.order)
        throw std::logic_error("polynomialize: truncation changed the order");
    return out;
}

template <class F>
MaximalSet<F> polynomialize_set(const RatMat<F>& R_at_point, const MaximalSet<F>& s) {
    MaximalSet<F> out = s;
    for (size_t i = 0; i < s.vectors.size(); ++i)
        out.vectors[i] = polynomialize(R_at_point, s.vectors[i], s.point, s.kernel);
    return out;
}

}  // namespace ratroot
