// Scalar rational functions num/den in normal form (reduced, monic
// denominator), with local discrete valuations at finite points and at
// infinity, and Laurent expansion.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "valuation.hpp"

#ifdef RATROOT_NO_FLOAT_BACKEND
#else
#include "float_roots.hpp"
#endif

namespace ratroot {

template <class F>
class RatFun {
  public:
    using Ops = FieldOps<F>;

    RatFun() : num_(), den_(Poly<F>::one()) {}
    RatFun(const F& c) : num_(Poly<F>(c)), den_(Poly<F>::one()) {}  // NOLINT
    RatFun(Poly<F> num) : num_(std::move(num)), den_(Poly<F>::one()) {}  // NOLINT
    RatFun(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFun zero() { return RatFun(); }
    static RatFun one() { return RatFun(Poly<F>::one()); }
    static RatFun variable() { return RatFun(Poly<F>::variable()); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // proper at infinity: deg num <= deg den
    bool is_proper() const { return num_.degree() <= den_.degree(); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun inverse() const {
        if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
        return RatFun(den_, num_);
    }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    // defined only when den(x) != 0
    F eval(const F& x) const {
        F d = den_.eval(x);
        if (Ops::is_negligible(d, den_.max_magnitude()))
            throw std::domain_error("RatFun: evaluation at a pole");
        return num_.eval(x) / d;
    }
    bool has_pole_at(const F& x) const { return valuation_at(x) < Valuation(0); }

    // exponent k in r = (x - x0)^k p/q with p(x0) != 0 != q(x0)
    Valuation valuation_at(const F& x0) const {
        if (is_zero()) return Valuation::infinity();
        return Valuation(num_.root_multiplicity(x0) - den_.root_multiplicity(x0));
    }
    Valuation valuation_at_infinity() const {
        if (is_zero()) return Valuation::infinity();
        return Valuation(den_.degree() - num_.degree());
    }

    // Laurent coefficients c_from .. c_to of the expansion about x0.
    std::vector<F> laurent_expand(const F& x0, long from, long to) const {
        if (to < from) throw std::invalid_argument("laurent_expand: empty window");
        std::vector<F> out(size_t(to - from + 1), Ops::zero());
        if (is_zero()) return out;
        Poly<F> n = num_.shifted(x0);
        Poly<F> d = den_.shifted(x0);
        int a = n.root_multiplicity(Ops::zero());
        int b = d.root_multiplicity(Ops::zero());
        long v = long(a) - long(b);
        if (to < v) return out;
        Poly<F> n1 = shift_down(n, a);
        Poly<F> d1 = shift_down(d, b);
        long len = to - v + 1;
        std::vector<F> s(size_t(len), Ops::zero());
        F d0inv = Ops::one() / d1.coeff(0);
        for (long k = 0; k < len; ++k) {
            F acc = n1.coeff(int(k));
            for (long j = 1; j <= k; ++j) acc = acc - d1.coeff(int(j)) * s[size_t(k - j)];
            s[size_t(k)] = acc * d0inv;
        }
        for (long i = std::max(from, v); i <= to; ++i) out[size_t(i - from)] = s[size_t(i - v)];
        return out;
    }

    // r(1/x)
    RatFun subst_inverse() const {
        if (is_zero()) return zero();
        int dn = num_.degree(), dd = den_.degree();
        Poly<F> n = num_.reversed();
        Poly<F> d = den_.reversed();
        if (dd >= dn)
            return RatFun(n.times_power(dd - dn), d);
        return RatFun(n, d.times_power(dn - dd));
    }
    // r(x + c)
    RatFun shifted(const F& c) const { return RatFun(num_.shifted(c), den_.shifted(c)); }

    std::string str(const std::string& var = "l") const {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

  private:
    static Poly<F> shift_down(const Poly<F>& p, int k) {
        std::vector<F> c(p.coeffs().begin() + std::min<size_t>(size_t(k), p.coeffs().size()),
                         p.coeffs().end());
        return Poly<F>(std::move(c));
    }

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>::one();
            return;
        }
        if constexpr (Ops::exact) {
            Poly<F> g = Poly<F>::gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_ / g;
                den_ = den_ / g;
            }
        } else {
#ifndef RATROOT_NO_FLOAT_BACKEND
            reduce_inexact();
#endif
        }
        F invlead = Ops::one() / den_.leading();
        num_ = invlead * num_;
        den_ = invlead * den_;
    }

#ifndef RATROOT_NO_FLOAT_BACKEND
    // drop the first m Taylor coefficients about r (a shared root of
    // multiplicity >= m in the negligibility sense)
    static Poly<F> deflate(const Poly<F>& p, const F& r, int m) {
        Poly<F> s = p.shifted(r);
        std::vector<F> c(s.coeffs().begin() + std::min<size_t>(size_t(m), s.coeffs().size()),
                         s.coeffs().end());
        F neg_r = Ops::zero() - r;
        return Poly<F>(std::move(c)).shifted(neg_r);
    }

    // cancel shared roots by multiplicity; pairing computed roots
    // directly is too fragile for multiple roots (their computed
    // locations spread by ~eps^{1/m}), so negligible Taylor
    // coefficients decide instead
    void reduce_inexact() {
        if (num_.degree() < 1 || den_.degree() < 1) return;
        for (const auto& r : poly_roots(den_)) {
            if (num_.degree() < 1 || den_.degree() < 1) break;
            int m = std::min(num_.root_multiplicity(r), den_.root_multiplicity(r));
            if (m == 0) continue;
            num_ = deflate(num_, r, m);
            den_ = deflate(den_, r, m);
        }
    }
#endif

    Poly<F> num_;
    Poly<F> den_;
};

}  // namespace ratroot
