// Dense univariate polynomials over a pluggable scalar field,
// coefficients stored lowest degree first.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace ratroot {

template <class F>
class Poly {
  public:
    using Ops = FieldOps<F>;

    Poly() = default;
    Poly(const F& c) {  // NOLINT: implicit constant promotion is intended
        if (!Ops::is_zero(c)) c_.push_back(c);
    }
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Ops::one()); }
    static Poly variable() { return Poly(std::vector<F>{Ops::zero(), Ops::one()}); }
    // (x - a)
    static Poly linear(const F& a) {
        return Poly(std::vector<F>{F(-a), Ops::one()});
    }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial (stands in for the -infinity sentinel)
    int degree() const { return int(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }
    // coefficient of lambda^i, zero outside the stored range
    F coeff(int i) const {
        if (i < 0 || i >= int(c_.size())) return Ops::zero();
        return c_[size_t(i)];
    }
    F leading() const {
        if (c_.empty()) return Ops::zero();
        return c_.back();
    }
    bool is_constant() const { return c_.size() <= 1; }

    F eval(const F& x) const {
        F acc = Ops::zero();
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), Ops::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), Ops::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, Ops::zero());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const F& s, const Poly& p) {
        Poly r = p;
        for (auto& c : r.c_) c = s * c;
        r.normalize();
        return r;
    }
    friend Poly operator*(const Poly& p, const F& s) { return s * p; }

    friend bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // quotient and remainder, deg(rem) < deg(divisor)
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly: division by the zero polynomial");
        Poly rem = a;
        std::vector<F> q;
        int db = b.degree();
        if (rem.degree() >= db) q.assign(size_t(rem.degree() - db + 1), Ops::zero());
        F invlead = Ops::one() / b.leading();
        while (!rem.is_zero() && rem.degree() >= db) {
            int shift = rem.degree() - db;
            F f = rem.leading() * invlead;
            q[size_t(shift)] = f;
            // rem -= f * x^shift * b
            std::vector<F> rc = rem.c_;
            for (int i = 0; i <= db; ++i) rc[size_t(i + shift)] = rc[size_t(i + shift)] - f * b.c_[size_t(i)];
            rc.resize(size_t(rem.degree()));  // leading term cancels by construction
            rem = Poly(std::move(rc));
        }
        return {Poly(std::move(q)), rem};
    }

    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    Poly monic() const {
        if (is_zero()) return *this;
        return (Ops::one() / leading()) * (*this);
    }

    // monic gcd via the Euclidean algorithm
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // p(x + a), Taylor shift by synthetic Horner steps
    Poly shifted(const F& a) const {
        if (is_zero() || Ops::is_zero(a)) return *this;
        std::vector<F> r = c_;
        size_t n = r.size();
        for (size_t i = 0; i + 1 < n; ++i)
            for (size_t j = n - 1; j > i; --j) r[j - 1] = r[j - 1] + a * r[j];
        return Poly(std::move(r));
    }

    // x^deg * p(1/x)
    Poly reversed() const {
        std::vector<F> r(c_.rbegin(), c_.rend());
        return Poly(std::move(r));
    }

    // multiplicity of root a (0 if p(a) != 0); throws on the zero polynomial
    int root_multiplicity(const F& a) const {
        if (is_zero()) throw std::logic_error("Poly: root multiplicity of the zero polynomial");
        Poly s = shifted(a);
        double scale = s.max_magnitude();
        int k = 0;
        while (k <= s.degree() && Ops::is_negligible(s.coeff(k), scale)) ++k;
        return k;
    }

    Poly times_power(int k) const {  // multiply by x^k, k >= 0
        if (is_zero() || k == 0) return *this;
        std::vector<F> r(size_t(k), Ops::zero());
        r.insert(r.end(), c_.begin(), c_.end());
        return Poly(std::move(r));
    }

    Poly truncated(int max_degree) const {  // drop terms above max_degree
        if (max_degree < 0) return Poly();
        std::vector<F> r(c_.begin(), c_.begin() + std::min(c_.size(), size_t(max_degree) + 1));
        return Poly(std::move(r));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<F> r(c_.size() - 1, Ops::zero());
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Ops::from_int(long(i)) * c_[i];
        return Poly(std::move(r));
    }

    static Poly pow(const Poly& p, int e) {
        Poly r = one();
        for (int i = 0; i < e; ++i) r = r * p;
        return r;
    }

    double max_magnitude() const {
        double m = 0;
        for (const auto& c : c_) m = std::max(m, Ops::magnitude(c));
        return m;
    }

    std::string str(const std::string& var = "l") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (Ops::is_zero(coeff(i))) continue;
            if (!s.empty()) s += " + ";
            s += Ops::to_string(coeff(i));
            if (i >= 1) s += "*" + var;
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

  private:
    void normalize() {
        if constexpr (!Ops::exact) {
            double scale = max_magnitude();
            for (auto& c : c_)
                if (Ops::is_negligible(c, scale)) c = Ops::zero();
        }
        while (!c_.empty() && Ops::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<F> c_;
};

}  // namespace ratroot
