// Scalar fields for the library: exact rationals (GMP-backed) and
// double-precision complex numbers with context-carried tolerances.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <gmpxx.h>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ratroot {

using Rational = mpq_class;
using Complex = std::complex<double>;

// Tolerances for the inexact backend. Values are not tagged with a
// tolerance; the active context supplies one.
struct NumericContext {
    double rank_tol = 1e-10;   // scaled by max(m,n)*norm in rank decisions
    double cancel_tol = 1e-9;  // relative pole/zero cancellation distance
    double trim_tol = 1e-12;   // relative coefficient trimming
};

inline NumericContext& numeric_context() {
    thread_local NumericContext ctx;
    return ctx;
}

template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long n) { return Rational(n); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    // scale is ignored on the exact backend
    static bool is_negligible(const Rational& x, double /*scale*/) { return sgn(x) == 0; }
    static double magnitude(const Rational& x) { return std::fabs(x.get_d()); }
    static Rational conj(const Rational& x) { return x; }
    static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <>
struct FieldOps<Complex> {
    static constexpr bool exact = false;
    static Complex zero() { return Complex(0.0, 0.0); }
    static Complex one() { return Complex(1.0, 0.0); }
    static Complex from_int(long n) { return Complex(double(n), 0.0); }
    static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
    static bool is_negligible(const Complex& x, double scale) {
        double s = scale > 0 ? scale : 1.0;
        return std::abs(x) <= numeric_context().trim_tol * s;
    }
    static double magnitude(const Complex& x) { return std::abs(x); }
    static Complex conj(const Complex& x) { return std::conj(x); }
    static std::string to_string(const Complex& x) {
        std::ostringstream os;
        os.precision(17);
        if (x.imag() == 0.0) {
            os << x.real();
        } else {
            os << x.real() << (x.imag() < 0 ? "-" : "+") << std::fabs(x.imag()) << "i";
        }
        return os.str();
    }
};

inline Complex to_complex(const Rational& x) { return Complex(x.get_d(), 0.0); }
inline Complex to_complex(const Complex& x) { return x; }

// Deterministic pseudo-random stream for seeded decisions (pole sets,
// rank probes). splitmix64; good enough for reproducible test draws.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long next_int(long lo, long hi) {
        return lo + long(next() % std::uint64_t(hi - lo + 1));
    }
    double next_double() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }

  private:
    std::uint64_t state_;
};

}  // namespace ratroot
