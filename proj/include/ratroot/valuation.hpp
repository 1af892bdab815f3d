#pragma once

#include <compare>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace ratroot {

// Value of a local discrete valuation: an integer, or +infinity exactly
// for the zero object.
class Valuation {
  public:
    Valuation() : inf_(true), v_(0) {}
    explicit Valuation(long v) : inf_(false), v_(v) {}
    static Valuation infinity() { return Valuation(); }

    bool is_infinite() const { return inf_; }
    long value() const {
        if (inf_) throw std::logic_error("Valuation: value() on infinite valuation");
        return v_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.inf_ || b.inf_) return infinity();
        return Valuation(a.v_ + b.v_);
    }
    friend Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

    friend std::ostream& operator<<(std::ostream& os, const Valuation& k) {
        if (k.inf_) return os << "inf";
        return os << k.v_;
    }

  private:
    bool inf_;
    long v_;
};

}  // namespace ratroot
