// Dense matrices over an arbitrary field-like element type (scalars or
// rational functions), with elimination-based linear algebra.
#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ratfun.hpp"
#include "scalar.hpp"

namespace ratroot {

template <class T>
struct ElemOps {
    static constexpr bool exact = FieldOps<T>::exact;
    static T zero() { return FieldOps<T>::zero(); }
    static T one() { return FieldOps<T>::one(); }
    static bool is_zero(const T& x) { return FieldOps<T>::is_zero(x); }
    static double pivot_weight(const T& x) {
        if constexpr (exact)
            return 1.0;
        else
            return FieldOps<T>::magnitude(x);
    }
};

template <class F>
struct ElemOps<Poly<F>> {
    static constexpr bool exact = FieldOps<F>::exact;
    static Poly<F> zero() { return Poly<F>::zero(); }
    static Poly<F> one() { return Poly<F>::one(); }
    static bool is_zero(const Poly<F>& x) { return x.is_zero(); }
    static double pivot_weight(const Poly<F>& x) {
        double w = 1.0 / (1.0 + std::max(0, x.degree()));
        if constexpr (!FieldOps<F>::exact) {
            double mag = x.is_zero() ? 0.0 : FieldOps<F>::magnitude(x.leading());
            w *= mag / (1.0 + mag);
        }
        return w;
    }
};

template <class F>
struct ElemOps<RatFun<F>> {
    static constexpr bool exact = FieldOps<F>::exact;
    static RatFun<F> zero() { return RatFun<F>::zero(); }
    static RatFun<F> one() { return RatFun<F>::one(); }
    static bool is_zero(const RatFun<F>& x) { return x.is_zero(); }
    // prefer low-degree pivots to limit coefficient growth
    static double pivot_weight(const RatFun<F>& x) {
        double w = 1.0 / (1.0 + x.num().degree() + x.den().degree());
        if constexpr (!FieldOps<F>::exact) {
            double mag = FieldOps<F>::magnitude(x.num().leading());
            w *= mag / (1.0 + mag);
        }
        return w;
    }
};

template <class T>
class Matrix {
  public:
    using E = ElemOps<T>;

    Matrix() : m_(0), n_(0) {}
    Matrix(size_t m, size_t n) : m_(m), n_(n), d_(m * n, E::zero()) {}
    Matrix(size_t m, size_t n, const T& fill) : m_(m), n_(n), d_(m * n, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        m_ = rows.size();
        n_ = m_ ? rows.begin()->size() : 0;
        d_.reserve(m_ * n_);
        for (const auto& r : rows) {
            if (r.size() != n_) throw std::invalid_argument("Matrix: ragged rows");
            for (const auto& x : r) d_.push_back(x);
        }
    }

    static Matrix identity(size_t n) {
        Matrix I(n, n);
        for (size_t i = 0; i < n; ++i) I(i, i) = E::one();
        return I;
    }

    size_t rows() const { return m_; }
    size_t cols() const { return n_; }
    bool empty() const { return m_ == 0 || n_ == 0; }

    T& operator()(size_t i, size_t j) { return d_[i * n_ + j]; }
    const T& operator()(size_t i, size_t j) const { return d_[i * n_ + j]; }

    bool is_zero() const {
        for (const auto& x : d_)
            if (!E::is_zero(x)) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix r = a;
        for (size_t i = 0; i < r.d_.size(); ++i) r.d_[i] = r.d_[i] + b.d_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix r = a;
        for (size_t i = 0; i < r.d_.size(); ++i) r.d_[i] = r.d_[i] - b.d_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.d_) x = -x;
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.m_) throw std::invalid_argument("Matrix: product shape mismatch");
        Matrix r(a.m_, b.n_);
        for (size_t i = 0; i < a.m_; ++i)
            for (size_t k = 0; k < a.n_; ++k) {
                if (E::is_zero(a(i, k))) continue;
                for (size_t j = 0; j < b.n_; ++j) r(i, j) = r(i, j) + a(i, k) * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix r = a;
        for (auto& x : r.d_) x = s * x;
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.m_ != b.m_ || a.n_ != b.n_) return false;
        return (a - b).is_zero();
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix r(n_, m_);
        for (size_t i = 0; i < m_; ++i)
            for (size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Matrix block(size_t i0, size_t j0, size_t h, size_t w) const {
        Matrix r(h, w);
        for (size_t i = 0; i < h; ++i)
            for (size_t j = 0; j < w; ++j) r(i, j) = (*this)(i0 + i, j0 + j);
        return r;
    }
    void set_block(size_t i0, size_t j0, const Matrix& b) {
        for (size_t i = 0; i < b.m_; ++i)
            for (size_t j = 0; j < b.n_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }
    Matrix col(size_t j) const { return block(0, j, m_, 1); }
    Matrix row(size_t i) const { return block(i, 0, 1, n_); }

    static Matrix hcat(const Matrix& a, const Matrix& b) {
        if (a.empty()) return b;
        if (b.empty()) return a;
        if (a.m_ != b.m_) throw std::invalid_argument("Matrix: hcat shape mismatch");
        Matrix r(a.m_, a.n_ + b.n_);
        r.set_block(0, 0, a);
        r.set_block(0, a.n_, b);
        return r;
    }
    static Matrix vcat(const Matrix& a, const Matrix& b) {
        if (a.empty()) return b;
        if (b.empty()) return a;
        if (a.n_ != b.n_) throw std::invalid_argument("Matrix: vcat shape mismatch");
        Matrix r(a.m_ + b.m_, a.n_);
        r.set_block(0, 0, a);
        r.set_block(a.m_, 0, b);
        return r;
    }
    static Matrix diag_cat(const Matrix& a, const Matrix& b) {
        Matrix r(a.m_ + b.m_, a.n_ + b.n_);
        r.set_block(0, 0, a);
        r.set_block(a.m_, a.n_, b);
        return r;
    }

    template <class U, class Fn>
    Matrix<U> map(Fn f) const {
        Matrix<U> r(m_, n_);
        for (size_t i = 0; i < m_; ++i)
            for (size_t j = 0; j < n_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < n_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < m_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

  private:
    static void check_same(const Matrix& a, const Matrix& b) {
        if (a.m_ != b.m_ || a.n_ != b.n_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    size_t m_, n_;
    std::vector<T> d_;
};

// --- elimination-based linear algebra -------------------------------------

// Reduced row echelon form in place; returns pivot column indices.
template <class T>
std::vector<size_t> rref_in_place(Matrix<T>& A) {
    using E = ElemOps<T>;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        size_t best = A.rows();
        double bw = 0;
        for (size_t i = r; i < A.rows(); ++i) {
            if (E::is_zero(A(i, c))) continue;
            double w = E::pivot_weight(A(i, c));
            if (best == A.rows() || w > bw) {
                best = i;
                bw = w;
            }
        }
        if (best == A.rows()) continue;
        A.swap_rows(r, best);
        T inv = E::one() / A(r, c);
        for (size_t j = c; j < A.cols(); ++j) A(r, j) = inv * A(r, j);
        for (size_t i = 0; i < A.rows(); ++i) {
            if (i == r || E::is_zero(A(i, c))) continue;
            T f = A(i, c);
            for (size_t j = c; j < A.cols(); ++j) A(i, j) = A(i, j) - f * A(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
size_t rank_elim(Matrix<T> A) {
    return rref_in_place(A).size();
}

// Columns form a basis of the right null space.
template <class T>
Matrix<T> kernel_elim(Matrix<T> A) {
    using E = ElemOps<T>;
    std::vector<size_t> piv = rref_in_place(A);
    std::vector<bool> is_piv(A.cols(), false);
    for (size_t c : piv) is_piv[c] = true;
    size_t p = 0;
    Matrix<T> K(A.cols(), A.cols() - piv.size());
    size_t kcol = 0;
    for (size_t c = 0; c < A.cols(); ++c) {
        if (is_piv[c]) continue;
        K(c, kcol) = E::one();
        p = 0;
        for (size_t c2 = 0; c2 < c; ++c2) {
            if (!is_piv[c2]) continue;
            K(c2, kcol) = -A(p, c);
            ++p;
        }
        ++kcol;
    }
    return K;
}

template <class T>
T det_elim(Matrix<T> A) {
    using E = ElemOps<T>;
    if (A.rows() != A.cols()) throw std::invalid_argument("det: non-square matrix");
    T det = E::one();
    bool flip = false;
    size_t n = A.rows();
    for (size_t c = 0; c < n; ++c) {
        size_t best = n;
        double bw = 0;
        for (size_t i = c; i < n; ++i) {
            if (ElemOps<T>::is_zero(A(i, c))) continue;
            double w = ElemOps<T>::pivot_weight(A(i, c));
            if (best == n || w > bw) {
                best = i;
                bw = w;
            }
        }
        if (best == n) return E::zero();
        if (best != c) {
            A.swap_rows(c, best);
            flip = !flip;
        }
        det = det * A(c, c);
        T inv = E::one() / A(c, c);
        for (size_t i = c + 1; i < n; ++i) {
            if (ElemOps<T>::is_zero(A(i, c))) continue;
            T f = inv * A(i, c);
            for (size_t j = c; j < n; ++j) A(i, j) = A(i, j) - f * A(c, j);
        }
    }
    return flip ? -det : det;
}

// Solve A X = B for square invertible A.
template <class T>
Matrix<T> solve_linear(const Matrix<T>& A, const Matrix<T>& B) {
    if (A.rows() != A.cols() || A.rows() != B.rows())
        throw std::invalid_argument("solve_linear: shape mismatch");
    Matrix<T> aug = Matrix<T>::hcat(A, B);
    std::vector<size_t> piv = rref_in_place(aug);
    if (piv.size() != A.rows() || (!piv.empty() && piv.back() >= A.cols()))
        throw std::domain_error("solve_linear: singular matrix");
    return aug.block(0, A.cols(), A.rows(), B.cols());
}

template <class T>
Matrix<T> inverse_of(const Matrix<T>& A) {
    return solve_linear(A, Matrix<T>::identity(A.rows()));
}

}  // namespace ratroot
