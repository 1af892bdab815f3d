// Eigen bridge for the inexact backend: SVD-based rank decisions,
// null spaces and eigenvalues of constant complex matrices.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <vector>

#include "matrix.hpp"

namespace ratroot {

inline Eigen::MatrixXcd to_eigen(const Matrix<Complex>& A) {
    Eigen::MatrixXcd M(A.rows(), A.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) M(long(i), long(j)) = A(i, j);
    return M;
}

inline Matrix<Complex> from_eigen(const Eigen::MatrixXcd& M) {
    Matrix<Complex> A(size_t(M.rows()), size_t(M.cols()));
    for (long i = 0; i < M.rows(); ++i)
        for (long j = 0; j < M.cols(); ++j) A(size_t(i), size_t(j)) = M(i, j);
    return A;
}

inline double svd_threshold(const Eigen::VectorXd& sv, size_t m, size_t n) {
    double norm = sv.size() ? sv(0) : 0.0;
    return double(std::max(m, n)) * norm * numeric_context().rank_tol;
}

// rank via singular values with the context threshold
inline size_t mat_rank(const Matrix<Complex>& A) {
    if (A.empty()) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(A));
    const Eigen::VectorXd& sv = svd.singularValues();
    double thr = svd_threshold(sv, A.rows(), A.cols());
    size_t r = 0;
    for (long i = 0; i < sv.size(); ++i)
        if (sv(i) > thr) ++r;
    return r;
}

template <class T>
size_t mat_rank(const Matrix<T>& A) {
    return rank_elim(A);
}

inline Matrix<Complex> mat_kernel(const Matrix<Complex>& A) {
    if (A.empty()) return Matrix<Complex>::identity(A.cols());
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(A), Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    double thr = svd_threshold(sv, A.rows(), A.cols());
    size_t r = 0;
    for (long i = 0; i < sv.size(); ++i)
        if (sv(i) > thr) ++r;
    Eigen::MatrixXcd V = svd.matrixV();
    return from_eigen(V.rightCols(V.cols() - long(r)));
}

template <class T>
Matrix<T> mat_kernel(const Matrix<T>& A) {
    return kernel_elim(A);
}

inline double smallest_singular_value(const Matrix<Complex>& A) {
    if (A.empty()) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(A));
    const Eigen::VectorXd& sv = svd.singularValues();
    long k = std::min<long>(long(A.rows()), long(A.cols()));
    return k > 0 ? sv(k - 1) : 0.0;
}

inline std::vector<Complex> matrix_eigenvalues(const Matrix<Complex>& A) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(A), false);
    std::vector<Complex> out(A.rows());
    for (size_t i = 0; i < A.rows(); ++i) out[i] = es.eigenvalues()(long(i));
    return out;
}

}  // namespace ratroot
