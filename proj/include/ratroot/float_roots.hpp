// Root finding for the inexact backend: companion-matrix eigenvalues.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <vector>

#include "poly.hpp"

namespace ratroot {

inline std::vector<Complex> poly_roots(const Poly<Complex>& p) {
    int d = p.degree();
    if (d <= 0) return {};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
    Complex lead = p.leading();
    for (int i = 0; i < d; ++i) C(i, d - 1) = -p.coeff(i) / lead;
    for (int i = 1; i < d; ++i) C(i, i - 1) = Complex(1.0, 0.0);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, /*computeEigenvectors=*/false);
    std::vector<Complex> roots(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) roots[size_t(i)] = es.eigenvalues()(i);
    return roots;
}

inline Poly<Complex> poly_from_roots(const std::vector<Complex>& roots, const Complex& lead) {
    Poly<Complex> p(lead);
    for (const auto& r : roots) p = p * Poly<Complex>::linear(r);
    return p;
}

}  // namespace ratroot
