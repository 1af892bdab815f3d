// JSON serialization: matrices of rational functions as {num, den}
// coefficient arrays, state spaces as dense grids, and the structure
// report emitted by the CLI. Schema is versioned (schema: 1).
#pragma once

#include <json.hpp>
#include <string>

#include "parse.hpp"
#include "poleremoval.hpp"

namespace ratroot {

using json = nlohmann::ordered_json;

// scalars: exact rationals as strings (lossless), complex as [re, im]
inline json scalar_to_json(const Rational& x) { return x.get_str(); }
inline json scalar_to_json(const Complex& x) { return json::array({x.real(), x.imag()}); }

inline Rational scalar_from_json_tag(const json& j, const Rational*) {
    if (j.is_string()) return Rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("expected an exact rational (string or integer)");
}
inline Complex scalar_from_json_tag(const json& j, const Complex*) {
    if (j.is_array()) return Complex(j[0].get<double>(), j[1].get<double>());
    if (j.is_string()) return Complex(Rational(j.get<std::string>()).get_d(), 0.0);
    return Complex(j.get<double>(), 0.0);
}

template <class F>
F scalar_from_json(const json& j) {
    return scalar_from_json_tag(j, static_cast<const F*>(nullptr));
}

template <class F>
json poly_to_json(const Poly<F>& p) {
    json a = json::array();
    for (int t = 0; t <= p.degree(); ++t) a.push_back(scalar_to_json(p.coeff(t)));
    if (a.empty()) a.push_back(scalar_to_json(FieldOps<F>::zero()));
    return a;
}

template <class F>
Poly<F> poly_from_json(const json& j) {
    std::vector<F> c;
    for (const auto& e : j) c.push_back(scalar_from_json<F>(e));
    return Poly<F>(std::move(c));
}

template <class F>
json ratfun_to_json(const RatFun<F>& r) {
    return json{{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}};
}

template <class F>
RatFun<F> ratfun_from_json(const json& j) {
    if (j.is_object())
        return RatFun<F>(poly_from_json<F>(j.at("num")),
                         j.contains("den") ? poly_from_json<F>(j.at("den")) : Poly<F>::one());
    if (j.is_string()) return parse_ratfun<F>(j.get<std::string>());
    return RatFun<F>(Poly<F>(scalar_from_json<F>(j)));
}

template <class F>
json ratmat_to_json(const RatMat<F>& A) {
    json rows = json::array();
    for (size_t i = 0; i < A.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < A.cols(); ++j) row.push_back(ratfun_to_json(A(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class F>
RatMat<F> ratmat_from_json(const json& j) {
    size_t m = j.size(), n = m ? j[0].size() : 0;
    RatMat<F> A(m, n);
    for (size_t i = 0; i < m; ++i) {
        if (j[i].size() != n) throw std::invalid_argument("ragged matrix rows in JSON");
        for (size_t jj = 0; jj < n; ++jj) A(i, jj) = ratfun_from_json<F>(j[i][jj]);
    }
    return A;
}

template <class F>
json scalar_matrix_to_json(const Matrix<F>& A) {
    json rows = json::array();
    for (size_t i = 0; i < A.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < A.cols(); ++j) row.push_back(scalar_to_json(A(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class F>
Matrix<F> scalar_matrix_from_json(const json& j, size_t cols_hint = 0) {
    size_t m = j.size(), n = m ? j[0].size() : cols_hint;
    Matrix<F> A(m, n);
    for (size_t i = 0; i < m; ++i)
        for (size_t jj = 0; jj < n; ++jj) A(i, jj) = scalar_from_json<F>(j[i][jj]);
    return A;
}

template <class F>
json state_space_to_json(const StateSpace<F>& s) {
    return json{{"A", scalar_matrix_to_json(s.A)}, {"E", scalar_matrix_to_json(s.E)},
                {"B", scalar_matrix_to_json(s.B)}, {"C", scalar_matrix_to_json(s.C)},
                {"D", scalar_matrix_to_json(s.D)}};
}

template <class F>
StateSpace<F> state_space_from_json(const json& j) {
    StateSpace<F> s;
    s.A = scalar_matrix_from_json<F>(j.at("A"));
    s.E = scalar_matrix_from_json<F>(j.at("E"));
    s.B = scalar_matrix_from_json<F>(j.at("B"));
    s.C = scalar_matrix_from_json<F>(j.at("C"));
    s.D = scalar_matrix_from_json<F>(j.at("D"));
    return s;
}

// --- reports ---------------------------------------------------------------

template <class F>
json vector_to_json(const std::vector<RatFun<F>>& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(ratfun_to_json(e));
    return a;
}

template <class F>
json maximal_set_to_json(const MaximalSet<F>& s) {
    json vecs = json::array();
    for (const auto& rv : s.vectors)
        vecs.push_back(json{{"order", rv.order}, {"vector", vector_to_json(rv.x)}});
    return vecs;
}

template <class F>
json structure_report(const F& point, const std::vector<long>& sigmas,
                      const std::vector<int>& right_indices, const std::vector<int>& left_indices,
                      size_t normal_rank_value) {
    json rep;
    rep["schema"] = 1;
    rep["point"] = scalar_to_json(point);
    rep["sigmas"] = sigmas;
    rep["minimal_indices_right"] = right_indices;
    rep["minimal_indices_left"] = left_indices;
    rep["normal_rank"] = normal_rank_value;
    return rep;
}

template <class F>
json rootvector_report(const MaximalSet<F>& s, const std::string& point_label) {
    json rep;
    rep["schema"] = 1;
    rep["point"] = point_label;
    rep["sigmas"] = s.sigmas;
    rep["maximal_set"] = maximal_set_to_json(s);
    json eig = json::array();
    for (const auto& rv : s.vectors) {
        Matrix<F> e = ratfun_vec_eval(rv.x, s.point);
        json col = json::array();
        for (size_t i = 0; i < e.rows(); ++i) col.push_back(scalar_to_json(e(i, 0)));
        eig.push_back(std::move(col));
    }
    rep["eigenvectors"] = eig;
    return rep;
}

}  // namespace ratroot
