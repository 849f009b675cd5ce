#pragma once

#include <map>
#include <string>
#include <vector>

#include "colsym/matrix_ring.hpp"
#include "colsym/polynomial.hpp"

namespace colsym {

/// Quotient map onto the ring truncated at total degree n: terms of degree
/// greater than n are dropped. Linear and idempotent.
inline RowPoly truncate_deg(const RowPoly& g, int n) {
    if (n < 0) throw Error("truncation at negative degree");
    RowPoly r;
    for (const auto& [m, c] : g.terms())
        if (m.degree() <= n) r.add_term(m, c);
    return r;
}

namespace detail {

inline void check_row_indices(const RowPoly& g, int rows) {
    for (const auto& [m, c] : g.terms())
        for (const auto& [v, e] : m.factors())
            if (v.index < 1 || v.index > rows)
                throw RowOutOfRange("variable " + var_name(v) + " outside y1..y" +
                                    std::to_string(rows));
}

}  // namespace detail

/// The algebra map sending y_i to the row sum s_i, fully expanded.
/// Degree-preserving; its image is column-symmetric.
inline MatrixPoly subst_S(const RowPoly& g, const RingShape& shape) {
    detail::check_shape(shape);
    detail::check_row_indices(g, shape.rows);
    std::map<RowVar, MatrixPoly> assignment;
    for (int i = 1; i <= shape.rows; ++i) assignment[RowVar{i}] = row_sum(i, shape);
    return substitute(g, assignment);
}

/// The induced map on the quotients: expand the row sums, then discard
/// inadmissible terms. Only defined on inputs of degree <= n; higher-degree
/// representatives are rejected rather than silently truncated.
inline MatrixPoly subst_s(const RowPoly& g, const RingShape& shape) {
    detail::check_shape(shape);
    if (g.degree().value_or(0) > shape.cols)
        throw DegreeExceedsN("input of degree " + std::to_string(*g.degree()) +
                             " is not in the degree-" + std::to_string(shape.cols) +
                             " quotient");
    return reduce_admissible(subst_S(g, shape), shape);
}

/// Constructive inverse of subst_s on the column-symmetric admissible
/// polynomials: each degree-k term c * prod x_{f(l),g(l)} contributes
/// c * (n-k)!/n! * y^alpha, alpha the row multiset of the term. The unique
/// preimage of degree <= n comes out term by term; no linear solve.
inline RowPoly to_rowsums(const MatrixPoly& h, const RingShape& shape) {
    detail::check_shape(shape);
    for (const auto& [m, c] : h.terms())
        if (!is_admissible(m, shape))
            throw NotAdmissible("term with a column collision cannot be inverted");
    if (!is_column_symmetric(h, shape))
        throw NotColumnSymmetric("to_rowsums requires a column-symmetric input");
    const Integer n_fact = factorial(shape.cols);
    RowPoly g;
    for (const auto& [m, c] : h.terms()) {
        const int k = m.degree();
        std::vector<RowMonomial::Factor> alpha;
        for (const auto& [v, e] : m.factors()) alpha.push_back({RowVar{v.row}, e});
        const Rational weight(factorial(shape.cols - k), n_fact);
        g.add_term(RowMonomial::from_factors(std::move(alpha)), c * weight);
    }
    return g;
}

/// Product in the degree-n truncated ring: multiply, then truncate.
inline RowPoly weil_mul_rows(const RowPoly& g, const RowPoly& h, int n) {
    if (n < 0) throw Error("truncated ring of negative degree");
    if (g.degree().value_or(0) > n || h.degree().value_or(0) > n)
        throw DegreeExceedsN("operands must lie in the degree-" + std::to_string(n) +
                             " quotient");
    return truncate_deg(g * h, n);
}

}  // namespace colsym
