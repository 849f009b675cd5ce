#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "colsym/matrix_ring.hpp"
#include "colsym/polynomial.hpp"
#include "colsym/rowsum_iso.hpp"

namespace colsym {

/// Polynomial differential 1-form on R^m, encoded by its m coefficient
/// polynomials: Omega(x; v) = sum_i a_i(x) v_i. The a_i live in the ambient
/// coordinates x_1..x_m (RowVar sort, indices <= m); linearity in the second
/// argument is structural.
class OneForm {
public:
    OneForm(int dim, std::vector<RowPoly> coeffs) : dim_(dim), coeffs_(std::move(coeffs)) {
        if (dim_ < 1) throw Error("1-form needs dimension at least 1");
        if (static_cast<int>(coeffs_.size()) != dim_)
            throw ShapeMismatch("1-form on R^" + std::to_string(dim_) + " needs exactly " +
                                std::to_string(dim_) + " coefficients");
        for (const RowPoly& a : coeffs_) detail::check_row_indices(a, dim_);
    }

    int dim() const { return dim_; }

    /// Coefficient a_i, 1-based.
    const RowPoly& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i) - 1); }

private:
    int dim_;
    std::vector<RowPoly> coeffs_;
};

/// A rational point of R^m.
struct BasePoint {
    std::vector<Rational> coords;

    int dim() const { return static_cast<int>(coords.size()); }

    /// Coordinate x0_i, 1-based.
    const Rational& coord(int i) const { return coords.at(static_cast<std::size_t>(i) - 1); }
};

/// df, the 1-form with coefficients the partial derivatives of f.
inline OneForm exterior_derivative(const RowPoly& f, int m) {
    std::vector<RowPoly> coeffs;
    coeffs.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) coeffs.push_back(partial_derivative(f, RowVar{i}));
    return OneForm(m, std::move(coeffs));
}

/// Closedness as the exact symmetry of the coefficient Jacobian:
/// d a_i / d x_j == d a_j / d x_i for all i < j. Vacuous for m = 1.
inline bool check_closed(const OneForm& w) {
    for (int i = 1; i <= w.dim(); ++i)
        for (int j = i + 1; j <= w.dim(); ++j)
            if (partial_derivative(w.coeff(i), RowVar{j}) !=
                partial_derivative(w.coeff(j), RowVar{i}))
                return false;
    return true;
}

/// The chain sum Omega(p_0; d_1) + ... + Omega(p_{n-1}; d_n) in the
/// admissible quotient, where d_j is column j of the variable matrix and
/// p_j = x0 + d_1 + ... + d_j. Column-symmetric exactly when w is closed.
inline MatrixPoly chain_sum(const OneForm& w, const BasePoint& x0, const RingShape& shape) {
    detail::check_shape(shape);
    if (w.dim() != shape.rows || x0.dim() != shape.rows)
        throw ShapeMismatch("form of dimension " + std::to_string(w.dim()) +
                            " and base point of dimension " + std::to_string(x0.dim()) +
                            " must both match " + std::to_string(shape.rows) + " rows");
    // partial_point[x_i] starts at the base point and accumulates the columns.
    std::map<RowVar, MatrixPoly> partial_point;
    for (int i = 1; i <= shape.rows; ++i)
        partial_point[RowVar{i}] = MatrixPoly(x0.coord(i));
    MatrixPoly sum;
    for (int j = 1; j <= shape.cols; ++j) {
        for (int i = 1; i <= shape.rows; ++i) {
            MatrixPoly value = substitute(w.coeff(i), partial_point);
            sum += reduce_admissible(value * MatrixPoly::variable(MatrixVar{i, j}), shape);
        }
        for (int i = 1; i <= shape.rows; ++i)
            partial_point[RowVar{i}] += MatrixPoly::variable(MatrixVar{i, j});
    }
    return reduce_admissible(sum, shape);
}

/// The primitive of a closed form on x0 + D_n(m), as a polynomial of degree
/// <= n in the displacement variables y = x - x0, normalized by f(0) = 0.
inline RowPoly primitive(const OneForm& w, const BasePoint& x0, const RingShape& shape) {
    if (!check_closed(w))
        throw NotClosed("the 1-form is not closed; its chain sum is order-dependent");
    return to_rowsums(chain_sum(w, x0, shape), shape);
}

/// Checks d f = w to the order visible in D_n(m): for every i,
/// d f / d y_i must equal a_i(x0 + y) truncated at degree n - 1.
inline bool verify_primitive(const OneForm& w, const BasePoint& x0, const RowPoly& f,
                             const RingShape& shape) {
    detail::check_shape(shape);
    if (w.dim() != shape.rows || x0.dim() != shape.rows)
        throw ShapeMismatch("form and base point must match the shape rows");
    detail::check_row_indices(f, shape.rows);
    if (f.degree().value_or(0) > shape.cols)
        throw DegreeExceedsN("candidate primitive has degree above n");
    std::map<RowVar, RowPoly> shift;
    for (int i = 1; i <= shape.rows; ++i)
        shift[RowVar{i}] = RowPoly(x0.coord(i)) + RowPoly::variable(RowVar{i});
    for (int i = 1; i <= shape.rows; ++i) {
        RowPoly lhs = partial_derivative(f, RowVar{i});
        RowPoly rhs = truncate_deg(substitute(w.coeff(i), shift), shape.cols - 1);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace colsym
