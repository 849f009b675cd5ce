#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "colsym/polynomial.hpp"

namespace colsym {

/// Dimensions of the variable matrix: rows = m, cols = n, both >= 1.
struct RingShape {
    int rows = 1;
    int cols = 1;

    friend constexpr bool operator==(const RingShape&, const RingShape&) = default;
};

namespace detail {

inline void check_shape(const RingShape& shape) {
    if (shape.rows < 1 || shape.cols < 1) throw Error("ring shape must be at least 1x1");
}

inline void check_in_shape(const MatrixVar& v, const RingShape& shape) {
    if (v.row < 1 || v.row > shape.rows || v.col < 1 || v.col > shape.cols)
        throw VariableOutOfShape("variable " + var_name(v) + " outside " +
                                 std::to_string(shape.rows) + "x" +
                                 std::to_string(shape.cols) + " shape");
}

inline void check_in_shape(const MatrixPoly& p, const RingShape& shape) {
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m.factors()) check_in_shape(v, shape);
}

}  // namespace detail

/// A permutation of the column set [n], stored as the 1-based image list.
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
                throw Error("image list is not a permutation");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 1);
        return Permutation(std::move(im));
    }

    static Permutation transposition(int n, int a, int b) {
        Permutation p = identity(n);
        if (a < 1 || a > n || b < 1 || b > n) throw Error("transposition out of range");
        std::swap(p.images_[a - 1], p.images_[b - 1]);
        return p;
    }

    int size() const { return static_cast<int>(images_.size()); }

    /// Image of column j.
    int operator()(int j) const { return images_[j - 1]; }

    /// Composition (*this after inner): j -> (*this)(inner(j)).
    Permutation after(const Permutation& inner) const {
        if (size() != inner.size()) throw ShapeMismatch("composing permutations of different size");
        std::vector<int> im(images_.size());
        for (int j = 1; j <= size(); ++j) im[j - 1] = (*this)(inner(j));
        return Permutation(std::move(im));
    }

    Permutation inverse() const {
        std::vector<int> im(images_.size());
        for (int j = 1; j <= size(); ++j) im[images_[j - 1] - 1] = j;
        return Permutation(std::move(im));
    }

    const std::vector<int>& images() const { return images_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// A monomial is admissible when every column contributes at most one factor;
/// inadmissible monomials span the ideal cut out by x_{i,j} x_{i',j} = 0.
inline bool is_admissible(const MatrixMonomial& mono, const RingShape& shape) {
    detail::check_shape(shape);
    std::vector<int> column_total(shape.cols + 1, 0);
    for (const auto& [v, e] : mono.factors()) {
        detail::check_in_shape(v, shape);
        column_total[v.col] += e;
        if (column_total[v.col] > 1) return false;
    }
    return true;
}

/// A polynomial is admissible when all of its terms are.
inline bool is_admissible(const MatrixPoly& p, const RingShape& shape) {
    for (const auto& [m, c] : p.terms())
        if (!is_admissible(m, shape)) return false;
    return true;
}

/// Projection onto the admissible quotient: drops every inadmissible term.
/// Linear, idempotent, and multiplicative on the quotient:
/// reduce(p*q) = reduce(reduce(p)*reduce(q)).
inline MatrixPoly reduce_admissible(const MatrixPoly& p, const RingShape& shape) {
    MatrixPoly r;
    for (const auto& [m, c] : p.terms())
        if (is_admissible(m, shape)) r.add_term(m, c);
    return r;
}

/// Column action: renames every x_{i,j} to x_{i,sigma(j)}. An algebra
/// automorphism; preserves admissibility.
inline MatrixPoly act(const Permutation& sigma, const MatrixPoly& p, const RingShape& shape) {
    detail::check_shape(shape);
    if (sigma.size() != shape.cols)
        throw ShapeMismatch("permutation of " + std::to_string(sigma.size()) +
                            " columns applied to shape with " + std::to_string(shape.cols));
    MatrixPoly r;
    for (const auto& [m, c] : p.terms()) {
        std::vector<MatrixMonomial::Factor> fs;
        fs.reserve(m.factors().size());
        for (const auto& [v, e] : m.factors()) {
            detail::check_in_shape(v, shape);
            fs.push_back({MatrixVar{v.row, sigma(v.col)}, e});
        }
        r.add_term(MatrixMonomial::from_factors(std::move(fs)), c);
    }
    return r;
}

inline constexpr int kDefaultEnumerationLimit = 8;

/// Symmetrization (1/n!) * sum over all n! column permutations. Idempotent;
/// the image is exactly the column-symmetric subalgebra. Refuses to
/// enumerate when n exceeds the limit.
inline MatrixPoly symmetrize(const MatrixPoly& p, const RingShape& shape,
                             int enumeration_limit = kDefaultEnumerationLimit) {
    detail::check_shape(shape);
    if (shape.cols > enumeration_limit)
        throw EnumerationLimitExceeded(
            "symmetrize would enumerate " + std::to_string(shape.cols) +
            "! permutations; limit is n <= " + std::to_string(enumeration_limit));
    detail::check_in_shape(p, shape);
    std::vector<int> images(shape.cols);
    std::iota(images.begin(), images.end(), 1);
    MatrixPoly sum;
    do {
        sum += act(Permutation(images), p, shape);
    } while (std::next_permutation(images.begin(), images.end()));
    return Rational(Integer(1), factorial(shape.cols)) * sum;
}

/// Row sum s_i = x_{i,1} + ... + x_{i,n}: degree 1 and column-symmetric.
inline MatrixPoly row_sum(int i, const RingShape& shape) {
    detail::check_shape(shape);
    if (i < 1 || i > shape.rows)
        throw RowOutOfRange("row " + std::to_string(i) + " outside 1.." +
                            std::to_string(shape.rows));
    MatrixPoly r;
    for (int j = 1; j <= shape.cols; ++j)
        r += MatrixPoly::variable(MatrixVar{i, j});
    return r;
}

/// Invariance under all column permutations, decided on the adjacent
/// transpositions (they generate S_n).
inline bool is_column_symmetric(const MatrixPoly& p, const RingShape& shape) {
    detail::check_shape(shape);
    detail::check_in_shape(p, shape);
    for (int j = 1; j < shape.cols; ++j)
        if (act(Permutation::transposition(shape.cols, j, j + 1), p, shape) != p) return false;
    return true;
}

}  // namespace colsym
