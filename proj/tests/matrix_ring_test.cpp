#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

#include "colsym/matrix_ring.hpp"

using namespace colsym;

namespace {

MatrixPoly x(int i, int j) { return MatrixPoly::variable(MatrixVar{i, j}); }

MatrixMonomial mono(std::vector<std::pair<int, int>> vars) {
    std::vector<MatrixMonomial::Factor> fs;
    for (auto [i, j] : vars) fs.push_back({MatrixVar{i, j}, 1});
    return MatrixMonomial::from_factors(std::move(fs));
}

// Test oracle: averages over all n! column relabellings by raw renaming,
// independent of act()/symmetrize().
MatrixPoly oracle_symmetrize(const MatrixPoly& p, const RingShape& shape) {
    std::vector<int> images(static_cast<std::size_t>(shape.cols));
    std::iota(images.begin(), images.end(), 1);
    MatrixPoly total;
    long count = 0;
    do {
        for (const auto& [m, c] : p.terms()) {
            std::vector<MatrixMonomial::Factor> fs;
            for (const auto& [v, e] : m.factors())
                fs.push_back({MatrixVar{v.row, images[static_cast<std::size_t>(v.col - 1)]}, e});
            total.add_term(MatrixMonomial::from_factors(std::move(fs)), c);
        }
        ++count;
    } while (std::next_permutation(images.begin(), images.end()));
    return Rational(1, count) * total;
}

}  // namespace

TEST_CASE("admissible monomials have at most one factor per column") {
    RingShape s22{2, 2};
    CHECK(is_admissible(mono({{1, 1}, {2, 2}}), s22));
    CHECK_FALSE(is_admissible(MatrixMonomial::variable(MatrixVar{1, 1}, 2), s22));
    CHECK_FALSE(is_admissible(mono({{1, 1}, {2, 1}}), s22));
    CHECK(is_admissible(MatrixMonomial(), s22));
    CHECK_THROWS_AS(is_admissible(mono({{1, 3}}), s22), VariableOutOfShape);
    CHECK_THROWS_AS(is_admissible(mono({{3, 1}}), s22), VariableOutOfShape);
}

TEST_CASE("reduce_admissible drops exactly the collision terms") {
    RingShape s12{1, 2};
    MatrixPoly square = (x(1, 1) + x(1, 2)) * (x(1, 1) + x(1, 2));
    CHECK(reduce_admissible(square, s12) == Rational(2) * (x(1, 1) * x(1, 2)));

    MatrixPoly already = x(1, 1) * x(1, 2) + MatrixPoly(3);
    CHECK(reduce_admissible(already, s12) == already);

    RingShape s32{3, 2};
    CHECK(reduce_admissible(x(1, 1) * x(2, 1) * x(3, 2), s32).is_zero());

    // quotient morphism: reduce(p*q) = reduce(reduce(p)*reduce(q))
    MatrixPoly p = square + x(1, 1);
    MatrixPoly q = x(1, 2) * x(1, 2) + x(1, 1);
    CHECK(reduce_admissible(p * q, s12) ==
          reduce_admissible(reduce_admissible(p, s12) * reduce_admissible(q, s12), s12));
}

TEST_CASE("column action renames columns") {
    RingShape s12{1, 2};
    Permutation swap12 = Permutation::transposition(2, 1, 2);
    CHECK(act(swap12, x(1, 1), s12) == x(1, 2));
    CHECK(act(Permutation::identity(2), x(1, 1) + x(1, 2), s12) == x(1, 1) + x(1, 2));

    RingShape s22{2, 2};
    CHECK(act(swap12, x(1, 1) * x(2, 2), s22) == x(1, 2) * x(2, 1));

    CHECK_THROWS_AS(act(Permutation::identity(3), x(1, 1), s22), ShapeMismatch);

    // automorphism: distributes over sums and products
    MatrixPoly p = x(1, 1) * x(2, 2) + Rational(1, 2) * x(2, 1);
    MatrixPoly q = x(1, 2) + MatrixPoly(4);
    CHECK(act(swap12, p * q, s22) == act(swap12, p, s22) * act(swap12, q, s22));
    CHECK(act(swap12, p + q, s22) == act(swap12, p, s22) + act(swap12, q, s22));
}

TEST_CASE("permutations compose and invert") {
    Permutation sigma({2, 3, 1});
    Permutation tau({1, 3, 2});
    CHECK(sigma.after(tau) == Permutation({2, 1, 3}));
    CHECK(sigma.after(sigma.inverse()) == Permutation::identity(3));
    CHECK_THROWS_AS(Permutation({1, 1, 3}), Error);
    CHECK_THROWS_AS(Permutation({0, 1}), Error);
}

TEST_CASE("symmetrize averages the orbit") {
    RingShape s12{1, 2};
    // S_2 oracle, frozen: (x11 + x12)/2
    MatrixPoly expected = Rational(1, 2) * x(1, 1) + Rational(1, 2) * x(1, 2);
    CHECK(symmetrize(x(1, 1), s12) == expected);
    CHECK(symmetrize(x(1, 1), s12) == oracle_symmetrize(x(1, 1), s12));

    MatrixPoly s1 = x(1, 1) + x(1, 2);
    CHECK(symmetrize(s1, s12) == s1);

    // S_3 oracle on x11*x22, frozen: all six x_{1,a} x_{2,b} with a != b
    RingShape s23{2, 3};
    MatrixPoly sym = reduce_admissible(symmetrize(x(1, 1) * x(2, 2), s23), s23);
    MatrixPoly frozen;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            if (a != b) frozen += Rational(1, 6) * (x(1, a) * x(2, b));
    CHECK(sym == frozen);
    CHECK(sym == reduce_admissible(oracle_symmetrize(x(1, 1) * x(2, 2), s23), s23));
    // matches (n-k)!/n! * s_1 * s_2 with k = 2
    MatrixPoly rowsums = (x(1, 1) + x(1, 2) + x(1, 3)) * (x(2, 1) + x(2, 2) + x(2, 3));
    CHECK(sym == Rational(1, 6) * reduce_admissible(rowsums, s23));

    CHECK_THROWS_AS(symmetrize(x(1, 1), RingShape{1, 9}), EnumerationLimitExceeded);
    CHECK_NOTHROW(symmetrize(MatrixPoly(1), RingShape{1, 9}, 9));
}

TEST_CASE("row sums") {
    RingShape s12{1, 2};
    CHECK(row_sum(1, s12) == x(1, 1) + x(1, 2));
    RingShape s23{2, 3};
    CHECK(row_sum(2, s23) == x(2, 1) + x(2, 2) + x(2, 3));
    CHECK_THROWS_AS(row_sum(3, s23), RowOutOfRange);
    CHECK_THROWS_AS(row_sum(0, s23), RowOutOfRange);

    std::vector<int> images{3, 1, 2};
    CHECK(act(Permutation(images), row_sum(1, s23), s23) == row_sum(1, s23));
}

TEST_CASE("column symmetry test") {
    RingShape s23{2, 3};
    MatrixPoly s1s2 = row_sum(1, s23) * row_sum(2, s23);
    CHECK(is_column_symmetric(s1s2, s23));
    CHECK_FALSE(is_column_symmetric(x(1, 1), s23));
    CHECK(is_column_symmetric(MatrixPoly(Rational(5, 3)), s23));
    CHECK(is_column_symmetric(MatrixPoly(), s23));
    CHECK(is_column_symmetric(x(1, 1), RingShape{1, 1}));
}

TEST_CASE("product of row sums expands over injective column choices") {
    // Eq.-style enumeration for a fixed f = (1, 2), m = n = 2
    RingShape s22{2, 2};
    MatrixPoly lhs = reduce_admissible(row_sum(1, s22) * row_sum(2, s22), s22);
    CHECK(lhs == x(1, 1) * x(2, 2) + x(1, 2) * x(2, 1));

    // f = (1, 1, 2), m = 2, n = 3: sum over all 6 injective maps [3] -> [3]
    RingShape s23{2, 3};
    MatrixPoly prod = row_sum(1, s23) * row_sum(1, s23) * row_sum(2, s23);
    MatrixPoly expected;
    int cols[3];
    for (cols[0] = 1; cols[0] <= 3; ++cols[0])
        for (cols[1] = 1; cols[1] <= 3; ++cols[1])
            for (cols[2] = 1; cols[2] <= 3; ++cols[2]) {
                if (cols[0] == cols[1] || cols[0] == cols[2] || cols[1] == cols[2]) continue;
                expected += x(1, cols[0]) * x(1, cols[1]) * x(2, cols[2]);
            }
    CHECK(reduce_admissible(prod, s23) == expected);
}

TEST_CASE("the 1x1 quotient behaves like dual numbers") {
    // p(a + eps) = p(a) + p'(a) eps with eps = x[1,1], eps^2 = 0
    RingShape dual{1, 1};
    RowPoly p = RowPoly::variable(RowVar{1}, 3) + Rational(2) * RowPoly::variable(RowVar{1});
    std::map<RowVar, MatrixPoly> at{{RowVar{1}, MatrixPoly(2) + x(1, 1)}};
    MatrixPoly jet = reduce_admissible(substitute(p, at), dual);
    CHECK(jet == MatrixPoly(12) + Rational(14) * x(1, 1));
    CHECK(substitute(partial_derivative(p, RowVar{1}),
                     std::map<RowVar, RowPoly>{{RowVar{1}, RowPoly(2)}}) == RowPoly(14));
}

TEST_CASE("symmetrized admissible monomial equals the weighted row-sum product") {
    // degree-2 monomial in a 2x3 shape: weight (3-2)!/3! = 1/6
    RingShape s23{2, 3};
    MatrixPoly omega = x(1, 2) * x(2, 3);
    MatrixPoly lhs = reduce_admissible(symmetrize(omega, s23), s23);
    MatrixPoly rhs =
        Rational(1, 6) * reduce_admissible(row_sum(1, s23) * row_sum(2, s23), s23);
    CHECK(lhs == rhs);

    // degree-0: symmetrize fixes constants, weight n!/n! = 1
    CHECK(symmetrize(MatrixPoly(7), s23) == MatrixPoly(7));
}
