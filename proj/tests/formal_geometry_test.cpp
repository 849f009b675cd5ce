#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "colsym/formal_geometry.hpp"

using namespace colsym;

namespace {

MatrixPoly x(int i, int j) { return MatrixPoly::variable(MatrixVar{i, j}); }
RowPoly amb(int i) { return RowPoly::variable(RowVar{i}); }  // ambient coordinate x_i
RowPoly y(int i) { return RowPoly::variable(RowVar{i}); }

}  // namespace

TEST_CASE("exterior derivative") {
    RowPoly f = Rational(1, 2) * (amb(1) * amb(1));
    OneForm df = exterior_derivative(f, 1);
    CHECK(df.coeff(1) == amb(1));

    OneForm dg = exterior_derivative(amb(1) * amb(2), 2);
    CHECK(dg.coeff(1) == amb(2));
    CHECK(dg.coeff(2) == amb(1));

    OneForm dc = exterior_derivative(RowPoly(14), 3);
    for (int i = 1; i <= 3; ++i) CHECK(dc.coeff(i).is_zero());
}

TEST_CASE("closedness is symmetry of the coefficient jacobian") {
    CHECK(check_closed(exterior_derivative(
        amb(1) * amb(2) * amb(3) + Rational(2) * (amb(2) * amb(2)), 3)));

    OneForm witness(2, {amb(2), RowPoly()});
    CHECK_FALSE(check_closed(witness));

    OneForm any1(1, {amb(1) * amb(1) + RowPoly(3)});
    CHECK(check_closed(any1));
}

TEST_CASE("one-form construction validates its shape") {
    CHECK_THROWS_AS(OneForm(2, {amb(1)}), ShapeMismatch);
    CHECK_THROWS_AS(OneForm(1, {amb(2)}), RowOutOfRange);
    CHECK_THROWS_AS(OneForm(0, {}), Error);
}

TEST_CASE("chain sums accumulate increments through partial points") {
    RingShape s12{1, 2};
    BasePoint zero{{Rational(0)}};
    OneForm xdx(1, {amb(1)});
    CHECK(chain_sum(xdx, zero, s12) == x(1, 1) * x(1, 2));

    OneForm dx(1, {RowPoly(1)});
    CHECK(chain_sum(dx, zero, s12) == x(1, 1) + x(1, 2));

    BasePoint c{{Rational(5, 3)}};
    CHECK(chain_sum(xdx, c, s12) ==
          Rational(5, 3) * (x(1, 1) + x(1, 2)) + x(1, 1) * x(1, 2));

    CHECK_THROWS_AS(chain_sum(xdx, BasePoint{{Rational(0), Rational(0)}}, s12),
                    ShapeMismatch);
}

TEST_CASE("primitive of a closed form") {
    RingShape s12{1, 2};
    BasePoint zero{{Rational(0)}};
    OneForm xdx(1, {amb(1)});
    CHECK(primitive(xdx, zero, s12) == Rational(1, 2) * (y(1) * y(1)));

    OneForm dx(1, {RowPoly(1)});
    CHECK(primitive(dx, zero, s12) == y(1));

    OneForm witness(2, {amb(2), RowPoly()});
    CHECK_THROWS_AS(primitive(witness, BasePoint{{Rational(0), Rational(0)}}, RingShape{2, 2}),
                    NotClosed);
}

TEST_CASE("primitive of an exact form is the shifted Taylor truncation") {
    RowPoly g = amb(1) * amb(1) * amb(2) + Rational(3) * amb(2);
    const int m = 2, n = 3;
    RingShape shape{m, n};
    BasePoint x0{{Rational(1, 2), Rational(-2)}};
    RowPoly f = primitive(exterior_derivative(g, m), x0, shape);

    std::map<RowVar, RowPoly> shift;
    for (int i = 1; i <= m; ++i)
        shift[RowVar{i}] = RowPoly(x0.coord(i)) + RowPoly::variable(RowVar{i});
    RowPoly shifted = substitute(g, shift);
    CHECK(f == truncate_deg(shifted - RowPoly(shifted.constant_term()), n));

    CHECK(f.constant_term().is_zero());
    CHECK(verify_primitive(exterior_derivative(g, m), x0, f, shape));
}

TEST_CASE("chain sum of a closed form is column symmetric, of the witness is not") {
    RingShape s23{2, 3};
    BasePoint x0{{Rational(1), Rational(2)}};
    OneForm closed = exterior_derivative(amb(1) * amb(2) * amb(2), 2);
    CHECK(is_column_symmetric(chain_sum(closed, x0, s23), s23));

    OneForm witness(2, {amb(2), RowPoly()});
    CHECK_FALSE(is_column_symmetric(chain_sum(witness, x0, s23), s23));
}

TEST_CASE("telescoping: the chain sum of df is the reduced difference of row-sum shifts") {
    const int m = 2, n = 2;
    RingShape shape{m, n};
    RowPoly g = amb(1) * amb(2) + Rational(2) * amb(1);
    BasePoint x0{{Rational(3), Rational(-1, 2)}};

    std::map<RowVar, MatrixPoly> shift;
    for (int i = 1; i <= m; ++i)
        shift[RowVar{i}] = MatrixPoly(x0.coord(i)) + row_sum(i, shape);
    MatrixPoly g_at_end = substitute(g, shift);
    std::map<RowVar, RowPoly> at_x0;
    for (int i = 1; i <= m; ++i) at_x0[RowVar{i}] = RowPoly(x0.coord(i));
    MatrixPoly expected =
        reduce_admissible(g_at_end - MatrixPoly(substitute(g, at_x0).constant_term()), shape);

    CHECK(chain_sum(exterior_derivative(g, m), x0, shape) == expected);
}

TEST_CASE("verify_primitive checks the differential to the visible order") {
    RingShape s12{1, 2};
    BasePoint zero{{Rational(0)}};
    OneForm dx(1, {RowPoly(1)});
    CHECK_FALSE(verify_primitive(dx, zero, RowPoly(), s12));

    // n = 1: only the linear part matters
    RingShape s11{1, 1};
    BasePoint at3{{Rational(3)}};
    OneForm xdx(1, {amb(1)});
    CHECK(verify_primitive(xdx, at3, Rational(3) * y(1), s11));
    CHECK(verify_primitive(xdx, at3, Rational(3) * y(1) + RowPoly(100), s11));
    CHECK_FALSE(verify_primitive(xdx, at3, Rational(2) * y(1), s11));

    CHECK_THROWS_AS(verify_primitive(xdx, at3, y(1) * y(1), s11), DegreeExceedsN);
    CHECK_THROWS_AS(
        verify_primitive(xdx, BasePoint{{Rational(1), Rational(2)}}, y(1), s11),
        ShapeMismatch);
}
