#include <catch2/catch_amalgamated.hpp>

#include "colsym/selftest.hpp"

using namespace colsym;
namespace st = colsym::selftest;

TEST_CASE("all randomized invariant suites pass") {
    st::Options opt;
    opt.seed = 7;
    opt.max_rows = 4;
    opt.max_cols = 4;
    opt.cases = 60;
    auto results = st::run_all(opt);
    for (const auto& r : results) {
        INFO(r.name << (r.failures.empty() ? "" : ": " + r.failures.front()));
        CHECK(r.failed == 0);
        CHECK(r.passed == opt.cases);
    }
}

TEST_CASE("reports are deterministic per seed") {
    st::Options opt;
    opt.seed = 20181216;
    opt.max_rows = 2;
    opt.max_cols = 3;
    opt.cases = 25;
    std::string a = st::format_report(opt, st::run_all(opt));
    std::string b = st::format_report(opt, st::run_all(opt));
    CHECK(a == b);

    opt.seed += 1;
    CHECK(st::format_report(opt, st::run_all(opt)) != a);
}

TEST_CASE("generators honor their constraints") {
    st::Rng rng(99);
    RingShape shape{3, 4};
    for (int i = 0; i < 200; ++i) {
        int k = rng.range(0, shape.cols);
        CHECK(st::random_admissible_monomial(rng, shape, k).degree() == k);
        CHECK(is_admissible(st::random_admissible_poly(rng, shape), shape));
        Rational r = st::random_rational(rng, 100, 100);
        CHECK(r.denominator() <= 100);
        CHECK(r.numerator().str().size() <= 3 + 1);  // |num| <= 100 plus a sign
    }
}

TEST_CASE("shrinking finds a minimal failing input") {
    // fake failure: "polynomials never contain the monomial y1*y2"
    RowPoly noisy;
    noisy.add_term(RowMonomial::variable(RowVar{1}), Rational(4));
    RowMonomial bad =
        RowMonomial::variable(RowVar{1}) * RowMonomial::variable(RowVar{2});
    noisy.add_term(bad, Rational(-7, 3));
    noisy.add_term(RowMonomial::variable(RowVar{2}, 3), Rational(1, 2));

    auto still_fails = [&](const RowPoly& p) { return !p.coefficient(bad).is_zero(); };
    RowPoly minimal = st::shrink_polynomial(noisy, still_fails);
    CHECK(minimal == RowPoly::term(bad, Rational(1)));
}

TEST_CASE("the injective-map oracle enumerates arrangements") {
    CHECK(st::injective_maps(0, 3).size() == 1);
    CHECK(st::injective_maps(2, 3).size() == 6);
    CHECK(st::injective_maps(3, 3).size() == 6);
    CHECK(st::injective_maps(4, 3).empty());
}
