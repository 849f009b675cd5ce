#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "colsym/expr_io.hpp"
#include "colsym/formal_geometry.hpp"
#include "colsym/matrix_ring.hpp"
#include "colsym/polynomial.hpp"
#include "colsym/rowsum_iso.hpp"

namespace colsym::selftest {

/// Deterministic source of randomness. mt19937_64 has a fully specified
/// sequence and all derived draws avoid std::*_distribution, so a seed
/// reproduces the same cases on every platform and run.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform-ish draw from [0, n).
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    /// Inclusive range.
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }

private:
    std::mt19937_64 eng_;
};

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

inline Rational random_rational(Rng& rng, int max_num = 9, int max_den = 9) {
    return Rational(rng.range(-max_num, max_num), rng.range(1, max_den));
}

inline Rational random_nonzero_rational(Rng& rng, int max_num = 9, int max_den = 9) {
    Rational r = random_rational(rng, max_num, max_den);
    return r.is_zero() ? Rational(1) : r;
}

inline RingShape random_shape(Rng& rng, int max_rows, int max_cols) {
    return RingShape{rng.range(1, max_rows), rng.range(1, max_cols)};
}

inline MatrixMonomial random_matrix_monomial(Rng& rng, const RingShape& shape, int max_deg) {
    std::vector<MatrixMonomial::Factor> fs;
    int deg = rng.range(0, max_deg);
    for (int i = 0; i < deg; ++i)
        fs.push_back({MatrixVar{rng.range(1, shape.rows), rng.range(1, shape.cols)}, 1});
    return MatrixMonomial::from_factors(std::move(fs));
}

inline MatrixPoly random_matrix_poly(Rng& rng, const RingShape& shape, int max_deg = 3,
                                     int max_terms = 4) {
    MatrixPoly p;
    int terms = rng.range(0, max_terms);
    for (int t = 0; t < terms; ++t)
        p.add_term(random_matrix_monomial(rng, shape, max_deg), random_rational(rng));
    return p;
}

/// Admissible monomial of the exact degree k <= n: k distinct columns, one
/// row choice per column.
inline MatrixMonomial random_admissible_monomial(Rng& rng, const RingShape& shape, int k) {
    std::vector<int> cols(static_cast<std::size_t>(shape.cols));
    for (int j = 0; j < shape.cols; ++j) cols[static_cast<std::size_t>(j)] = j + 1;
    for (int j = 0; j < k; ++j) std::swap(cols[j], cols[rng.range(j, shape.cols - 1)]);
    std::vector<MatrixMonomial::Factor> fs;
    for (int j = 0; j < k; ++j)
        fs.push_back({MatrixVar{rng.range(1, shape.rows), cols[static_cast<std::size_t>(j)]}, 1});
    return MatrixMonomial::from_factors(std::move(fs));
}

inline MatrixPoly random_admissible_poly(Rng& rng, const RingShape& shape, int max_terms = 4) {
    MatrixPoly p;
    int terms = rng.range(0, max_terms);
    for (int t = 0; t < terms; ++t)
        p.add_term(random_admissible_monomial(rng, shape, rng.range(0, shape.cols)),
                   random_rational(rng));
    return p;
}

inline RowMonomial random_row_monomial(Rng& rng, int m, int max_deg) {
    std::vector<RowMonomial::Factor> fs;
    int deg = rng.range(0, max_deg);
    for (int i = 0; i < deg; ++i) fs.push_back({RowVar{rng.range(1, m)}, 1});
    return RowMonomial::from_factors(std::move(fs));
}

inline RowPoly random_row_poly(Rng& rng, int m, int max_deg = 3, int max_terms = 4,
                               int max_num = 9, int max_den = 9) {
    RowPoly p;
    int terms = rng.range(0, max_terms);
    for (int t = 0; t < terms; ++t)
        p.add_term(random_row_monomial(rng, m, max_deg), random_rational(rng, max_num, max_den));
    return p;
}

inline Permutation random_permutation(Rng& rng, int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) im[static_cast<std::size_t>(j)] = j + 1;
    for (int j = 0; j < n - 1; ++j) std::swap(im[j], im[rng.range(j, n - 1)]);
    return Permutation(std::move(im));
}

/// All injective maps [k] -> [n] as image vectors (test oracle helper).
inline std::vector<std::vector<int>> injective_maps(int k, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::function<void()> rec = [&] {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int j = 1; j <= n; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            used[static_cast<std::size_t>(j)] = true;
            cur.push_back(j);
            rec();
            cur.pop_back();
            used[static_cast<std::size_t>(j)] = false;
        }
    };
    rec();
    return out;
}

/// The monomial prod_l x_{f(l), g(l)} (f and g given as 1-based image lists).
inline MatrixMonomial omega_monomial(const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<MatrixMonomial::Factor> fs;
    for (std::size_t l = 0; l < f.size(); ++l) fs.push_back({MatrixVar{f[l], g[l]}, 1});
    return MatrixMonomial::from_factors(std::move(fs));
}

/// Independent oracle for the reduced product of row sums: the explicit sum
/// over all injective g of prod_l x_{f(l),g(l)}, built monomial by monomial.
inline MatrixPoly injective_expansion(const std::vector<int>& f, const RingShape& shape) {
    MatrixPoly sum;
    for (const auto& g : injective_maps(static_cast<int>(f.size()), shape.cols))
        sum.add_term(omega_monomial(f, g), Rational(1));
    return sum;
}

// ---------------------------------------------------------------------------
// Shrinking: greedily simplify a failing input while it keeps failing.
// ---------------------------------------------------------------------------

template <class V, class StillFails>
Polynomial<V> shrink_polynomial(Polynomial<V> p, const StillFails& still_fails) {
    bool improved = true;
    while (improved) {
        improved = false;
        for (const auto& [m, c] : p.terms()) {
            Polynomial<V> cand = p;
            cand.add_term(m, -c);  // removes the term
            if (still_fails(cand)) {
                p = std::move(cand);
                improved = true;
                break;
            }
        }
        if (improved) continue;
        for (const auto& [m, c] : p.terms()) {
            if (c.is_one()) continue;
            Polynomial<V> cand = p;
            cand.add_term(m, Rational(1) - c);  // sets the coefficient to 1
            if (still_fails(cand)) {
                p = std::move(cand);
                improved = true;
                break;
            }
        }
    }
    return p;
}

// ---------------------------------------------------------------------------
// Suite runner
// ---------------------------------------------------------------------------

struct Options {
    std::uint64_t seed = 1;
    int max_rows = 1;
    int max_cols = 2;
    int cases = 100;
};

struct SuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;

    explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

    void ok() { ++passed; }

    void fail(int case_index, const std::string& minimal_input) {
        ++failed;
        failures.push_back(name + " case " + std::to_string(case_index) +
                           ", minimal failing input: " + minimal_input);
    }
};

namespace detail_suites {

inline SuiteResult ring_axioms(Rng rng, const Options& opt) {
    SuiteResult res{"ring-axioms"};
    for (int i = 0; i < opt.cases; ++i) {
        RingShape shape = random_shape(rng, opt.max_rows, opt.max_cols);
        MatrixPoly p = random_matrix_poly(rng, shape);
        MatrixPoly q = random_matrix_poly(rng, shape);
        MatrixPoly r = random_matrix_poly(rng, shape);
        auto holds = [&](const MatrixPoly& x) {
            return (x + q) + r == x + (q + r) && x * q == q * x &&
                   x * (q + r) == x * q + x * r && (x - x).is_zero();
        };
        if (holds(p)) {
            res.ok();
        } else {
            auto fails = [&](const MatrixPoly& x) { return !holds(x); };
            res.fail(i, "p = " + print_canonical(shrink_polynomial(p, fails)) +
                            ", q = " + print_canonical(q) + ", r = " + print_canonical(r));
        }
    }
    return res;
}

inline SuiteResult degree_grading(Rng rng, const Options& opt) {
    SuiteResult res{"degree-grading"};
    for (int i = 0; i < opt.cases; ++i) {
        RingShape shape = random_shape(rng, opt.max_rows, opt.max_cols);
        MatrixPoly p = random_matrix_poly(rng, shape);
        MatrixPoly q = random_matrix_poly(rng, shape);
        auto holds = [&](const MatrixPoly& x) {
            if (!x.is_zero() && !q.is_zero() &&
                (x * q).degree() != std::optional<int>(*x.degree() + *q.degree()))
                return false;
            MatrixPoly total;
            for (int k = 0; k <= x.degree().value_or(0); ++k)
                total += homogeneous_component(x, k);
            return total == x;
        };
        if (holds(p)) {
            res.ok();
        } else {
            auto fails = [&](const MatrixPoly& x) { return !holds(x); };
            res.fail(i, "p = " + print_canonical(shrink_polynomial(p, fails)) +
                            ", q = " + print_canonical(q));
        }
    }
    return res;
}

inline SuiteResult substitution(Rng rng, const Options& opt) {
    SuiteResult res{"substitution"};
    const RingShape dual{1, 1};  // x[1,1] is the nilpotent of the 1x1 quotient
    for (int i = 0; i < opt.cases; ++i) {
        int m = rng.range(1, opt.max_rows);
        RingShape shape = random_shape(rng, opt.max_rows, opt.max_cols);
        RowPoly g = random_row_poly(rng, m, 2, 3);
        RowPoly h = random_row_poly(rng, m, 2, 3);
        std::map<RowVar, MatrixPoly> assignment;
        for (int t = 1; t <= m; ++t)
            assignment[RowVar{t}] = random_matrix_poly(rng, shape, 1, 2);
        // derivative against the first-order quotient with one nilpotent
        RowVar v{rng.range(1, m)};
        std::map<RowVar, MatrixPoly> at_point, at_dual;
        std::map<RowVar, RowPoly> point_row;
        for (int t = 1; t <= m; ++t) {
            Rational a = random_rational(rng);
            at_point[RowVar{t}] = MatrixPoly(a);
            at_dual[RowVar{t}] = MatrixPoly(a);
            point_row[RowVar{t}] = RowPoly(a);
        }
        at_dual[v] += MatrixPoly::variable(MatrixVar{1, 1});
        auto holds = [&](const RowPoly& x) {
            if (substitute(x * h, assignment) !=
                substitute(x, assignment) * substitute(h, assignment))
                return false;
            MatrixPoly lhs = reduce_admissible(substitute(x, at_dual), dual);
            MatrixPoly rhs = substitute(x, at_point) +
                             substitute(partial_derivative(x, v), at_point) *
                                 MatrixPoly::variable(MatrixVar{1, 1});
            return lhs == reduce_admissible(rhs, dual);
        };
        if (holds(g)) {
            res.ok();
        } else {
            auto fails = [&](const RowPoly& x) { return !holds(x); };
            res.fail(i, "g = " + print_canonical(shrink_polynomial(g, fails)) +
                            ", h = " + print_canonical(h));
        }
    }
    return res;
}

inline SuiteResult group_action(Rng rng, const Options& opt) {
    SuiteResult res{"group-action"};
    for (int i = 0; i < opt.cases; ++i) {
        RingShape shape = random_shape(rng, opt.max_rows, opt.max_cols);
        Permutation sigma = random_permutation(rng, shape.cols);
        Permutation tau = random_permutation(rng, shape.cols);
        MatrixPoly p = random_matrix_poly(rng, shape);
        auto holds = [&](const MatrixPoly& x) {
            return act(sigma.after(tau), x, shape) == act(sigma, act(tau, x, shape), shape) &&
                   act(Permutation::identity(shape.cols), x, shape) == x;
        };
        if (holds(p)) {
            res.ok();
        } else {
            auto fails = [&](const MatrixPoly& x) { return !holds(x); };
            res.fail(i, "p = " + print_canonical(shrink_polynomial(p, fails)));
        }
    }
    return res;
}

inline SuiteResult quotient_equivariance(Rng rng, const Options& opt) {
    SuiteResult res{"quotient-equivariance"};
    for (int i = 0; i < opt.cases; ++i) {
        RingShape shape = random_shape(rng, opt.max_rows, opt.max_cols);
        Permutation sigma = random_permutation(rng, shape.cols);
        MatrixPoly p = random_matrix_poly(rng, shape);
        auto holds = [&](const MatrixPoly& x) {
            return reduce_admissible(act(sigma, x, shape), shape) ==
                   act(sigma, reduce_admissible(x, shape), shape);
        };
        if (holds(p)) {
            res.ok();
        } else {
            auto fails = [&](const MatrixPoly& x) { return !holds(x); };
            res.fail(i, "p = " + print_canonical(shrink_polynomial(p, fails)));
        }
    }
    return res;
}

inline SuiteResult symmetrize_props(Rng rng, const Options& opt) {
    SuiteResult res{"symmetrize"};
    for (int i = 0; i < opt.cases; ++i) {
        RingShape shape = random_shape(rng, opt.max_rows, opt.max_cols);
        Permutation sigma = random_permutation(rng, shape.cols);
        MatrixPoly p = random_matrix_poly(rng, shape);
        auto holds = [&](const MatrixPoly& x) {
            MatrixPoly sy = symmetrize(x, shape, shape.cols);
            return symmetrize(act(sigma, x, shape), shape, shape.cols) == sy &&
                   symmetrize(sy, shape, shape.cols) == sy && is_column_symmetric(sy, shape);
        };
        if (holds(p)) {
            res.ok();
        } else {
            auto fails = [&](const MatrixPoly& x) { return !holds(x); };
            res.fail(i, "p = " + print_canonical(shrink_polynomial(p, fails)));
        }
    }
    return res;
}

inline SuiteResult rowsum_expansion(Rng rng, const Options& opt) {
    SuiteResult res{"rowsum-expansion"};
    for (int i = 0; i < opt.cases; ++i) {
        RingShape shape = random_shape(rng, opt.max_rows, opt.max_cols);
        int k = rng.range(0, std::min(shape.cols, 4));
        std::vector<int> f;
        for (int l = 0; l < k; ++l) f.push_back(rng.range(1, shape.rows));
        MatrixPoly product(Rational(1));
        for (int row : f) product *= row_sum(row, shape);
        if (reduce_admissible(product, shape) == injective_expansion(f, shape)) {
            res.ok();
        } else {
            std::ostringstream os;
            os << "f = [";
            for (std::size_t l = 0; l < f.size(); ++l) os << (l ? "," : "") << f[l];
            os << "], shape " << shape.rows << "x" << shape.cols;
            res.fail(i, os.str());
        }
    }
    return res;
}

inline SuiteResult orbit_symmetrization(Rng rng, const Options& opt) {
    SuiteResult res{"orbit-symmetrization"};
    for (int i = 0; i < opt.cases; ++i) {
        RingShape shape = random_shape(rng, opt.max_rows, opt.max_cols);
        int k = rng.range(0, shape.cols);
        std::vector<int> f;
        for (int l = 0; l < k; ++l) f.push_back(rng.range(1, shape.rows));
        auto gs = injective_maps(k, shape.cols);
        const std::vector<int>& g1 = gs[static_cast<std::size_t>(rng.below(static_cast<int>(gs.size())))];
        const std::vector<int>& g2 = gs[static_cast<std::size_t>(rng.below(static_cast<int>(gs.size())))];
        MatrixPoly w1 = MatrixPoly::term(omega_monomial(f, g1), Rational(1));
        MatrixPoly w2 = MatrixPoly::term(omega_monomial(f, g2), Rational(1));
        if (symmetrize(w1, shape, shape.cols) == symmetrize(w2, shape, shape.cols)) {
            res.ok();
        } else {
            res.fail(i, "omega1 = " + print_canonical(w1) + ", omega2 = " + print_canonical(w2));
        }
    }
    return res;
}

inline SuiteResult symmetrized_monomial_formula(Rng rng, const Options& opt) {
    SuiteResult res{"symmetrized-monomial-formula"};
    for (int i = 0; i < opt.cases; ++i) {
        RingShape shape = random_shape(rng, opt.max_rows, opt.max_cols);
        int k = rng.range(0, shape.cols);
        MatrixMonomial omega = random_admissible_monomial(rng, shape, k);
        MatrixPoly lhs = reduce_admissible(
            symmetrize(MatrixPoly::term(omega, Rational(1)), shape, shape.cols), shape);
        MatrixPoly product(Rational(1));
        for (const auto& [v, e] : omega.factors())
            for (int rep = 0; rep < e; ++rep) product *= row_sum(v.row, shape);
        MatrixPoly rhs = Rational(factorial(shape.cols - k), factorial(shape.cols)) *
                         reduce_admissible(product, shape);
        if (lhs == rhs) {
            res.ok();
        } else {
            res.fail(i, "omega = " + print_canonical(MatrixPoly::term(omega, Rational(1))) +
                            ", shape " + std::to_string(shape.rows) + "x" +
                            std::to_string(shape.cols));
        }
    }
    return res;
}

inline SuiteResult roundtrip_injective(Rng rng, const Options& opt) {
    SuiteResult res{"roundtrip-injective"};
    for (int i = 0; i < opt.cases; ++i) {
        RingShape shape = random_shape(rng, opt.max_rows, opt.max_cols);
        RowPoly g = truncate_deg(random_row_poly(rng, shape.rows, shape.cols, 4), shape.cols);
        auto holds = [&](const RowPoly& x) { return to_rowsums(subst_s(x, shape), shape) == x; };
        if (holds(g)) {
            res.ok();
        } else {
            auto fails = [&](const RowPoly& x) {
                return x.degree().value_or(0) <= shape.cols && !holds(x);
            };
            res.fail(i, "G = " + print_canonical(shrink_polynomial(g, fails)));
        }
    }
    return res;
}

inline SuiteResult roundtrip_surjective(Rng rng, const Options& opt) {
    SuiteResult res{"roundtrip-surjective"};
    for (int i = 0; i < opt.cases; ++i) {
        RingShape shape = random_shape(rng, opt.max_rows, opt.max_cols);
        MatrixPoly h = reduce_admissible(
            symmetrize(random_admissible_poly(rng, shape), shape, shape.cols), shape);
        auto holds = [&](const MatrixPoly& x) { return subst_s(to_rowsums(x, shape), shape) == x; };
        if (holds(h)) {
            res.ok();
        } else {
            res.fail(i, "h = " + print_canonical(h));
        }
    }
    return res;
}

inline SuiteResult weil_multiplicativity(Rng rng, const Options& opt) {
    SuiteResult res{"weil-multiplicativity"};
    for (int i = 0; i < opt.cases; ++i) {
        RingShape shape = random_shape(rng, opt.max_rows, opt.max_cols);
        RowPoly g = truncate_deg(random_row_poly(rng, shape.rows, shape.cols, 3), shape.cols);
        RowPoly h = truncate_deg(random_row_poly(rng, shape.rows, shape.cols, 3), shape.cols);
        auto holds = [&](const RowPoly& x) {
            return subst_s(weil_mul_rows(x, h, shape.cols), shape) ==
                   reduce_admissible(subst_s(x, shape) * subst_s(h, shape), shape);
        };
        if (holds(g)) {
            res.ok();
        } else {
            auto fails = [&](const RowPoly& x) {
                return x.degree().value_or(0) <= shape.cols && !holds(x);
            };
            res.fail(i, "G = " + print_canonical(shrink_polynomial(g, fails)) +
                            ", H = " + print_canonical(h));
        }
    }
    return res;
}

inline SuiteResult grading_commutes(Rng rng, const Options& opt) {
    SuiteResult res{"grading-commutes"};
    for (int i = 0; i < opt.cases; ++i) {
        RingShape shape = random_shape(rng, opt.max_rows, opt.max_cols);
        RowPoly g = truncate_deg(random_row_poly(rng, shape.rows, shape.cols, 4), shape.cols);
        int k = rng.range(0, shape.cols);
        MatrixPoly h = reduce_admissible(
            symmetrize(random_admissible_poly(rng, shape), shape, shape.cols), shape);
        auto holds = [&](const RowPoly& x) {
            return subst_S(homogeneous_component(x, k), shape) ==
                       homogeneous_component(subst_S(x, shape), k) &&
                   subst_s(homogeneous_component(x, k), shape) ==
                       homogeneous_component(subst_s(x, shape), k) &&
                   to_rowsums(homogeneous_component(h, k), shape) ==
                       homogeneous_component(to_rowsums(h, shape), k);
        };
        if (holds(g)) {
            res.ok();
        } else {
            auto fails = [&](const RowPoly& x) {
                return x.degree().value_or(0) <= shape.cols && !holds(x);
            };
            res.fail(i, "G = " + print_canonical(shrink_polynomial(g, fails)) +
                            ", h = " + print_canonical(h) + ", k = " + std::to_string(k));
        }
    }
    return res;
}

inline SuiteResult orbit_decomposition(Rng rng, const Options& opt) {
    SuiteResult res{"orbit-decomposition"};
    for (int i = 0; i < opt.cases; ++i) {
        RingShape shape = random_shape(rng, opt.max_rows, opt.max_cols);
        int k = rng.range(0, shape.cols);
        std::vector<int> f;
        for (int l = 0; l < k; ++l) f.push_back(rng.range(1, shape.rows));
        std::vector<RowMonomial::Factor> alpha;
        for (int row : f) alpha.push_back({RowVar{row}, 1});
        RowPoly y_alpha = RowPoly::term(RowMonomial::from_factors(std::move(alpha)), Rational(1));
        if (subst_s(y_alpha, shape) == injective_expansion(f, shape)) {
            res.ok();
        } else {
            res.fail(i, "y^alpha = " + print_canonical(y_alpha));
        }
    }
    return res;
}

inline SuiteResult forms_closed(Rng rng, const Options& opt) {
    SuiteResult res{"forms-closed"};
    for (int i = 0; i < opt.cases; ++i) {
        int m = rng.range(1, opt.max_rows);
        RingShape shape{m, rng.range(1, opt.max_cols)};
        RowPoly g = random_row_poly(rng, m, 4, 4);
        BasePoint x0;
        for (int t = 0; t < m; ++t) x0.coords.push_back(random_rational(rng, 3, 3));
        auto holds = [&](const RowPoly& gg) {
            OneForm w = exterior_derivative(gg, m);
            MatrixPoly cs = chain_sum(w, x0, shape);
            if (!is_column_symmetric(cs, shape)) return false;
            RowPoly f = primitive(w, x0, shape);
            std::map<RowVar, RowPoly> shift;
            for (int t = 1; t <= m; ++t)
                shift[RowVar{t}] = RowPoly(x0.coord(t)) + RowPoly::variable(RowVar{t});
            RowPoly shifted = substitute(gg, shift);
            RowPoly taylor =
                truncate_deg(shifted - RowPoly(shifted.constant_term()), shape.cols);
            return f == taylor && verify_primitive(w, x0, f, shape);
        };
        if (holds(g)) {
            res.ok();
        } else {
            auto fails = [&](const RowPoly& x) { return !holds(x); };
            res.fail(i, "g = " + print_canonical(shrink_polynomial(g, fails)));
        }
    }
    return res;
}

inline SuiteResult forms_witness(Rng rng, const Options& opt) {
    SuiteResult res{"forms-witness"};
    // Fixed non-closed witness (a1, a2) = (x2, 0): independent of the options.
    const int m = 2;
    OneForm w(m, {RowPoly::variable(RowVar{2}), RowPoly()});
    for (int i = 0; i < opt.cases; ++i) {
        RingShape shape{m, rng.range(2, std::max(2, std::min(opt.max_cols, 4)))};
        BasePoint x0;
        for (int t = 0; t < m; ++t) x0.coords.push_back(random_rational(rng, 3, 3));
        bool ok = !check_closed(w) && !is_column_symmetric(chain_sum(w, x0, shape), shape);
        if (ok) {
            bool threw = false;
            try {
                primitive(w, x0, shape);
            } catch (const NotClosed&) {
                threw = true;
            }
            ok = threw;
        }
        if (ok) {
            res.ok();
        } else {
            res.fail(i, "witness form (x2, 0), shape 2x" + std::to_string(shape.cols));
        }
    }
    return res;
}

inline SuiteResult parser_roundtrip(Rng rng, const Options& opt) {
    SuiteResult res{"parser-roundtrip"};
    for (int i = 0; i < opt.cases; ++i) {
        RingShape shape = random_shape(rng, opt.max_rows, opt.max_cols);
        MatrixPoly p = random_matrix_poly(rng, shape);
        RowPoly g = random_row_poly(rng, shape.rows, 3, 4);
        auto holds = [&](const MatrixPoly& x) {
            return parse_matrix(print_canonical(x), shape) == x &&
                   matrix_from_structured(to_structured(x), shape) == x &&
                   parse_rowvars(print_canonical(g), shape.rows) == g &&
                   row_from_structured(to_structured(g), shape.rows) == g;
        };
        if (holds(p)) {
            res.ok();
        } else {
            auto fails = [&](const MatrixPoly& x) { return !holds(x); };
            res.fail(i, "p = " + print_canonical(shrink_polynomial(p, fails)) +
                            ", G = " + print_canonical(g));
        }
    }
    return res;
}

}  // namespace detail_suites

inline std::vector<SuiteResult> run_all(const Options& opt) {
    using Suite = SuiteResult (*)(Rng, const Options&);
    static constexpr Suite suites[] = {
        detail_suites::ring_axioms,
        detail_suites::degree_grading,
        detail_suites::substitution,
        detail_suites::group_action,
        detail_suites::quotient_equivariance,
        detail_suites::symmetrize_props,
        detail_suites::rowsum_expansion,
        detail_suites::orbit_symmetrization,
        detail_suites::symmetrized_monomial_formula,
        detail_suites::roundtrip_injective,
        detail_suites::roundtrip_surjective,
        detail_suites::weil_multiplicativity,
        detail_suites::grading_commutes,
        detail_suites::orbit_decomposition,
        detail_suites::forms_closed,
        detail_suites::forms_witness,
        detail_suites::parser_roundtrip,
    };
    std::vector<SuiteResult> results;
    std::uint64_t index = 0;
    for (Suite suite : suites) {
        // each suite draws from its own stream so suites stay independent
        Rng rng(opt.seed ^ (0x9E3779B97F4A7C15ULL * ++index));
        results.push_back(suite(std::move(rng), opt));
    }
    return results;
}

inline bool all_passed(const std::vector<SuiteResult>& results) {
    for (const SuiteResult& r : results)
        if (r.failed != 0) return false;
    return true;
}

/// Deterministic text report: one line per suite, then failures, then totals.
inline std::string format_report(const Options& opt, const std::vector<SuiteResult>& results) {
    std::ostringstream os;
    os << "selftest seed=" << opt.seed << " max-shape=" << opt.max_rows << "x" << opt.max_cols
       << " cases-per-suite=" << opt.cases << "\n";
    int passed = 0, failed = 0;
    for (const SuiteResult& r : results) {
        os << "  " << r.name;
        for (std::size_t pad = r.name.size(); pad < 32; ++pad) os << ' ';
        os << r.passed << "/" << (r.passed + r.failed) << (r.failed ? "  FAIL" : "") << "\n";
        passed += r.passed;
        failed += r.failed;
    }
    for (const SuiteResult& r : results)
        for (const std::string& f : r.failures) os << "  FAIL " << f << "\n";
    os << "total: " << passed << " passed, " << failed << " failed\n";
    return os.str();
}

}  // namespace colsym::selftest
