#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "colsym/errors.hpp"
#include "colsym/rational.hpp"
#include "colsym/variables.hpp"

namespace colsym {

/// A product of variables with positive exponents, kept sorted by variable.
/// The empty product is the monomial 1. Total degree is the exponent sum.
template <class V>
class Monomial {
public:
    using Factor = std::pair<V, int>;

    Monomial() = default;

    static Monomial variable(V v, int exp = 1) {
        if (exp < 0) throw Error("negative exponent");
        Monomial m;
        if (exp > 0) m.factors_.push_back({v, exp});
        return m;
    }

    /// Normalizes an arbitrary factor list: sorts, merges repeats, drops zeros.
    static Monomial from_factors(std::vector<Factor> fs) {
        std::sort(fs.begin(), fs.end(),
                  [](const Factor& a, const Factor& b) { return a.first < b.first; });
        Monomial m;
        for (auto& [v, e] : fs) {
            if (e < 0) throw Error("negative exponent");
            if (e == 0) continue;
            if (!m.factors_.empty() && m.factors_.back().first == v)
                m.factors_.back().second += e;
            else
                m.factors_.push_back({v, e});
        }
        return m;
    }

    int degree() const {
        int d = 0;
        for (const auto& [v, e] : factors_) d += e;
        return d;
    }

    int exponent(V v) const {
        for (const auto& [w, e] : factors_)
            if (w == v) return e;
        return 0;
    }

    bool is_unit() const { return factors_.empty(); }

    const std::vector<Factor>& factors() const { return factors_; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        auto a = factors_.begin(), b = o.factors_.begin();
        while (a != factors_.end() && b != o.factors_.end()) {
            if (a->first < b->first)
                r.factors_.push_back(*a++);
            else if (b->first < a->first)
                r.factors_.push_back(*b++);
            else {
                r.factors_.push_back({a->first, a->second + b->second});
                ++a, ++b;
            }
        }
        r.factors_.insert(r.factors_.end(), a, factors_.end());
        r.factors_.insert(r.factors_.end(), b, o.factors_.end());
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

/// Graded lexicographic order: lower total degree first; within a degree the
/// monomial with the higher exponent on the earliest differing variable comes
/// first (so x[1,1]^2 precedes x[1,1]*x[1,2] precedes x[1,2]^2).
template <class V>
struct GradedLexLess {
    bool operator()(const Monomial<V>& a, const Monomial<V>& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        auto i = a.factors().begin(), j = b.factors().begin();
        while (i != a.factors().end() && j != b.factors().end()) {
            if (i->first < j->first) return true;   // a has the earlier variable
            if (j->first < i->first) return false;
            if (i->second != j->second) return i->second > j->second;
            ++i, ++j;
        }
        return false;  // equal degree and common prefix exhausted together
    }
};

/// Sparse polynomial with exact rational coefficients, canonical by
/// construction: no zero coefficients are stored and terms are kept in
/// graded-lex order, so equality is bit-exact map equality.
template <class V>
class Polynomial {
public:
    using TermMap = std::map<Monomial<V>, Rational, GradedLexLess<V>>;

    Polynomial() = default;
    Polynomial(const Rational& c) { add_term(Monomial<V>(), c); }
    Polynomial(int c) : Polynomial(Rational(c)) {}

    static Polynomial variable(V v, int exp = 1) {
        Polynomial p;
        p.add_term(Monomial<V>::variable(v, exp), Rational(1));
        return p;
    }

    static Polynomial term(const Monomial<V>& m, const Rational& c) {
        Polynomial p;
        p.add_term(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    /// Max total degree; nullopt marks the zero polynomial.
    std::optional<int> degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.rbegin()->first.degree();
    }

    const TermMap& terms() const { return terms_; }

    Rational coefficient(const Monomial<V>& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(Monomial<V>()); }

    void add_term(const Monomial<V>& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Polynomial operator-() const {
        Polynomial r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial r;
        if (c.is_zero()) return r;
        for (const auto& [m, k] : p.terms_) r.terms_.emplace(m, c * k);
        return r;
    }

    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    TermMap terms_;
};

template <class V>
Polynomial<V> pow(const Polynomial<V>& p, unsigned long e) {
    Polynomial<V> r(Rational(1));
    Polynomial<V> base = p;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

/// The distinct variables occurring in p, in increasing order.
template <class V>
std::vector<V> variables(const Polynomial<V>& p) {
    std::vector<V> vs;
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m.factors()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

/// The degree-k part of p; summing over all k recovers p.
template <class V>
Polynomial<V> homogeneous_component(const Polynomial<V>& p, int k) {
    if (k < 0) throw Error("homogeneous component of negative degree");
    Polynomial<V> r;
    for (const auto& [m, c] : p.terms())
        if (m.degree() == k) r.add_term(m, c);
    return r;
}

/// Formal partial derivative with respect to v.
template <class V>
Polynomial<V> partial_derivative(const Polynomial<V>& p, V v) {
    Polynomial<V> r;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        if (e == 0) continue;
        std::vector<typename Monomial<V>::Factor> fs;
        for (const auto& [w, k] : m.factors())
            fs.push_back({w, w == v ? k - 1 : k});
        r.add_term(Monomial<V>::from_factors(std::move(fs)), c * Rational(e));
    }
    return r;
}

/// Simultaneous substitution v -> assignment[v], fully expanded. An algebra
/// morphism in p. Throws MissingAssignment if a variable of p is unassigned.
template <class V, class W>
Polynomial<W> substitute(const Polynomial<V>& p,
                         const std::map<V, Polynomial<W>>& assignment) {
    Polynomial<W> r;
    for (const auto& [m, c] : p.terms()) {
        Polynomial<W> t(c);
        for (const auto& [v, e] : m.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw MissingAssignment("no assignment for variable " + var_name(v));
            t *= pow(it->second, static_cast<unsigned long>(e));
        }
        r += t;
    }
    return r;
}

using MatrixMonomial = Monomial<MatrixVar>;
using RowMonomial = Monomial<RowVar>;
using MatrixPoly = Polynomial<MatrixVar>;
using RowPoly = Polynomial<RowVar>;

}  // namespace colsym
