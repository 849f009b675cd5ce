#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "colsym/matrix_ring.hpp"
#include "colsym/polynomial.hpp"

namespace colsym {

// Textual grammar for polynomials (whitespace-insensitive):
//
//   expr     := term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' natural)?
//   base     := rational | variable | '(' expr ')' | '-' factor
//   variable := 'x[' natural ',' natural ']'   matrix entry x_{i,j}
//             | 'y' natural                    row variable y_i
//             | 'x' natural                    ambient coordinate x_i (forms)
//   rational := natural ('/' natural)?
//
// Multiplication is always explicit ('*'); juxtaposition is illegal, which is
// what makes multi-digit indices like y12 unambiguous. Each parse entry point
// fixes the variable kind; any other kind raises MixedVariableKinds.

/// Which of the three surface-syntax variable kinds an expression may use.
enum class VarSort { matrix, row, ambient };

namespace detail {

constexpr unsigned long kMaxExponent = 1u << 20;

struct Cursor {
    std::string_view src;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos == src.size();
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) throw SyntaxError(std::string("expected ") + what, pos);
    }

    bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    Integer natural() {
        if (!peek_digit()) throw SyntaxError("expected a number", pos);
        std::string digits;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
            digits.push_back(src[pos++]);
        return Integer(digits);
    }

    int index() {
        std::size_t at = pos;
        Integer n = natural();
        if (n > 1000000) throw SyntaxError("variable index too large", at);
        return static_cast<int>(n);
    }

    unsigned long exponent() {
        std::size_t at = pos;
        Integer n = natural();
        if (n > kMaxExponent) throw SyntaxError("exponent too large", at);
        return static_cast<unsigned long>(n);
    }
};

template <class V>
struct SortPolicy;

template <>
struct SortPolicy<MatrixVar> {
    VarSort sort;
    RingShape shape;

    Polynomial<MatrixVar> parse_variable(Cursor& c) const {
        std::size_t at = c.pos;
        char head = c.peek();
        ++c.pos;
        if (head == 'y')
            throw MixedVariableKinds("y variable in a matrix-variable expression", at);
        // head == 'x'
        if (!c.eat('['))
            throw MixedVariableKinds("single-index x variable in a matrix-variable expression",
                                     at);
        int i = c.index();
        c.expect(',', "','");
        int j = c.index();
        c.expect(']', "']'");
        MatrixVar v{i, j};
        detail::check_in_shape(v, shape);
        return Polynomial<MatrixVar>::variable(v);
    }
};

template <>
struct SortPolicy<RowVar> {
    VarSort sort;  // VarSort::row (y1, y2, ...) or VarSort::ambient (x1, x2, ...)
    int rows;

    Polynomial<RowVar> parse_variable(Cursor& c) const {
        std::size_t at = c.pos;
        char head = c.peek();
        char expected = sort == VarSort::row ? 'y' : 'x';
        ++c.pos;
        if (head != expected)
            throw MixedVariableKinds(std::string(1, head) +
                                         " variable in a " +
                                         (sort == VarSort::row ? "row" : "ambient") +
                                         "-variable expression",
                                     at);
        if (head == 'x' && c.pos < c.src.size() && c.src[c.pos] == '[')
            throw MixedVariableKinds("matrix variable in an ambient-variable expression", at);
        if (c.pos >= c.src.size() || !std::isdigit(static_cast<unsigned char>(c.src[c.pos])))
            throw SyntaxError("variable index must follow immediately", c.pos);
        int i = c.index();
        RowVar v{i};
        if (i < 1 || i > rows)
            throw VariableOutOfShape("variable " +
                                     (sort == VarSort::row ? var_name(v)
                                                           : "x" + std::to_string(i)) +
                                     " outside index range 1.." + std::to_string(rows));
        return Polynomial<RowVar>::variable(v);
    }
};

template <class V>
class Parser {
public:
    Parser(std::string_view src, SortPolicy<V> policy) : c_{src}, policy_(std::move(policy)) {}

    Polynomial<V> run() {
        if (c_.at_end()) throw SyntaxError("empty expression", c_.pos);
        Polynomial<V> p = expr();
        if (!c_.at_end()) throw SyntaxError("unexpected trailing input", c_.pos);
        return p;
    }

private:
    Polynomial<V> expr() {
        Polynomial<V> p = term();
        for (;;) {
            if (c_.eat('+'))
                p += term();
            else if (c_.eat('-'))
                p -= term();
            else
                return p;
        }
    }

    Polynomial<V> term() {
        Polynomial<V> p = factor();
        while (c_.eat('*')) p *= factor();
        return p;
    }

    Polynomial<V> factor() {
        Polynomial<V> p = base();
        if (c_.eat('^')) return pow(p, c_.exponent());
        return p;
    }

    Polynomial<V> base() {
        char head = c_.peek();
        if (head == '-') {
            ++c_.pos;
            return -factor();
        }
        if (head == '(') {
            ++c_.pos;
            Polynomial<V> p = expr();
            c_.expect(')', "')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(head))) return rational();
        if (head == 'x' || head == 'y') return policy_.parse_variable(c_);
        throw SyntaxError("expected a number, variable, '(' or '-'", c_.pos);
    }

    Polynomial<V> rational() {
        Integer num = c_.natural();
        if (c_.eat('/')) {
            std::size_t at = c_.pos;
            Integer den = c_.natural();
            if (den == 0) throw SyntaxError("zero denominator", at);
            return Polynomial<V>(Rational(std::move(num), std::move(den)));
        }
        return Polynomial<V>(Rational(std::move(num)));
    }

    Cursor c_;
    SortPolicy<V> policy_;
};

inline std::string coefficient_prefix(const Rational& magnitude, bool has_factors) {
    if (!has_factors) return magnitude.str();
    if (magnitude.is_one()) return "";
    return magnitude.str() + "*";
}

template <class V, class NameFn>
std::string print_terms(const Polynomial<V>& p, NameFn&& name) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational magnitude = c.abs();
        if (first)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        out += coefficient_prefix(magnitude, !m.is_unit());
        bool first_factor = true;
        for (const auto& [v, e] : m.factors()) {
            if (!first_factor) out += "*";
            out += name(v);
            if (e > 1) out += "^" + std::to_string(e);
            first_factor = false;
        }
        first = false;
    }
    return out;
}

}  // namespace detail

/// Parses an expression in the matrix variables x[i,j] within the shape.
inline MatrixPoly parse_matrix(std::string_view src, const RingShape& shape) {
    detail::check_shape(shape);
    return detail::Parser<MatrixVar>(src, {VarSort::matrix, shape}).run();
}

/// Parses an expression in the row variables y1..ym.
inline RowPoly parse_rowvars(std::string_view src, int m) {
    return detail::Parser<RowVar>(src, {VarSort::row, m}).run();
}

/// Parses an expression in the ambient coordinates x1..xm (1-form coefficients).
inline RowPoly parse_ambient(std::string_view src, int m) {
    return detail::Parser<RowVar>(src, {VarSort::ambient, m}).run();
}

/// Deterministic text form: graded-lex term order, coefficients in lowest
/// terms, unit coefficients and exponents elided. parse of the output gives
/// back the polynomial.
inline std::string print_canonical(const MatrixPoly& p) {
    return detail::print_terms(p, [](const MatrixVar& v) { return var_name(v); });
}

inline std::string print_canonical(const RowPoly& p) {
    return detail::print_terms(p, [](const RowVar& v) { return var_name(v); });
}

/// Text form of an ambient-coordinate polynomial (x1..xm).
inline std::string print_ambient(const RowPoly& p) {
    return detail::print_terms(p, [](const RowVar& v) { return "x" + std::to_string(v.index); });
}

// Structured (machine-readable) records: a polynomial is a JSON array of
// terms in canonical order; each term is {"coeff": "p" or "p/q",
// "vars": [["x", i, j, exp] ...]} for matrix entries or [["y", i, exp] ...]
// for row variables. Lossless; see the from_structured inverses.

inline nlohmann::json to_structured(const MatrixPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json vars = nlohmann::json::array();
        for (const auto& [v, e] : m.factors())
            vars.push_back(nlohmann::json::array({"x", v.row, v.col, e}));
        terms.push_back({{"coeff", c.str()}, {"vars", std::move(vars)}});
    }
    return terms;
}

inline nlohmann::json to_structured(const RowPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json vars = nlohmann::json::array();
        for (const auto& [v, e] : m.factors())
            vars.push_back(nlohmann::json::array({"y", v.index, e}));
        terms.push_back({{"coeff", c.str()}, {"vars", std::move(vars)}});
    }
    return terms;
}

namespace detail {

inline void check_structured_term(const nlohmann::json& term) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("vars") ||
        !term["coeff"].is_string() || !term["vars"].is_array())
        throw Error("malformed structured polynomial term");
}

}  // namespace detail

inline MatrixPoly matrix_from_structured(const nlohmann::json& terms, const RingShape& shape) {
    if (!terms.is_array()) throw Error("structured polynomial must be an array of terms");
    MatrixPoly p;
    for (const auto& term : terms) {
        detail::check_structured_term(term);
        std::vector<MatrixMonomial::Factor> fs;
        for (const auto& v : term["vars"]) {
            if (!v.is_array() || v.size() != 4 || v[0] != "x")
                throw Error("malformed matrix variable entry");
            MatrixVar var{v[1].get<int>(), v[2].get<int>()};
            detail::check_in_shape(var, shape);
            fs.push_back({var, v[3].get<int>()});
        }
        p.add_term(MatrixMonomial::from_factors(std::move(fs)),
                   Rational::from_string(term["coeff"].get<std::string>()));
    }
    return p;
}

inline RowPoly row_from_structured(const nlohmann::json& terms, int m) {
    if (!terms.is_array()) throw Error("structured polynomial must be an array of terms");
    RowPoly p;
    for (const auto& term : terms) {
        detail::check_structured_term(term);
        std::vector<RowMonomial::Factor> fs;
        for (const auto& v : term["vars"]) {
            if (!v.is_array() || v.size() != 3 || v[0] != "y")
                throw Error("malformed row variable entry");
            RowVar var{v[1].get<int>()};
            if (var.index < 1 || var.index > m)
                throw VariableOutOfShape("variable " + var_name(var) + " outside 1.." +
                                         std::to_string(m));
            fs.push_back({var, v[2].get<int>()});
        }
        p.add_term(RowMonomial::from_factors(std::move(fs)),
                   Rational::from_string(term["coeff"].get<std::string>()));
    }
    return p;
}

}  // namespace colsym
