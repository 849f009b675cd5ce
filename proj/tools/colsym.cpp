// colsym - batch CLI for the column-symmetric polynomial calculus.
//
// Exit codes: 0 success, 1 selftest failure, 2 parse/shape errors,
// 3 enumeration limits, 4 domain violations, 5 non-closed form.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "colsym/colsym.hpp"

namespace {

int enumeration_limit_from_env() {
    const char* raw = std::getenv("COLSYM_ENUM_LIMIT");
    if (raw == nullptr) return colsym::kDefaultEnumerationLimit;
    try {
        int limit = std::stoi(raw);
        if (limit < 1) throw std::invalid_argument("non-positive");
        return limit;
    } catch (const std::exception&) {
        throw colsym::Error(std::string("invalid COLSYM_ENUM_LIMIT value '") + raw + "'");
    }
}

struct Output {
    std::string mode = "text";

    template <class Poly>
    void emit(const Poly& p) const {
        if (mode == "structured")
            std::cout << colsym::to_structured(p).dump() << "\n";
        else
            std::cout << colsym::print_canonical(p) << "\n";
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus of column-symmetric polynomials in a matrix of variables"};
    app.require_subcommand(1);

    int m = 1;
    int n = 2;
    Output output;
    std::optional<int> exit_override;

    auto add_shape = [&](CLI::App* sub) {
        sub->add_option("-m,--rows", m, "number of rows (default 1)");
        sub->add_option("-n,--cols", n, "number of columns (default 2)");
        sub->add_option("-o,--output", output.mode, "output mode: text | structured")
            ->check(CLI::IsMember({"text", "structured"}));
    };

    std::string expr;

    CLI::App* reduce = app.add_subcommand(
        "reduce", "project onto the admissible quotient (drop column collisions)");
    add_shape(reduce);
    reduce->add_option("expr", expr, "polynomial in x[i,j]")->required();
    reduce->callback([&] {
        colsym::RingShape shape{m, n};
        output.emit(colsym::reduce_admissible(colsym::parse_matrix(expr, shape), shape));
    });

    CLI::App* symmetrize = app.add_subcommand(
        "symmetrize", "average over all n! column permutations");
    add_shape(symmetrize);
    symmetrize->add_option("expr", expr, "polynomial in x[i,j]")->required();
    symmetrize->callback([&] {
        colsym::RingShape shape{m, n};
        output.emit(colsym::symmetrize(colsym::parse_matrix(expr, shape), shape,
                                       enumeration_limit_from_env()));
    });

    bool symmetrize_first = false;
    CLI::App* to_rowsums = app.add_subcommand(
        "to-rowsums", "rewrite a column-symmetric admissible polynomial in the row sums");
    add_shape(to_rowsums);
    to_rowsums->add_option("expr", expr, "polynomial in x[i,j]")->required();
    to_rowsums->add_flag("--symmetrize", symmetrize_first,
                         "apply symmetrize after reducing before inverting");
    to_rowsums->callback([&] {
        colsym::RingShape shape{m, n};
        colsym::MatrixPoly p = colsym::parse_matrix(expr, shape);
        if (symmetrize_first)
            p = colsym::symmetrize(colsym::reduce_admissible(p, shape), shape,
                                   enumeration_limit_from_env());
        output.emit(colsym::to_rowsums(p, shape));
    });

    CLI::App* expand = app.add_subcommand(
        "expand", "substitute the row sums for y1..ym and reduce");
    add_shape(expand);
    expand->add_option("expr", expr, "polynomial in y1..ym of degree <= n")->required();
    expand->callback([&] {
        colsym::RingShape shape{m, n};
        output.emit(colsym::subst_s(colsym::parse_rowvars(expr, m), shape));
    });

    std::vector<std::string> form_exprs;
    std::vector<std::string> at_coords;
    CLI::App* primitive = app.add_subcommand(
        "primitive", "primitive of a closed polynomial 1-form on a degree-n neighbourhood");
    add_shape(primitive);
    primitive->add_option("--form", form_exprs,
                          "coefficient a_i of the form, in x1..xm; repeat m times")
        ->required();
    primitive->add_option("--at", at_coords, "base point coordinate; repeat m times")
        ->required();
    primitive->callback([&] {
        colsym::RingShape shape{m, n};
        if (static_cast<int>(form_exprs.size()) != m)
            throw colsym::ShapeMismatch("need exactly " + std::to_string(m) +
                                        " --form coefficients, got " +
                                        std::to_string(form_exprs.size()));
        if (static_cast<int>(at_coords.size()) != m)
            throw colsym::ShapeMismatch("need exactly " + std::to_string(m) +
                                        " --at coordinates, got " +
                                        std::to_string(at_coords.size()));
        std::vector<colsym::RowPoly> coeffs;
        for (const std::string& src : form_exprs)
            coeffs.push_back(colsym::parse_ambient(src, m));
        colsym::BasePoint x0;
        for (const std::string& c : at_coords)
            x0.coords.push_back(colsym::Rational::from_string(c));
        colsym::OneForm w(m, std::move(coeffs));
        colsym::RowPoly f = colsym::primitive(w, x0, shape);
        output.emit(f);
        bool verified = colsym::verify_primitive(w, x0, f, shape);
        std::cerr << "verify_primitive: " << (verified ? "pass" : "fail") << "\n";
        if (!verified) exit_override = 1;
    });

    std::uint64_t seed = 1;
    int cases = 100;
    CLI::App* selftest = app.add_subcommand(
        "selftest", "run the randomized invariant suites (deterministic per seed)");
    add_shape(selftest);
    selftest->add_option("--seed", seed, "random seed (default 1)");
    selftest->add_option("--cases", cases, "cases per suite (default 100)")
        ->check(CLI::PositiveNumber);
    selftest->callback([&] {
        colsym::selftest::Options opt;
        opt.seed = seed;
        opt.max_rows = m;
        opt.max_cols = n;
        opt.cases = cases;
        if (opt.max_rows < 1 || opt.max_cols < 1)
            throw colsym::Error("selftest needs m, n >= 1");
        auto results = colsym::selftest::run_all(opt);
        std::cout << colsym::selftest::format_report(opt, results);
        if (!colsym::selftest::all_passed(results)) exit_override = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const colsym::NotClosed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const colsym::EnumerationLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const colsym::NotAdmissible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const colsym::NotColumnSymmetric& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const colsym::DegreeExceedsN& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const colsym::ShapeMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const colsym::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_override.value_or(0);
}
