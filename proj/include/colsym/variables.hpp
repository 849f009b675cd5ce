#pragma once

#include <compare>
#include <string>

namespace colsym {

/// The entry x_{i,j} of the m-by-n matrix of variables. Indices are 1-based;
/// the bounds live in the enclosing RingShape.
struct MatrixVar {
    int row = 1;
    int col = 1;

    friend constexpr auto operator<=>(const MatrixVar&, const MatrixVar&) = default;
};

/// The generator y_i of the polynomial ring in m row variables (1-based).
/// The same sort doubles as the ambient coordinates x_1..x_m of 1-forms.
struct RowVar {
    int index = 1;

    friend constexpr auto operator<=>(const RowVar&, const RowVar&) = default;
};

inline std::string var_name(const MatrixVar& v) {
    return "x[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
}

inline std::string var_name(const RowVar& v) { return "y" + std::to_string(v.index); }

}  // namespace colsym
