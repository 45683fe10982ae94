#pragma once

#include "pvgauge/closedform.hpp"
#include "pvgauge/ratsol.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pvg {

/// Rational function in x: integers, x, + - * /, ^ with integer exponents, parentheses.
/// Throws SyntaxError.
RatFn parse_ratfn(const std::string& text);

/// "[[a, b], [c, d]]". Throws SyntaxError, InconsistentRowLength.
MatRF parse_matrix(const std::string& text);

/// Named matrices, parameters and generator tables.
///
///     A = [[0, 1/x], [0, 0]]
///     param c1
///     param zeta3 cyclotomic 3
///     param chi unit
///     gen g log x shift c1
///     gen h pow x 1/2 mul -1 exp x mul chi
///
/// A matrix may span lines; '#' starts a comment.
struct InputDocument {
    std::vector<std::pair<std::string, MatRF>> matrices;
    std::vector<Param> params;
    std::vector<GaloisGen> gens;

    bool has(const std::string& name) const;
    /// Throws InputError for an undeclared name.
    const MatRF& matrix(const std::string& name) const;
};

/// Throws SyntaxError, InconsistentRowLength, InputError (duplicate or undeclared names),
/// InvalidGenerator.
InputDocument parse_document(const std::string& text);

/// "pole <polynomial> <order>" lines and one "numerator_degree <N>" line.
DegreeBounds parse_bounds(const std::string& text);

} // namespace pvg
