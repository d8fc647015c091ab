#ifndef ONEPLACE_TEXTIO_HPP
#define ONEPLACE_TEXTIO_HPP

#include <string>
#include <string_view>

#include "oneplace/bilaurent.hpp"

namespace oneplace {

/// Variable names used when reading/printing a BiLaurent.
struct VarNames {
    char x = 'x';
    char y = 'y';
    static VarNames global() { return {'x', 'y'}; }
    static VarNames local() { return {'u', 'v'}; }
};

/// Parse "term +- term" with ^ powers, e.g. "y^5 - x^2 - 5y^4x^-1",
/// "v^5-u^3", "3/2xy^2". Multiplication may be written with '*' or by
/// juxtaposition; exponents may be negative on the x-variable, optionally
/// parenthesized. Throws Error(InputParse) on malformed input.
BiLaurent parse_bilaurent(std::string_view text, VarNames vars);

/// Canonical text form: terms in descending graded-lex order, y-part printed
/// before the x-part, no explicit '*'.
std::string to_string(const BiLaurent& f, VarNames vars);

} // namespace oneplace

#endif
