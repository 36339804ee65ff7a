#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nicety/poly_map.hpp"

namespace nicety {

/// A parsed map document: declared variable names, assignment targets in
/// declaration order, and the map itself with every expression expanded to
/// canonical polynomial form.
struct ParsedMap {
    std::vector<std::string> var_names;
    std::vector<std::string> targets;
    PolyMap map;
};

/// Parses the map text format:
///
///   map        := header assignment+
///   header     := "vars:" ident+ NEWLINE
///   assignment := ident "=" expr NEWLINE
///   expr       := ["-"] term (("+"|"-") term)*
///   term       := factor ("*" factor)*
///   factor     := base ("^" natural)?
///   base       := rational | ident | "(" expr ")"
///   rational   := natural ("/" natural)?
///
/// "#" starts a comment to end of line; whitespace is insignificant except
/// that newlines terminate assignments.  Implicit multiplication is
/// rejected, exponents must be non-negative decimal literals, and "/" only
/// joins two integer literals.  All errors carry a 1-based line/column.
ParsedMap parse_map(std::string_view text, const Limits& lim = {});

/// Canonical rendering: header plus one "F<i> = ..." line per component,
/// terms in descending graded-lexicographic order.  parse_map(render_map(F))
/// reproduces F exactly, byte for byte on re-rendering.
std::string render_map(const PolyMap& f, const std::vector<std::string>& names);

/// Renders one polynomial in the expression syntax ("0" for the zero
/// polynomial).
std::string render_polynomial(const Polynomial& p, const std::vector<std::string>& names);

/// Default variable names x1..xn.
std::vector<std::string> default_names(std::size_t n);

/// Parses {"rows": r, "cols": c, "entries": [[..],..]} with entries "a" or
/// "a/b" (a optionally signed, b a positive integer).
RatMatrix parse_matrix(std::string_view json_text);

std::string render_matrix(const RatMatrix& m);

} // namespace nicety
