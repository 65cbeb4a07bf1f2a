#pragma once

#include <string_view>

#include "flagchern/sympoly.hpp"

namespace flagchern {

/// Parses the expression grammar
///
///   expr      := ['+'|'-'] term (('+'|'-') term)*
///   term      := factor ('*' factor)*
///   factor    := number | generator ('^' posint)? | '(' expr ')'
///   number    := integer ('/' integer)?
///   generator := ('e'|'p') posint
///
/// into canonical expanded form. Whitespace is ignored everywhere. The
/// optional leading sign is accepted so that printed canonical forms with a
/// negative leading coefficient re-parse.
///
/// Throws ParseError (with byte position) on syntax errors and
/// ZeroGeneratorIndex on e0/p0.
SymPolyExpr parse_expr(std::string_view text);

}  // namespace flagchern
