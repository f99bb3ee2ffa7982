#ifndef SSTK_PARSE_HPP
#define SSTK_PARSE_HPP

#include "sstk/symexpr.hpp"

#include <set>
#include <string>

namespace sstk {

// Parses the conventional infix grammar emitted by SymExpr::str():
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' exponent)?
//   atom   := integer | identifier | '(' expr ')'
//   exponent := ['-'] digits | '(' ['-'] digits ['/' digits] ')'
// Exponent denominators must be 1 or 2.  When `radical_ok` is given, a half
// power is rejected unless its base is a plain variable in the set.
SymExpr parse_expr(const std::string& text, const std::set<std::string>* radical_ok = nullptr);

} // namespace sstk

#endif
