#ifndef ZFORM_PARSER_HPP
#define ZFORM_PARSER_HPP

#include "zform/expr.hpp"

namespace zform {

struct parse_error : std::runtime_error {
  parse_error(const std::string &msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
  size_t position;
};

/// Parse expression text against a coordinate list and a parameter list.
/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | base ('^' integer)?
///   base   := number | identifier | identifier '(' expr ')' | '(' expr ')'
/// Decimals become exact rationals by digit expansion. Identifiers resolve
/// against coords, then params, then {sin,cos,tan,exp,ln,sqrt}.
Expr parse_expr(const std::string &source, const std::vector<std::string> &coords,
                const std::vector<std::string> &params);

} // namespace zform

#endif
