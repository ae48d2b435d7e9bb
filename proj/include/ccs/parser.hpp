/// \file parser.hpp
/// \brief Concrete ASCII syntax for CCS terms and `.ccs` workspaces.
///
/// Grammar, lowest precedence first:
///
///     sum    ::= par ('+' par)*
///     par    ::= restr ('|' restr)*
///     restr  ::= 'new' '{' ids '}' restr | '(' '\' '{' ids '}' ')' restr | relab
///     relab  ::= prefix ('[' (id '->' id),* ']')*
///     prefix ::= action '.' prefix | atom
///     atom   ::= '0' | Constant | '(' sum ')'
///     action ::= 'tau' | name | "'" name
///
/// Names start with a lowercase letter, constants with an uppercase one.
/// A workspace is a sequence of `alphabet a, b;` and `agent A = term;`
/// statements; `#` starts a comment running to the end of the line.

#ifndef CCS_PARSER_HPP
#define CCS_PARSER_HPP

#include <string>
#include <string_view>

#include "ccs/syntax.hpp"

namespace ccs {

struct SourceSpan {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based
  std::size_t length = 0;
};

class SyntaxError : public Error {
public:
  SyntaxError(const std::string& message, SourceSpan span);
  const SourceSpan& span() const { return span_; }

private:
  SourceSpan span_;
};

Process parse_term(std::string_view src);
Action parse_action(std::string_view src);
Environment parse_workspace(std::string_view src);

std::string print_term(const Process& p);
std::string print_action(const Action& u);
std::string print_label(const Label& l);
std::string print_relabeling(const Relabeling& rf);
std::string print_workspace(const Environment& env);

}  // namespace ccs

#endif  // CCS_PARSER_HPP
