#pragma once

// Text syntax for elements:
//
//   expr := term (('+' | '-') term)*
//   term := INT | 'pi' '(' NAT ')' | 'om' '(' NAT ')'
//         | 't' '[' expr ',' expr ']' | '-' term | INT '*' term | '(' expr ')'
//
// INT '*' term is the group multiple (repeated addition), never the
// nearring product. Whitespace is ignored.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nrt/element.hpp"

namespace nrt {

struct ExprNode {
  enum class Kind { Integer, Pi, Omega, Stable, Negate, Scale, Sum };

  Kind kind = Kind::Integer;
  /// Integer literal, pi/om index, or Scale factor.
  std::int64_t value = 0;
  /// Stable: {alpha, beta}; Negate and Scale: {operand}; Sum: the summands.
  std::vector<ExprNode> children;
  /// Sum only: +1 or -1 per summand.
  std::vector<int> signs;
  std::size_t position = 0;
};

/// Throws SyntaxError, or Error(WrongVariant) for atoms the variant lacks.
ExprNode parse_expr(std::string_view text, Variant v);
Element elaborate(const ExprNode& ast, Variant v);
Element parse_element(std::string_view text, Variant v);

/// Canonical text; parse_element(render(e), v) == e.
std::string render(const Element& e);

}  // namespace nrt
