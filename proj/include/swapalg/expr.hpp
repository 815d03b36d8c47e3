#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "swapalg/fraction.hpp"
#include "swapalg/point.hpp"
#include "swapalg/rank.hpp"

namespace swapalg {

/// Expression tree over Q_n(P).
///
/// Grammar (left-associative):
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-' factor | atom ('^' nat)?
///   atom   := nat | pair | det | ratio | cross | '(' expr ')'
///   pair   := name '.' name
///   det    := 'det' '(' list ';' list ')'
///   ratio  := 'E' '(' list ';' name ',' name (';' list)? ')'
///   cross  := 'cf' '(' name ',' name ',' name ',' name ')'
///   list   := '[' name (',' name)* ']'
///   name   := 'a' nat ('_' nat)?
struct Expr {
  enum class Kind { Number, Pair, Det, Ratio, Cross, Add, Sub, Mul, Div, Pow, Neg };

  Kind kind = Kind::Number;
  Rational number;
  /// Pair: (x, y). Det: rows then columns. Ratio: left, t, y, then the optional right tuple.
  /// Cross: (x, y, z, t).
  std::vector<Point> points;
  /// Det: number of rows. Ratio: size of the left tuple.
  std::size_t split = 0;
  bool has_right = false;
  unsigned exponent = 0;
  std::vector<std::shared_ptr<const Expr>> children;

  friend bool operator==(const Expr& a, const Expr& b);
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Throws ParseError with the byte offset of the problem, or InvalidInput for unknown points.
ExprPtr parse_expr(std::string_view text, const PointSet& points);

/// Text that parses back to an equal tree; parentheses only where precedence needs them.
std::string render(const Expr& e);

/// Evaluates in Q_n(P); division and E certify their denominators under ctx.
FractionElement evaluate(const Expr& e, const RankContext& ctx);

}  // namespace swapalg
