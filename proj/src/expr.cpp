#include "swapalg/expr.hpp"

#include <cctype>

#include "swapalg/errors.hpp"

namespace swapalg {

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.number != b.number || a.points != b.points || a.split != b.split ||
      a.has_right != b.has_right || a.exponent != b.exponent || a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.children.size(); ++k) {
    if (!(*a.children[k] == *b.children[k])) return false;
  }
  return true;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const PointSet& points) : text_(text), points_(points) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t after = pos_ + word.size();
    return after < text_.size() && text_[after] == '(';
  }

  static ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

  static ExprPtr binary(Expr::Kind kind, ExprPtr l, ExprPtr r) {
    Expr e;
    e.kind = kind;
    e.children = {std::move(l), std::move(r)};
    return make(std::move(e));
  }

  ExprPtr expr() {
    ExprPtr left = term();
    while (true) {
      if (accept('+')) {
        left = binary(Expr::Kind::Add, left, term());
      } else if (accept('-')) {
        left = binary(Expr::Kind::Sub, left, term());
      } else {
        return left;
      }
    }
  }

  ExprPtr term() {
    ExprPtr left = factor();
    while (true) {
      if (accept('*')) {
        left = binary(Expr::Kind::Mul, left, factor());
      } else if (accept('/')) {
        left = binary(Expr::Kind::Div, left, factor());
      } else {
        return left;
      }
    }
  }

  ExprPtr factor() {
    if (accept('-')) {
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.children = {factor()};
      return make(std::move(e));
    }
    ExprPtr base = atom();
    if (accept('^')) {
      Expr e;
      e.kind = Expr::Kind::Pow;
      skip_space();
      e.exponent = static_cast<unsigned>(natural());
      e.children = {base};
      return make(std::move(e));
    }
    return base;
  }

  unsigned long natural() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 9) {
      pos_ = start;
      fail("number too large");
    }
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  Point name() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || text_[pos_] != 'a') fail("expected a point name");
    ++pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    std::string_view word = text_.substr(start, pos_ - start);
    if (!Point::from_name(word)) {
      pos_ = start;
      fail("malformed point name '" + std::string(word) + "'");
    }
    return points_.resolve(word);
  }

  std::vector<Point> list() {
    expect('[');
    std::vector<Point> out{name()};
    while (accept(',')) out.push_back(name());
    expect(']');
    return out;
  }

  ExprPtr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (accept('(')) {
      ExprPtr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e;
      e.kind = Expr::Kind::Number;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      e.number = parse_rational(std::string(text_.substr(start, pos_ - start)));
      return make(std::move(e));
    }
    if (peek_word("det")) {
      pos_ += 3;
      expect('(');
      Expr e;
      e.kind = Expr::Kind::Det;
      std::vector<Point> rows = list();
      expect(';');
      std::vector<Point> cols = list();
      expect(')');
      if (rows.size() != cols.size()) fail("det needs equally many rows and columns");
      e.split = rows.size();
      e.points = rows;
      e.points.insert(e.points.end(), cols.begin(), cols.end());
      return make(std::move(e));
    }
    if (peek_word("E")) {
      pos_ += 1;
      expect('(');
      Expr e;
      e.kind = Expr::Kind::Ratio;
      e.points = list();
      e.split = e.points.size();
      expect(';');
      e.points.push_back(name());
      expect(',');
      e.points.push_back(name());
      if (accept(';')) {
        std::vector<Point> right = list();
        e.points.insert(e.points.end(), right.begin(), right.end());
        e.has_right = true;
      }
      expect(')');
      return make(std::move(e));
    }
    if (peek_word("cf")) {
      pos_ += 2;
      expect('(');
      Expr e;
      e.kind = Expr::Kind::Cross;
      e.points.push_back(name());
      for (int k = 0; k < 3; ++k) {
        expect(',');
        e.points.push_back(name());
      }
      expect(')');
      return make(std::move(e));
    }
    if (c == 'a') {
      Expr e;
      e.kind = Expr::Kind::Pair;
      e.points.push_back(name());
      expect('.');
      e.points.push_back(name());
      return make(std::move(e));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const PointSet& points_;
  std::size_t pos_ = 0;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string join(const std::vector<Point>& pts, std::size_t from, std::size_t to) {
  std::string out = "[";
  for (std::size_t k = from; k < to; ++k) {
    if (k > from) out += ",";
    out += pts[k].name();
  }
  return out + "]";
}

std::string render_at(const Expr& e, int min_precedence) {
  std::string out;
  switch (e.kind) {
    case Expr::Kind::Number:
      out = e.number.get_str();
      break;
    case Expr::Kind::Pair:
      out = e.points[0].name() + "." + e.points[1].name();
      break;
    case Expr::Kind::Det:
      out = "det(" + join(e.points, 0, e.split) + ";" + join(e.points, e.split, e.points.size()) + ")";
      break;
    case Expr::Kind::Ratio:
      out = "E(" + join(e.points, 0, e.split) + "; " + e.points[e.split].name() + ", " + e.points[e.split + 1].name();
      if (e.has_right) out += "; " + join(e.points, e.split + 2, e.points.size());
      out += ")";
      break;
    case Expr::Kind::Cross:
      out = "cf(" + e.points[0].name() + "," + e.points[1].name() + "," + e.points[2].name() + "," + e.points[3].name() + ")";
      break;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      out = render_at(*e.children[0], 1) + (e.kind == Expr::Kind::Add ? " + " : " - ") + render_at(*e.children[1], 2);
      break;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      out = render_at(*e.children[0], 2) + (e.kind == Expr::Kind::Mul ? " * " : " / ") + render_at(*e.children[1], 3);
      break;
    case Expr::Kind::Neg:
      out = "-" + render_at(*e.children[0], 3);
      break;
    case Expr::Kind::Pow:
      out = render_at(*e.children[0], 5) + "^" + std::to_string(e.exponent);
      break;
  }
  return precedence(e.kind) < min_precedence ? "(" + out + ")" : out;
}

}  // namespace

ExprPtr parse_expr(std::string_view text, const PointSet& points) { return Parser(text, points).parse(); }

std::string render(const Expr& e) { return render_at(e, 0); }

FractionElement evaluate(const Expr& e, const RankContext& ctx) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return FractionElement::constant(e.number);
    case Expr::Kind::Pair:
      return FractionElement::from_poly(gen(e.points[0], e.points[1]));
    case Expr::Kind::Det: {
      std::span<const Point> all(e.points);
      return FractionElement::from_poly(determinant(all.subspan(0, e.split), all.subspan(e.split)));
    }
    case Expr::Kind::Ratio: {
      std::span<const Point> all(e.points);
      std::optional<std::vector<Point>> right;
      if (e.has_right) right = std::vector<Point>(e.points.begin() + static_cast<std::ptrdiff_t>(e.split + 2), e.points.end());
      return det_ratio(all.subspan(0, e.split), e.points[e.split], e.points[e.split + 1], ctx, right).realized;
    }
    case Expr::Kind::Cross:
      return cross_fraction(e.points[0], e.points[1], e.points[2], e.points[3]);
    case Expr::Kind::Add:
      return evaluate(*e.children[0], ctx) + evaluate(*e.children[1], ctx);
    case Expr::Kind::Sub:
      return evaluate(*e.children[0], ctx) - evaluate(*e.children[1], ctx);
    case Expr::Kind::Mul:
      return evaluate(*e.children[0], ctx) * evaluate(*e.children[1], ctx);
    case Expr::Kind::Div:
      return divide(evaluate(*e.children[0], ctx), evaluate(*e.children[1], ctx), ctx);
    case Expr::Kind::Neg:
      return -evaluate(*e.children[0], ctx);
    case Expr::Kind::Pow: {
      FractionElement base = evaluate(*e.children[0], ctx);
      FractionElement out = FractionElement::constant(1);
      for (unsigned k = 0; k < e.exponent; ++k) out = out * base;
      return out;
    }
  }
  throw InvalidInput("unknown expression node");
}

}  // namespace swapalg
