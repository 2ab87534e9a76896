#include "hh/expr.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

namespace hh {

namespace {

ExprPtr make(Expr&& e) { return std::make_shared<const Expr>(std::move(e)); }

bool is_unary(ExprKind k) {
  return k == ExprKind::Neg || k == ExprKind::Exp || k == ExprKind::Log;
}

}  // namespace

ExprPtr Expr::number(double v) {
  if (!std::isfinite(v) || v < 0.0)
    throw InputError("expression literal must be finite and nonnegative");
  Expr e;
  e.kind = ExprKind::Num;
  e.num = v;
  return make(std::move(e));
}

ExprPtr Expr::constant(double v) {
  if (std::signbit(v)) return unary(ExprKind::Neg, number(-v));
  return number(v);
}

ExprPtr Expr::variable(char v) {
  if (v != 'r' && v != 's') throw InputError("expression variable must be r or s");
  Expr e;
  e.kind = ExprKind::Var;
  e.var = v;
  return make(std::move(e));
}

ExprPtr Expr::pi() {
  Expr e;
  e.kind = ExprKind::Pi;
  return make(std::move(e));
}

ExprPtr Expr::unary(ExprKind k, ExprPtr child) {
  if (!is_unary(k)) throw InputError("not a unary expression kind");
  if (!child) throw InputError("unary expression needs a child");
  Expr e;
  e.kind = k;
  e.a = std::move(child);
  return make(std::move(e));
}

ExprPtr Expr::binary(ExprKind k, ExprPtr lhs, ExprPtr rhs) {
  switch (k) {
    case ExprKind::Min:
    case ExprKind::Max:
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div:
    case ExprKind::Pow:
      break;
    default:
      throw InputError("not a binary expression kind");
  }
  if (!lhs || !rhs) throw InputError("binary expression needs two children");
  Expr e;
  e.kind = k;
  e.a = std::move(lhs);
  e.b = std::move(rhs);
  return make(std::move(e));
}

// ================================ lexer ==================================

namespace {

enum class Tok { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::size_t offset;
  double num = 0.0;
  std::string ident;
};

[[noreturn]] void fail(std::size_t offset, std::string msg, std::vector<std::string> expected) {
  throw ParseError(msg + " at byte " + std::to_string(offset), offset, std::move(expected));
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto digit = [&](std::size_t k) { return k < n && text[k] >= '0' && text[k] <= '9'; };
  while (i < n) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (digit(i) || (c == '.' && digit(i + 1))) {
      while (digit(i)) ++i;
      if (i < n && text[i] == '.') {
        ++i;
        while (digit(i)) ++i;
      }
      // consume an exponent only when it is complete; otherwise the 'e' is
      // left for the identifier lexer and rejected there
      if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < n && (text[j] == '+' || text[j] == '-')) ++j;
        if (digit(j)) {
          while (digit(j)) ++j;
          i = j;
        }
      }
      double value = 0.0;
      const auto [ptr, ec] =
          std::from_chars(text.data() + start, text.data() + i, value);
      if (ec != std::errc() || ptr != text.data() + i)
        fail(start, "malformed number", {"number"});
      out.push_back({Tok::Num, start, value, {}});
      continue;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      ++i;
      while (i < n && ((text[i] >= 'a' && text[i] <= 'z') ||
                       (text[i] >= 'A' && text[i] <= 'Z') ||
                       (text[i] >= '0' && text[i] <= '9') || text[i] == '_'))
        ++i;
      Token t{Tok::Ident, start, 0.0, std::string(text.substr(start, i - start))};
      out.push_back(std::move(t));
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      default:
        fail(start, std::string("unexpected character '") + c + "'", {});
    }
    out.push_back({k, start, 0.0, {}});
    ++i;
  }
  out.push_back({Tok::End, n, 0.0, {}});
  return out;
}

// ================================ parser =================================

class Parser {
 public:
  Parser(std::string_view text, bool allow_s)
      : toks_(lex(text)), allow_s_(allow_s) {}

  ExprPtr run() {
    ExprPtr e = sum();
    if (cur().kind != Tok::End)
      fail(cur().offset, "trailing input", {"end of input", "operator"});
    return e;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  void advance() { ++pos_; }

  std::vector<std::string> value_expected() const {
    std::vector<std::string> v{"number", "'('", "'-'", "'r'", "'pi'",
                               "'exp'", "'log'", "'min'", "'max'"};
    if (allow_s_) v.insert(v.begin() + 4, "'s'");
    return v;
  }

  ExprPtr sum() {
    ExprPtr e = product();
    while (cur().kind == Tok::Plus || cur().kind == Tok::Minus) {
      const ExprKind k = cur().kind == Tok::Plus ? ExprKind::Add : ExprKind::Sub;
      advance();
      e = Expr::binary(k, std::move(e), product());
    }
    return e;
  }

  ExprPtr product() {
    ExprPtr e = unary();
    while (cur().kind == Tok::Star || cur().kind == Tok::Slash) {
      const ExprKind k = cur().kind == Tok::Star ? ExprKind::Mul : ExprKind::Div;
      advance();
      e = Expr::binary(k, std::move(e), unary());
    }
    return e;
  }

  ExprPtr unary() {
    if (cur().kind == Tok::Minus) {
      advance();
      return Expr::unary(ExprKind::Neg, unary());
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (cur().kind == Tok::Caret) {
      advance();
      // right associative; the exponent may start with a unary minus
      return Expr::binary(ExprKind::Pow, std::move(base), unary());
    }
    return base;
  }

  ExprPtr call(ExprKind k, bool two_args, std::size_t name_offset) {
    if (cur().kind != Tok::LParen)
      fail(cur().offset, "expected '(' after function name", {"'('"});
    advance();
    ExprPtr first = sum();
    ExprPtr second;
    if (two_args) {
      if (cur().kind != Tok::Comma)
        fail(cur().offset, "expected ',' between arguments", {"','", "operator"});
      advance();
      second = sum();
    }
    if (cur().kind != Tok::RParen)
      fail(cur().offset, "expected ')'", {"')'", "operator"});
    advance();
    (void)name_offset;
    if (two_args) return Expr::binary(k, std::move(first), std::move(second));
    return Expr::unary(k, std::move(first));
  }

  ExprPtr atom() {
    const Token& t = cur();
    switch (t.kind) {
      case Tok::Num: {
        advance();
        return Expr::number(toks_[pos_ - 1].num);
      }
      case Tok::LParen: {
        advance();
        ExprPtr e = sum();
        if (cur().kind != Tok::RParen)
          fail(cur().offset, "expected ')'", {"')'", "operator"});
        advance();
        return e;
      }
      case Tok::Ident: {
        const std::string name = t.ident;
        const std::size_t off = t.offset;
        advance();
        if (name == "r") return Expr::variable('r');
        if (name == "s" && allow_s_) return Expr::variable('s');
        if (name == "pi") return Expr::pi();
        if (name == "exp") return call(ExprKind::Exp, false, off);
        if (name == "log") return call(ExprKind::Log, false, off);
        if (name == "min") return call(ExprKind::Min, true, off);
        if (name == "max") return call(ExprKind::Max, true, off);
        fail(off, "unknown identifier '" + name + "'", value_expected());
      }
      default:
        fail(t.offset, "expected a value", value_expected());
    }
  }

  std::vector<Token> toks_;
  bool allow_s_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text, true).run(); }

ExprPtr parse_expr_univariate(std::string_view text) {
  return Parser(text, false).run();
}

// ================================ printer ================================

namespace {

// precedence for printing: additive 1, multiplicative 2, unary minus 3,
// power 4, atoms (literals, variables, calls) 5
int prec(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul:
    case ExprKind::Div: return 2;
    case ExprKind::Neg: return 3;
    case ExprKind::Pow: return 4;
    default: return 5;
  }
}

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

void render(const Expr& e, std::string& out);

void child(const Expr& c, bool parens, std::string& out) {
  if (parens) {
    out += '(';
    render(c, out);
    out += ')';
  } else {
    render(c, out);
  }
}

void infix(const Expr& e, const char* op, std::string& out) {
  const int p = prec(e);
  // the right operand is the non-associative side, so an equal-precedence
  // child keeps its parentheses; a bare unary minus there is wrapped too
  child(*e.a, prec(*e.a) < p, out);
  out += op;
  child(*e.b, prec(*e.b) <= p || e.b->kind == ExprKind::Neg, out);
}

void render(const Expr& e, std::string& out) {
  switch (e.kind) {
    case ExprKind::Num: out += format_number(e.num); return;
    case ExprKind::Var: out += e.var; return;
    case ExprKind::Pi: out += "pi"; return;
    case ExprKind::Neg:
      out += '-';
      child(*e.a, prec(*e.a) < 3, out);
      return;
    case ExprKind::Exp:
    case ExprKind::Log:
      out += e.kind == ExprKind::Exp ? "exp(" : "log(";
      render(*e.a, out);
      out += ')';
      return;
    case ExprKind::Min:
    case ExprKind::Max:
      out += e.kind == ExprKind::Min ? "min(" : "max(";
      render(*e.a, out);
      out += ", ";
      render(*e.b, out);
      out += ')';
      return;
    case ExprKind::Add: infix(e, "+", out); return;
    case ExprKind::Sub: infix(e, "-", out); return;
    case ExprKind::Mul: infix(e, "*", out); return;
    case ExprKind::Div: infix(e, "/", out); return;
    case ExprKind::Pow:
      // the base must be an atom for '^' to rebind to it on re-parse; the
      // exponent may be a bare unary chain or another power
      child(*e.a, prec(*e.a) < 5, out);
      out += '^';
      child(*e.b, prec(*e.b) < 3, out);
      return;
  }
}

}  // namespace

std::string print_expr(const ExprPtr& e) {
  if (!e) throw InputError("cannot print a null expression");
  std::string out;
  render(*e, out);
  return out;
}

bool expr_equal(const ExprPtr& lhs, const ExprPtr& rhs) {
  if (lhs == rhs) return true;
  if (!lhs || !rhs) return false;
  if (lhs->kind != rhs->kind) return false;
  switch (lhs->kind) {
    case ExprKind::Num: return lhs->num == rhs->num;
    case ExprKind::Var: return lhs->var == rhs->var;
    case ExprKind::Pi: return true;
    default:
      if (!expr_equal(lhs->a, rhs->a)) return false;
      return expr_equal(lhs->b, rhs->b);
  }
}

ExprPtr transpose_expr(const ExprPtr& e) {
  if (!e) throw InputError("cannot transpose a null expression");
  switch (e->kind) {
    case ExprKind::Num:
    case ExprKind::Pi:
      return e;
    case ExprKind::Var:
      return Expr::variable(e->var == 'r' ? 's' : 'r');
    default: {
      ExprPtr a = transpose_expr(e->a);
      if (e->b) return Expr::binary(e->kind, std::move(a), transpose_expr(e->b));
      return Expr::unary(e->kind, std::move(a));
    }
  }
}

// ================================== eval =================================

namespace {

[[noreturn]] void domain(const char* what, double r) { throw EvalError(what, r); }

double eval_node(const Expr& e, double r, double s) {
  switch (e.kind) {
    case ExprKind::Num: return e.num;
    case ExprKind::Var: return e.var == 'r' ? r : s;
    case ExprKind::Pi: return std::numbers::pi_v<double>;
    case ExprKind::Neg: return -eval_node(*e.a, r, s);
    case ExprKind::Exp: return std::exp(eval_node(*e.a, r, s));
    case ExprKind::Log: {
      const double x = eval_node(*e.a, r, s);
      if (!(x > 0.0)) domain("log of a nonpositive value", r);
      return std::log(x);
    }
    case ExprKind::Min: return std::fmin(eval_node(*e.a, r, s), eval_node(*e.b, r, s));
    case ExprKind::Max: return std::fmax(eval_node(*e.a, r, s), eval_node(*e.b, r, s));
    case ExprKind::Add: return eval_node(*e.a, r, s) + eval_node(*e.b, r, s);
    case ExprKind::Sub: return eval_node(*e.a, r, s) - eval_node(*e.b, r, s);
    case ExprKind::Mul: return eval_node(*e.a, r, s) * eval_node(*e.b, r, s);
    case ExprKind::Div: return eval_node(*e.a, r, s) / eval_node(*e.b, r, s);
    case ExprKind::Pow: {
      const double base = eval_node(*e.a, r, s);
      const double ex = eval_node(*e.b, r, s);
      if (base < 0.0 && ex != std::trunc(ex))
        domain("fractional power of a negative base", r);
      return std::pow(base, ex);
    }
  }
  domain("corrupt expression node", r);
}

}  // namespace

double eval_expr(const ExprPtr& e, double r, double s) {
  if (!e) throw InputError("cannot evaluate a null expression");
  const double v = eval_node(*e, r, s);
  if (std::isnan(v)) throw EvalError("expression evaluated to NaN", r);
  return v;
}

}  // namespace hh
