#include "expr.hpp"

#include <cctype>

namespace pommiez::cli {

namespace {

struct Token {
  enum Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= src_.size()) {
      tok_ = {Token::End, "", start};
      return;
    }
    char c = src_[pos_];
    auto single = [&](Token::Kind k) {
      ++pos_;
      tok_ = {k, std::string(1, c), start};
    };
    switch (c) {
      case '+': return single(Token::Plus);
      case '-': return single(Token::Minus);
      case '*': return single(Token::Star);
      case '/': return single(Token::Slash);
      case '^': return single(Token::Caret);
      case '(': return single(Token::LParen);
      case ')': return single(Token::RParen);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      tok_ = {Token::Number, src_.substr(start, pos_ - start), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() &&
             std::isalnum(static_cast<unsigned char>(src_[pos_])))
        ++pos_;
      tok_ = {Token::Ident, src_.substr(start, pos_ - start), start};
      return;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  Token tok_{Token::End, "", 0};
};

// A + g0*B while parsing; g0 enters only linearly.
struct Value {
  RationalFunction a, b;
  bool has_g0() const { return !b.is_zero(); }
};

class Parser {
 public:
  Parser(const std::string& src, char variable, bool allow_g0)
      : lex_(src), variable_(variable), allow_g0_(allow_g0) {}

  Value parse() {
    Value v = expression();
    const Token& t = lex_.peek();
    if (t.kind != Token::End) throw ParseError("trailing input '" + t.text + "'", t.pos);
    return v;
  }

 private:
  Value expression() {
    Value acc = term();
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Token::Plus) {
        lex_.take();
        Value rhs = term();
        acc = {acc.a + rhs.a, acc.b + rhs.b};
      } else if (t.kind == Token::Minus) {
        lex_.take();
        Value rhs = term();
        acc = {acc.a - rhs.a, acc.b - rhs.b};
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = factor();
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Token::Star) {
        std::size_t pos = lex_.take().pos;
        acc = multiply(acc, factor(), pos);
      } else if (t.kind == Token::Slash) {
        std::size_t pos = lex_.take().pos;
        acc = divide(acc, factor(), pos);
      } else {
        return acc;
      }
    }
  }

  Value factor() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Minus) {
      lex_.take();
      Value v = factor();
      return {-v.a, -v.b};
    }
    return power();
  }

  Value power() {
    Value base = primary();
    while (lex_.peek().kind == Token::Caret) {
      std::size_t pos = lex_.take().pos;
      const Token& e = lex_.peek();
      if (e.kind != Token::Number)
        throw ParseError("exponent must be a nonnegative integer", e.pos);
      long exp = std::stol(lex_.take().text);
      Value acc{RationalFunction(Polynomial::one()), RationalFunction()};
      for (long j = 0; j < exp; ++j) acc = multiply(acc, base, pos);
      base = acc;
    }
    return base;
  }

  Value primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Number: {
        Polynomial c(GaussianRational(mpq_class(t.text)));
        return {RationalFunction(c), RationalFunction()};
      }
      case Token::Ident: {
        if (t.text == "i")
          return {RationalFunction(Polynomial(GaussianRational::i())), RationalFunction()};
        if (t.text.size() == 1 && t.text[0] == variable_)
          return {RationalFunction(Polynomial::variable()), RationalFunction()};
        if (t.text == "g0") {
          if (!allow_g0_) throw ParseError("g0 is not allowed in this expression", t.pos);
          return {RationalFunction(), RationalFunction(Polynomial::one())};
        }
        throw ParseError("unknown symbol '" + t.text + "'", t.pos);
      }
      case Token::LParen: {
        Value v = expression();
        const Token& close = lex_.peek();
        if (close.kind != Token::RParen) throw ParseError("expected ')'", close.pos);
        lex_.take();
        return v;
      }
      default:
        throw ParseError("expected a value", t.pos);
    }
  }

  static Value multiply(const Value& x, const Value& y, std::size_t pos) {
    if (x.has_g0() && y.has_g0())
      throw ParseError("g0 may appear only as a linear factor", pos);
    if (x.has_g0()) return {x.a * y.a, x.b * y.a};
    return {x.a * y.a, x.a * y.b};
  }

  static Value divide(const Value& x, const Value& y, std::size_t pos) {
    if (y.has_g0()) throw ParseError("g0 may not appear in a denominator", pos);
    if (y.a.is_zero()) throw ParseError("division by zero", pos);
    return {x.a / y.a, x.b / y.a};
  }

  Lexer lex_;
  char variable_;
  bool allow_g0_;
};

bool needs_parens(const std::string& s) {
  if (s.empty()) return false;
  if (s[0] == '-') return true;
  return s.find('+') != std::string::npos || s.find('-', 1) != std::string::npos ||
         s.find('*') != std::string::npos;
}

}  // namespace

Holo parse_function(const std::string& src, const ContextPtr& ctx) {
  Value v = Parser(src, 'z', true).parse();
  return make_holo(ctx, v.a, v.b);
}

RationalFunction parse_rational_expr(const std::string& src, char variable) {
  return Parser(src, variable, false).parse().a;
}

GaussianRational parse_scalar(const std::string& src) {
  RationalFunction r = parse_rational_expr(src, 'z');
  if (!r.is_polynomial() || !r.num().is_constant())
    throw ParseError("expected a scalar constant", 0);
  return r.num().coeff(0);
}

std::string print_polynomial(const Polynomial& p, char variable) {
  if (p.is_zero()) return "0";
  std::string out;
  const std::string var(1, variable);
  for (int k = p.degree(); k >= 0; --k) {
    GaussianRational c = p.coeff(k);
    if (c.is_zero()) continue;
    std::string sep;
    if (!out.empty()) {
      if (c.is_real() && c.re() < 0) {
        sep = " - ";
        c = -c;
      } else {
        sep = " + ";
      }
    }
    std::string cs = to_string(c);
    std::string body;
    if (k == 0) {
      body = needs_parens(cs) && !out.empty() ? "(" + cs + ")" : cs;
    } else {
      std::string head;
      if (cs == "1") {
        head = "";
      } else if (cs == "-1" && out.empty()) {
        head = "-";
      } else {
        head = (needs_parens(cs) && !(out.empty() && c.is_real()) ? "(" + cs + ")" : cs) + "*";
      }
      body = head + (k == 1 ? var : var + "^" + std::to_string(k));
    }
    out += sep + body;
  }
  return out;
}

std::string print_polynomial_factored(const Polynomial& p) {
  if (p.is_one()) return "1";
  if (p.is_zero() || !p.eval(GaussianRational()).is_one())
    throw DomainError("factored print: polynomial must satisfy p(0) = 1");
  std::string out;
  for (const auto& [root, mult] : linear_roots_checked(p, "factored print")) {
    std::string rs = to_string(root);
    std::string factor = rs == "1" ? "(1-z)" : "(1-z/" + (needs_parens(rs) ? "(" + rs + ")" : rs) + ")";
    if (mult > 1) factor += "^" + std::to_string(mult);
    if (!out.empty()) out += "*";
    out += factor;
  }
  return out;
}

std::string print_rational(const RationalFunction& r, char variable) {
  if (r.is_polynomial()) return print_polynomial(r.num(), variable);
  return "(" + print_polynomial(r.num(), variable) + ")/(" + print_polynomial(r.den(), variable) +
         ")";
}

std::string print_function(const Holo& f) {
  if (std::holds_alternative<GMultiple>(f))
    return "g0*(" + print_rational(std::get<GMultiple>(f).R()) + ")";
  const SymFunction& s = std::get<SymFunction>(f);
  return print_rational(s.A()) + " + g0*(" + print_rational(s.B()) + ")";
}

}  // namespace pommiez::cli
