#include <cctype>
#include <optional>

#include "joinlink/mixed_poly.hpp"

namespace jl {

namespace {

enum class Tok { Nat, Var, VarBar, Conj, Imag, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string num;  // Nat digits or Var/VarBar index digits
  int line, col;
};

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  int line = 1, col = 1;
  std::vector<Token> tokens;

  explicit Lexer(const std::string& s) : src(s) { run(); }

  [[noreturn]] void err(int l, int c, const std::string& msg) {
    fail(errcode::syntax, "line " + std::to_string(l) + ", col " + std::to_string(c) + ": " + msg);
  }

  void advance() {
    if (src[pos] == '\n') {
      line++;
      col = 1;
    } else {
      col++;
    }
    pos++;
  }

  std::string digits() {
    std::string d;
    while (pos < src.size() && isdigit(static_cast<unsigned char>(src[pos]))) {
      d += src[pos];
      advance();
    }
    return d;
  }

  void run() {
    while (pos < src.size()) {
      char ch = src[pos];
      int l = line, c = col;
      if (isspace(static_cast<unsigned char>(ch))) {
        advance();
        continue;
      }
      if (isdigit(static_cast<unsigned char>(ch))) {
        tokens.push_back({Tok::Nat, digits(), l, c});
        continue;
      }
      if (ch == 'z') {
        advance();
        bool bar = pos < src.size() && src[pos] == 'b';
        if (bar) advance();
        std::string d = digits();
        if (d.empty()) err(l, c, bar ? "expected variable index after 'zb'" : "expected variable index after 'z'");
        tokens.push_back({bar ? Tok::VarBar : Tok::Var, d, l, c});
        continue;
      }
      if (ch == 'c') {
        if (src.compare(pos, 4, "conj") == 0) {
          pos += 4;
          col += 4;
          tokens.push_back({Tok::Conj, "", l, c});
          continue;
        }
        err(l, c, "unexpected character 'c'");
      }
      if (ch == 'i') {
        advance();
        tokens.push_back({Tok::Imag, "", l, c});
        continue;
      }
      Tok k;
      switch (ch) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '^': k = Tok::Caret; break;
        case '/': k = Tok::Slash; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default:
          err(l, c, std::string("unexpected character '") + ch + "'");
      }
      advance();
      tokens.push_back({k, "", l, c});
    }
    tokens.push_back({Tok::End, "", line, col});
  }
};

struct Parser {
  const std::vector<Token>& toks;
  size_t pos = 0;
  int n;

  Parser(const std::vector<Token>& t, int nvars) : toks(t), n(nvars) {}

  const Token& peek() const { return toks[pos]; }

  [[noreturn]] void err(const Token& t, const std::string& msg) {
    fail(errcode::syntax,
         "line " + std::to_string(t.line) + ", col " + std::to_string(t.col) + ": " + msg);
  }

  Token expect(Tok k, const char* what) {
    if (peek().kind != k) err(peek(), std::string("expected ") + what);
    return toks[pos++];
  }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    pos++;
    return true;
  }

  long natural(const char* what) {
    Token t = expect(Tok::Nat, what);
    if (t.num.size() > 18) err(t, "number too large");
    return std::stol(t.num);
  }

  // rational := integer ('/' positive-integer)?   (sign handled by caller flag)
  mpq_class rational(bool allow_sign) {
    bool neg = false;
    if (allow_sign) {
      if (accept(Tok::Minus))
        neg = true;
      else
        accept(Tok::Plus);
    }
    Token t = expect(Tok::Nat, "number");
    mpz_class num(t.num);
    mpz_class den(1);
    if (accept(Tok::Slash)) {
      Token d = expect(Tok::Nat, "denominator");
      den = mpz_class(d.num);
      if (den == 0) err(d, "zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    if (neg) q = -q;
    return q;
  }

  // Tries '(' rational ('+'|'-') rational 'i' ')'; backtracks on mismatch.
  std::optional<GaussianRational> try_complex_coeff() {
    size_t save = pos;
    if (!accept(Tok::LParen)) return std::nullopt;
    try {
      mpq_class re = rational(true);
      bool minus;
      if (accept(Tok::Plus))
        minus = false;
      else if (accept(Tok::Minus))
        minus = true;
      else {
        pos = save;
        return std::nullopt;
      }
      mpq_class im = rational(true);
      if (!accept(Tok::Imag) || !accept(Tok::RParen)) {
        pos = save;
        return std::nullopt;
      }
      if (minus) im = -im;
      return GaussianRational(re, im);
    } catch (const Error&) {
      pos = save;
      return std::nullopt;
    }
  }

  MixedPolynomial base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Var:
      case Tok::VarBar: {
        pos++;
        if (t.num.size() > 9) err(t, "variable index too large");
        long idx = std::stol(t.num);
        if (idx == 0) err(t, "variable index 0 (indices start at 1)");
        if (idx > n) err(t, "variable index " + t.num + " exceeds variable count " + std::to_string(n));
        return MixedPolynomial::variable(n, static_cast<int>(idx), t.kind == Tok::VarBar);
      }
      case Tok::Conj: {
        pos++;
        expect(Tok::LParen, "'(' after conj");
        MixedPolynomial e = expr();
        expect(Tok::RParen, "')'");
        return e.conjugate();
      }
      case Tok::LParen: {
        if (auto c = try_complex_coeff()) return MixedPolynomial::constant(n, *c);
        pos++;
        MixedPolynomial e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Nat: {
        mpq_class q = rational(false);
        if (accept(Tok::Imag)) return MixedPolynomial::constant(n, GaussianRational(mpq_class(0), q));
        return MixedPolynomial::constant(n, GaussianRational(q, mpq_class(0)));
      }
      case Tok::Imag:
        // Bare 'i' accepted as the unit imaginary coefficient.
        pos++;
        return MixedPolynomial::constant(n, GaussianRational(mpq_class(0), mpq_class(1)));
      default:
        err(t, "expected a variable, number, 'conj', or '('");
    }
  }

  MixedPolynomial factor() {
    MixedPolynomial b = base();
    if (accept(Tok::Caret)) {
      long e = natural("exponent");
      return b.pow(e);
    }
    return b;
  }

  MixedPolynomial term() {
    MixedPolynomial f = factor();
    while (accept(Tok::Star)) f = f * factor();
    return f;
  }

  MixedPolynomial expr() {
    bool neg = false;
    if (accept(Tok::Minus))
      neg = true;
    else
      accept(Tok::Plus);
    MixedPolynomial acc = term();
    if (neg) acc = MixedPolynomial(n) - acc;
    for (;;) {
      if (accept(Tok::Plus))
        acc = acc + term();
      else if (accept(Tok::Minus))
        acc = acc - term();
      else
        return acc;
    }
  }
};

}  // namespace

MixedPolynomial parse_poly(const std::string& source, int declared_n) {
  if (declared_n < 0) fail(errcode::domain, "negative variable count");
  Lexer lex(source);
  int n = declared_n;
  if (n == 0) {
    long max_index = 1;
    for (const auto& t : lex.tokens) {
      if (t.kind != Tok::Var && t.kind != Tok::VarBar) continue;
      if (t.num.size() > 9)
        fail(errcode::syntax, "line " + std::to_string(t.line) + ", col " +
                                  std::to_string(t.col) + ": variable index too large");
      max_index = std::max(max_index, std::stol(t.num));
    }
    n = static_cast<int>(max_index);
  }
  Parser p(lex.tokens, n);
  MixedPolynomial result = p.expr();
  if (p.peek().kind != Tok::End) p.err(p.peek(), "unexpected trailing input");
  return result;
}

}  // namespace jl
