#include "wavesets/setexpr.hpp"

#include <cctype>

namespace wavesets {

ParseError::ParseError(const std::string& what, int line, int column, std::string token)
    : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column) +
                         (token.empty() ? std::string(" (end of input)") : " near '" + token + "'")),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

namespace {

enum class Tok { kLBrack, kLParen, kRParen, kComma, kSemi, kBar, kPlus, kStar, kCaret, kMinus, kSlash, kNumber, kIdent, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l0 = line;
    const int c0 = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::kNumber, std::string(s.substr(i, j - i)), l0, c0});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
      std::string word(s.substr(i, j - i));
      // "xpi"-style run-ons are not words of the grammar; split a leading product sign.
      if (word.size() > 1 && word[0] == 'x' && word != "x") {
        out.push_back({Tok::kIdent, "x", l0, c0});
        advance(1);
        continue;
      }
      out.push_back({Tok::kIdent, word, l0, c0});
      advance(j - i);
      continue;
    }
    Tok k;
    switch (c) {
      case '[':
        k = Tok::kLBrack;
        break;
      case '(':
        k = Tok::kLParen;
        break;
      case ')':
        k = Tok::kRParen;
        break;
      case ',':
        k = Tok::kComma;
        break;
      case ';':
        k = Tok::kSemi;
        break;
      case '|':
        k = Tok::kBar;
        break;
      case '+':
        k = Tok::kPlus;
        break;
      case '*':
        k = Tok::kStar;
        break;
      case '^':
        k = Tok::kCaret;
        break;
      case '-':
        k = Tok::kMinus;
        break;
      case '/':
        k = Tok::kSlash;
        break;
      default:
        throw ParseError("unexpected character", l0, c0, std::string(1, c));
    }
    out.push_back({k, std::string(1, c), l0, c0});
    advance(1);
  }
  out.push_back({Tok::kEnd, "", line, col});
  return out;
}

template <class R>
class Parser {
 public:
  static constexpr int D = R::kDim;
  using Set = ExtendedSet<R>;
  using P = Point<D>;

  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Set parse_all() {
    Set s = parse_union();
    expect(Tok::kEnd, "trailing input");
    return s;
  }

  PiRational parse_pirat_all() {
    PiRational v = pirat();
    expect(Tok::kEnd, "trailing input");
    return v;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(const std::string& what, const Token& t) const {
    throw ParseError(what, t.line, t.column, t.text);
  }
  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail(what, peek());
    return take();
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    take();
    return true;
  }
  bool accept_ident(std::string_view w) {
    if (peek().kind != Tok::kIdent || peek().text != w) return false;
    take();
    return true;
  }

  long integer() {
    const bool neg = accept(Tok::kMinus);
    const Token& t = expect(Tok::kNumber, "expected an integer");
    Integer z(t.text);
    if (neg) z = -z;
    if (!z.fits_slong_p()) fail("integer out of range", t);
    return z.get_si();
  }

  PiRational pirat() {
    const bool neg = accept(Tok::kMinus);
    Rational q;
    if (accept_ident("pi")) {
      q = 1;
    } else {
      const Token& num = expect(Tok::kNumber, "expected a pi-rational");
      Integer n(num.text);
      Integer d(1);
      if (accept(Tok::kSlash)) {
        const Token& den = expect(Tok::kNumber, "expected a denominator");
        d = Integer(den.text);
        if (d == 0) fail("zero denominator", den);
      }
      if (!accept_ident("pi")) {
        if (n == 0 && d == 1) return PiRational();
        fail("expected 'pi' after the coefficient", peek());
      }
      q = Rational(n, d);
      q.canonicalize();
    }
    if (neg) q = -q;
    return PiRational(q);
  }

  P point() {
    if constexpr (D == 1) {
      return P{pirat()};
    } else {
      expect(Tok::kLParen, "expected '(' to open a point");
      P p;
      p[0] = pirat();
      expect(Tok::kComma, "expected ','");
      p[1] = pirat();
      expect(Tok::kRParen, "expected ')' to close a point");
      return p;
    }
  }

  std::pair<PiRational, PiRational> interval() {
    const Token& open = expect(Tok::kLBrack, "expected '['");
    PiRational a = pirat();
    expect(Tok::kComma, "expected ','");
    PiRational b = pirat();
    expect(Tok::kRParen, "expected ')' (intervals are half-open)");
    if (!(a < b)) fail("empty or reversed interval", open);
    return {a, b};
  }

  Set parse_union() {
    Set s = term();
    while (accept(Tok::kBar)) s = s | term();
    return s;
  }

  Set term() {
    long k = 0;
    if (peek().kind == Tok::kNumber && peek(1).kind == Tok::kCaret) {
      if (peek().text != "2") fail("only powers of 2 may scale a set", peek());
      take();
      take();
      k = integer();
      expect(Tok::kStar, "expected '*' after the power of two");
    }
    Set a = atom();
    if (k != 0) a = a.dilated(k);
    while (accept(Tok::kPlus)) a = a.translated(point());
    return a;
  }

  Set atom() {
    const Token& t = peek();
    if (t.kind == Tok::kLBrack) {
      auto [x0, x1] = interval();
      if constexpr (D == 1) {
        return Set(R::box(P{x0}, P{x1}));
      } else {
        if (!accept_ident("x")) fail("expected 'x' between the factors of a box", peek());
        auto [y0, y1] = interval();
        return Set(R::box(P{x0, y0}, P{x1, y1}));
      }
    }
    if (accept(Tok::kLParen)) {
      Set s = parse_union();
      expect(Tok::kRParen, "expected ')'");
      return s;
    }
    if (accept_ident("empty")) return Set();
    if (accept_ident("tail")) {
      expect(Tok::kLParen, "expected '(' after tail");
      const long lam = integer();
      expect(Tok::kSemi, "expected ';'");
      P c = point();
      expect(Tok::kSemi, "expected ';'");
      const long level = integer();
      expect(Tok::kSemi, "expected ';'");
      const Token& at = peek();
      Set base = parse_union();
      expect(Tok::kRParen, "expected ')' to close tail");
      if (!base.is_finite()) fail("tail base must be finite", at);
      try {
        return Set::from_parts(R(), {Germ<R>{c, lam, level, base.finite()}});
      } catch (const DomainError& e) {
        fail(std::string("invalid tail: ") + e.what(), t);
      }
    }
    fail("expected a set", t);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string format_point(const Point<1>& p) { return p[0].str(); }
std::string format_point(const Point<2>& p) { return "(" + p[0].str() + ", " + p[1].str() + ")"; }

template <class R>
std::vector<std::string> region_terms(const R& s) {
  std::vector<std::string> out;
  for (const auto& [lo, hi] : s.boxes()) {
    std::string t = "[" + lo[0].str() + ", " + hi[0].str() + ")";
    if constexpr (R::kDim == 2) t += " x [" + lo[1].str() + ", " + hi[1].str() + ")";
    out.push_back(std::move(t));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  if (parts.empty()) return "empty";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " | ";
    out += parts[i];
  }
  return out;
}

template <class R>
std::string format_ext(const ExtendedSet<R>& s) {
  auto parts = region_terms(s.finite());
  for (const auto& g : s.germs()) {
    parts.push_back("tail(" + std::to_string(g.lambda) + "; " + format_point(g.center) + "; " +
                    std::to_string(g.level) + "; " + join(region_terms(g.base)) + ")");
  }
  return join(parts);
}

}  // namespace

ExtSet parse_set(std::string_view text) { return Parser<IntervalSet>(text).parse_all(); }
ExtBoxSet parse_box_set(std::string_view text) { return Parser<BoxSet>(text).parse_all(); }
PiRational parse_pirat(std::string_view text) { return Parser<IntervalSet>(text).parse_pirat_all(); }

std::string format_set(const ExtSet& s) { return format_ext(s); }
std::string format_set(const ExtBoxSet& s) { return format_ext(s); }
std::string format_region(const IntervalSet& s) { return join(region_terms(s)); }
std::string format_region(const BoxSet& s) { return join(region_terms(s)); }

}  // namespace wavesets
