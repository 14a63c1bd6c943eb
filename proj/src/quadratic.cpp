#include "ipword/quadratic.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace ipword {

namespace {

bool is_square(std::int64_t d) {
  if (d < 0) return false;
  BigInt v(d);
  BigInt r = boost::multiprecision::sqrt(v);
  BigInt rr = r * r;
  return rr == v;
}

// Floor division with b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace

QuadraticReal::QuadraticReal(Rational a, Rational b, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (b_ == 0) {
    d_ = 0;
    return;
  }
  if (d_ < 2 || is_square(d_)) {
    throw std::invalid_argument("QuadraticReal: radicand must be a non-square integer >= 2");
  }
}

QuadraticReal QuadraticReal::from_rational(Rational a) {
  QuadraticReal q;
  q.a_ = std::move(a);
  return q;
}

QuadraticReal QuadraticReal::sqrt_of(std::int64_t d) { return QuadraticReal(0, 1, d); }

std::int64_t QuadraticReal::merge_d(const QuadraticReal& x, const QuadraticReal& y) {
  if (x.b_ == 0) return y.d_;
  if (y.b_ == 0) return x.d_;
  if (x.d_ != y.d_) throw std::invalid_argument("QuadraticReal: mixed radicands");
  return x.d_;
}

QuadraticReal QuadraticReal::operator-() const { return QuadraticReal(-a_, -b_, d_); }

QuadraticReal QuadraticReal::operator+(const QuadraticReal& o) const {
  return QuadraticReal(a_ + o.a_, b_ + o.b_, merge_d(*this, o));
}

QuadraticReal QuadraticReal::operator-(const QuadraticReal& o) const {
  return QuadraticReal(a_ - o.a_, b_ - o.b_, merge_d(*this, o));
}

QuadraticReal QuadraticReal::operator*(const QuadraticReal& o) const {
  std::int64_t d = merge_d(*this, o);
  return QuadraticReal(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, d);
}

QuadraticReal QuadraticReal::operator/(const QuadraticReal& o) const {
  std::int64_t d = merge_d(*this, o);
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * d;
  if (norm == 0) throw std::invalid_argument("QuadraticReal: division by zero");
  // 1/(a+b*sqrt(d)) = (a-b*sqrt(d))/(a^2-b^2 d)
  QuadraticReal inv(o.a_ / norm, -o.b_ / norm, d);
  return *this * inv;
}

QuadraticReal QuadraticReal::operator+(const Rational& r) const {
  return QuadraticReal(a_ + r, b_, d_);
}
QuadraticReal QuadraticReal::operator-(const Rational& r) const {
  return QuadraticReal(a_ - r, b_, d_);
}
QuadraticReal QuadraticReal::operator*(const Rational& r) const {
  return QuadraticReal(a_ * r, b_ * r, d_);
}
QuadraticReal QuadraticReal::operator/(const Rational& r) const {
  if (r == 0) throw std::invalid_argument("QuadraticReal: division by zero");
  return QuadraticReal(a_ / r, b_ / r, d_);
}

int QuadraticReal::sign() const {
  if (b_ == 0) return a_.sign();
  if (a_ == 0) return b_.sign();
  if (a_ > 0 && b_ > 0) return 1;
  if (a_ < 0 && b_ < 0) return -1;
  // Opposite signs: compare a^2 against b^2 d. Equality is impossible since
  // d is not a rational square.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * d_;
  if (a_ > 0) return lhs > rhs ? 1 : -1;
  return rhs > lhs ? 1 : -1;
}

BigInt QuadraticReal::floor() const {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (b_ == 0) return floor_div(numerator(a_), denominator(a_));
  // Write the value as (A + B*sqrt(d)) / D with D > 0, then locate it in the
  // unit-length interval (N/D, (N+1)/D) pinned by the integer square root.
  BigInt ad = denominator(a_), bd = denominator(b_);
  BigInt D = ad * bd;
  BigInt A = numerator(a_) * bd;
  BigInt B = numerator(b_) * ad;
  BigInt radicand = B * B * d_;
  BigInt S = boost::multiprecision::sqrt(radicand);
  BigInt N = B > 0 ? BigInt(A + S) : BigInt(A - S - 1);
  BigInt q0 = floor_div(N, D);
  // Value is irrational, so it is never exactly q0 + 1.
  if ((*this - Rational(q0 + 1)).sign() > 0) return q0 + 1;
  return q0;
}

BigInt QuadraticReal::ceil() const { return -((-*this).floor()); }

QuadraticReal QuadraticReal::frac() const { return *this - Rational(floor()); }

std::string rational_str(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string QuadraticReal::str() const {
  if (b_ == 0) return rational_str(a_);
  std::string out = "(" + rational_str(a_) + ") + (" + rational_str(b_) + ")*sqrt(" +
                    std::to_string(d_) + ")";
  return out;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
  BigInt integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("quadratic literal: expected integer");
    return BigInt(std::string(text.substr(start, pos - start)));
  }
};

constexpr std::string_view kSqrtUtf8 = "\xe2\x88\x9a";   // U+221A
constexpr std::string_view kAlphaUtf8 = "\xce\xb1";      // U+03B1

QuadraticReal parse_expr(Lexer& lx);

QuadraticReal parse_primary(Lexer& lx) {
  if (lx.accept('(')) {
    QuadraticReal v = parse_expr(lx);
    if (!lx.accept(')')) throw std::invalid_argument("quadratic literal: missing ')'");
    return v;
  }
  if (lx.accept_word("sqrt") || lx.accept_word(kSqrtUtf8)) {
    bool paren = lx.accept('(');
    BigInt d = lx.integer();
    if (paren && !lx.accept(')')) throw std::invalid_argument("quadratic literal: missing ')'");
    if (d > BigInt(INT64_MAX)) throw std::invalid_argument("quadratic literal: radicand too large");
    return QuadraticReal::sqrt_of(static_cast<std::int64_t>(d));
  }
  return QuadraticReal::from_rational(Rational(lx.integer()));
}

QuadraticReal parse_factor(Lexer& lx) {
  if (lx.accept('-')) return -parse_factor(lx);
  if (lx.accept('+')) return parse_factor(lx);
  return parse_primary(lx);
}

QuadraticReal parse_term(Lexer& lx) {
  QuadraticReal v = parse_factor(lx);
  for (;;) {
    if (lx.accept('*')) {
      v = v * parse_factor(lx);
    } else if (lx.accept('/')) {
      v = v / parse_factor(lx);
    } else {
      return v;
    }
  }
}

QuadraticReal parse_expr(Lexer& lx) {
  QuadraticReal v = parse_term(lx);
  for (;;) {
    if (lx.accept('+')) {
      v = v + parse_term(lx);
    } else if (lx.accept('-')) {
      v = v - parse_term(lx);
    } else {
      return v;
    }
  }
}

}  // namespace

QuadraticReal QuadraticReal::parse(std::string_view text) {
  Lexer lx{text};
  QuadraticReal v = parse_expr(lx);
  if (!lx.eof()) throw std::invalid_argument("quadratic literal: trailing input");
  return v;
}

Rational parse_rational(std::string_view text) {
  Lexer lx{text};
  bool neg = lx.accept('-');
  BigInt num = lx.integer();
  BigInt den = 1;
  if (lx.accept('/')) den = lx.integer();
  if (!lx.eof()) throw std::invalid_argument("rational literal: trailing input");
  if (den == 0) throw std::invalid_argument("rational literal: zero denominator");
  Rational r(num, den);
  return neg ? -r : r;
}

std::pair<Rational, Rational> parse_rho(std::string_view text) {
  // Sum of terms; each term is a rational, optionally followed by an alpha
  // marker ('a' or U+03B1), or a bare alpha marker.
  Lexer lx{text};
  Rational p = 0, q = 0;
  bool first = true;
  for (;;) {
    int sgn = 1;
    if (lx.accept('+')) {
      sgn = 1;
    } else if (lx.accept('-')) {
      sgn = -1;
    } else if (!first) {
      break;
    }
    first = false;
    Rational coeff;
    bool have_coeff = false;
    lx.skip_ws();
    if (lx.pos < lx.text.size() && std::isdigit(static_cast<unsigned char>(lx.text[lx.pos]))) {
      BigInt num = lx.integer();
      BigInt den = 1;
      if (lx.accept('/')) den = lx.integer();
      if (den == 0) throw std::invalid_argument("rho literal: zero denominator");
      coeff = Rational(num, den);
      have_coeff = true;
    }
    lx.accept('*');
    bool alpha = lx.accept_word(kAlphaUtf8) || lx.accept_word("alpha") || lx.accept('a');
    if (!have_coeff) {
      if (!alpha) throw std::invalid_argument("rho literal: expected term");
      coeff = 1;
    }
    if (alpha) {
      q += sgn * coeff;
    } else {
      p += sgn * coeff;
    }
  }
  if (!lx.eof()) throw std::invalid_argument("rho literal: trailing input");
  return {p, q};
}

}  // namespace ipword
