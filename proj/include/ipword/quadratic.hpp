#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace ipword {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact element of Q(sqrt(d)): value = a + b*sqrt(d) with rational a, b and a
// fixed non-square integer d >= 2. Rational values are normalized to d == 0.
// All comparisons, floor and fractional part are exact; there is no floating
// point on any code path.
class QuadraticReal {
 public:
  QuadraticReal() = default;  // zero
  QuadraticReal(Rational a, Rational b, std::int64_t d);

  static QuadraticReal from_rational(Rational a);
  static QuadraticReal sqrt_of(std::int64_t d);  // sqrt(d), d non-square

  // Accepts expressions over integers, rationals, parentheses, + - * /,
  // and sqrt(d) (also the literal character U+221A), e.g. "(3-sqrt(5))/2".
  static QuadraticReal parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t d() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  QuadraticReal operator-() const;
  QuadraticReal operator+(const QuadraticReal& o) const;
  QuadraticReal operator-(const QuadraticReal& o) const;
  QuadraticReal operator*(const QuadraticReal& o) const;
  QuadraticReal operator/(const QuadraticReal& o) const;
  QuadraticReal operator+(const Rational& r) const;
  QuadraticReal operator-(const Rational& r) const;
  QuadraticReal operator*(const Rational& r) const;
  QuadraticReal operator/(const Rational& r) const;

  // Sign of the exact value: -1, 0 or +1.
  int sign() const;
  int compare(const QuadraticReal& o) const { return (*this - o).sign(); }

  bool operator==(const QuadraticReal& o) const { return compare(o) == 0; }
  bool operator!=(const QuadraticReal& o) const { return compare(o) != 0; }
  bool operator<(const QuadraticReal& o) const { return compare(o) < 0; }
  bool operator<=(const QuadraticReal& o) const { return compare(o) <= 0; }
  bool operator>(const QuadraticReal& o) const { return compare(o) > 0; }
  bool operator>=(const QuadraticReal& o) const { return compare(o) >= 0; }

  BigInt floor() const;
  BigInt ceil() const;
  QuadraticReal frac() const;  // *this - floor(), in [0, 1)

  std::string str() const;  // canonical "(a) + (b)*sqrt(d)" / "a" form

 private:
  // Radicand both operands can live under; throws on a genuine mismatch.
  static std::int64_t merge_d(const QuadraticReal& x, const QuadraticReal& y);

  Rational a_{};
  Rational b_{};
  std::int64_t d_ = 0;
};

std::string rational_str(const Rational& r);
Rational parse_rational(std::string_view text);

// Intercept grammar "p", "p/q", "p/q + (r/s)a", "a" where the trailing
// 'a' (or U+03B1) stands for the slope alpha. Returns the pair (p, q)
// meaning rho = p + q*alpha.
std::pair<Rational, Rational> parse_rho(std::string_view text);

}  // namespace ipword
