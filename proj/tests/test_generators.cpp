#include <doctest.h>

#include "ipword/generators.hpp"
#include "ipword/numeration.hpp"
#include "ipword/words.hpp"

using namespace ipword;

namespace {

// The 53 letters displayed in the standard references for the word fixed by
// 0 -> 01, 1 -> 0.
const char* kFibonacci53 = "01001010010010100101001001010010010100101001001010010";

std::string prefix_str(const WordStream& w, std::uint64_t n) {
  return letters_str(w.prefix(n));
}

int base_r_digit_sum(std::uint64_t n, int r) {
  int s = 0;
  while (n) {
    s += static_cast<int>(n % r);
    n /= r;
  }
  return s;
}

QuadraticReal golden_alpha() { return QuadraticReal::parse("(3-sqrt(5))/2"); }

}  // namespace

TEST_SUITE("generators") {

TEST_CASE("fibonacci fixed point matches the reference prefix") {
  WordPtr f = fixed_point(Substitution::parse_rules("0 -> 01\n1 -> 0\n"), 0);
  CHECK(prefix_str(*f, 53) == kFibonacci53);
  CHECK(prefix_str(*m_bonacci(2), 53) == kFibonacci53);
}

TEST_CASE("weak mixing substitution expansion") {
  WordPtr w = weak_mixing_word();
  CHECK(prefix_str(*w, 11) == "00100111001");
}

TEST_CASE("fixed point error cases") {
  CHECK_THROWS_AS(fixed_point(Substitution::parse_rules("0 -> 0\n"), 0), std::invalid_argument);
  CHECK_THROWS_AS(fixed_point(Substitution::parse_rules("0 -> 10\n1 -> 0\n"), 0),
                  std::invalid_argument);
  // prolongable through a growing reachable letter
  WordPtr ab = fixed_point(Substitution::parse_rules("0 -> 01\n1 -> 1\n"), 0);
  CHECK(prefix_str(*ab, 5) == "01111");
}

TEST_CASE("substitution fixed point satisfies omega = sigma(omega)") {
  for (WordPtr w : {m_bonacci(2), m_bonacci(3), weak_mixing_word()}) {
    Substitution sigma = Substitution::from_json(w->spec().at("rules"));
    std::vector<Letter> pre = w->prefix(10000);
    std::vector<Letter> expanded = sigma.apply(pre);
    expanded.resize(10000);
    CHECK(expanded == pre);
  }
}

TEST_CASE("primitivity") {
  CHECK(Substitution::parse_rules("0 -> 01\n1 -> 0\n").is_primitive());
  CHECK_FALSE(Substitution::parse_rules("0 -> 01\n1 -> 1\n").is_primitive());
  CHECK(m_bonacci_substitution(3).is_primitive());
  CHECK(generalized_tm_substitution(4).is_primitive());
  CHECK(weak_mixing_substitution().is_primitive());
}

TEST_CASE("mechanical word with rho = alpha is the Fibonacci word") {
  WordPtr mech = mechanical_word(SturmianParams(golden_alpha(), 0, 1));
  CHECK(prefix_str(*mech, 53) == kFibonacci53);
  CHECK(prefix_str(*characteristic_word(golden_alpha()), 10) == "0100101001");
}

TEST_CASE("mechanical word at rho = 0 prepends a letter to the characteristic word") {
  WordPtr lower = mechanical_word(SturmianParams(golden_alpha(), 0, 0));
  WordPtr upper = mechanical_word(
      SturmianParams(golden_alpha(), 0, 0, SturmianParams::Convention::upper));
  std::vector<Letter> l = lower->prefix(300);
  std::vector<Letter> u = upper->prefix(300);
  std::vector<Letter> f = m_bonacci(2)->prefix(299);
  CHECK(l[0] == 0);
  CHECK(u[0] == 1);
  CHECK(std::vector<Letter>(l.begin() + 1, l.end()) == f);
  CHECK(std::vector<Letter>(u.begin() + 1, u.end()) == f);
  for (int n = 1; n < 300; ++n) CHECK(l[n] == u[n]);
}

TEST_CASE("mechanical letters are the rotation interval coding") {
  // letter(n) = 1 iff frac(alpha n + rho) >= 1 - alpha, floor form
  QuadraticReal alpha = golden_alpha();
  SturmianParams params(alpha, Rational(1, 3), Rational(1, 2));
  WordPtr w = mechanical_word(params);
  QuadraticReal one = QuadraticReal::from_rational(1);
  QuadraticReal rho = params.rho();
  for (std::uint64_t n = 0; n < 2000; ++n) {
    QuadraticReal point = (alpha * Rational(n) + rho).frac();
    const bool in_i1 = point >= one - alpha;
    CHECK(w->letter_at(n) == (in_i1 ? 1 : 0));
  }
}

TEST_CASE("rational slope is rejected") {
  CHECK_THROWS_AS(SturmianParams(QuadraticReal::from_rational(Rational(1, 3)), 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(SturmianParams(QuadraticReal::parse("1+sqrt(2)"), 0, 0),
                  std::invalid_argument);
}

TEST_CASE("m-bonacci words") {
  CHECK(prefix_str(*m_bonacci(3), 13) == "0102010010201");
  for (int m : {2, 3, 4, 5}) CHECK(m_bonacci(m)->letter_at(0) == 0);
  CHECK_THROWS_AS(m_bonacci(1), std::invalid_argument);
}

TEST_CASE("generalized Thue-Morse fixed points") {
  CHECK(prefix_str(*generalized_tm_fixed_point(2, 1), 8) == "12212112");
  CHECK(generalized_tm_fixed_point(3, 2)->letter_at(0) == 2);
  CHECK_THROWS_AS(generalized_tm_fixed_point(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(generalized_tm_fixed_point(2, 0), std::invalid_argument);
}

TEST_CASE("generalized Thue-Morse letters equal the digit-sum closed form") {
  for (int r : {2, 3, 4}) {
    for (Letter i = 1; i <= r; ++i) {
      WordPtr x = generalized_tm_fixed_point(r, i);
      std::vector<Letter> buf = x->prefix(10000);
      for (std::uint64_t n = 0; n < 10000; ++n) {
        CHECK(buf[n] == 1 + ((i - 1 + base_r_digit_sum(n, r)) % r));
      }
    }
  }
}

TEST_CASE("distinct Thue-Morse fixed points never coincide") {
  WordPtr x1 = generalized_tm_fixed_point(2, 1);
  WordPtr x2 = generalized_tm_fixed_point(2, 2);
  std::vector<Letter> a = x1->prefix(20000), b = x2->prefix(20000);
  for (std::size_t n = 0; n < a.size(); ++n) CHECK(a[n] != b[n]);
}

TEST_CASE("cross-oracle identity: substitution, mechanical and digit rule") {
  const std::uint64_t n = 3000;
  std::vector<Letter> sub = m_bonacci(2)->prefix(n);
  std::vector<Letter> mech = characteristic_word(golden_alpha())->prefix(n);
  std::vector<Letter> rule = digit_rule_word(2)->prefix(n);
  CHECK(sub == mech);
  CHECK(sub == rule);
}

TEST_CASE("characteristic word prefixes are left special") {
  WordPtr f = characteristic_word(golden_alpha());
  for (std::size_t n = 1; n <= 12; ++n) {
    SpecialFactors s = special_factors(*f, n, 10000);
    FiniteWord prefix = f->window(0, n);
    CHECK(s.left.count(prefix) == 1);
  }
}

TEST_CASE("substitution text format round trip") {
  Substitution sigma = weak_mixing_substitution();
  CHECK(Substitution::parse_rules(sigma.rules_text()) == sigma);
  CHECK_THROWS_AS(Substitution::parse_rules("0 -> 01\n"), std::invalid_argument);  // 1 unruled
  CHECK_THROWS_AS(Substitution::parse_rules("0 : 01\n"), std::invalid_argument);
}

}  // TEST_SUITE
