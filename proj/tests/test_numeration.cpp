#include <doctest.h>

#include "ipword/generators.hpp"
#include "ipword/numeration.hpp"

using namespace ipword;

namespace {

std::vector<std::uint64_t> terms_u64(int m, std::size_t k) {
  std::vector<std::uint64_t> out;
  for (const BigInt& t : base_terms(m, k)) out.push_back(t.convert_to<std::uint64_t>());
  return out;
}

bool has_m_consecutive_ones(const DigitWord& w, int m) {
  int run = 0;
  for (std::uint8_t d : w.digits) {
    run = d ? run + 1 : 0;
    if (run >= m) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("numeration") {

TEST_CASE("base term fixtures") {
  CHECK(terms_u64(2, 8) == std::vector<std::uint64_t>{1, 2, 3, 5, 8, 13, 21, 34});
  CHECK(terms_u64(3, 7) == std::vector<std::uint64_t>{1, 2, 4, 7, 13, 24, 44});
  CHECK(terms_u64(2, 1) == std::vector<std::uint64_t>{1});
  CHECK_THROWS_AS(base_terms(1, 5), std::invalid_argument);
  // F_n crosses 64 bits near n = 91; big integers must carry through.
  CHECK(base_terms(2, 120)[119] > BigInt("1000000000000000000000000"));
}

TEST_CASE("greedy representation fixtures") {
  CHECK(greedy_representation(2, 50).str() == "10100100");
  CHECK(greedy_representation(2, 13).str() == "100000");
  CHECK(greedy_representation(3, 6).str() == "110");
  CHECK(greedy_representation(2, 0).str() == "");
  CHECK_THROWS_AS(greedy_representation(2, -1), std::invalid_argument);
}

TEST_CASE("all six representations of 50 decode back") {
  for (const char* rep :
       {"10100100", "10100011", "10011100", "10011011", "1111100", "1111011"}) {
    CHECK(decode_value(2, DigitWord::parse(rep, 2)) == 50);
  }
  CHECK(decode_value(2, DigitWord{}) == 0);
}

TEST_CASE("round trip and the no-m-consecutive-ones invariant") {
  for (int m : {2, 3, 4}) {
    for (std::uint64_t n = 1; n <= 100000; ++n) {
      DigitWord w = greedy_representation(m, BigInt(n));
      CHECK(decode_value(m, w) == n);
      if (has_m_consecutive_ones(w, m)) {
        FAIL("greedy output contains ", m, " consecutive ones at n=", n);
      }
    }
  }
}

TEST_CASE("Z(F_n) = 1 0^n") {
  for (std::size_t n = 0; n < 20; ++n) {
    BigInt fn = base_terms(2, n + 1)[n];
    DigitWord w = greedy_representation(2, fn);
    CHECK(w.digits.size() == n + 1);
    CHECK(w.digits[0] == 1);
    for (std::size_t i = 1; i <= n; ++i) CHECK(w.digits[i] == 0);
  }
}

TEST_CASE("digit rule letter fixtures") {
  // g = 0f shifted: positions 1..17
  const Letter expected[] = {0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0};
  for (int n = 1; n <= 17; ++n) CHECK(digit_rule_letter(2, n) == expected[n - 1]);
  CHECK(digit_rule_letter(2, 0) == 0);
  CHECK(digit_rule_letter(2, 14) == 0);  // Z(13) = 100000 ends in 0
  CHECK(digit_rule_letter(3, 6) == 1);   // Z_3(5) = 101 ends in 01^1
  CHECK(m_bonacci(3)->letter_at(5) == 1);
  // all-ones representation: Z_3(3) = 11 reads as ending in 01^2
  CHECK(greedy_representation(3, 3).str() == "11");
  CHECK(digit_rule_letter(3, 4) == 2);
  CHECK(m_bonacci(3)->letter_at(3) == 2);
}

TEST_CASE("digit rule agrees with the substitution fixed point") {
  for (int m : {2, 3, 4}) {
    std::vector<Letter> t = m_bonacci(m)->prefix(100000);
    CHECK(digit_rule_letter(m, 0) == 0);
    for (std::uint64_t n = 1; n <= 100000; ++n) {
      if (digit_rule_letter(m, BigInt(n)) != t[static_cast<std::size_t>(n - 1)]) {
        FAIL("digit rule disagrees with m-bonacci at m=", m, " n=", n);
      }
    }
  }
}

TEST_CASE("FS sums of F_{2n+1} are carry free") {
  // Zeckendorff of any sum ends in 1 0^{2m+1} with m = min(A).
  std::vector<BigInt> F = base_terms(2, 25);
  for (std::uint32_t mask = 1; mask < (1u << 10); ++mask) {
    BigInt sum = 0;
    int min_a = -1;
    for (int a = 0; a < 10; ++a) {
      if (mask >> a & 1) {
        sum += F[2 * a + 1];
        if (min_a < 0) min_a = a;
      }
    }
    DigitWord w = greedy_representation(2, sum);
    const int zeros = 2 * min_a + 1;
    REQUIRE(static_cast<int>(w.digits.size()) >= zeros + 1);
    CHECK(w.digits[w.digits.size() - zeros - 1] == 1);
    for (int i = 0; i < zeros; ++i) CHECK(w.digits[w.digits.size() - 1 - i] == 0);
  }
}

TEST_CASE("digit word parsing") {
  CHECK(DigitWord::parse("10100100", 2).str() == "10100100");
  CHECK_THROWS_AS(DigitWord::parse("102", 2), std::invalid_argument);
}

}  // TEST_SUITE
