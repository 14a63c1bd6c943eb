#include <doctest.h>

#include <random>

#include "ipword/errors.hpp"
#include "ipword/generators.hpp"
#include "ipword/words.hpp"

using namespace ipword;

namespace {

std::vector<std::uint64_t> positions(const WordStream& w, const char* u, std::uint64_t h) {
  return occurrences(w, FiniteWord::parse(u), h).positions;
}

}  // namespace

TEST_SUITE("words") {

TEST_CASE("occurrence fixtures from the Fibonacci word") {
  WordPtr f = m_bonacci(2);
  CHECK(positions(*f, "0", 17) ==
        std::vector<std::uint64_t>{0, 2, 3, 5, 7, 8, 10, 11, 13, 15, 16});
  CHECK(positions(*f, "1", 18) == std::vector<std::uint64_t>{1, 4, 6, 9, 12, 14, 17});
  WordPtr zeros = constant_word(0);
  CHECK(positions(*zeros, "0", 5) == std::vector<std::uint64_t>{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(occurrences(*f, FiniteWord{}, 10), std::invalid_argument);
  CHECK_THROWS_AS(occurrences(*f, FiniteWord::parse("01"), 1), std::invalid_argument);
}

TEST_CASE("occurrences are genuine and exhaustive (independent rescan)") {
  WordPtr f = m_bonacci(2);
  std::vector<Letter> buf = f->prefix(500);
  for (const char* u : {"0", "01", "001", "010"}) {
    FiniteWord fac = FiniteWord::parse(u);
    OccurrenceSet occ = occurrences(*f, fac, 500);
    std::vector<std::uint64_t> expect;
    for (std::size_t i = 0; i + fac.size() <= 500; ++i) {
      if (std::equal(fac.begin(), fac.end(), buf.begin() + i)) expect.push_back(i);
    }
    CHECK(occ.positions == expect);
  }
}

TEST_CASE("monotone horizon") {
  WordPtr f = m_bonacci(2);
  FiniteWord u = FiniteWord::parse("01");
  OccurrenceSet small = occurrences(*f, u, 300);
  OccurrenceSet large = occurrences(*f, u, 900);
  REQUIRE(small.positions.size() <= large.positions.size());
  CHECK(std::equal(small.positions.begin(), small.positions.end(), large.positions.begin()));
}

TEST_CASE("factors of length") {
  WordPtr f = m_bonacci(2);
  CHECK(factors_of_length(*f, 1, 100) ==
        std::set<FiniteWord>{FiniteWord{0}, FiniteWord{1}});
  CHECK(factors_of_length(*f, 2, 100) ==
        std::set<FiniteWord>{FiniteWord{0, 0}, FiniteWord{0, 1}, FiniteWord{1, 0}});
  WordPtr p01 = periodic_word(FiniteWord{0, 1});
  CHECK(factors_of_length(*p01, 3, 100) ==
        std::set<FiniteWord>{FiniteWord{0, 1, 0}, FiniteWord{1, 0, 1}});
  CHECK_THROWS_AS(factors_of_length(*f, 11, 10), std::invalid_argument);
}

TEST_CASE("complexity profiles") {
  WordPtr f = m_bonacci(2);
  ComplexityProfile cf = complexity_profile(*f, 10, 10000);
  CHECK(cf.counts == std::vector<std::uint64_t>{2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  WordPtr t = m_bonacci(3);
  ComplexityProfile ct = complexity_profile(*t, 5, 10000);
  CHECK(ct.counts == std::vector<std::uint64_t>{3, 5, 7, 9, 11});
  WordPtr p01 = periodic_word(FiniteWord{0, 1});
  CHECK(complexity_profile(*p01, 4, 100).counts == std::vector<std::uint64_t>{2, 2, 2, 2});
}

TEST_CASE("complexity is nondecreasing across streams") {
  for (WordPtr w : {m_bonacci(2), m_bonacci(3), weak_mixing_word(),
                    generalized_tm_fixed_point(3, 1), periodic_word(FiniteWord{0, 1, 1})}) {
    ComplexityProfile p = complexity_profile(*w, 12, 4000);
    for (std::size_t i = 1; i < p.counts.size(); ++i) CHECK(p.counts[i] >= p.counts[i - 1]);
  }
}

TEST_CASE("special factors") {
  WordPtr f = m_bonacci(2);
  SpecialFactors s1 = special_factors(*f, 1, 10000);
  CHECK(s1.left == std::set<FiniteWord>{FiniteWord{0}});
  CHECK(s1.right == std::set<FiniteWord>{FiniteWord{0}});
  CHECK(s1.bispecial == std::set<FiniteWord>{FiniteWord{0}});
  for (std::size_t n = 1; n <= 20; ++n) {
    SpecialFactors s = special_factors(*f, n, 10000);
    CHECK(s.left.size() == 1);
    CHECK(s.right.size() == 1);
  }
  WordPtr p01 = periodic_word(FiniteWord{0, 1});
  SpecialFactors sp = special_factors(*p01, 2, 100);
  CHECK(sp.left.empty());
  CHECK(sp.right.empty());
  CHECK(sp.bispecial.empty());
}

TEST_CASE("recurrence gaps") {
  WordPtr f = m_bonacci(2);
  CHECK(recurrence_gap(*f, FiniteWord::parse("01"), 1000) == 3);
  CHECK(recurrence_gap(*f, FiniteWord::parse("00"), 1000) == 5);
  CHECK(recurrence_gap(*constant_word(0), FiniteWord{0}, 100) == 1);
  // "0100010" never occurs in f
  CHECK_THROWS_AS(recurrence_gap(*f, FiniteWord::parse("0100010"), 1000), InsufficientData);
}

TEST_CASE("prefix code validation") {
  CHECK_THROWS_AS(PrefixCode({FiniteWord{0}, FiniteWord{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PrefixCode({FiniteWord{}}), std::invalid_argument);
  CHECK_NOTHROW(PrefixCode({FiniteWord{1}, FiniteWord{0, 0}, FiniteWord{0, 1}}));
}

TEST_CASE("prefix code partitions of the Fibonacci word") {
  WordPtr f = m_bonacci(2);
  PrefixCodePartition d1 =
      prefix_code_partition(*f, PrefixCode({FiniteWord{0}, FiniteWord{1}}), 17);
  REQUIRE(d1.total());
  CHECK(d1.classes[0].positions ==
        std::vector<std::uint64_t>{0, 2, 3, 5, 7, 8, 10, 11, 13, 15, 16});
  CHECK(d1.classes[1].positions == std::vector<std::uint64_t>{1, 4, 6, 9, 12, 14});

  PrefixCodePartition d2 = prefix_code_partition(
      *f, PrefixCode({FiniteWord{1}, FiniteWord{0, 0}, FiniteWord{0, 1}}), 1000);
  REQUIRE(d2.total());
  std::vector<bool> seen(1000, false);
  for (const auto& cls : d2.classes) {
    for (std::uint64_t p : cls.positions) {
      CHECK(!seen[p]);
      seen[p] = true;
    }
  }
  CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));

  PrefixCodePartition d3 =
      prefix_code_partition(*f, PrefixCode({FiniteWord{0, 0}, FiniteWord{0, 1}}), 1000);
  REQUIRE(!d3.total());
  CHECK(*d3.gap_position == 1);
  CHECK((*d3.gap_window)[0] == 1);
}

TEST_CASE("fixed-length classes partition the window") {
  WordPtr f = m_bonacci(2);
  const std::uint64_t H = 2000;
  for (std::size_t d = 1; d <= 4; ++d) {
    std::set<FiniteWord> fs = factors_of_length(*f, d, H);
    std::vector<int> cover(static_cast<std::size_t>(H - d) + 1, 0);
    for (const FiniteWord& u : fs) {
      for (std::uint64_t p : occurrences(*f, u, H).positions) ++cover[p];
    }
    CHECK(std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; }));
  }
}

}  // TEST_SUITE
