#include <doctest.h>

#include "ipword/errors.hpp"
#include "ipword/generators.hpp"
#include "ipword/ipcheck.hpp"
#include "ipword/json_io.hpp"
#include "ipword/numeration.hpp"

using namespace ipword;

namespace {

std::vector<std::uint64_t> fib_terms(int first_index, int step, int count) {
  std::vector<std::uint64_t> out;
  std::vector<BigInt> F = base_terms(2, 40);
  for (int n = 0; n < count; ++n) {
    out.push_back(F[first_index + step * n].convert_to<std::uint64_t>());
  }
  return out;
}

SetDescriptor fib_letter_set(Letter a, std::uint64_t horizon) {
  return SetDescriptor::occurrences_of(m_bonacci(2), FiniteWord{a}, horizon);
}

SetDescriptor g_letter_set(Letter a, std::uint64_t horizon) {
  WordPtr g = prepend_word(FiniteWord{0}, m_bonacci(2));
  return SetDescriptor::occurrences_of(g, FiniteWord{a}, horizon);
}

}  // namespace

TEST_SUITE("ipcheck") {

TEST_CASE("fs_set fixtures") {
  std::vector<std::uint64_t> binary{1, 2, 4};
  CHECK(fs_set(binary) == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7});
  std::vector<std::uint64_t> fib{2, 5, 13};
  CHECK(fs_set(fib) == std::vector<std::uint64_t>{2, 5, 7, 13, 15, 18, 20});
  std::vector<std::uint64_t> one{3};
  CHECK(fs_set(one) == std::vector<std::uint64_t>{3});
  std::vector<std::uint64_t> bad{2, 2};
  CHECK_THROWS_AS(fs_set(bad), std::invalid_argument);
  std::vector<std::uint64_t> big(26);
  for (std::size_t i = 0; i < big.size(); ++i) big[i] = i + 1;
  CHECK_THROWS_AS(fs_set(big), ResourceLimit);
}

TEST_CASE("fs_set of F_{2n+1} has all sums distinct (carry-free addition)") {
  std::vector<std::uint64_t> gens = fib_terms(1, 2, 10);
  CHECK(fs_set(gens).size() == (1u << 10) - 1);
}

TEST_CASE("FS certificates for the Fibonacci occurrence sets") {
  auto outcome = verify_fs_subset(fib_terms(1, 2, 10), fib_letter_set(0, 20000));
  REQUIRE(std::holds_alternative<FsCertificate>(outcome));
  CHECK(std::get<FsCertificate>(outcome).sums_checked == 1023);

  auto g0 = verify_fs_subset(fib_terms(2, 2, 8), g_letter_set(0, 10000));
  REQUIRE(std::holds_alternative<FsCertificate>(g0));
  CHECK(std::get<FsCertificate>(g0).sums_checked == 255);

  auto g1 = verify_fs_subset(fib_terms(1, 2, 8), g_letter_set(1, 10000));
  REQUIRE(std::holds_alternative<FsCertificate>(g1));
}

TEST_CASE("violations carry the offending subset") {
  // f_1 = f_4 = 1 but f_5 = 0
  auto outcome = verify_fs_subset({1, 4}, fib_letter_set(1, 100));
  REQUIRE(std::holds_alternative<FsViolation>(outcome));
  const FsViolation& v = std::get<FsViolation>(outcome);
  CHECK(v.sum == 5);
  CHECK(v.subset == std::vector<std::uint64_t>{1, 4});
}

TEST_CASE("undersized horizon raises InsufficientData, not a violation") {
  // max subset sum 17710 exceeds a 10^4 target horizon
  CHECK_THROWS_AS(verify_fs_subset(fib_terms(1, 2, 10), fib_letter_set(0, 10000)),
                  InsufficientData);
}

TEST_CASE("witness search finds and re-verifies witnesses") {
  SetDescriptor f0 = fib_letter_set(0, 100);
  auto triple = ip_witness_search(f0, 3, 100);
  REQUIRE(triple.has_value());
  CHECK(std::holds_alternative<FsCertificate>(verify_fs_subset(*triple, f0)));

  WordPtr f = m_bonacci(2);
  SetDescriptor prefix4 = SetDescriptor::occurrences_of(f, f->window(0, 4), 10000);
  auto quad = ip_witness_search(prefix4, 4, 10000);
  REQUIRE(quad.has_value());
  CHECK(std::holds_alternative<FsCertificate>(verify_fs_subset(*quad, prefix4)));

  SetDescriptor tiny = SetDescriptor::explicit_set({1, 2}, 10);
  CHECK(!ip_witness_search(tiny, 2, 10).has_value());
  CHECK_THROWS_AS(ip_witness_search(tiny, 13, 10), std::invalid_argument);
}

TEST_CASE("finite FS-big wraps the search") {
  SetDescriptor f0 = fib_letter_set(0, 10000);
  auto witness = finite_fs_big_check(f0, 5, 10000);
  REQUIRE(witness.has_value());
  CHECK(witness->generators.size() == 5);
  CHECK(std::holds_alternative<FsCertificate>(verify_fs_subset(witness->generators, f0)));

  SetDescriptor odds =
      SetDescriptor::occurrences_of(periodic_word(FiniteWord{0, 1}), FiniteWord{1}, 100);
  CHECK(!finite_fs_big_check(odds, 2, 100).has_value());
  auto single = finite_fs_big_check(odds, 1, 10);
  REQUIRE(single.has_value());
  CHECK(single->generators == std::vector<std::uint64_t>{1});
}

TEST_CASE("odd numbers: one class of arity two certifies non-IP") {
  SetDescriptor odds =
      SetDescriptor::occurrences_of(periodic_word(FiniteWord{0, 1}), FiniteWord{1}, 1000);
  auto outcome = non_ip_partition_certificate(odds, {odds}, {2}, 1000);
  CHECK(std::holds_alternative<NonIpCertificate>(outcome));
}

TEST_CASE("f|0 with arity two yields a counterexample (it is an IP-set)") {
  SetDescriptor f0 = fib_letter_set(0, 500);
  auto outcome = non_ip_partition_certificate(f0, {f0}, {2}, 500);
  REQUIRE(std::holds_alternative<NonIpCounterexample>(outcome));
  const auto& ce = std::get<NonIpCounterexample>(outcome);
  CHECK(f0.contains(ce.sum));
  CHECK(ce.elements.size() == 2);
}

TEST_CASE("rotation-split certificate for f|1 at a small bound") {
  QuadraticReal alpha = QuadraticReal::parse("(3-sqrt(5))/2");
  QuadraticReal one = QuadraticReal::from_rational(1);
  QuadraticReal aprime = (one - alpha) * Rational(1, 2);
  const std::uint64_t bound = 500;
  SetDescriptor target =
      SetDescriptor::rotation_interval(alpha, 0, 1, one - alpha, one, bound);
  std::vector<SetDescriptor> classes{
      SetDescriptor::rotation_interval(alpha, 0, 1, one - alpha, one - aprime, bound),
      SetDescriptor::rotation_interval(alpha, 0, 1, one - aprime, one, bound)};
  // the rotation coding really is f|1
  SetDescriptor f1 = fib_letter_set(1, bound);
  CHECK(target.elements(bound) == f1.elements(bound));

  auto outcome = non_ip_partition_certificate(target, classes, {3, 2}, bound);
  CHECK(std::holds_alternative<NonIpCertificate>(outcome));
}

TEST_CASE("class mismatch is rejected as invalid, not falsified") {
  SetDescriptor f0 = fib_letter_set(0, 200);
  SetDescriptor f1 = fib_letter_set(1, 200);
  CHECK_THROWS_AS(non_ip_partition_certificate(f0, {f1}, {2}, 200), std::invalid_argument);
}

TEST_CASE("certificates re-verify from their serialized form alone") {
  auto outcome = verify_fs_subset(fib_terms(2, 2, 8), g_letter_set(0, 10000));
  nlohmann::json j = std::get<FsCertificate>(outcome).to_json();
  VerifyResult res = verify_certificate(j);
  CHECK(res.ok);

  // Tampering must falsify.
  j["generators"].push_back(4);
  // keep generators sorted strictly increasing to pass the precondition
  j["generators"] = std::vector<std::uint64_t>{3, 4};
  VerifyResult bad = verify_certificate(j);
  CHECK(!bad.ok);
}

TEST_CASE("digit-rule targets reach far beyond any materialized word") {
  // subset sums of T_{3n+1}, n < 6, in g|_1 for m = 3
  std::vector<BigInt> T = base_terms(3, 20);
  std::vector<std::uint64_t> gens;
  for (int n = 0; n < 6; ++n) gens.push_back(T[3 * n + 1].convert_to<std::uint64_t>());
  SetDescriptor target = SetDescriptor::digit_rule_class(3, 1, 1u << 30);
  CHECK(std::holds_alternative<FsCertificate>(verify_fs_subset(gens, target)));
}

}  // TEST_SUITE
