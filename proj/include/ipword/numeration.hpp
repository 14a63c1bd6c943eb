#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "ipword/finite_word.hpp"
#include "ipword/quadratic.hpp"

namespace ipword {

// m-bonacci base terms: T_k = 2^k for k <= m-1, then the sum of the previous
// m terms. For m = 2 these are F_0 = 1, F_1 = 2, F_2 = 3, F_3 = 5, ...
class NumerationBase {
 public:
  explicit NumerationBase(int m);
  int m() const { return m_; }
  // Grows the term list on demand; extension is append-only and idempotent.
  BigInt term(std::size_t k) const;
  std::vector<BigInt> terms(std::size_t count) const;

 private:
  int m_;
  mutable std::mutex mu_;
  mutable std::vector<BigInt> terms_;
};

// Greedy numeration digits, most significant first; the empty word encodes 0.
struct DigitWord {
  std::vector<std::uint8_t> digits;
  int base_m = 2;

  std::string str() const;
  static DigitWord parse(std::string_view text, int m);
  bool operator==(const DigitWord&) const = default;
};

std::vector<BigInt> base_terms(int m, std::size_t k);

// The unique representation without m consecutive 1s. n = 0 gives the empty
// word; negative n is rejected.
DigitWord greedy_representation(int m, const BigInt& n);

// Weighted sum over base terms; accepts any 0/1 digit word, not only greedy
// output, and inverts greedy_representation on valid digit words.
BigInt decode_value(int m, const DigitWord& w);

// Letter g_n of g = 0.t where t is the m-bonacci fixed point: for n >= 1 the
// number of trailing 1s of the greedy representation of n-1 (a word that is
// all 1s counts as ending in 0 1^j); g_0 = 0 by convention.
Letter digit_rule_letter(int m, const BigInt& n);

}  // namespace ipword
