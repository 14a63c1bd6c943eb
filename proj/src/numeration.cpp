#include "ipword/numeration.hpp"

#include <map>
#include <stdexcept>

namespace ipword {

NumerationBase::NumerationBase(int m) : m_(m) {
  if (m < 2) throw std::invalid_argument("NumerationBase: m must be at least 2");
  terms_.push_back(1);
}

BigInt NumerationBase::term(std::size_t k) const {
  std::lock_guard<std::mutex> lock(mu_);
  while (terms_.size() <= k) {
    std::size_t i = terms_.size();
    if (i < static_cast<std::size_t>(m_)) {
      terms_.push_back(BigInt(1) << i);
    } else {
      BigInt sum = 0;
      for (std::size_t j = i - m_; j < i; ++j) sum += terms_[j];
      terms_.push_back(std::move(sum));
    }
  }
  return terms_[k];
}

std::vector<BigInt> NumerationBase::terms(std::size_t count) const {
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(term(k));
  return out;
}

namespace {

const NumerationBase& cached_base(int m) {
  static std::mutex mu;
  static std::map<int, NumerationBase> bases;
  std::lock_guard<std::mutex> lock(mu);
  auto it = bases.find(m);
  if (it == bases.end()) {
    it = bases
             .emplace(std::piecewise_construct, std::forward_as_tuple(m),
                      std::forward_as_tuple(m))
             .first;
  }
  return it->second;
}

}  // namespace

std::vector<BigInt> base_terms(int m, std::size_t k) {
  if (k == 0) throw std::invalid_argument("base_terms: need at least one term");
  return cached_base(m).terms(k);
}

DigitWord greedy_representation(int m, const BigInt& n) {
  if (n < 0) throw std::invalid_argument("greedy_representation: negative value");
  DigitWord out;
  out.base_m = m;
  if (n == 0) return out;
  const NumerationBase& base = cached_base(m);
  std::size_t top = 0;
  while (base.term(top + 1) <= n) ++top;
  BigInt rem = n;
  for (std::size_t k = top + 1; k-- > 0;) {
    BigInt t = base.term(k);
    if (t <= rem) {
      out.digits.push_back(1);
      rem -= t;
    } else {
      out.digits.push_back(0);
    }
  }
  return out;
}

BigInt decode_value(int m, const DigitWord& w) {
  const NumerationBase& base = cached_base(m);
  BigInt sum = 0;
  const std::size_t k = w.digits.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::uint8_t d = w.digits[i];
    if (d > 1) throw std::invalid_argument("decode_value: digits must be 0 or 1");
    if (d) sum += base.term(k - 1 - i);
  }
  return sum;
}

Letter digit_rule_letter(int m, const BigInt& n) {
  if (n < 0) throw std::invalid_argument("digit_rule_letter: negative index");
  if (n == 0) return 0;  // the prepended 0 of g = 0.t
  DigitWord z = greedy_representation(m, n - 1);
  Letter k = 0;
  for (auto it = z.digits.rbegin(); it != z.digits.rend() && *it == 1; ++it) ++k;
  return k;
}

std::string DigitWord::str() const {
  std::string out;
  out.reserve(digits.size());
  for (std::uint8_t d : digits) out += static_cast<char>('0' + d);
  return out;
}

DigitWord DigitWord::parse(std::string_view text, int m) {
  DigitWord out;
  out.base_m = m;
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("DigitWord: digits must be 0 or 1");
    out.digits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

}  // namespace ipword
