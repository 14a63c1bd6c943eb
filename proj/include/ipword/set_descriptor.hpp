#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ipword/finite_word.hpp"
#include "ipword/quadratic.hpp"
#include "ipword/word_stream.hpp"

#include <json.hpp>

namespace ipword {

// A subset of [0, horizon) with exact, recomputable membership. Four kinds:
//   occurrences    positions of a factor in a stream
//   explicit       a finite list
//   rotation       {n : frac(rho + n*alpha) in [lo, hi)}, rho = p + q*alpha
//   digitrule      {n : digit_rule_letter(m, n) == k}
// Descriptors serialize to JSON and reconstruct bit-exactly, which keeps the
// certificates referencing them self-contained.
class SetDescriptor {
 public:
  static SetDescriptor occurrences_of(WordPtr word, FiniteWord factor, std::uint64_t horizon);
  static SetDescriptor explicit_set(std::vector<std::uint64_t> elements, std::uint64_t horizon);
  static SetDescriptor rotation_interval(QuadraticReal alpha, Rational rho_p, Rational rho_q,
                                         QuadraticReal lo, QuadraticReal hi,
                                         std::uint64_t horizon);
  static SetDescriptor digit_rule_class(int m, Letter k, std::uint64_t horizon);

  std::uint64_t horizon() const { return horizon_; }
  bool contains(std::uint64_t n) const;  // requires n < horizon
  // Membership bitmap over [0, bound); bound <= horizon.
  std::vector<bool> bitmap(std::uint64_t bound) const;
  std::vector<std::uint64_t> elements(std::uint64_t bound) const;

  std::string describe() const;
  nlohmann::json to_json() const;
  static SetDescriptor from_json(const nlohmann::json& j);

 private:
  struct Impl;
  SetDescriptor(std::shared_ptr<const Impl> impl, std::uint64_t horizon)
      : impl_(std::move(impl)), horizon_(horizon) {}

  std::shared_ptr<const Impl> impl_;
  std::uint64_t horizon_ = 0;
};

}  // namespace ipword
