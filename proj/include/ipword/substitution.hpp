#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ipword/finite_word.hpp"
#include "ipword/word_stream.hpp"

#include <json.hpp>

namespace ipword {

// Mapping from letters to nonempty words; every letter occurring in an image
// must itself have a rule.
class Substitution {
 public:
  explicit Substitution(std::map<Letter, FiniteWord> images);

  const FiniteWord& image(Letter a) const;
  std::vector<Letter> apply(std::span<const Letter> word) const;
  std::vector<Letter> alphabet() const;

  // Some power of the incidence matrix is strictly positive (power bounded by
  // the square of the alphabet size).
  bool is_primitive() const;

  // One rule per line: "0 -> 01". Letters are digits or comma separated.
  static Substitution parse_rules(std::string_view text);
  std::string rules_text() const;

  nlohmann::json to_json() const;
  static Substitution from_json(const nlohmann::json& j);

  bool operator==(const Substitution&) const = default;

 private:
  std::map<Letter, FiniteWord> images_;
};

// The unique stream with sigma(omega) = omega starting in `start`. Throws
// when sigma(start) does not begin with start (not prolongable) or when the
// iterates stay bounded (degenerate).
WordPtr fixed_point(const Substitution& sigma, Letter start);

}  // namespace ipword
