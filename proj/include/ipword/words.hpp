#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "ipword/finite_word.hpp"
#include "ipword/word_stream.hpp"

namespace ipword {

// Sorted starting positions of a factor within an explicit horizon. Every
// listed position is a genuine occurrence and none with n <= horizon - |u|
// is omitted.
struct OccurrenceSet {
  FiniteWord factor;
  std::uint64_t horizon = 0;
  std::vector<std::uint64_t> positions;

  bool contains(std::uint64_t n) const;
};

OccurrenceSet occurrences(const WordStream& w, const FiniteWord& u, std::uint64_t horizon);

std::set<FiniteWord> factors_of_length(const WordStream& w, std::size_t n,
                                       std::uint64_t horizon);

struct ComplexityProfile {
  std::uint64_t horizon = 0;
  std::vector<std::uint64_t> counts;  // counts[i] = rho(i + 1)

  std::uint64_t rho(std::size_t n) const { return counts.at(n - 1); }
};

ComplexityProfile complexity_profile(const WordStream& w, std::size_t n_max,
                                     std::uint64_t horizon);

struct SpecialFactors {
  std::uint64_t horizon = 0;
  std::set<FiniteWord> left;
  std::set<FiniteWord> right;
  std::set<FiniteWord> bispecial;
};

SpecialFactors special_factors(const WordStream& w, std::size_t n, std::uint64_t horizon);

// Maximum gap between consecutive occurrences of u before the horizon.
// Throws InsufficientData with fewer than two occurrences.
std::uint64_t recurrence_gap(const WordStream& w, const FiniteWord& u, std::uint64_t horizon);

// Finite set of factors, none a prefix of another.
class PrefixCode {
 public:
  explicit PrefixCode(std::vector<FiniteWord> code_words);
  const std::vector<FiniteWord>& code_words() const { return code_words_; }

 private:
  std::vector<FiniteWord> code_words_;
};

struct PrefixCodeClass {
  FiniteWord code_word;
  std::vector<std::uint64_t> positions;
};

// Result of partitioning [0, horizon) by the unique code word occurring at
// each position. When some position matches no code word the code is not
// maximal on this window; the position and the unmatched window are reported.
struct PrefixCodePartition {
  std::uint64_t horizon = 0;
  std::vector<PrefixCodeClass> classes;
  std::optional<std::uint64_t> gap_position;
  std::optional<FiniteWord> gap_window;

  bool total() const { return !gap_position.has_value(); }
};

PrefixCodePartition prefix_code_partition(const WordStream& w, const PrefixCode& code,
                                          std::uint64_t horizon);

}  // namespace ipword
