#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ipword {

using Letter = int;

// Finite word over nonnegative integer letters. Indexing is 0-based.
class FiniteWord {
 public:
  FiniteWord() = default;
  explicit FiniteWord(std::vector<Letter> letters);
  FiniteWord(std::initializer_list<Letter> letters);

  // "0100" -> one letter per digit; "10,2,0" -> comma separated letters.
  static FiniteWord parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::span<const Letter> span() const { return letters_; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  bool is_prefix_of(const FiniteWord& other) const;
  bool is_prefix_of(std::span<const Letter> other) const;
  FiniteWord reversed() const;
  bool is_palindrome() const;
  FiniteWord operator+(const FiniteWord& tail) const;

  // Digits concatenated when every letter fits one digit, comma form otherwise.
  std::string str() const;

  auto operator<=>(const FiniteWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

std::string letters_str(std::span<const Letter> letters);

}  // namespace ipword
