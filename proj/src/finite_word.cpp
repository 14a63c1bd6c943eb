#include "ipword/finite_word.hpp"

#include <algorithm>
#include <stdexcept>

namespace ipword {

FiniteWord::FiniteWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter a : letters_) {
    if (a < 0) throw std::invalid_argument("FiniteWord: letters must be nonnegative");
  }
}

FiniteWord::FiniteWord(std::initializer_list<Letter> letters)
    : FiniteWord(std::vector<Letter>(letters)) {}

FiniteWord FiniteWord::parse(std::string_view text) {
  std::vector<Letter> out;
  if (text.empty()) return FiniteWord{};
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      std::string_view piece =
          text.substr(start, comma == std::string_view::npos ? comma : comma - start);
      if (piece.empty()) throw std::invalid_argument("FiniteWord: empty letter in list");
      out.push_back(std::stoi(std::string(piece)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("FiniteWord: expected digit letters");
      out.push_back(c - '0');
    }
  }
  return FiniteWord(std::move(out));
}

bool FiniteWord::is_prefix_of(const FiniteWord& other) const {
  return is_prefix_of(other.span());
}

bool FiniteWord::is_prefix_of(std::span<const Letter> other) const {
  if (letters_.size() > other.size()) return false;
  return std::equal(letters_.begin(), letters_.end(), other.begin());
}

FiniteWord FiniteWord::reversed() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  return FiniteWord(std::move(out));
}

bool FiniteWord::is_palindrome() const {
  return std::equal(letters_.begin(), letters_.begin() + letters_.size() / 2, letters_.rbegin());
}

FiniteWord FiniteWord::operator+(const FiniteWord& tail) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
  return FiniteWord(std::move(out));
}

std::string letters_str(std::span<const Letter> letters) {
  bool digits = std::all_of(letters.begin(), letters.end(), [](Letter a) { return a <= 9; });
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

std::string FiniteWord::str() const { return letters_str(letters_); }

}  // namespace ipword
