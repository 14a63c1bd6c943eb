#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ipword/finite_word.hpp"

#include <json.hpp>

namespace ipword {

// Deterministic, index-addressable infinite word. Letters are memoized in a
// prefix buffer; fills are idempotent and happen under a lock, so concurrent
// reads are safe. Subclasses generate letters block-wise via extend().
//
// Every stream carries a structured provenance record (spec) from which it can
// be reconstructed; certificates embed these records so they stay
// self-contained.
class WordStream {
 public:
  virtual ~WordStream() = default;

  Letter letter_at(std::uint64_t n) const;
  std::vector<Letter> prefix(std::uint64_t count) const;
  FiniteWord window(std::uint64_t pos, std::size_t len) const;

  const std::string& description() const { return description_; }
  const nlohmann::json& spec() const { return spec_; }
  // Number of letters for a finite alphabet, nullopt when unbounded.
  std::optional<int> alphabet_size() const { return alphabet_size_; }

 protected:
  WordStream(std::string description, nlohmann::json spec, std::optional<int> alphabet_size)
      : description_(std::move(description)),
        spec_(std::move(spec)),
        alphabet_size_(alphabet_size) {}

  // Grow buf to at least `need` letters (overshoot allowed). Called under the
  // stream lock; any derived mutable state touched here shares that lock.
  virtual void extend(std::vector<Letter>& buf, std::uint64_t need) const = 0;

 private:
  void ensure(std::uint64_t need) const;

  std::string description_;
  nlohmann::json spec_;
  std::optional<int> alphabet_size_;
  mutable std::mutex mu_;
  mutable std::vector<Letter> buf_;
};

using WordPtr = std::shared_ptr<WordStream>;

// Elementary streams.
WordPtr constant_word(Letter a);
WordPtr periodic_word(const FiniteWord& pattern);
WordPtr prepend_word(const FiniteWord& head, WordPtr tail);

}  // namespace ipword
