#include "ipword/word_stream.hpp"

#include <stdexcept>

namespace ipword {

void WordStream::ensure(std::uint64_t need) const {
  if (buf_.size() >= need) return;
  extend(buf_, need);
  if (buf_.size() < need) {
    throw std::logic_error("WordStream: extend() failed to reach requested length");
  }
}

Letter WordStream::letter_at(std::uint64_t n) const {
  std::lock_guard<std::mutex> lock(mu_);
  ensure(n + 1);
  return buf_[static_cast<std::size_t>(n)];
}

std::vector<Letter> WordStream::prefix(std::uint64_t count) const {
  std::lock_guard<std::mutex> lock(mu_);
  ensure(count);
  return std::vector<Letter>(buf_.begin(), buf_.begin() + static_cast<std::size_t>(count));
}

FiniteWord WordStream::window(std::uint64_t pos, std::size_t len) const {
  std::lock_guard<std::mutex> lock(mu_);
  ensure(pos + len);
  auto first = buf_.begin() + static_cast<std::size_t>(pos);
  return FiniteWord(std::vector<Letter>(first, first + len));
}

namespace {

class ConstantStream final : public WordStream {
 public:
  explicit ConstantStream(Letter a)
      : WordStream("constant " + std::to_string(a),
                   nlohmann::json{{"kind", "constant"}, {"letter", a}}, 1),
        a_(a) {}

 private:
  void extend(std::vector<Letter>& buf, std::uint64_t need) const override {
    buf.resize(static_cast<std::size_t>(need), a_);
  }
  Letter a_;
};

class PeriodicStream final : public WordStream {
 public:
  explicit PeriodicStream(FiniteWord pattern)
      : WordStream("periodic " + pattern.str(),
                   nlohmann::json{{"kind", "periodic"}, {"pattern", pattern.str()}},
                   std::nullopt),
        pattern_(std::move(pattern)) {
    if (pattern_.empty()) throw std::invalid_argument("periodic_word: empty pattern");
  }

 private:
  void extend(std::vector<Letter>& buf, std::uint64_t need) const override {
    while (buf.size() < need) buf.push_back(pattern_[buf.size() % pattern_.size()]);
  }
  FiniteWord pattern_;
};

class PrependStream final : public WordStream {
 public:
  PrependStream(FiniteWord head, WordPtr tail)
      : WordStream(head.str() + " . " + tail->description(),
                   nlohmann::json{{"kind", "prepend"},
                                  {"head", head.str()},
                                  {"tail", tail->spec()}},
                   tail->alphabet_size()),
        head_(std::move(head)),
        tail_(std::move(tail)) {}

 private:
  void extend(std::vector<Letter>& buf, std::uint64_t need) const override {
    while (buf.size() < need) {
      std::uint64_t n = buf.size();
      if (n < head_.size()) {
        buf.push_back(head_[static_cast<std::size_t>(n)]);
      } else {
        // Pull a block from the tail stream in one go.
        std::uint64_t tail_need = need - head_.size();
        std::vector<Letter> block = tail_->prefix(tail_need);
        buf.insert(buf.end(), block.begin() + static_cast<std::size_t>(n - head_.size()),
                   block.end());
      }
    }
  }
  FiniteWord head_;
  WordPtr tail_;
};

}  // namespace

WordPtr constant_word(Letter a) { return std::make_shared<ConstantStream>(a); }

WordPtr periodic_word(const FiniteWord& pattern) {
  return std::make_shared<PeriodicStream>(pattern);
}

WordPtr prepend_word(const FiniteWord& head, WordPtr tail) {
  return std::make_shared<PrependStream>(head, std::move(tail));
}

}  // namespace ipword
