#include "ipword/palindromic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ipword {

namespace {

// Longest palindromic suffix by direct comparison.
std::size_t longest_pal_suffix(std::span<const Letter> w) {
  for (std::size_t start = 0; start < w.size(); ++start) {
    std::size_t len = w.size() - start;
    bool pal = true;
    for (std::size_t i = 0; i < len / 2; ++i) {
      if (w[start + i] != w[w.size() - 1 - i]) {
        pal = false;
        break;
      }
    }
    if (pal) return len;
  }
  return 0;
}

void close_in_place(std::vector<Letter>& w, std::size_t pal_len) {
  std::size_t mirror = w.size() - pal_len;
  for (std::size_t i = mirror; i-- > 0;) w.push_back(w[i]);
}

}  // namespace

FiniteWord pal_closure(const FiniteWord& w) {
  std::vector<Letter> out = w.letters();
  close_in_place(out, longest_pal_suffix(out));
  return FiniteWord(std::move(out));
}

FiniteWord iterated_pal_closure(const FiniteWord& directive) {
  std::vector<Letter> w;
  for (Letter a : directive) {
    w.push_back(a);
    close_in_place(w, longest_pal_suffix(w));
  }
  return FiniteWord(std::move(w));
}

namespace {

class StaircaseStream final : public WordStream {
 public:
  StaircaseStream()
      : WordStream("staircase directive 0;0,1;0,1,2;...",
                   nlohmann::json{{"kind", "staircase"}}, std::nullopt) {}

 private:
  void extend(std::vector<Letter>& buf, std::uint64_t need) const override {
    // Block j (0-based) is 0,1,...,j starting at offset j(j+1)/2.
    while (buf.size() < need) {
      std::uint64_t n = buf.size();
      std::uint64_t j = 0;
      while ((j + 1) * (j + 2) / 2 <= n) ++j;
      buf.push_back(static_cast<Letter>(n - j * (j + 1) / 2));
    }
  }
};

// Rolling-hash filter for the longest palindromic suffix; every candidate is
// verified letter-by-letter before acceptance, so the result always equals
// the direct scan.
class PalSuffixFinder {
 public:
  static std::size_t find(const std::vector<Letter>& w) {
    const std::size_t n = w.size();
    if (n == 0) return 0;
    constexpr std::uint64_t kMod = (1ull << 61) - 1;
    constexpr std::uint64_t kBase = 1315423911ull % ((1ull << 61) - 1);
    auto mulmod = [](std::uint64_t a, std::uint64_t b) {
      return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kMod);
    };
    std::vector<std::uint64_t> fwd(n + 1, 0), bwd(n + 1, 0), pw(n + 1, 1);
    for (std::size_t i = 0; i < n; ++i) {
      fwd[i + 1] = (mulmod(fwd[i], kBase) + static_cast<std::uint64_t>(w[i]) + 1) % kMod;
      bwd[i + 1] =
          (mulmod(bwd[i], kBase) + static_cast<std::uint64_t>(w[n - 1 - i]) + 1) % kMod;
      pw[i + 1] = mulmod(pw[i], kBase);
    }
    auto fwd_hash = [&](std::size_t i, std::size_t j) {  // hash of w[i..j)
      return (fwd[j] + kMod - mulmod(fwd[i], pw[j - i])) % kMod;
    };
    auto rev_hash = [&](std::size_t i, std::size_t j) {  // hash of reversed w[i..j)
      return (bwd[n - i] + kMod - mulmod(bwd[n - j], pw[j - i])) % kMod;
    };
    for (std::size_t len = n; len >= 1; --len) {
      std::size_t i = n - len;
      if (fwd_hash(i, n) != rev_hash(i, n)) continue;
      bool pal = true;
      for (std::size_t k = 0; k < len / 2; ++k) {
        if (w[i + k] != w[n - 1 - k]) {
          pal = false;
          break;
        }
      }
      if (pal) return len;
    }
    return 1;
  }
};

class PsiStream final : public WordStream {
 public:
  explicit PsiStream(WordPtr delta)
      : WordStream("psi(" + delta->description() + ")",
                   nlohmann::json{{"kind", "psi"}, {"delta", delta->spec()}}, std::nullopt),
        delta_(std::move(delta)) {}

 private:
  void extend(std::vector<Letter>& buf, std::uint64_t need) const override {
    // buf always equals psi(delta[0..consumed_)); growth per letter is at
    // most 2|w|+1 so the loop terminates.
    while (buf.size() < need) {
      buf.push_back(delta_->letter_at(consumed_++));
      close_in_place(buf, PalSuffixFinder::find(buf));
    }
  }

  WordPtr delta_;
  mutable std::uint64_t consumed_ = 0;  // guarded by the stream lock
};

}  // namespace

WordPtr staircase_directive() { return std::make_shared<StaircaseStream>(); }

WordPtr psi_stream(WordPtr delta) { return std::make_shared<PsiStream>(std::move(delta)); }

CentralPartition infinite_central_partition(std::uint64_t horizon) {
  if (horizon < 2) throw std::invalid_argument("infinite_central_partition: horizon too small");
  WordPtr omega = psi_stream(staircase_directive());
  std::vector<Letter> buf = omega->prefix(horizon - 1);
  CentralPartition out;
  out.horizon = horizon;
  std::map<Letter, std::vector<std::uint64_t>> classes;
  for (std::uint64_t n = 1; n < horizon; ++n) {
    classes[buf[static_cast<std::size_t>(n - 1)]].push_back(n);
  }
  std::uint64_t covered = 0;
  for (auto& [a, positions] : classes) {
    covered += positions.size();
    out.classes.emplace_back(a, std::move(positions));
  }
  if (covered != horizon - 1) {
    throw std::logic_error("infinite_central_partition: classes fail to cover the window");
  }
  return out;
}

}  // namespace ipword
