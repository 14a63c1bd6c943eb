#include "ipword/words.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "ipword/errors.hpp"

namespace ipword {

namespace {

// View into a materialized prefix buffer; buffers stay alive for the whole
// operation, so raw pointers are fine as set keys.
struct WindowKey {
  const Letter* p;
  std::size_t n;
  bool operator==(const WindowKey& o) const {
    return n == o.n && std::memcmp(p, o.p, n * sizeof(Letter)) == 0;
  }
};

struct WindowHash {
  std::size_t operator()(const WindowKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < k.n; ++i) {
      h ^= static_cast<std::uint64_t>(k.p[i]) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

using WindowSet = std::unordered_set<WindowKey, WindowHash>;

WindowSet distinct_windows(const std::vector<Letter>& buf, std::size_t n) {
  WindowSet set;
  if (buf.size() < n) return set;
  set.reserve(buf.size());
  for (std::size_t i = 0; i + n <= buf.size(); ++i) set.insert(WindowKey{buf.data() + i, n});
  return set;
}

}  // namespace

bool OccurrenceSet::contains(std::uint64_t n) const {
  return std::binary_search(positions.begin(), positions.end(), n);
}

OccurrenceSet occurrences(const WordStream& w, const FiniteWord& u, std::uint64_t horizon) {
  if (u.empty()) throw std::invalid_argument("occurrences: empty factor");
  if (horizon < u.size()) throw std::invalid_argument("occurrences: horizon below factor length");
  std::vector<Letter> buf = w.prefix(horizon);
  OccurrenceSet out;
  out.factor = u;
  out.horizon = horizon;
  const std::size_t m = u.size();
  for (std::size_t i = 0; i + m <= buf.size(); ++i) {
    if (std::equal(u.begin(), u.end(), buf.begin() + i)) out.positions.push_back(i);
  }
  return out;
}

std::set<FiniteWord> factors_of_length(const WordStream& w, std::size_t n,
                                       std::uint64_t horizon) {
  if (n == 0) throw std::invalid_argument("factors_of_length: length must be positive");
  if (n > horizon) throw std::invalid_argument("factors_of_length: length exceeds horizon");
  std::vector<Letter> buf = w.prefix(horizon);
  std::set<FiniteWord> out;
  for (const WindowKey& key : distinct_windows(buf, n)) {
    out.insert(FiniteWord(std::vector<Letter>(key.p, key.p + key.n)));
  }
  return out;
}

ComplexityProfile complexity_profile(const WordStream& w, std::size_t n_max,
                                     std::uint64_t horizon) {
  if (n_max == 0 || n_max > horizon) {
    throw std::invalid_argument("complexity_profile: invalid n_max");
  }
  std::vector<Letter> buf = w.prefix(horizon);
  ComplexityProfile out;
  out.horizon = horizon;
  out.counts.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) out.counts.push_back(distinct_windows(buf, n).size());
  return out;
}

SpecialFactors special_factors(const WordStream& w, std::size_t n, std::uint64_t horizon) {
  if (n == 0 || n + 1 > horizon) throw std::invalid_argument("special_factors: invalid length");
  std::vector<Letter> buf = w.prefix(horizon);
  // Right extensions come from windows [i, i+n+1); left extensions from the
  // same windows read as a.u.
  struct Ext {
    std::set<Letter> left, right;
  };
  std::map<FiniteWord, Ext> ext;
  for (std::size_t i = 0; i + n <= buf.size(); ++i) {
    FiniteWord u(std::vector<Letter>(buf.begin() + i, buf.begin() + i + n));
    Ext& e = ext[u];
    if (i + n < buf.size()) e.right.insert(buf[i + n]);
    if (i > 0) e.left.insert(buf[i - 1]);
  }
  SpecialFactors out;
  out.horizon = horizon;
  for (const auto& [u, e] : ext) {
    bool l = e.left.size() >= 2;
    bool r = e.right.size() >= 2;
    if (l) out.left.insert(u);
    if (r) out.right.insert(u);
    if (l && r) out.bispecial.insert(u);
  }
  return out;
}

std::uint64_t recurrence_gap(const WordStream& w, const FiniteWord& u, std::uint64_t horizon) {
  OccurrenceSet occ = occurrences(w, u, horizon);
  if (occ.positions.size() < 2) {
    throw InsufficientData("recurrence_gap: fewer than two occurrences before horizon");
  }
  std::uint64_t gap = 0;
  for (std::size_t i = 1; i < occ.positions.size(); ++i) {
    gap = std::max(gap, occ.positions[i] - occ.positions[i - 1]);
  }
  return gap;
}

PrefixCode::PrefixCode(std::vector<FiniteWord> code_words) : code_words_(std::move(code_words)) {
  for (const FiniteWord& u : code_words_) {
    if (u.empty()) throw std::invalid_argument("PrefixCode: empty code word");
  }
  for (std::size_t i = 0; i < code_words_.size(); ++i) {
    for (std::size_t j = 0; j < code_words_.size(); ++j) {
      if (i != j && code_words_[i].is_prefix_of(code_words_[j])) {
        throw std::invalid_argument("PrefixCode: " + code_words_[i].str() + " is a prefix of " +
                                    code_words_[j].str());
      }
    }
  }
}

PrefixCodePartition prefix_code_partition(const WordStream& w, const PrefixCode& code,
                                          std::uint64_t horizon) {
  std::size_t longest = 0;
  for (const FiniteWord& u : code.code_words()) longest = std::max(longest, u.size());
  // Matching near the horizon may read past it; streams are total.
  std::vector<Letter> buf = w.prefix(horizon + longest);

  PrefixCodePartition out;
  out.horizon = horizon;
  for (const FiniteWord& u : code.code_words()) out.classes.push_back({u, {}});

  for (std::uint64_t n = 0; n < horizon; ++n) {
    // At most one code word can match: two matches at the same position would
    // make the shorter a prefix of the longer.
    bool matched = false;
    for (std::size_t c = 0; c < out.classes.size(); ++c) {
      const FiniteWord& u = out.classes[c].code_word;
      if (u.is_prefix_of(std::span<const Letter>(buf.data() + n, buf.size() - n))) {
        out.classes[c].positions.push_back(n);
        matched = true;
        break;
      }
    }
    if (!matched) {
      out.gap_position = n;
      std::size_t len = std::min<std::size_t>(longest, buf.size() - n);
      out.gap_window =
          FiniteWord(std::vector<Letter>(buf.begin() + n, buf.begin() + n + len));
      return out;
    }
  }
  return out;
}

}  // namespace ipword
