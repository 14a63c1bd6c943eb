#include "ipword/substitution.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ipword {

Substitution::Substitution(std::map<Letter, FiniteWord> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("Substitution: no rules");
  for (const auto& [a, img] : images_) {
    if (img.empty()) {
      throw std::invalid_argument("Substitution: empty image for letter " + std::to_string(a));
    }
    for (Letter b : img) {
      if (!images_.count(b)) {
        throw std::invalid_argument("Substitution: image letter " + std::to_string(b) +
                                    " has no rule");
      }
    }
  }
}

const FiniteWord& Substitution::image(Letter a) const {
  auto it = images_.find(a);
  if (it == images_.end()) {
    throw std::invalid_argument("Substitution: no rule for letter " + std::to_string(a));
  }
  return it->second;
}

std::vector<Letter> Substitution::apply(std::span<const Letter> word) const {
  std::vector<Letter> out;
  for (Letter a : word) {
    const FiniteWord& img = image(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

std::vector<Letter> Substitution::alphabet() const {
  std::vector<Letter> out;
  for (const auto& [a, _] : images_) out.push_back(a);
  return out;
}

bool Substitution::is_primitive() const {
  const std::vector<Letter> alpha = alphabet();
  const std::size_t k = alpha.size();
  std::map<Letter, std::size_t> idx;
  for (std::size_t i = 0; i < k; ++i) idx[alpha[i]] = i;

  // Boolean incidence matrix: reach[i][j] = letter j occurs in image of i.
  std::vector<std::vector<bool>> m(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (Letter b : image(alpha[i])) m[i][idx[b]] = true;
  }
  auto all_positive = [&](const std::vector<std::vector<bool>>& x) {
    for (const auto& row : x) {
      for (bool v : row) {
        if (!v) return false;
      }
    }
    return true;
  };
  std::vector<std::vector<bool>> p = m;
  for (std::size_t step = 1; step <= k * k; ++step) {
    if (all_positive(p)) return true;
    std::vector<std::vector<bool>> next(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t l = 0; l < k; ++l) {
        if (!p[i][l]) continue;
        for (std::size_t j = 0; j < k; ++j) {
          if (m[l][j]) next[i][j] = true;
        }
      }
    }
    p = std::move(next);
  }
  return false;
}

Substitution Substitution::parse_rules(std::string_view text) {
  std::map<Letter, FiniteWord> images;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::size_t arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw std::invalid_argument("substitution rules: missing '->' in \"" + line + "\"");
    }
    auto trim = [](std::string s) {
      std::size_t b = s.find_first_not_of(" \t\r");
      std::size_t e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    std::string lhs = trim(line.substr(0, arrow));
    std::string rhs = trim(line.substr(arrow + 2));
    FiniteWord left = FiniteWord::parse(lhs);
    if (left.size() != 1) {
      throw std::invalid_argument("substitution rules: left side must be one letter");
    }
    if (images.count(left[0])) {
      throw std::invalid_argument("substitution rules: duplicate rule for " + lhs);
    }
    images.emplace(left[0], FiniteWord::parse(rhs));
  }
  return Substitution(std::move(images));
}

std::string Substitution::rules_text() const {
  std::string out;
  for (const auto& [a, img] : images_) {
    out += std::to_string(a) + " -> " + img.str() + "\n";
  }
  return out;
}

nlohmann::json Substitution::to_json() const {
  nlohmann::json rules = nlohmann::json::object();
  for (const auto& [a, img] : images_) rules[std::to_string(a)] = img.str();
  return rules;
}

Substitution Substitution::from_json(const nlohmann::json& j) {
  std::map<Letter, FiniteWord> images;
  for (auto it = j.begin(); it != j.end(); ++it) {
    images.emplace(std::stoi(it.key()), FiniteWord::parse(it.value().get<std::string>()));
  }
  return Substitution(std::move(images));
}

namespace {

class FixedPointStream final : public WordStream {
 public:
  FixedPointStream(Substitution sigma, Letter start)
      : WordStream("fixed point of {" + one_line(sigma) + "} from " + std::to_string(start),
                   nlohmann::json{{"kind", "substitution"},
                                  {"rules", sigma.to_json()},
                                  {"start", start}},
                   static_cast<int>(sigma.alphabet().size())),
        sigma_(std::move(sigma)),
        start_(start) {}

 private:
  static std::string one_line(const Substitution& s) {
    std::string t = s.rules_text();
    std::replace(t.begin(), t.end(), '\n', ';');
    if (!t.empty() && t.back() == ';') t.pop_back();
    return t;
  }

  void extend(std::vector<Letter>& buf, std::uint64_t need) const override {
    if (buf.empty()) {
      const FiniteWord& img = sigma_.image(start_);
      buf.assign(img.begin(), img.end());
    }
    while (buf.size() < need) {
      // buf is a prefix of omega, hence sigma(buf) is a longer prefix; stop
      // mid-application once the target length is reached.
      std::vector<Letter> next;
      next.reserve(buf.size() * 2);
      for (Letter a : buf) {
        const FiniteWord& img = sigma_.image(a);
        next.insert(next.end(), img.begin(), img.end());
        if (next.size() >= need && next.size() > buf.size()) break;
      }
      buf = std::move(next);
    }
  }

  Substitution sigma_;
  Letter start_;
};

}  // namespace

WordPtr fixed_point(const Substitution& sigma, Letter start) {
  const FiniteWord& img = sigma.image(start);  // throws when no rule exists
  if (img[0] != start) {
    throw std::invalid_argument("fixed_point: substitution is not prolongable at letter " +
                                std::to_string(start));
  }
  // The iterates grow unboundedly iff some letter reachable from start has an
  // image of length >= 2 (start recurs in every iterate, so growth never
  // stalls permanently).
  std::set<Letter> reachable{start};
  std::vector<Letter> frontier{start};
  bool grows = false;
  while (!frontier.empty()) {
    Letter a = frontier.back();
    frontier.pop_back();
    const FiniteWord& ia = sigma.image(a);
    if (ia.size() >= 2) grows = true;
    for (Letter b : ia) {
      if (reachable.insert(b).second) frontier.push_back(b);
    }
  }
  if (!grows) {
    throw std::invalid_argument("fixed_point: degenerate substitution, iterates stay bounded");
  }
  return std::make_shared<FixedPointStream>(sigma, start);
}

}  // namespace ipword
