#include "ipword/ipcheck.hpp"

#include <algorithm>
#include <stdexcept>

#include "ipword/errors.hpp"

namespace ipword {

std::vector<std::uint64_t> fs_set(std::span<const std::uint64_t> xs) {
  if (xs.size() > 25) throw ResourceLimit("fs_set: more than 25 generators");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] <= xs[i - 1]) throw std::invalid_argument("fs_set: not strictly increasing");
  }
  std::vector<std::uint64_t> out;
  out.reserve((1u << xs.size()) - 1);
  for (std::uint64_t mask = 1; mask < (1ull << xs.size()); ++mask) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (mask >> i & 1) sum += xs[i];
    }
    out.push_back(sum);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::variant<FsCertificate, FsViolation> verify_fs_subset(std::vector<std::uint64_t> xs,
                                                          const SetDescriptor& target) {
  if (xs.empty()) throw std::invalid_argument("verify_fs_subset: no generators");
  if (xs.size() > 25) throw ResourceLimit("verify_fs_subset: more than 25 generators");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] <= xs[i - 1]) {
      throw std::invalid_argument("verify_fs_subset: not strictly increasing");
    }
  }
  std::uint64_t total = 0;
  for (std::uint64_t x : xs) total += x;
  if (total >= target.horizon()) {
    throw InsufficientData("verify_fs_subset: maximal subset sum " + std::to_string(total) +
                           " reaches the target horizon " + std::to_string(target.horizon()));
  }
  for (std::uint64_t mask = 1; mask < (1ull << xs.size()); ++mask) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (mask >> i & 1) sum += xs[i];
    }
    if (!target.contains(sum)) {
      FsViolation v;
      v.sum = sum;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (mask >> i & 1) v.subset.push_back(xs[i]);
      }
      return v;
    }
  }
  const std::uint64_t checked = (1ull << xs.size()) - 1;
  FsCertificate cert{std::move(xs), target, checked};
  return cert;
}

std::optional<std::vector<std::uint64_t>> ip_witness_search(const SetDescriptor& target, int k,
                                                            std::uint64_t bound) {
  if (k < 1 || k > 12) throw std::invalid_argument("ip_witness_search: k must be in [1, 12]");
  if (bound > target.horizon()) {
    throw std::invalid_argument("ip_witness_search: bound beyond target horizon");
  }
  const std::vector<std::uint64_t> candidates = target.elements(bound);
  std::vector<bool> member = target.bitmap(bound);
  std::vector<std::uint64_t> gens;
  std::vector<std::uint64_t> sums;

  auto fits = [&](std::uint64_t x, std::vector<std::uint64_t>& new_sums) {
    new_sums.clear();
    new_sums.push_back(x);
    for (std::uint64_t s : sums) new_sums.push_back(s + x);
    for (std::uint64_t s : new_sums) {
      if (s >= bound || !member[static_cast<std::size_t>(s)]) return false;
    }
    return true;
  };

  std::vector<std::uint64_t> scratch;
  auto dfs = [&](auto&& self, std::size_t from) -> bool {
    if (gens.size() == static_cast<std::size_t>(k)) return true;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      if (!fits(candidates[i], scratch)) continue;
      std::size_t added = scratch.size();
      gens.push_back(candidates[i]);
      sums.insert(sums.end(), scratch.begin(), scratch.end());
      if (self(self, i + 1)) return true;
      gens.pop_back();
      sums.resize(sums.size() - added);
    }
    return false;
  };
  if (dfs(dfs, 0)) return gens;
  return std::nullopt;
}

std::variant<NonIpCertificate, NonIpCounterexample> non_ip_partition_certificate(
    const SetDescriptor& target, std::vector<SetDescriptor> classes, std::vector<int> arities,
    std::uint64_t bound) {
  if (classes.empty() || classes.size() != arities.size()) {
    throw std::invalid_argument("non_ip_partition_certificate: classes/arities mismatch");
  }
  if (bound > target.horizon()) {
    throw std::invalid_argument("non_ip_partition_certificate: bound beyond target horizon");
  }
  for (int a : arities) {
    if (a < 1) throw std::invalid_argument("non_ip_partition_certificate: arity must be >= 1");
  }
  // The classes must partition target o [0, bound).
  std::vector<bool> target_bits = target.bitmap(bound);
  std::vector<std::vector<std::uint64_t>> class_elems;
  {
    std::vector<int> cover(static_cast<std::size_t>(bound), 0);
    for (const SetDescriptor& c : classes) {
      if (c.horizon() < bound) {
        throw std::invalid_argument("non_ip_partition_certificate: class horizon below bound");
      }
      class_elems.push_back(c.elements(bound));
      for (std::uint64_t e : class_elems.back()) ++cover[static_cast<std::size_t>(e)];
    }
    for (std::uint64_t n = 0; n < bound; ++n) {
      int expected = target_bits[static_cast<std::size_t>(n)] ? 1 : 0;
      if (cover[static_cast<std::size_t>(n)] != expected) {
        throw std::invalid_argument(
            "non_ip_partition_certificate: classes do not partition the target at " +
            std::to_string(n));
      }
    }
  }

  for (std::size_t j = 0; j < classes.size(); ++j) {
    const std::vector<std::uint64_t>& elems = class_elems[j];
    const int arity = arities[j];
    std::vector<std::size_t> pick;
    std::optional<NonIpCounterexample> found;
    // Combinations of `arity` distinct elements with sum < bound, ascending;
    // suffixes of larger elements only grow the sum, so overshoot prunes.
    auto rec = [&](auto&& self, std::size_t from, std::uint64_t sum) -> bool {
      if (pick.size() == static_cast<std::size_t>(arity)) {
        if (target_bits[static_cast<std::size_t>(sum)]) {
          NonIpCounterexample ce;
          ce.class_index = j;
          for (std::size_t idx : pick) ce.elements.push_back(elems[idx]);
          ce.sum = sum;
          found = std::move(ce);
          return true;
        }
        return false;
      }
      for (std::size_t i = from; i < elems.size(); ++i) {
        std::uint64_t next = sum + elems[i];
        std::size_t remaining = arity - pick.size() - 1;
        // Cheapest completion uses the elements immediately after i.
        std::uint64_t minimal = next;
        if (i + remaining >= elems.size()) break;
        for (std::size_t r = 1; r <= remaining; ++r) minimal += elems[i + r];
        if (minimal >= bound) break;
        pick.push_back(i);
        if (self(self, i + 1, next)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (static_cast<std::size_t>(arity) <= elems.size()) {
      rec(rec, 0, 0);
    }
    if (found) return *found;
  }

  NonIpCertificate cert{target, std::move(classes), std::move(arities), bound};
  return cert;
}

std::optional<FsBigWitness> finite_fs_big_check(const SetDescriptor& target, int k,
                                                std::uint64_t bound) {
  auto gens = ip_witness_search(target, k, bound);
  if (!gens) return std::nullopt;
  return FsBigWitness{k, std::move(*gens), target, bound};
}

nlohmann::json FsCertificate::to_json() const {
  return nlohmann::json{{"kind", "fs-certificate"},
                        {"generators", generators},
                        {"sums_checked", sums_checked},
                        {"target", target.to_json()},
                        {"verified", true}};
}

nlohmann::json NonIpCertificate::to_json() const {
  nlohmann::json cls = nlohmann::json::array();
  for (const SetDescriptor& c : classes) cls.push_back(c.to_json());
  return nlohmann::json{{"kind", "non-ip-certificate"}, {"target", target.to_json()},
                        {"classes", cls},               {"arities", arities},
                        {"bound", bound},               {"verified", true}};
}

nlohmann::json FsBigWitness::to_json() const {
  return nlohmann::json{{"kind", "fs-big-witness"},
                        {"k", k},
                        {"generators", generators},
                        {"target", target.to_json()},
                        {"bound", bound},
                        {"verified", true}};
}

}  // namespace ipword
