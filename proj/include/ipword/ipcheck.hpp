#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ipword/set_descriptor.hpp"

#include <json.hpp>

namespace ipword {

// All nonempty-subset sums of a strictly increasing sequence, sorted with
// duplicates collapsed. k is capped at 25 (2^k enumeration).
std::vector<std::uint64_t> fs_set(std::span<const std::uint64_t> xs);

// Evidence that every nonempty-subset sum of the generators lies in the
// target. Self-contained: re-verifiable from the serialized fields alone.
struct FsCertificate {
  std::vector<std::uint64_t> generators;
  SetDescriptor target;
  std::uint64_t sums_checked = 0;  // 2^k - 1

  nlohmann::json to_json() const;
};

struct FsViolation {
  std::uint64_t sum = 0;
  std::vector<std::uint64_t> subset;
};

// Certificate iff fs_set(xs) is contained in the target, otherwise the first
// violating sum in enumeration order. Throws InsufficientData when the
// maximal subset sum reaches the target horizon.
std::variant<FsCertificate, FsViolation> verify_fs_subset(std::vector<std::uint64_t> xs,
                                                          const SetDescriptor& target);

// Depth-first search, smallest first, for k generators below `bound` whose
// subset sums all lie in the target. Absence of a witness means only
// "inconclusive below bound". k is capped at 12.
std::optional<std::vector<std::uint64_t>> ip_witness_search(const SetDescriptor& target, int k,
                                                            std::uint64_t bound);

// The partition observation: classes partition target o [0, bound) and for
// class j every sum of arities[j] distinct elements below the bound falls
// outside the target. Witnesses that the target is not an IP-set.
struct NonIpCertificate {
  SetDescriptor target;
  std::vector<SetDescriptor> classes;
  std::vector<int> arities;
  std::uint64_t bound = 0;

  nlohmann::json to_json() const;
};

struct NonIpCounterexample {
  std::size_t class_index = 0;
  std::vector<std::uint64_t> elements;
  std::uint64_t sum = 0;
};

std::variant<NonIpCertificate, NonIpCounterexample> non_ip_partition_certificate(
    const SetDescriptor& target, std::vector<SetDescriptor> classes, std::vector<int> arities,
    std::uint64_t bound);

struct FsBigWitness {
  int k = 0;
  std::vector<std::uint64_t> generators;
  SetDescriptor target;
  std::uint64_t bound = 0;

  nlohmann::json to_json() const;
};

std::optional<FsBigWitness> finite_fs_big_check(const SetDescriptor& target, int k,
                                                std::uint64_t bound);

}  // namespace ipword
