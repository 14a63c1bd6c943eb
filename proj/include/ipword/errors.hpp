#pragma once

#include <stdexcept>
#include <string>

namespace ipword {

// Raised when a computation cannot be decided within the supplied horizon,
// as opposed to being outright falsified.
class InsufficientData : public std::runtime_error {
 public:
  explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a request exceeds a hard enumeration limit (e.g. 2^k subset sums).
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

// Raised by separation analysis when the two streams agree everywhere on the
// inspected window, so neither "merge" nor "separated" applies.
class StreamsIdentical : public std::runtime_error {
 public:
  explicit StreamsIdentical(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ipword
