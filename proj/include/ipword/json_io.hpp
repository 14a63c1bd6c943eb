#pragma once

#include <string>

#include <json.hpp>

namespace ipword {

struct VerifyResult {
  bool ok = false;
  std::string kind;
  std::string detail;
};

// Re-validates a serialized certificate from its own fields: rebuilds the
// target/word descriptors and re-runs the underlying check. Supported kinds:
// fs-certificate, fs-big-witness, non-ip-certificate, separation-certificate.
VerifyResult verify_certificate(const nlohmann::json& certificate);

}  // namespace ipword
