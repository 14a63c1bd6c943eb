#include "ipword/json_io.hpp"

#include "ipword/dynamics.hpp"
#include "ipword/errors.hpp"
#include "ipword/ipcheck.hpp"
#include "ipword/set_descriptor.hpp"
#include "ipword/word_specs.hpp"

namespace ipword {

namespace {

VerifyResult verify_fs(const nlohmann::json& j) {
  SetDescriptor target = SetDescriptor::from_json(j.at("target"));
  auto gens = j.at("generators").get<std::vector<std::uint64_t>>();
  auto outcome = verify_fs_subset(gens, target);
  if (const auto* cert = std::get_if<FsCertificate>(&outcome)) {
    if (j.contains("sums_checked") &&
        j.at("sums_checked").get<std::uint64_t>() != cert->sums_checked) {
      return {false, "fs-certificate", "sums_checked mismatch"};
    }
    return {true, "fs-certificate",
            std::to_string(cert->sums_checked) + " sums re-verified in " + target.describe()};
  }
  const auto& viol = std::get<FsViolation>(outcome);
  return {false, "fs-certificate",
          "sum " + std::to_string(viol.sum) + " falls outside the target"};
}

VerifyResult verify_fs_big(const nlohmann::json& j) {
  SetDescriptor target = SetDescriptor::from_json(j.at("target"));
  auto gens = j.at("generators").get<std::vector<std::uint64_t>>();
  const int k = j.at("k").get<int>();
  if (gens.size() != static_cast<std::size_t>(k)) {
    return {false, "fs-big-witness", "generator count differs from k"};
  }
  auto outcome = verify_fs_subset(gens, target);
  if (std::holds_alternative<FsCertificate>(outcome)) {
    return {true, "fs-big-witness", "witness re-verified"};
  }
  return {false, "fs-big-witness",
          "sum " + std::to_string(std::get<FsViolation>(outcome).sum) + " escapes the target"};
}

VerifyResult verify_non_ip(const nlohmann::json& j) {
  SetDescriptor target = SetDescriptor::from_json(j.at("target"));
  std::vector<SetDescriptor> classes;
  for (const auto& c : j.at("classes")) classes.push_back(SetDescriptor::from_json(c));
  auto arities = j.at("arities").get<std::vector<int>>();
  const std::uint64_t bound = j.at("bound").get<std::uint64_t>();
  auto outcome = non_ip_partition_certificate(target, std::move(classes), std::move(arities), bound);
  if (std::holds_alternative<NonIpCertificate>(outcome)) {
    return {true, "non-ip-certificate", "all class sums re-verified below " + std::to_string(bound)};
  }
  const auto& ce = std::get<NonIpCounterexample>(outcome);
  return {false, "non-ip-certificate",
          "class " + std::to_string(ce.class_index) + " sum " + std::to_string(ce.sum) +
              " falls back into the target"};
}

VerifyResult verify_separation(const nlohmann::json& j) {
  WordPtr x = word_from_spec(j.at("word_x"));
  WordPtr y = word_from_spec(j.at("word_y"));
  const std::uint64_t horizon = j.at("horizon").get<std::uint64_t>();
  SeparationCertificate fresh = separation_analysis(*x, *y, horizon);
  const std::string verdict = j.at("verdict").get<std::string>();
  if (verdict == "separated") {
    if (fresh.verdict != SeparationCertificate::Verdict::separated) {
      return {false, "separation-certificate", "re-analysis does not separate"};
    }
    if (j.contains("window") && j.at("window").get<std::uint64_t>() != *fresh.window) {
      return {false, "separation-certificate", "window mismatch"};
    }
    return {true, "separation-certificate", "separated with window " + std::to_string(*fresh.window)};
  }
  if (verdict == "merge") {
    if (fresh.verdict != SeparationCertificate::Verdict::merge) {
      return {false, "separation-certificate", "re-analysis does not merge"};
    }
    if (j.contains("merge_index") &&
        j.at("merge_index").get<std::uint64_t>() != *fresh.merge_index) {
      return {false, "separation-certificate", "merge index mismatch"};
    }
    return {true, "separation-certificate", "merge at " + std::to_string(*fresh.merge_index)};
  }
  return {false, "separation-certificate", "unknown verdict '" + verdict + "'"};
}

}  // namespace

VerifyResult verify_certificate(const nlohmann::json& certificate) {
  const std::string kind = certificate.at("kind").get<std::string>();
  if (kind == "fs-certificate") return verify_fs(certificate);
  if (kind == "fs-big-witness") return verify_fs_big(certificate);
  if (kind == "non-ip-certificate") return verify_non_ip(certificate);
  if (kind == "separation-certificate") return verify_separation(certificate);
  return {false, kind, "unknown certificate kind"};
}

}  // namespace ipword
