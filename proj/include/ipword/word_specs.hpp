#pragma once

#include <string_view>

#include "ipword/word_stream.hpp"

#include <json.hpp>

namespace ipword {

// Rebuilds a stream from the provenance record carried by WordStream::spec().
// The inverse of construction for every generator in the library; certificates
// rely on it to stay self-contained.
WordPtr word_from_spec(const nlohmann::json& spec);

// Named presets used on the command line:
//   fibonacci | fib            mbonacci:<m>       gmbonacci:<m> (0.t)
//   gfib (= gmbonacci:2)       tm:<r>:<i>         weakmix | weakmix:11100
//   psi-staircase              digitrule:<m>      constant:<a>
//   periodic:<letters>         prepend:<letters>:<preset>
WordPtr word_from_preset(std::string_view preset);

}  // namespace ipword
