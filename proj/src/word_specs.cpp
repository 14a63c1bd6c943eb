#include "ipword/word_specs.hpp"

#include <stdexcept>
#include <string>

#include "ipword/generators.hpp"
#include "ipword/palindromic.hpp"
#include "ipword/substitution.hpp"

namespace ipword {

WordPtr word_from_spec(const nlohmann::json& spec) {
  const std::string kind = spec.at("kind").get<std::string>();
  if (kind == "constant") return constant_word(spec.at("letter").get<Letter>());
  if (kind == "periodic") {
    return periodic_word(FiniteWord::parse(spec.at("pattern").get<std::string>()));
  }
  if (kind == "prepend") {
    return prepend_word(FiniteWord::parse(spec.at("head").get<std::string>()),
                        word_from_spec(spec.at("tail")));
  }
  if (kind == "substitution") {
    return fixed_point(Substitution::from_json(spec.at("rules")), spec.at("start").get<Letter>());
  }
  if (kind == "mechanical") {
    SturmianParams params(QuadraticReal::parse(spec.at("alpha").get<std::string>()),
                          parse_rational(spec.at("rho_p").get<std::string>()),
                          parse_rational(spec.at("rho_q").get<std::string>()),
                          spec.at("convention").get<std::string>() == "upper"
                              ? SturmianParams::Convention::upper
                              : SturmianParams::Convention::lower);
    return mechanical_word(params);
  }
  if (kind == "digitrule") return digit_rule_word(spec.at("m").get<int>());
  if (kind == "staircase") return staircase_directive();
  if (kind == "psi") return psi_stream(word_from_spec(spec.at("delta")));
  throw std::invalid_argument("word_from_spec: unknown kind '" + kind + "'");
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

WordPtr word_from_preset(std::string_view preset) {
  if (preset == "fibonacci" || preset == "fib") return m_bonacci(2);
  if (preset == "gfib") return prepend_word(FiniteWord{0}, m_bonacci(2));
  if (preset == "weakmix" || preset == "weakmix:11001") return weak_mixing_word();
  if (preset == "weakmix:11100") return weak_mixing_word(WeakMixVariant::v11100);
  if (preset == "psi-staircase") return psi_stream(staircase_directive());
  std::vector<std::string> parts = split(preset, ':');
  const std::string& head = parts[0];
  if (head == "mbonacci" && parts.size() == 2) return m_bonacci(std::stoi(parts[1]));
  if (head == "gmbonacci" && parts.size() == 2) {
    return prepend_word(FiniteWord{0}, m_bonacci(std::stoi(parts[1])));
  }
  if (head == "tm" && parts.size() == 3) {
    return generalized_tm_fixed_point(std::stoi(parts[1]), std::stoi(parts[2]));
  }
  if (head == "digitrule" && parts.size() == 2) return digit_rule_word(std::stoi(parts[1]));
  if (head == "constant" && parts.size() == 2) return constant_word(std::stoi(parts[1]));
  if (head == "periodic" && parts.size() == 2) {
    return periodic_word(FiniteWord::parse(parts[1]));
  }
  if (head == "prepend" && parts.size() >= 3) {
    std::string rest(preset.substr(head.size() + parts[1].size() + 2));
    return prepend_word(FiniteWord::parse(parts[1]), word_from_preset(rest));
  }
  throw std::invalid_argument("unknown word preset '" + std::string(preset) + "'");
}

}  // namespace ipword
