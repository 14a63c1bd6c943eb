#include "ipword/set_descriptor.hpp"

#include <algorithm>
#include <stdexcept>
#include <variant>

#include "ipword/numeration.hpp"
#include "ipword/word_specs.hpp"
#include "ipword/words.hpp"

namespace ipword {

namespace {

struct OccurrenceKind {
  WordPtr word;
  FiniteWord factor;
};

struct ExplicitKind {
  std::vector<std::uint64_t> elements;  // sorted
};

struct RotationKind {
  QuadraticReal alpha;
  Rational rho_p;
  Rational rho_q;
  QuadraticReal lo;
  QuadraticReal hi;
};

struct DigitRuleKind {
  int m;
  Letter k;
};

}  // namespace

struct SetDescriptor::Impl {
  std::variant<OccurrenceKind, ExplicitKind, RotationKind, DigitRuleKind> kind;
};

SetDescriptor SetDescriptor::occurrences_of(WordPtr word, FiniteWord factor,
                                            std::uint64_t horizon) {
  if (factor.empty()) throw std::invalid_argument("SetDescriptor: empty factor");
  if (horizon < factor.size()) throw std::invalid_argument("SetDescriptor: horizon too small");
  auto impl = std::make_shared<Impl>();
  impl->kind = OccurrenceKind{std::move(word), std::move(factor)};
  return SetDescriptor(std::move(impl), horizon);
}

SetDescriptor SetDescriptor::explicit_set(std::vector<std::uint64_t> elements,
                                          std::uint64_t horizon) {
  std::sort(elements.begin(), elements.end());
  if (!elements.empty() && elements.back() >= horizon) {
    throw std::invalid_argument("SetDescriptor: element beyond horizon");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = ExplicitKind{std::move(elements)};
  return SetDescriptor(std::move(impl), horizon);
}

SetDescriptor SetDescriptor::rotation_interval(QuadraticReal alpha, Rational rho_p,
                                               Rational rho_q, QuadraticReal lo,
                                               QuadraticReal hi, std::uint64_t horizon) {
  auto impl = std::make_shared<Impl>();
  impl->kind = RotationKind{std::move(alpha), std::move(rho_p), std::move(rho_q), std::move(lo),
                            std::move(hi)};
  return SetDescriptor(std::move(impl), horizon);
}

SetDescriptor SetDescriptor::digit_rule_class(int m, Letter k, std::uint64_t horizon) {
  if (m < 2 || k < 0 || k >= m) throw std::invalid_argument("SetDescriptor: bad digit rule class");
  auto impl = std::make_shared<Impl>();
  impl->kind = DigitRuleKind{m, k};
  return SetDescriptor(std::move(impl), horizon);
}

bool SetDescriptor::contains(std::uint64_t n) const {
  if (n >= horizon_) throw std::invalid_argument("SetDescriptor: index beyond horizon");
  if (const auto* occ = std::get_if<OccurrenceKind>(&impl_->kind)) {
    return occ->factor.is_prefix_of(occ->word->window(n, occ->factor.size()).span());
  }
  if (const auto* ex = std::get_if<ExplicitKind>(&impl_->kind)) {
    return std::binary_search(ex->elements.begin(), ex->elements.end(), n);
  }
  if (const auto* rot = std::get_if<RotationKind>(&impl_->kind)) {
    QuadraticReal point =
        (rot->alpha * (Rational(n) + rot->rho_q) + rot->rho_p).frac();
    return point >= rot->lo && point < rot->hi;
  }
  const auto& dr = std::get<DigitRuleKind>(impl_->kind);
  return digit_rule_letter(dr.m, BigInt(n)) == dr.k;
}

std::vector<bool> SetDescriptor::bitmap(std::uint64_t bound) const {
  if (bound > horizon_) throw std::invalid_argument("SetDescriptor: bound beyond horizon");
  std::vector<bool> out(static_cast<std::size_t>(bound), false);
  if (const auto* occ = std::get_if<OccurrenceKind>(&impl_->kind)) {
    // One scan beats per-index window reads.
    if (bound >= occ->factor.size()) {
      OccurrenceSet set = occurrences(*occ->word, occ->factor, bound);
      for (std::uint64_t p : set.positions) out[static_cast<std::size_t>(p)] = true;
    }
    return out;
  }
  if (const auto* ex = std::get_if<ExplicitKind>(&impl_->kind)) {
    for (std::uint64_t e : ex->elements) {
      if (e < bound) out[static_cast<std::size_t>(e)] = true;
    }
    return out;
  }
  for (std::uint64_t n = 0; n < bound; ++n) out[static_cast<std::size_t>(n)] = contains(n);
  return out;
}

std::vector<std::uint64_t> SetDescriptor::elements(std::uint64_t bound) const {
  std::vector<std::uint64_t> out;
  std::vector<bool> bits = bitmap(bound);
  for (std::uint64_t n = 0; n < bits.size(); ++n) {
    if (bits[static_cast<std::size_t>(n)]) out.push_back(n);
  }
  return out;
}

std::string SetDescriptor::describe() const {
  if (const auto* occ = std::get_if<OccurrenceKind>(&impl_->kind)) {
    return occ->word->description() + " | " + occ->factor.str();
  }
  if (const auto* ex = std::get_if<ExplicitKind>(&impl_->kind)) {
    return "explicit set of " + std::to_string(ex->elements.size()) + " elements";
  }
  if (const auto* rot = std::get_if<RotationKind>(&impl_->kind)) {
    return "rotation orbit of " + rot->alpha.str() + " in [" + rot->lo.str() + ", " +
           rot->hi.str() + ")";
  }
  const auto& dr = std::get<DigitRuleKind>(impl_->kind);
  return "digit rule m=" + std::to_string(dr.m) + " letter " + std::to_string(dr.k);
}

nlohmann::json SetDescriptor::to_json() const {
  nlohmann::json j;
  j["horizon"] = horizon_;
  if (const auto* occ = std::get_if<OccurrenceKind>(&impl_->kind)) {
    j["kind"] = "occurrences";
    j["word"] = occ->word->spec();
    j["factor"] = occ->factor.str();
  } else if (const auto* ex = std::get_if<ExplicitKind>(&impl_->kind)) {
    j["kind"] = "explicit";
    j["elements"] = ex->elements;
  } else if (const auto* rot = std::get_if<RotationKind>(&impl_->kind)) {
    j["kind"] = "rotation";
    j["alpha"] = rot->alpha.str();
    j["rho_p"] = rational_str(rot->rho_p);
    j["rho_q"] = rational_str(rot->rho_q);
    j["lo"] = rot->lo.str();
    j["hi"] = rot->hi.str();
  } else {
    const auto& dr = std::get<DigitRuleKind>(impl_->kind);
    j["kind"] = "digitrule";
    j["m"] = dr.m;
    j["letter"] = dr.k;
  }
  return j;
}

SetDescriptor SetDescriptor::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const std::uint64_t horizon = j.at("horizon").get<std::uint64_t>();
  if (kind == "occurrences") {
    return occurrences_of(word_from_spec(j.at("word")),
                          FiniteWord::parse(j.at("factor").get<std::string>()), horizon);
  }
  if (kind == "explicit") {
    return explicit_set(j.at("elements").get<std::vector<std::uint64_t>>(), horizon);
  }
  if (kind == "rotation") {
    return rotation_interval(QuadraticReal::parse(j.at("alpha").get<std::string>()),
                             parse_rational(j.at("rho_p").get<std::string>()),
                             parse_rational(j.at("rho_q").get<std::string>()),
                             QuadraticReal::parse(j.at("lo").get<std::string>()),
                             QuadraticReal::parse(j.at("hi").get<std::string>()), horizon);
  }
  if (kind == "digitrule") {
    return digit_rule_class(j.at("m").get<int>(), j.at("letter").get<Letter>(), horizon);
  }
  throw std::invalid_argument("SetDescriptor: unknown kind '" + kind + "'");
}

}  // namespace ipword
