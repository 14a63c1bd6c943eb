#include "ipword/generators.hpp"

#include <stdexcept>

#include "ipword/numeration.hpp"

namespace ipword {

SturmianParams::SturmianParams(QuadraticReal alpha_, Rational p, Rational q, Convention conv)
    : alpha(std::move(alpha_)), rho_p(std::move(p)), rho_q(std::move(q)), convention(conv) {
  if (alpha.is_rational()) {
    throw std::invalid_argument("SturmianParams: slope must be irrational");
  }
  if (!(alpha > QuadraticReal{} && alpha < QuadraticReal::from_rational(1))) {
    throw std::invalid_argument("SturmianParams: slope must lie in (0, 1)");
  }
  // Reduce rho mod 1 by shifting p; q is untouched, so singularity analysis
  // still sees the original rational coordinates.
  QuadraticReal r = alpha * rho_q + rho_p;
  rho_p -= Rational(r.floor());
}

QuadraticReal SturmianParams::rho() const { return alpha * rho_q + rho_p; }

SturmianParams SturmianParams::companion() const {
  SturmianParams out = *this;
  out.convention =
      convention == Convention::lower ? Convention::upper : Convention::lower;
  return out;
}

namespace {

class MechanicalStream final : public WordStream {
 public:
  explicit MechanicalStream(SturmianParams params)
      : WordStream(
            (params.convention == SturmianParams::Convention::lower ? "mechanical lower ("
                                                                    : "mechanical upper (") +
                params.alpha.str() + "; rho=" + rational_str(params.rho_p) + "+" +
                rational_str(params.rho_q) + "*alpha)",
            nlohmann::json{
                {"kind", "mechanical"},
                {"alpha", params.alpha.str()},
                {"rho_p", rational_str(params.rho_p)},
                {"rho_q", rational_str(params.rho_q)},
                {"convention",
                 params.convention == SturmianParams::Convention::lower ? "lower" : "upper"}},
            2),
        params_(std::move(params)) {}

 private:
  BigInt boundary(std::uint64_t n) const {
    // floor(alpha*n + rho) or ceil(alpha*n + rho).
    QuadraticReal x = params_.alpha * (Rational(n) + params_.rho_q) + params_.rho_p;
    return params_.convention == SturmianParams::Convention::lower ? x.floor() : x.ceil();
  }

  void extend(std::vector<Letter>& buf, std::uint64_t need) const override {
    std::uint64_t n = buf.size();
    BigInt prev = boundary(n);
    while (buf.size() < need) {
      BigInt next = boundary(n + 1);
      BigInt step = next - prev;
      buf.push_back(step.convert_to<Letter>());
      prev = std::move(next);
      ++n;
    }
  }

  SturmianParams params_;
};

class DigitRuleStream final : public WordStream {
 public:
  explicit DigitRuleStream(int m)
      : WordStream("m-bonacci (m=" + std::to_string(m) + ") via digit rule",
                   nlohmann::json{{"kind", "digitrule"}, {"m", m}}, m),
        m_(m) {}

 private:
  void extend(std::vector<Letter>& buf, std::uint64_t need) const override {
    while (buf.size() < need) {
      buf.push_back(digit_rule_letter(m_, BigInt(buf.size() + 1)));
    }
  }
  int m_;
};

}  // namespace

WordPtr mechanical_word(const SturmianParams& params) {
  return std::make_shared<MechanicalStream>(params);
}

WordPtr characteristic_word(const QuadraticReal& alpha) {
  return mechanical_word(SturmianParams(alpha, 0, 1));
}

Substitution m_bonacci_substitution(int m) {
  if (m < 2) throw std::invalid_argument("m_bonacci: m must be at least 2");
  std::map<Letter, FiniteWord> images;
  for (Letter i = 0; i < m; ++i) {
    if (i < m - 1) {
      images.emplace(i, FiniteWord{0, i + 1});
    } else {
      images.emplace(i, FiniteWord{0});
    }
  }
  return Substitution(std::move(images));
}

WordPtr m_bonacci(int m) { return fixed_point(m_bonacci_substitution(m), 0); }

Substitution generalized_tm_substitution(int r) {
  if (r < 2) throw std::invalid_argument("generalized_tm: r must be at least 2");
  std::map<Letter, FiniteWord> images;
  for (Letter j = 1; j <= r; ++j) {
    std::vector<Letter> img;
    for (int k = 0; k < r; ++k) img.push_back((j - 1 + k) % r + 1);
    images.emplace(j, FiniteWord(std::move(img)));
  }
  return Substitution(std::move(images));
}

WordPtr generalized_tm_fixed_point(int r, Letter i) {
  if (i < 1 || i > r) throw std::invalid_argument("generalized_tm: letter out of range");
  return fixed_point(generalized_tm_substitution(r), i);
}

Substitution weak_mixing_substitution(WeakMixVariant v) {
  std::map<Letter, FiniteWord> images;
  images.emplace(0, FiniteWord{0, 0, 1});
  images.emplace(1, v == WeakMixVariant::v11001 ? FiniteWord{1, 1, 0, 0, 1}
                                                : FiniteWord{1, 1, 1, 0, 0});
  return Substitution(std::move(images));
}

WordPtr weak_mixing_word(WeakMixVariant v) { return fixed_point(weak_mixing_substitution(v), 0); }

WordPtr digit_rule_word(int m) {
  if (m < 2) throw std::invalid_argument("digit_rule_word: m must be at least 2");
  return std::make_shared<DigitRuleStream>(m);
}

}  // namespace ipword
