#pragma once

#include <cstdint>

#include "ipword/quadratic.hpp"
#include "ipword/substitution.hpp"
#include "ipword/word_stream.hpp"

namespace ipword {

// Parameters of a mechanical word: irrational slope alpha in (0,1) and
// intercept rho = p + q*alpha reduced mod 1 (p, q rational). Keeping the
// (p, q) pair rather than the reduced value makes the singularity
// classification exactly decidable.
struct SturmianParams {
  enum class Convention { lower, upper };  // lower = floor form, upper = ceiling form

  QuadraticReal alpha;
  Rational rho_p = 0;
  Rational rho_q = 0;
  Convention convention = Convention::lower;

  SturmianParams(QuadraticReal alpha_, Rational p, Rational q,
                 Convention conv = Convention::lower);

  QuadraticReal rho() const;  // reduced representative in [0, 1)
  SturmianParams companion() const;  // same (alpha, rho), opposite convention
};

// letter(n) = floor(alpha(n+1)+rho) - floor(alpha n + rho), or the ceiling
// analogue for the upper convention. All comparisons exact.
WordPtr mechanical_word(const SturmianParams& params);

// s_{alpha,alpha}, the characteristic word of slope alpha (lower convention).
WordPtr characteristic_word(const QuadraticReal& alpha);

Substitution m_bonacci_substitution(int m);
WordPtr m_bonacci(int m);

// Cyclic substitution j -> j (j+1) ... r 1 ... (j-1) on {1..r}; the fixed
// point beginning in i.
Substitution generalized_tm_substitution(int r);
WordPtr generalized_tm_fixed_point(int r, Letter i);

enum class WeakMixVariant { v11001, v11100 };
Substitution weak_mixing_substitution(WeakMixVariant v = WeakMixVariant::v11001);
WordPtr weak_mixing_word(WeakMixVariant v = WeakMixVariant::v11001);

// m-bonacci letters through the numeration route: letter(n) =
// digit_rule_letter(m, n+1), an oracle independent of the substitution.
WordPtr digit_rule_word(int m);

}  // namespace ipword
