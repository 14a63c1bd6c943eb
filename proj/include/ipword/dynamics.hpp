#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ipword/generators.hpp"
#include "ipword/substitution.hpp"
#include "ipword/word_stream.hpp"

#include <json.hpp>

namespace ipword {

// Outcome of the separation dichotomy on a finite window: either every
// length-N block of the two streams differs somewhere (separated), or they
// coincide from index n0 on and disagree somewhere before (merge).
struct SeparationCertificate {
  enum class Verdict { separated, merge };

  Verdict verdict = Verdict::separated;
  std::uint64_t horizon = 0;
  std::optional<std::uint64_t> window;       // N, for separated
  std::optional<std::uint64_t> merge_index;  // n0, for merge
  nlohmann::json word_x;                     // stream provenance, for re-verification
  nlohmann::json word_y;

  nlohmann::json to_json() const;
};

// Throws StreamsIdentical when x == y on [0, horizon); throws
// InsufficientData when neither branch of the dichotomy is established
// (separated requires N <= horizon/10).
SeparationCertificate separation_analysis(const WordStream& x, const WordStream& y,
                                          std::uint64_t horizon);

// An N such that the points {theta + i*alpha}, i < N, cut [0,1) into arcs of
// exact length < eps, for every theta. Candidates come from continued
// fraction convergent denominators; each candidate is re-verified by exact
// sorting before being returned.
std::uint64_t n_epsilon(const QuadraticReal& alpha, const Rational& eps);

struct Singularity {
  bool singular = false;
  std::optional<std::uint64_t> index;  // the n >= 0 with frac(rho + n*alpha) = alpha
};

// Exact: rho + n*alpha = alpha (mod 1) forces rho_p integral and
// n = 1 - rho_q a nonnegative integer, by rational independence of 1, alpha.
Singularity classify_singularity(const SturmianParams& params);

// Theorem 1.3 / 1.4 verdict for a factor u of the parametrized word.
struct SturmianVerdict {
  enum class Reason { prefix_of_word, prefix_of_companion, neither };

  FiniteWord factor;
  bool central = false;  // central (equivalently IP) occurrence set
  Reason reason = Reason::neither;

  nlohmann::json to_json() const;
};

SturmianVerdict ip_verdict_sturmian(const SturmianParams& params, const FiniteWord& u,
                                    std::uint64_t horizon);

struct AgreementRun {
  std::uint64_t position = 0;
  std::uint64_t length = 0;
};

struct ProximalityScan {
  std::uint64_t horizon = 0;
  std::vector<AgreementRun> runs;  // maximal agreement windows
  std::uint64_t max_run = 0;
};

ProximalityScan proximality_scan(const WordStream& x, const WordStream& y,
                                 std::uint64_t horizon);

// First index where the fixed points x^(i), x^(j) of the generalized
// Thue-Morse substitution agree, expected none.
std::optional<std::uint64_t> coincidence_check(int r, Letter i, Letter j,
                                               std::uint64_t horizon);

// For each gap n <= n_max, whether u W v occurs with |W| = n in the fixed
// point of sigma, plus one witness position per achieved gap.
struct ThicknessProfile {
  FiniteWord u, v;
  std::uint64_t horizon = 0;
  std::size_t n_max = 0;
  std::vector<std::optional<std::uint64_t>> witness;  // index n -> position of u
  std::size_t longest_run = 0;                        // consecutive achieved gaps

  bool hit(std::size_t n) const { return witness.at(n).has_value(); }
};

ThicknessProfile thickness_profile(const Substitution& sigma, const FiniteWord& u,
                                   const FiniteWord& v, std::size_t n_max,
                                   std::uint64_t horizon);

// Theorem 1.5 apparatus: omega = reversed (N+1)-prefix of x^(1) followed by
// x^(1) itself, with the per-shift verdict rule.
class T3System {
 public:
  T3System(int r, int N);

  int r() const { return r_; }
  int N() const { return N_; }
  const WordPtr& word() const { return word_; }

  // Is A_i - n (= T^n(omega)|_i) a central set? True for every i when
  // n <= N; for n = N + k exactly the letter x^(1)_{k-1}.
  bool verdict_central(Letter i, std::uint64_t n) const;

 private:
  int r_;
  int N_;
  WordPtr base_;  // x^(1)
  WordPtr word_;  // omega
};

T3System t3_build(int r, int N);

// Theorem 1.6 partition from a weak mixing substitution fixed point.
struct T4Partition {
  int r = 0;
  std::uint64_t horizon = 0;
  std::size_t m = 0;                     // smallest length with rho(m) >= r
  std::vector<FiniteWord> factors;       // u_1..u_s, lexicographic
  std::vector<std::vector<std::uint64_t>> classes;  // r classes over [0, horizon-m]
  bool verified = false;                 // exact-partition re-check
};

T4Partition t4_partition(int r, std::uint64_t horizon,
                         WeakMixVariant variant = WeakMixVariant::v11001);

}  // namespace ipword
