#include "ipword/dynamics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ipword/errors.hpp"
#include "ipword/words.hpp"

namespace ipword {

SeparationCertificate separation_analysis(const WordStream& x, const WordStream& y,
                                          std::uint64_t horizon) {
  if (horizon < 100) throw std::invalid_argument("separation_analysis: horizon below 100");
  std::vector<Letter> bx = x.prefix(horizon);
  std::vector<Letter> by = y.prefix(horizon);

  // Agreement runs; the run touching the horizon is the merge candidate.
  std::uint64_t max_run = 0;
  std::uint64_t cur = 0;
  std::optional<std::uint64_t> last_disagreement;
  for (std::uint64_t n = 0; n < horizon; ++n) {
    if (bx[static_cast<std::size_t>(n)] == by[static_cast<std::size_t>(n)]) {
      ++cur;
      max_run = std::max(max_run, cur);
    } else {
      cur = 0;
      last_disagreement = n;
    }
  }
  if (!last_disagreement) throw StreamsIdentical("separation_analysis: streams agree everywhere");

  SeparationCertificate out;
  out.horizon = horizon;
  out.word_x = x.spec();
  out.word_y = y.spec();

  const std::uint64_t tail_run = horizon - (*last_disagreement + 1);
  const std::uint64_t candidate_window = max_run + 1;
  if (candidate_window <= horizon / 10) {
    // Every window of that length contains a disagreement; checked above
    // because no agreement run reaches the window length.
    out.verdict = SeparationCertificate::Verdict::separated;
    out.window = candidate_window;
    return out;
  }
  if (tail_run == max_run) {
    out.verdict = SeparationCertificate::Verdict::merge;
    out.merge_index = *last_disagreement + 1;
    return out;
  }
  throw InsufficientData(
      "separation_analysis: a long interior agreement run prevents both verdicts at horizon " +
      std::to_string(horizon));
}

nlohmann::json SeparationCertificate::to_json() const {
  nlohmann::json j{{"kind", "separation-certificate"},
                   {"horizon", horizon},
                   {"verdict", verdict == Verdict::separated ? "separated" : "merge"},
                   {"word_x", word_x},
                   {"word_y", word_y},
                   {"verified", true}};
  if (window) j["window"] = *window;
  if (merge_index) j["merge_index"] = *merge_index;
  return j;
}

std::uint64_t n_epsilon(const QuadraticReal& alpha, const Rational& eps) {
  if (alpha.is_rational()) throw std::invalid_argument("n_epsilon: slope must be irrational");
  if (!(eps > 0 && eps <= 1)) throw std::invalid_argument("n_epsilon: eps must be in (0, 1]");
  const QuadraticReal eps_q = QuadraticReal::from_rational(eps);
  const QuadraticReal one = QuadraticReal::from_rational(1);

  auto gaps_below_eps = [&](std::uint64_t count) {
    std::vector<QuadraticReal> pts;
    pts.reserve(static_cast<std::size_t>(count));
    QuadraticReal p;  // {0}
    for (std::uint64_t i = 0; i < count; ++i) {
      pts.push_back(p);
      p = (p + alpha).frac();
    }
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i] - pts[i - 1] >= eps_q) return false;
    }
    return one - pts.back() < eps_q;
  };

  // Convergent denominators of alpha via the exact continued fraction.
  QuadraticReal x = alpha;
  std::uint64_t q_prev = 0, q_cur = 1;  // q_{-1}, q_0
  for (int step = 0; step < 64; ++step) {
    if (q_cur > 1'000'000) break;
    if (q_cur >= 1 && gaps_below_eps(q_cur)) return q_cur;
    x = x.frac();
    if (x.sign() == 0) break;
    x = QuadraticReal::from_rational(1) / x;
    BigInt a = x.floor();
    std::uint64_t q_next = a.convert_to<std::uint64_t>() * q_cur + q_prev;
    q_prev = q_cur;
    q_cur = q_next;
  }
  throw InsufficientData("n_epsilon: no convergent denominator verified below the cap");
}

Singularity classify_singularity(const SturmianParams& params) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Singularity out;
  // frac(rho + n*alpha) = alpha demands rho_p + (rho_q + n - 1)*alpha integral;
  // 1 and alpha are rationally independent.
  if (denominator(params.rho_p) != 1) return out;
  const Rational n = Rational(1) - params.rho_q;
  if (denominator(n) != 1 || numerator(n) < 0) return out;
  out.singular = true;
  out.index = numerator(n).convert_to<std::uint64_t>();
  return out;
}

SturmianVerdict ip_verdict_sturmian(const SturmianParams& params, const FiniteWord& u,
                                    std::uint64_t horizon) {
  if (u.empty()) throw std::invalid_argument("ip_verdict_sturmian: empty factor");
  WordPtr word = mechanical_word(params);
  OccurrenceSet occ = occurrences(*word, u, horizon);
  if (occ.positions.empty()) {
    throw std::invalid_argument("ip_verdict_sturmian: not a factor within horizon " +
                                std::to_string(horizon));
  }
  SturmianVerdict out;
  out.factor = u;
  if (u.is_prefix_of(word->window(0, u.size()).span())) {
    out.central = true;
    out.reason = SturmianVerdict::Reason::prefix_of_word;
    return out;
  }
  if (classify_singularity(params).singular) {
    WordPtr companion = mechanical_word(params.companion());
    if (u.is_prefix_of(companion->window(0, u.size()).span())) {
      out.central = true;
      out.reason = SturmianVerdict::Reason::prefix_of_companion;
      return out;
    }
  }
  out.central = false;
  out.reason = SturmianVerdict::Reason::neither;
  return out;
}

nlohmann::json SturmianVerdict::to_json() const {
  const char* reason_str = reason == Reason::prefix_of_word        ? "prefix-of-word"
                           : reason == Reason::prefix_of_companion ? "prefix-of-companion"
                                                                   : "neither";
  return nlohmann::json{{"kind", "sturmian-verdict"},
                        {"factor", factor.str()},
                        {"verdict", central ? "central" : "not-IP"},
                        {"reason", reason_str}};
}

ProximalityScan proximality_scan(const WordStream& x, const WordStream& y,
                                 std::uint64_t horizon) {
  std::vector<Letter> bx = x.prefix(horizon);
  std::vector<Letter> by = y.prefix(horizon);
  ProximalityScan out;
  out.horizon = horizon;
  std::uint64_t n = 0;
  while (n < horizon) {
    if (bx[static_cast<std::size_t>(n)] != by[static_cast<std::size_t>(n)]) {
      ++n;
      continue;
    }
    std::uint64_t start = n;
    while (n < horizon && bx[static_cast<std::size_t>(n)] == by[static_cast<std::size_t>(n)]) {
      ++n;
    }
    out.runs.push_back({start, n - start});
    out.max_run = std::max(out.max_run, n - start);
  }
  return out;
}

std::optional<std::uint64_t> coincidence_check(int r, Letter i, Letter j,
                                               std::uint64_t horizon) {
  if (i == j) throw std::invalid_argument("coincidence_check: letters must differ");
  WordPtr xi = generalized_tm_fixed_point(r, i);
  WordPtr xj = generalized_tm_fixed_point(r, j);
  std::vector<Letter> bi = xi->prefix(horizon);
  std::vector<Letter> bj = xj->prefix(horizon);
  for (std::uint64_t n = 0; n < horizon; ++n) {
    if (bi[static_cast<std::size_t>(n)] == bj[static_cast<std::size_t>(n)]) return n;
  }
  return std::nullopt;
}

ThicknessProfile thickness_profile(const Substitution& sigma, const FiniteWord& u,
                                   const FiniteWord& v, std::size_t n_max,
                                   std::uint64_t horizon) {
  // The fixed point from the smallest prolongable letter.
  WordPtr word;
  for (Letter a : sigma.alphabet()) {
    if (sigma.image(a)[0] == a && sigma.image(a).size() >= 2) {
      word = fixed_point(sigma, a);
      break;
    }
  }
  if (!word) throw std::invalid_argument("thickness_profile: substitution has no fixed point");

  OccurrenceSet occ_u = occurrences(*word, u, horizon);
  OccurrenceSet occ_v = occurrences(*word, v, horizon);
  if (occ_u.positions.empty()) throw std::invalid_argument("thickness_profile: u is not a factor");
  if (occ_v.positions.empty()) throw std::invalid_argument("thickness_profile: v is not a factor");

  std::vector<bool> v_at(static_cast<std::size_t>(horizon), false);
  for (std::uint64_t p : occ_v.positions) v_at[static_cast<std::size_t>(p)] = true;

  ThicknessProfile out;
  out.u = u;
  out.v = v;
  out.horizon = horizon;
  out.n_max = n_max;
  out.witness.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::uint64_t s : occ_u.positions) {
      std::uint64_t t = s + u.size() + n;
      if (t + v.size() > horizon) break;
      if (v_at[static_cast<std::size_t>(t)]) {
        out.witness[n] = s;
        break;
      }
    }
  }
  std::size_t run = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    run = out.witness[n] ? run + 1 : 0;
    out.longest_run = std::max(out.longest_run, run);
  }
  return out;
}

T3System::T3System(int r, int N) : r_(r), N_(N) {
  if (r < 2) throw std::invalid_argument("t3_build: r must be at least 2");
  if (N < 1) throw std::invalid_argument("t3_build: N must be at least 1");
  base_ = generalized_tm_fixed_point(r, 1);
  FiniteWord head = base_->window(0, static_cast<std::size_t>(N) + 1).reversed();
  word_ = prepend_word(head, base_);
}

bool T3System::verdict_central(Letter i, std::uint64_t n) const {
  if (i < 1 || i > r_) throw std::invalid_argument("t3 verdict: letter out of range");
  if (n <= static_cast<std::uint64_t>(N_)) return true;
  const std::uint64_t k = n - N_;
  return base_->letter_at(k - 1) == i;
}

T3System t3_build(int r, int N) { return T3System(r, N); }

T4Partition t4_partition(int r, std::uint64_t horizon, WeakMixVariant variant) {
  if (r < 1) throw std::invalid_argument("t4_partition: r must be at least 1");
  WordPtr word = weak_mixing_word(variant);

  T4Partition out;
  out.r = r;
  out.horizon = horizon;
  std::set<FiniteWord> factor_set;
  for (std::size_t m = 1;; ++m) {
    if (m > 64) throw std::invalid_argument("t4_partition: r too large for this horizon");
    factor_set = factors_of_length(*word, m, horizon);
    if (factor_set.size() >= static_cast<std::size_t>(r)) {
      out.m = m;
      break;
    }
  }
  out.factors.assign(factor_set.begin(), factor_set.end());

  const std::size_t s = out.factors.size();
  std::map<FiniteWord, std::size_t> class_of;
  for (std::size_t i = 0; i < s; ++i) {
    class_of[out.factors[i]] = std::min<std::size_t>(i, static_cast<std::size_t>(r) - 1);
  }
  out.classes.assign(static_cast<std::size_t>(r), {});
  std::vector<Letter> buf = word->prefix(horizon);
  std::uint64_t assigned = 0;
  for (std::uint64_t n = 0; n + out.m <= horizon; ++n) {
    FiniteWord window(std::vector<Letter>(buf.begin() + static_cast<std::size_t>(n),
                                          buf.begin() + static_cast<std::size_t>(n + out.m)));
    out.classes[class_of.at(window)].push_back(n);
    ++assigned;
  }
  // Exactness: every position of [0, horizon - m] in exactly one class.
  std::uint64_t covered = 0;
  for (const auto& c : out.classes) covered += c.size();
  out.verified = covered == assigned && assigned == horizon - out.m + 1;
  return out;
}

}  // namespace ipword
