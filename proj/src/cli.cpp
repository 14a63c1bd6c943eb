#include "ipword/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ipword/dynamics.hpp"
#include "ipword/errors.hpp"
#include "ipword/ipcheck.hpp"
#include "ipword/json_io.hpp"
#include "ipword/numeration.hpp"
#include "ipword/palindromic.hpp"
#include "ipword/set_descriptor.hpp"
#include "ipword/word_specs.hpp"
#include "ipword/words.hpp"

namespace ipword {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

struct Emit {
  std::string format = "json";
  std::ostream* out = nullptr;

  int report(const json& command, const json& result, bool verified,
             std::optional<std::uint64_t> horizon = std::nullopt,
             std::optional<std::string> csv = std::nullopt) const {
    if (format == "csv") {
      if (!csv) throw std::invalid_argument("unsupported-format: no CSV form for this report");
      *out << *csv;
      return verified ? kExitOk : kExitFalsified;
    }
    json rep;
    rep["command"] = command;
    if (horizon) rep["horizon"] = *horizon;
    rep["result"] = result;
    rep["verified"] = verified;
    *out << rep.dump(2) << "\n";
    return verified ? kExitOk : kExitFalsified;
  }
};

json command_echo(const std::string& name, const std::vector<std::string>& args) {
  return json{{"name", name}, {"argv", args}};
}

// --- word selection shared by most subcommands ------------------------------

struct WordArgs {
  std::string preset;
  std::string alpha;
  std::string rho = "a";
  std::string convention = "lower";
  std::string rules_file;
  std::string sub_inline;
  int start = -1;
};

void add_word_options(CLI::App* cmd, WordArgs& w, bool positional = true) {
  if (positional) cmd->add_option("preset", w.preset, "word preset (see README)");
  cmd->add_option("--word", w.preset, "word preset");
  cmd->add_option("--alpha", w.alpha, "mechanical slope, e.g. \"(3-sqrt(5))/2\"");
  cmd->add_option("--rho", w.rho, "mechanical intercept p/q + (p'/q')a (default a)");
  cmd->add_option("--convention", w.convention, "lower (floor) or upper (ceiling)")
      ->check(CLI::IsMember({"lower", "upper"}));
  cmd->add_option("--rules", w.rules_file, "substitution rules file, one 'a -> w' per line");
  cmd->add_option("--sub", w.sub_inline, "inline substitution rules, ';' separated");
  cmd->add_option("--start", w.start, "fixed point start letter (default: first prolongable)");
}

Substitution parse_sub_arg(const WordArgs& w) {
  std::string text;
  if (!w.sub_inline.empty()) {
    text = w.sub_inline;
    std::replace(text.begin(), text.end(), ';', '\n');
  } else {
    std::ifstream in(w.rules_file);
    if (!in) throw std::invalid_argument("cannot open rules file " + w.rules_file);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return Substitution::parse_rules(text);
}

Letter auto_start(const Substitution& sigma) {
  for (Letter a : sigma.alphabet()) {
    const FiniteWord& img = sigma.image(a);
    if (img[0] == a && img.size() >= 2) return a;
  }
  throw std::invalid_argument("substitution has no prolongable letter");
}

SturmianParams sturmian_from(const WordArgs& w) {
  if (w.alpha.empty()) throw std::invalid_argument("--alpha is required here");
  auto [p, q] = parse_rho(w.rho);
  return SturmianParams(QuadraticReal::parse(w.alpha), p, q,
                        w.convention == "upper" ? SturmianParams::Convention::upper
                                                : SturmianParams::Convention::lower);
}

WordPtr resolve_word(const WordArgs& w) {
  if (!w.sub_inline.empty() || !w.rules_file.empty()) {
    Substitution sigma = parse_sub_arg(w);
    return fixed_point(sigma, w.start >= 0 ? w.start : auto_start(sigma));
  }
  if (!w.alpha.empty()) return mechanical_word(sturmian_from(w));
  if (w.preset.empty()) throw std::invalid_argument("no word selected (preset, --alpha or --sub)");
  return word_from_preset(w.preset);
}

// --- target / generator grammars --------------------------------------------

SetDescriptor parse_target(const std::string& spec, std::uint64_t horizon) {
  std::size_t bar = spec.find('|');
  if (bar != std::string::npos) {
    WordPtr word = word_from_preset(spec.substr(0, bar));
    return SetDescriptor::occurrences_of(word, FiniteWord::parse(spec.substr(bar + 1)), horizon);
  }
  if (spec.rfind("digitrule:", 0) == 0) {
    std::size_t second = spec.find(':', 10);
    if (second == std::string::npos) throw std::invalid_argument("digitrule target needs m and k");
    return SetDescriptor::digit_rule_class(std::stoi(spec.substr(10, second - 10)),
                                           std::stoi(spec.substr(second + 1)), horizon);
  }
  throw std::invalid_argument("target must be '<word>|<factor>' or 'digitrule:<m>:<k>'");
}

std::uint64_t to_u64(const BigInt& v, const char* what) {
  if (v < 0 || v > BigInt(UINT64_MAX)) {
    throw std::invalid_argument(std::string(what) + ": value out of range");
  }
  return v.convert_to<std::uint64_t>();
}

std::vector<std::uint64_t> parse_generators(const std::string& spec, int count) {
  auto term_seq = [&](int m, int k) {
    std::vector<std::uint64_t> out;
    const NumerationBase base(m);
    for (int n = 0; n < count; ++n) {
      out.push_back(to_u64(base.term(static_cast<std::size_t>(m) * n + k), "generator"));
    }
    return out;
  };
  if (spec == "fib-odd") return term_seq(2, 1);
  if (spec == "fib-even") return term_seq(2, 2);
  if (spec.rfind("mbonacci:", 0) == 0) {
    std::size_t second = spec.find(':', 9);
    if (second == std::string::npos) {
      throw std::invalid_argument("mbonacci generators need m and k");
    }
    return term_seq(std::stoi(spec.substr(9, second - 9)), std::stoi(spec.substr(second + 1)));
  }
  std::vector<std::uint64_t> out;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(std::stoull(part));
  return out;
}

std::vector<int> parse_int_list(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(std::stoi(part));
  return out;
}

std::vector<FiniteWord> parse_word_list(const std::string& spec) {
  std::vector<FiniteWord> out;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(FiniteWord::parse(part));
  return out;
}

json verdict_json(const SturmianVerdict& v) { return v.to_json(); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ipword: uniformly recurrent words, occurrence partitions and IP/central-set "
               "certificates at desk scale"};
  app.require_subcommand(1);

  Emit emit;
  emit.out = &out;

  // Per-subcommand state.
  WordArgs word_args;
  std::uint64_t horizon = 10000;
  std::uint64_t length = 60;
  std::string factor_str;
  std::string format = "json";
  std::string target_str;
  std::string gens_str;
  std::string arities_str = "3,2";
  std::string alpha_str = "(3-sqrt(5))/2";
  std::string alpha_prime_str;
  std::string alpha_prime_frac = "1/2";
  std::string expect;
  std::string word2_preset;
  std::string directive = "staircase";
  std::string code_str;
  std::string kind_str = "central";
  std::string file_arg;
  std::string decode_digits;
  std::string n_str;
  std::string factor_u = "0", factor_v = "0";
  int count = 10;
  int k_size = 4;
  std::uint64_t bound = 10000;
  int t_r = 2, t_n = 3;
  std::size_t max_n = 10, nn = 1, max_gap = 200;
  std::uint64_t query_n = 0;
  std::int64_t single_n = -1;
  std::string variant = "11001";

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* c_generate = app.add_subcommand("generate", "emit a word prefix");
  add_word_options(c_generate, word_args);
  c_generate->add_option("--length", length, "letters to emit");
  add_format(c_generate);

  CLI::App* c_occ = app.add_subcommand("occurrences", "occurrence set of a factor");
  add_word_options(c_occ, word_args);
  c_occ->add_option("--factor", factor_str, "factor letters")->required();
  c_occ->add_option("--horizon", horizon, "scan bound");
  add_format(c_occ);

  CLI::App* c_cx = app.add_subcommand("complexity", "factor complexity profile");
  add_word_options(c_cx, word_args);
  c_cx->add_option("--max-n", max_n, "largest factor length");
  c_cx->add_option("--horizon", horizon, "scan bound");
  add_format(c_cx);

  CLI::App* c_sf = app.add_subcommand("special-factors", "left/right special factors");
  add_word_options(c_sf, word_args);
  c_sf->add_option("--n", nn, "factor length");
  c_sf->add_option("--horizon", horizon, "scan bound");
  add_format(c_sf);

  CLI::App* c_zeck = app.add_subcommand("zeckendorff", "greedy m-bonacci representation");
  c_zeck->add_option("n", n_str, "value to represent");
  c_zeck->add_option("--base", count, "m of the numeration (default 2)")->default_val(2);
  c_zeck->add_option("--decode", decode_digits, "decode a 0/1 digit word instead");
  add_format(c_zeck);

  CLI::App* c_dr = app.add_subcommand("digit-rule", "letters of g = 0.t via the digit rule");
  c_dr->add_option("--base", count, "m of the numeration (default 2)")->default_val(2);
  c_dr->add_option("--n", single_n, "single index n");
  c_dr->add_option("--length", length, "emit letters for n in [0, length)")->default_val(30);
  add_format(c_dr);

  CLI::App* c_fs = app.add_subcommand("fs-check", "verify all subset sums stay in the target");
  c_fs->add_option("--target", target_str, "'<word>|<factor>' or 'digitrule:<m>:<k>'")->required();
  c_fs->add_option("--gens", gens_str, "fib-odd | fib-even | mbonacci:<m>:<k> | list")->required();
  c_fs->add_option("--count", count, "number of generators for named families");
  c_fs->add_option("--horizon", horizon, "target horizon");
  add_format(c_fs);

  CLI::App* c_ips = app.add_subcommand("ip-search", "search FS generators inside the target");
  c_ips->add_option("--target", target_str, "set descriptor")->required();
  c_ips->add_option("--k", k_size, "number of generators");
  c_ips->add_option("--bound", bound, "search bound");
  c_ips->add_option("--horizon", horizon, "target horizon (default: bound)")->default_val(0);
  add_format(c_ips);

  CLI::App* c_nic = app.add_subcommand("non-ip-cert",
                                       "partition-based non-IP certificate (rotation classes)");
  c_nic->add_option("--target", target_str, "optional single-class target descriptor");
  c_nic->add_option("--alpha", alpha_str, "slope");
  c_nic->add_option("--alpha-prime", alpha_prime_str, "split point expression");
  c_nic->add_option("--alpha-prime-frac", alpha_prime_frac,
                    "alpha' = (1-alpha)*frac when no expression given");
  c_nic->add_option("--arities", arities_str, "per-class sum arities");
  c_nic->add_option("--bound", bound, "verification bound")->default_val(2000);
  add_format(c_nic);

  CLI::App* c_sep = app.add_subcommand("separation", "merge/separated dichotomy");
  c_sep->add_option("--word", word_args.preset, "first word preset")->required();
  c_sep->add_option("--word2", word2_preset, "second word preset")->required();
  c_sep->add_option("--horizon", horizon, "scan bound");
  add_format(c_sep);

  CLI::App* c_cls = app.add_subcommand("classify", "singular / nonsingular");
  c_cls->add_option("--alpha", word_args.alpha, "slope")->required();
  c_cls->add_option("--rho", word_args.rho, "intercept p/q + (p'/q')a");
  add_format(c_cls);

  CLI::App* c_ver = app.add_subcommand("verdict", "IP/central verdict for a Sturmian factor");
  c_ver->add_option("--alpha", word_args.alpha, "slope")->required();
  c_ver->add_option("--rho", word_args.rho, "intercept");
  c_ver->add_option("--convention", word_args.convention, "lower or upper")
      ->check(CLI::IsMember({"lower", "upper"}));
  c_ver->add_option("--factor", factor_str, "factor letters")->required();
  c_ver->add_option("--horizon", horizon, "factor-check bound");
  c_ver->add_option("--expect", expect, "central or not-ip: exit 1 on mismatch")
      ->check(CLI::IsMember({"central", "not-ip"}));
  add_format(c_ver);

  CLI::App* c_prox = app.add_subcommand("proximality", "maximal agreement windows");
  c_prox->add_option("--word", word_args.preset, "first word preset")->required();
  c_prox->add_option("--word2", word2_preset, "second word preset")->required();
  c_prox->add_option("--horizon", horizon, "scan bound");
  add_format(c_prox);

  CLI::App* c_thick = app.add_subcommand("thickness", "achievable gaps between two factors");
  add_word_options(c_thick, word_args, false);
  c_thick->add_option("-u,--factor-u", factor_u, "left factor");
  c_thick->add_option("-v,--factor-v", factor_v, "right factor");
  c_thick->add_option("--max-gap", max_gap, "largest gap to probe");
  c_thick->add_option("--horizon", horizon, "scan bound")->default_val(100000);
  add_format(c_thick);

  CLI::App* c_t3 = app.add_subcommand("t3", "reversed-prefix Thue-Morse partition and verdicts");
  c_t3->add_option("--r", t_r, "alphabet size");
  c_t3->add_option("--N", t_n, "guaranteed-central shift bound");
  c_t3->add_option("--horizon", horizon, "partition check bound");
  c_t3->add_option("--verdicts", query_n, "list verdicts for n = 1..this")->default_val(10);
  add_format(c_t3);

  CLI::App* c_t4 = app.add_subcommand("t4", "weak mixing partition into r classes");
  c_t4->add_option("--r", t_r, "number of classes");
  c_t4->add_option("--horizon", horizon, "partition bound");
  c_t4->add_option("--variant", variant, "weak mixing substitution: 11001 or 11100")
      ->check(CLI::IsMember({"11001", "11100"}));
  add_format(c_t4);

  CLI::App* c_pal = app.add_subcommand("pal-closure", "right palindromic closure");
  c_pal->add_option("word", factor_str, "finite word letters")->required();
  add_format(c_pal);

  CLI::App* c_psi = app.add_subcommand("psi", "iterated palindromic closure stream");
  c_psi->add_option("--directive", directive, "staircase | constant:<a> | periodic:<w>");
  c_psi->add_option("--length", length, "letters to emit");
  add_format(c_psi);

  CLI::App* c_part = app.add_subcommand("partition", "occurrence-set partitions");
  c_part->add_option("--kind", kind_str, "central | prefix-code")
      ->check(CLI::IsMember({"central", "prefix-code"}));
  add_word_options(c_part, word_args, false);
  c_part->add_option("--code", code_str, "comma separated code words");
  c_part->add_option("--horizon", horizon, "partition bound")->default_val(1000);
  add_format(c_part);

  CLI::App* c_verify = app.add_subcommand("verify", "re-verify a serialized certificate");
  c_verify->add_option("file", file_arg, "certificate JSON path, or - for stdin")->required();
  add_format(c_verify);

  std::vector<std::string> argv_copy = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("ipword");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  emit.format = format;

  try {
    if (*c_generate) {
      WordPtr w = resolve_word(word_args);
      std::vector<Letter> prefix = w->prefix(length);
      json result{{"word", letters_str(prefix)}, {"description", w->description()}};
      std::string csv = "n,letter\n";
      for (std::size_t i = 0; i < prefix.size(); ++i) {
        csv += std::to_string(i) + "," + std::to_string(prefix[i]) + "\n";
      }
      return emit.report(command_echo("generate", argv_copy), result, true, length, csv);
    }

    if (*c_occ) {
      WordPtr w = resolve_word(word_args);
      OccurrenceSet occ = occurrences(*w, FiniteWord::parse(factor_str), horizon);
      bool ok = true;  // re-check each listed position against the stream
      for (std::uint64_t p : occ.positions) {
        ok = ok && occ.factor.is_prefix_of(w->window(p, occ.factor.size()).span());
      }
      json result{{"factor", occ.factor.str()},
                  {"positions", occ.positions},
                  {"count", occ.positions.size()}};
      std::string csv = "position\n";
      for (std::uint64_t p : occ.positions) csv += std::to_string(p) + "\n";
      return emit.report(command_echo("occurrences", argv_copy), result, ok, horizon, csv);
    }

    if (*c_cx) {
      WordPtr w = resolve_word(word_args);
      ComplexityProfile profile = complexity_profile(*w, max_n, horizon);
      json result{{"counts", profile.counts}};
      std::string csv = "n,rho\n";
      for (std::size_t i = 0; i < profile.counts.size(); ++i) {
        csv += std::to_string(i + 1) + "," + std::to_string(profile.counts[i]) + "\n";
      }
      return emit.report(command_echo("complexity", argv_copy), result, true, horizon, csv);
    }

    if (*c_sf) {
      WordPtr w = resolve_word(word_args);
      SpecialFactors sf = special_factors(*w, nn, horizon);
      auto to_list = [](const std::set<FiniteWord>& s) {
        json a = json::array();
        for (const FiniteWord& u : s) a.push_back(u.str());
        return a;
      };
      json result{{"left", to_list(sf.left)},
                  {"right", to_list(sf.right)},
                  {"bispecial", to_list(sf.bispecial)}};
      return emit.report(command_echo("special-factors", argv_copy), result, true, horizon);
    }

    if (*c_zeck) {
      const int m = count;
      if (!decode_digits.empty()) {
        BigInt value = decode_value(m, DigitWord::parse(decode_digits, m));
        json result{{"digits", decode_digits}, {"value", value.str()}};
        return emit.report(command_echo("zeckendorff", argv_copy), result, true, std::nullopt,
                           "digits,value\n" + decode_digits + "," + value.str() + "\n");
      }
      if (n_str.empty()) throw std::invalid_argument("zeckendorff needs a value or --decode");
      BigInt n(n_str);
      DigitWord digits = greedy_representation(m, n);
      bool ok = decode_value(m, digits) == n;
      json result{{"n", n.str()}, {"digits", digits.str()}};
      return emit.report(command_echo("zeckendorff", argv_copy), result, ok, std::nullopt,
                         "n,digits\n" + n.str() + "," + digits.str() + "\n");
    }

    if (*c_dr) {
      const int m = count;
      if (single_n >= 0) {
        Letter l = digit_rule_letter(m, BigInt(single_n));
        json result{{"n", single_n}, {"letter", l}};
        return emit.report(command_echo("digit-rule", argv_copy), result, true);
      }
      std::vector<Letter> letters;
      for (std::uint64_t n = 0; n < length; ++n) letters.push_back(digit_rule_letter(m, BigInt(n)));
      json result{{"letters", letters_str(letters)}};
      std::string csv = "n,letter\n";
      for (std::size_t i = 0; i < letters.size(); ++i) {
        csv += std::to_string(i) + "," + std::to_string(letters[i]) + "\n";
      }
      return emit.report(command_echo("digit-rule", argv_copy), result, true, length, csv);
    }

    if (*c_fs) {
      SetDescriptor target = parse_target(target_str, horizon);
      std::vector<std::uint64_t> gens = parse_generators(gens_str, count);
      auto outcome = verify_fs_subset(gens, target);
      if (const auto* cert = std::get_if<FsCertificate>(&outcome)) {
        return emit.report(command_echo("fs-check", argv_copy), cert->to_json(), true, horizon);
      }
      const auto& viol = std::get<FsViolation>(outcome);
      json result{{"kind", "fs-violation"},
                  {"sum", viol.sum},
                  {"subset", viol.subset},
                  {"target", target.to_json()}};
      return emit.report(command_echo("fs-check", argv_copy), result, false, horizon);
    }

    if (*c_ips) {
      std::uint64_t target_h = horizon ? horizon : bound;
      SetDescriptor target = parse_target(target_str, target_h);
      auto found = ip_witness_search(target, k_size, bound);
      if (!found) {
        json result{{"found", false}, {"note", "inconclusive below bound"}, {"bound", bound}};
        return emit.report(command_echo("ip-search", argv_copy), result, true, target_h);
      }
      auto recheck = verify_fs_subset(*found, target);
      bool ok = std::holds_alternative<FsCertificate>(recheck);
      json result{{"found", true}, {"generators", *found}, {"bound", bound}, {"reverified", ok}};
      return emit.report(command_echo("ip-search", argv_copy), result, ok, target_h);
    }

    if (*c_nic) {
      std::vector<int> arities = parse_int_list(arities_str);
      std::vector<SetDescriptor> classes;
      SetDescriptor target = [&] {
        if (!target_str.empty()) {
          SetDescriptor t = parse_target(target_str, bound);
          classes.push_back(t);
          return t;
        }
        QuadraticReal alpha = QuadraticReal::parse(alpha_str);
        QuadraticReal one = QuadraticReal::from_rational(1);
        QuadraticReal aprime = alpha_prime_str.empty()
                                   ? (one - alpha) * parse_rational(alpha_prime_frac)
                                   : QuadraticReal::parse(alpha_prime_str);
        // target: {n : {(n+1)alpha} in [1-alpha, 1)}, the letter-1 set of the
        // characteristic word; classes split at 1-alpha'.
        classes.push_back(SetDescriptor::rotation_interval(alpha, 0, 1, one - alpha,
                                                           one - aprime, bound));
        classes.push_back(
            SetDescriptor::rotation_interval(alpha, 0, 1, one - aprime, one, bound));
        return SetDescriptor::rotation_interval(alpha, 0, 1, one - alpha, one, bound);
      }();
      auto outcome = non_ip_partition_certificate(target, classes, arities, bound);
      if (const auto* cert = std::get_if<NonIpCertificate>(&outcome)) {
        return emit.report(command_echo("non-ip-cert", argv_copy), cert->to_json(), true, bound);
      }
      const auto& ce = std::get<NonIpCounterexample>(outcome);
      json result{{"kind", "non-ip-counterexample"},
                  {"class", ce.class_index},
                  {"elements", ce.elements},
                  {"sum", ce.sum}};
      return emit.report(command_echo("non-ip-cert", argv_copy), result, false, bound);
    }

    if (*c_sep) {
      WordPtr x = word_from_preset(word_args.preset);
      WordPtr y = word_from_preset(word2_preset);
      SeparationCertificate cert = separation_analysis(*x, *y, horizon);
      return emit.report(command_echo("separation", argv_copy), cert.to_json(), true, horizon);
    }

    if (*c_cls) {
      SturmianParams params = sturmian_from(word_args);
      Singularity s = classify_singularity(params);
      json result{{"singular", s.singular}};
      if (s.index) result["index"] = *s.index;
      return emit.report(command_echo("classify", argv_copy), result, true);
    }

    if (*c_ver) {
      SturmianParams params = sturmian_from(word_args);
      SturmianVerdict v = ip_verdict_sturmian(params, FiniteWord::parse(factor_str), horizon);
      bool ok = expect.empty() || (expect == "central") == v.central;
      return emit.report(command_echo("verdict", argv_copy), verdict_json(v), ok, horizon);
    }

    if (*c_prox) {
      WordPtr x = word_from_preset(word_args.preset);
      WordPtr y = word_from_preset(word2_preset);
      ProximalityScan scan = proximality_scan(*x, *y, horizon);
      json runs = json::array();
      for (std::size_t i = 0; i < scan.runs.size() && i < 200; ++i) {
        runs.push_back(json{{"position", scan.runs[i].position}, {"length", scan.runs[i].length}});
      }
      json result{{"max_run", scan.max_run}, {"runs", runs}, {"runs_count", scan.runs.size()}};
      return emit.report(command_echo("proximality", argv_copy), result, true, horizon);
    }

    if (*c_thick) {
      Substitution sigma = (!word_args.sub_inline.empty() || !word_args.rules_file.empty())
                               ? parse_sub_arg(word_args)
                               : weak_mixing_substitution();
      ThicknessProfile profile = thickness_profile(sigma, FiniteWord::parse(factor_u),
                                                   FiniteWord::parse(factor_v), max_gap, horizon);
      json achieved = json::array();
      for (std::size_t n = 0; n <= profile.n_max; ++n) {
        if (profile.hit(n)) achieved.push_back(n);
      }
      json result{{"achieved", achieved}, {"longest_run", profile.longest_run}};
      return emit.report(command_echo("thickness", argv_copy), result, true, horizon);
    }

    if (*c_t3) {
      T3System sys = t3_build(t_r, t_n);
      std::vector<Letter> buf = sys.word()->prefix(horizon);
      std::vector<std::uint64_t> sizes(static_cast<std::size_t>(t_r), 0);
      for (Letter a : buf) ++sizes[static_cast<std::size_t>(a - 1)];
      std::uint64_t covered = 0;
      for (auto s : sizes) covered += s;
      json verdicts = json::array();
      for (std::uint64_t n = 1; n <= query_n; ++n) {
        json central = json::array();
        for (Letter i = 1; i <= t_r; ++i) {
          if (sys.verdict_central(i, n)) central.push_back(i);
        }
        verdicts.push_back(json{{"n", n}, {"central_letters", central}});
      }
      json result{{"class_sizes", sizes}, {"verdicts", verdicts}};
      return emit.report(command_echo("t3", argv_copy), result, covered == horizon, horizon);
    }

    if (*c_t4) {
      T4Partition part = t4_partition(
          t_r, horizon,
          variant == "11100" ? WeakMixVariant::v11100 : WeakMixVariant::v11001);
      json factors = json::array();
      for (const FiniteWord& u : part.factors) factors.push_back(u.str());
      json sizes = json::array();
      for (const auto& c : part.classes) sizes.push_back(c.size());
      json result{{"m", part.m}, {"factors", factors}, {"class_sizes", sizes}};
      return emit.report(command_echo("t4", argv_copy), result, part.verified, horizon);
    }

    if (*c_pal) {
      // Accept 'aab' style words too; answer in the same alphabet.
      const bool alphabetic =
          !factor_str.empty() && std::all_of(factor_str.begin(), factor_str.end(), [](char c) {
            return c >= 'a' && c <= 'z';
          });
      FiniteWord w = alphabetic ? [&] {
        std::vector<Letter> letters;
        for (char c : factor_str) letters.push_back(c - 'a');
        return FiniteWord(letters);
      }()
                                : FiniteWord::parse(factor_str);
      FiniteWord closed = pal_closure(w);
      auto render = [&](const FiniteWord& x) {
        if (!alphabetic) return x.str();
        std::string s;
        for (Letter a : x) s += static_cast<char>('a' + a);
        return s;
      };
      json result{{"word", render(w)}, {"closure", render(closed)}};
      return emit.report(command_echo("pal-closure", argv_copy), result, true);
    }

    if (*c_psi) {
      WordPtr delta = directive == "staircase" ? staircase_directive()
                                               : word_from_preset(directive);
      WordPtr w = psi_stream(delta);
      json result{{"directive", delta->description()}, {"word", letters_str(w->prefix(length))}};
      return emit.report(command_echo("psi", argv_copy), result, true, length);
    }

    if (*c_part) {
      if (kind_str == "central") {
        CentralPartition part = infinite_central_partition(horizon);
        json classes = json::array();
        for (const auto& [a, positions] : part.classes) {
          json head = json::array();
          for (std::size_t i = 0; i < positions.size() && i < 5; ++i) head.push_back(positions[i]);
          classes.push_back(json{{"letter", a}, {"count", positions.size()}, {"first", head}});
        }
        json result{{"classes", classes}};
        return emit.report(command_echo("partition", argv_copy), result, true, horizon);
      }
      WordPtr w = resolve_word(word_args);
      PrefixCode code(parse_word_list(code_str));
      PrefixCodePartition part = prefix_code_partition(*w, code, horizon);
      if (!part.total()) {
        json result{{"kind", "not-maximal"},
                    {"position", *part.gap_position},
                    {"window", part.gap_window->str()}};
        return emit.report(command_echo("partition", argv_copy), result, false, horizon);
      }
      json classes = json::array();
      for (const auto& cls : part.classes) {
        classes.push_back(json{{"code_word", cls.code_word.str()}, {"count", cls.positions.size()}});
      }
      json result{{"classes", classes}};
      return emit.report(command_echo("partition", argv_copy), result, true, horizon);
    }

    if (*c_verify) {
      json cert;
      if (file_arg == "-") {
        std::cin >> cert;
      } else {
        std::ifstream in(file_arg);
        if (!in) throw std::invalid_argument("cannot open " + file_arg);
        in >> cert;
      }
      VerifyResult res = verify_certificate(cert);
      json result{{"ok", res.ok}, {"kind", res.kind}, {"detail", res.detail}};
      return emit.report(command_echo("verify", argv_copy), result, res.ok);
    }
  } catch (const InsufficientData& e) {
    err << "insufficient data: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StreamsIdentical& e) {
    err << "streams identical: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace ipword
