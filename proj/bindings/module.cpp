#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ipword/dynamics.hpp"
#include "ipword/ipcheck.hpp"
#include "ipword/json_io.hpp"
#include "ipword/numeration.hpp"
#include "ipword/palindromic.hpp"
#include "ipword/set_descriptor.hpp"
#include "ipword/word_specs.hpp"
#include "ipword/words.hpp"

namespace py = pybind11;
using namespace ipword;

namespace {

FiniteWord as_word(const std::vector<Letter>& letters) { return FiniteWord(letters); }

SetDescriptor occ_target(const WordPtr& w, const std::vector<Letter>& factor,
                         std::uint64_t horizon) {
  return SetDescriptor::occurrences_of(w, as_word(factor), horizon);
}

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      py::dict d;
      for (auto it = j.begin(); it != j.end(); ++it) d[py::str(it.key())] = json_to_py(it.value());
      return d;
    }
    case nlohmann::json::value_t::array: {
      py::list l;
      for (const auto& v : j) l.append(json_to_py(v));
      return l;
    }
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    default:
      return py::none();
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-arithmetic uniformly recurrent words, occurrence partitions and "
            "finite IP/central-set certificates";

  py::class_<WordStream, WordPtr>(m, "Word")
      .def("letter_at", &WordStream::letter_at, py::arg("n"))
      .def("prefix", &WordStream::prefix, py::arg("count"))
      .def_property_readonly("description", &WordStream::description)
      .def("__repr__",
           [](const WordStream& w) { return "<Word: " + w.description() + ">"; });

  m.def("fibonacci", [] { return m_bonacci(2); });
  m.def("m_bonacci", &m_bonacci, py::arg("m"));
  m.def("thue_morse", &generalized_tm_fixed_point, py::arg("r"), py::arg("i"));
  m.def("weak_mixing", [] { return weak_mixing_word(); });
  m.def("psi_staircase", [] { return psi_stream(staircase_directive()); });
  m.def("digit_rule_word", &digit_rule_word, py::arg("m"));
  m.def("constant", &constant_word, py::arg("letter"));
  m.def("periodic",
        [](const std::vector<Letter>& w) { return periodic_word(as_word(w)); },
        py::arg("pattern"));
  m.def("prepend",
        [](const std::vector<Letter>& head, WordPtr tail) {
          return prepend_word(as_word(head), std::move(tail));
        },
        py::arg("head"), py::arg("tail"));
  m.def("from_rules",
        [](const std::string& rules, Letter start) {
          return fixed_point(Substitution::parse_rules(rules), start);
        },
        py::arg("rules"), py::arg("start"));
  m.def("from_preset", &word_from_preset, py::arg("preset"));
  m.def("mechanical",
        [](const std::string& alpha, const std::string& rho, const std::string& convention) {
          auto [p, q] = parse_rho(rho);
          SturmianParams params(QuadraticReal::parse(alpha), p, q,
                                convention == "upper" ? SturmianParams::Convention::upper
                                                      : SturmianParams::Convention::lower);
          return mechanical_word(params);
        },
        py::arg("alpha"), py::arg("rho") = "a", py::arg("convention") = "lower");
  m.def("characteristic",
        [](const std::string& alpha) { return characteristic_word(QuadraticReal::parse(alpha)); },
        py::arg("alpha"));

  m.def("occurrences",
        [](const WordPtr& w, const std::vector<Letter>& factor, std::uint64_t horizon) {
          return occurrences(*w, as_word(factor), horizon).positions;
        },
        py::arg("word"), py::arg("factor"), py::arg("horizon"));
  m.def("complexity_profile",
        [](const WordPtr& w, std::size_t n_max, std::uint64_t horizon) {
          return complexity_profile(*w, n_max, horizon).counts;
        },
        py::arg("word"), py::arg("n_max"), py::arg("horizon"));
  m.def("special_factors",
        [](const WordPtr& w, std::size_t n, std::uint64_t horizon) {
          SpecialFactors sf = special_factors(*w, n, horizon);
          auto lift = [](const std::set<FiniteWord>& s) {
            std::vector<std::vector<Letter>> out;
            for (const FiniteWord& u : s) out.push_back(u.letters());
            return out;
          };
          return py::make_tuple(lift(sf.left), lift(sf.right), lift(sf.bispecial));
        },
        py::arg("word"), py::arg("n"), py::arg("horizon"));
  m.def("recurrence_gap",
        [](const WordPtr& w, const std::vector<Letter>& factor, std::uint64_t horizon) {
          return recurrence_gap(*w, as_word(factor), horizon);
        },
        py::arg("word"), py::arg("factor"), py::arg("horizon"));

  m.def("zeckendorff",
        [](std::uint64_t n, int m) { return greedy_representation(m, BigInt(n)).str(); },
        py::arg("n"), py::arg("m") = 2);
  m.def("decode",
        [](const std::string& digits, int m) {
          return decode_value(m, DigitWord::parse(digits, m)).convert_to<std::uint64_t>();
        },
        py::arg("digits"), py::arg("m") = 2);
  m.def("digit_rule_letter",
        [](int m, std::uint64_t n) { return digit_rule_letter(m, BigInt(n)); }, py::arg("m"),
        py::arg("n"));

  m.def("fs_set", [](const std::vector<std::uint64_t>& xs) { return fs_set(xs); }, py::arg("xs"));
  m.def("fs_check",
        [](const WordPtr& w, const std::vector<Letter>& factor,
           const std::vector<std::uint64_t>& gens, std::uint64_t horizon) {
          auto outcome = verify_fs_subset(gens, occ_target(w, factor, horizon));
          if (const auto* cert = std::get_if<FsCertificate>(&outcome)) {
            return json_to_py(cert->to_json());
          }
          const auto& viol = std::get<FsViolation>(outcome);
          return json_to_py(nlohmann::json{
              {"kind", "fs-violation"}, {"sum", viol.sum}, {"subset", viol.subset}});
        },
        py::arg("word"), py::arg("factor"), py::arg("generators"), py::arg("horizon"));
  m.def("ip_witness_search",
        [](const WordPtr& w, const std::vector<Letter>& factor, int k, std::uint64_t bound)
            -> std::optional<std::vector<std::uint64_t>> {
          return ip_witness_search(occ_target(w, factor, bound), k, bound);
        },
        py::arg("word"), py::arg("factor"), py::arg("k"), py::arg("bound"));

  m.def("pal_closure",
        [](const std::vector<Letter>& w) { return pal_closure(as_word(w)).letters(); },
        py::arg("word"));
  m.def("iterated_pal_closure",
        [](const std::vector<Letter>& w) { return iterated_pal_closure(as_word(w)).letters(); },
        py::arg("directive"));

  m.def("classify_singularity",
        [](const std::string& alpha, const std::string& rho) {
          auto [p, q] = parse_rho(rho);
          Singularity s = classify_singularity(SturmianParams(QuadraticReal::parse(alpha), p, q));
          py::dict d;
          d["singular"] = s.singular;
          if (s.index) d["index"] = *s.index;
          return d;
        },
        py::arg("alpha"), py::arg("rho"));
  m.def("ip_verdict",
        [](const std::string& alpha, const std::string& rho, const std::string& convention,
           const std::vector<Letter>& factor, std::uint64_t horizon) {
          auto [p, q] = parse_rho(rho);
          SturmianParams params(QuadraticReal::parse(alpha), p, q,
                                convention == "upper" ? SturmianParams::Convention::upper
                                                      : SturmianParams::Convention::lower);
          return json_to_py(ip_verdict_sturmian(params, as_word(factor), horizon).to_json());
        },
        py::arg("alpha"), py::arg("rho"), py::arg("convention"), py::arg("factor"),
        py::arg("horizon"));
  m.def("separation_analysis",
        [](const WordPtr& x, const WordPtr& y, std::uint64_t horizon) {
          return json_to_py(separation_analysis(*x, *y, horizon).to_json());
        },
        py::arg("x"), py::arg("y"), py::arg("horizon"));
  m.def("coincidence_check", &coincidence_check, py::arg("r"), py::arg("i"), py::arg("j"),
        py::arg("horizon"));

  m.attr("__version__") = "0.1.0";
}
