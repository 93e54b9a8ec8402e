#include "limitstab/comparator.hpp"
#include "limitstab/model_io.hpp"
#include "limitstab/render.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace limitstab;

// Rational <-> fractions.Fraction. Loading also accepts int and "p/q" str.
namespace pybind11::detail {

template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    try {
      if (py::isinstance<py::str>(src)) {
        value = parse_rational(src.cast<std::string>());
        return true;
      }
      if (PyBool_Check(src.ptr())) return false;
      if (py::isinstance<py::int_>(src)) {
        value = Rational(Integer(py::str(src).cast<std::string>()));
        return true;
      }
      const py::object fraction = py::module_::import("fractions").attr("Fraction");
      if (py::isinstance(src, fraction)) {
        const Integer num(py::str(src.attr("numerator")).cast<std::string>());
        const Integer den(py::str(src.attr("denominator")).cast<std::string>());
        value = Rational(num, den);
        return true;
      }
    } catch (const std::exception&) {
      return false;
    }
    return false;
  }

  static handle cast(const Rational& q, return_value_policy, handle) {
    const py::object fraction = py::module_::import("fractions").attr("Fraction");
    const py::object pyint = py::module_::import("builtins").attr("int");
    const std::string num = boost::multiprecision::numerator(q).str();
    const std::string den = boost::multiprecision::denominator(q).str();
    return fraction(pyint(num), pyint(den)).release();
  }
};

}  // namespace pybind11::detail

namespace {

CurveClass to_class(const std::vector<std::int64_t>& v) { return CurveClass(v); }
std::vector<std::int64_t> from_class(const CurveClass& c) { return c.coeffs(); }

ChernCharacter to_chern(const py::handle& obj) {
  if (py::isinstance<ChernCharacter>(obj)) return obj.cast<ChernCharacter>();
  if (py::isinstance<py::str>(obj)) return parse_chern(obj.cast<std::string>());
  const auto t = obj.cast<py::sequence>();
  if (t.size() != 4) throw std::invalid_argument("Chern character needs (r, c, gamma, n)");
  return ChernCharacter{t[0].cast<Rational>(), t[1].cast<Rational>(), t[2].cast<std::vector<Rational>>(),
                        t[3].cast<Rational>()};
}

py::dict table_dict(const ChamberTable& t) {
  py::list entries;
  for (const auto& e : t.entries) entries.append(py::make_tuple(*e.chamber.lo, *e.chamber.hi, e.value));
  py::list reports;
  for (const auto& r : t.reports) {
    py::list terms;
    for (const auto& term : r.terms) {
      py::dict d;
      d["beta1"] = from_class(term.datum.beta1);
      d["n1"] = term.datum.n1;
      d["beta2"] = from_class(term.datum.beta2);
      d["n2"] = term.datum.n2;
      d["contribution"] = term.contribution;
      terms.append(d);
    }
    py::dict d;
    d["k0"] = r.k0;
    d["l_minus"] = r.l_minus;
    d["l_plus"] = r.l_plus;
    d["terms"] = terms;
    d["warnings"] = r.warnings;
    reports.append(d);
  }
  py::dict out;
  out["beta"] = from_class(t.beta);
  out["n"] = t.n;
  out["entries"] = entries;
  out["reports"] = reports;
  return out;
}

}  // namespace

PYBIND11_MODULE(_limitstab, m) {
  m.doc() = "Exact limit-stability wall-crossing engine";

  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);

  py::class_<ChernCharacter>(m, "ChernCharacter")
      .def(py::init([](const Rational& r, const Rational& c, std::vector<Rational> gamma, const Rational& n) {
             return ChernCharacter{r, c, std::move(gamma), n};
           }),
           py::arg("r"), py::arg("c"), py::arg("gamma"), py::arg("n"))
      .def_readonly("r", &ChernCharacter::r)
      .def_readonly("c", &ChernCharacter::c)
      .def_readonly("gamma", &ChernCharacter::gamma)
      .def_readonly("n", &ChernCharacter::n)
      .def("__eq__", [](const ChernCharacter& a, const ChernCharacter& b) { return a == b; })
      .def("__repr__", [](const ChernCharacter& ch) { return "ChernCharacter" + format_chern(ch); })
      .def("__str__", &format_chern);

  py::class_<NumericalThreefold>(m, "Model")
      .def_static("preset", [](const std::string& preset) { return NumericalThreefold(preset_data(preset)); },
                  py::arg("preset"))
      .def_static("from_config", [](const std::string& text) { return NumericalThreefold(parse_config(text).data); },
                  py::arg("text"))
      .def_static("load", [](const std::string& path) { return load_model(path); }, py::arg("path"))
      .def("serialize", [](const NumericalThreefold& X) { return serialize_model(X.data()); })
      .def_property_readonly("name", &NumericalThreefold::name)
      .def_property_readonly("rank", &NumericalThreefold::rank)
      .def("__repr__", [](const NumericalThreefold& X) { return "<Model " + X.name() + ">"; });

  m.def("degree", [](const NumericalThreefold& X, const std::vector<std::int64_t>& g) { return degree(X, to_class(g)); },
        py::arg("model"), py::arg("gamma"));
  m.def("effective_below",
        [](const NumericalThreefold& X, const std::vector<std::int64_t>& b) {
          std::vector<std::vector<std::int64_t>> out;
          for (const auto& c : effective_below(X, to_class(b))) out.push_back(c.coeffs());
          return out;
        },
        py::arg("model"), py::arg("beta"));
  m.def("min_ch3", [](const NumericalThreefold& X, const std::vector<std::int64_t>& b) { return min_ch3(X, to_class(b)); },
        py::arg("model"), py::arg("beta"));

  m.def("ch_of_pair", [](const std::vector<std::int64_t>& b, std::int64_t n) { return ch_of_pair(to_class(b), n); },
        py::arg("beta"), py::arg("n"));
  m.def("dual", [](const py::handle& ch) { return dual(to_chern(ch)); }, py::arg("ch"));
  m.def("twisted_invariants",
        [](const NumericalThreefold& X, const py::handle& ch, const Rational& k) {
          const auto t = twisted_invariants(X, to_chern(ch), k);
          return py::make_tuple(t.v0, t.w1, t.w2, t.v3);
        },
        py::arg("model"), py::arg("ch"), py::arg("k"));
  m.def("charge_polynomial",
        [](const NumericalThreefold& X, const py::handle& ch, const Rational& k) {
          const auto z = charge_polynomial(X, to_chern(ch), k);
          return py::make_tuple(z.re.coeffs(), z.im.coeffs());
        },
        py::arg("model"), py::arg("ch"), py::arg("k"),
        "(re, im) coefficient lists in increasing powers of m.");
  m.def("compare_phases",
        [](const NumericalThreefold& X, const py::handle& f, const py::handle& e, const Rational& k) {
          return std::string(to_string(compare_phases(X, to_chern(f), to_chern(e), k)));
        },
        py::arg("model"), py::arg("F"), py::arg("E"), py::arg("k"));
  m.def("compare_phases_closed",
        [](const NumericalThreefold& X, const py::handle& f, const py::handle& e, const Rational& k) {
          return std::string(to_string(compare_phases_closed(X, to_chern(f), to_chern(e), k)));
        },
        py::arg("model"), py::arg("F"), py::arg("E"), py::arg("k"));

  m.def("wall_set",
        [](const NumericalThreefold& X, const std::vector<std::int64_t>& b, const Rational& lo, const Rational& hi) {
          return wall_set(X, to_class(b), lo, hi).walls;
        },
        py::arg("model"), py::arg("beta"), py::arg("k_lo"), py::arg("k_hi"));
  m.def("mu_threshold",
        [](const NumericalThreefold& X, const std::vector<std::int64_t>& b, std::int64_t n) {
          return mu_threshold(X, to_class(b), n);
        },
        py::arg("model"), py::arg("beta"), py::arg("n"));
  m.def("pt_bounds",
        [](const NumericalThreefold& X, const std::vector<std::int64_t>& b, std::int64_t n) {
          const auto p = pt_bounds(X, to_class(b), n);
          return py::make_tuple(p.k_pt, p.k_dual);
        },
        py::arg("model"), py::arg("beta"), py::arg("n"));

  py::class_<CrossingEngine>(m, "Engine")
      .def(py::init<const NumericalThreefold&>(), py::arg("model"), py::keep_alive<1, 2>())
      .def("chamber_table",
           [](CrossingEngine& e, const std::vector<std::int64_t>& b, std::int64_t n, const Rational& lo,
              const Rational& hi) { return table_dict(e.chamber_table(to_class(b), n, lo, hi)); },
           py::arg("beta"), py::arg("n"), py::arg("k_lo"), py::arg("k_hi"))
      .def("table_tsv",
           [](CrossingEngine& e, const std::vector<std::int64_t>& b, std::int64_t n, const Rational& lo,
              const Rational& hi, bool collapse) { return table_tsv(e.chamber_table(to_class(b), n, lo, hi), collapse); },
           py::arg("beta"), py::arg("n"), py::arg("k_lo"), py::arg("k_hi"), py::arg("collapse") = true)
      .def("table_svg",
           [](CrossingEngine& e, const std::vector<std::int64_t>& b, std::int64_t n, const Rational& lo,
              const Rational& hi) { return table_svg(e.chamber_table(to_class(b), n, lo, hi)); },
           py::arg("beta"), py::arg("n"), py::arg("k_lo"), py::arg("k_hi"))
      .def("value",
           [](CrossingEngine& e, const std::vector<std::int64_t>& b, std::int64_t n, const Rational& k) {
             return e.value(to_class(b), n, k);
           },
           py::arg("beta"), py::arg("n"), py::arg("k"))
      .def("pt_symmetry",
           [](CrossingEngine& e, const std::vector<std::int64_t>& b, std::int64_t n_max) {
             const auto rep = e.pt_symmetry_check(to_class(b), n_max);
             py::dict out;
             out["laurent"] = rep.laurent;
             out["consistent"] = rep.consistent();
             out["skipped"] = rep.skipped;
             py::list rows;
             for (const auto& r : rep.rows) {
               py::dict d;
               d["n"] = r.n;
               d["p_n"] = r.p_n;
               d["p_minus_n"] = r.p_minus_n;
               d["relation_defect"] = r.relation_defect ? py::cast(*r.relation_defect) : py::none();
               rows.append(d);
             }
             out["rows"] = rows;
             return out;
           },
           py::arg("beta"), py::arg("n_max"));
}
