#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "charp/cli.hpp"
#include "charp/errors.hpp"
#include "charp/factor.hpp"
#include "charp/frobenius.hpp"
#include "charp/ideal.hpp"
#include "charp/parser.hpp"
#include "charp/sweep.hpp"

namespace py = pybind11;
using namespace charp;

namespace {

// Python-facing handle; the engine shares rings as pointers to const.
struct Ring {
  RingPtr ptr;
};

RingPtr make_ring(std::uint32_t p, const std::vector<std::string>& vars, const std::string& order) {
  const MonomialOrder grevlex = PolyRing::default_order(vars);
  if (order == "grevlex") return PolyRing::make(p, vars, grevlex);
  if (order == "lex") return PolyRing::make(p, vars, MonomialOrder::lex(grevlex.precedence()));
  if (order == "block") {
    std::vector<std::size_t> front;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < vars.size(); ++i) (vars[i] == PolyRing::kParameter ? rest : front).push_back(i);
    return PolyRing::make(p, vars, MonomialOrder::block(front, rest));
  }
  throw PreconditionError("order must be grevlex, lex or block");
}

// Generators may be given as polynomials or as strings to parse.
std::vector<MultiPoly> as_polys(const RingPtr& ring, const py::iterable& gens) {
  std::vector<MultiPoly> out;
  for (const auto& g : gens) {
    if (py::isinstance<py::str>(g)) {
      out.push_back(parse(g.cast<std::string>(), ring));
    } else {
      out.push_back(g.cast<MultiPoly>().in_ring(ring));
    }
  }
  return out;
}

Hypersurface hypersurface_from(const MultiPoly& f) {
  const auto split = split_binary_form(f);
  return split ? Hypersurface(f, *split) : Hypersurface(f);
}

py::list divisor_strings(const std::vector<UniPoly>& ds) {
  py::list out;
  for (const auto& d : ds) out.append(d);
  return out;
}

}  // namespace

PYBIND11_MODULE(charp, m) {
  m.doc() = "Exact commutative algebra over F_p[t, x, y]";

  auto base = py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ContextError>(m, "ContextError", PyExc_ValueError);
  py::register_exception<DegenerateCaseError>(m, "DegenerateCaseError", PyExc_ValueError);
  py::register_exception<ArithmeticError>(m, "ArithmeticError", PyExc_ArithmeticError);

  py::class_<UniPoly>(m, "UniPoly")
      .def(py::init([](std::uint32_t p, const std::vector<std::int64_t>& coeffs) {
             const PrimeField f(p);
             std::vector<FieldElem> c;
             for (auto v : coeffs) c.push_back(f.from_int(v));
             return UniPoly(f, c);
           }),
           py::arg("p"), py::arg("coeffs"))
      .def_property_readonly("degree", &UniPoly::degree)
      .def_property_readonly("coeffs",
                             [](const UniPoly& u) {
                               std::vector<std::uint32_t> out;
                               for (auto c : u.coefficients()) out.push_back(c.value);
                               return out;
                             })
      .def("is_zero", &UniPoly::is_zero)
      .def("monic", &UniPoly::monic)
      .def("divides", [](const UniPoly& d, const UniPoly& f) { return divides(d, f); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self % py::self)
      .def(py::self == py::self)
      .def("__str__", [](const UniPoly& u) { return u.to_string(); })
      .def("__repr__", [](const UniPoly& u) { return "UniPoly(" + u.to_string() + ")"; });

  py::class_<Ring>(m, "Ring")
      .def(py::init([](std::uint32_t p, const std::vector<std::string>& vars, const std::string& order) {
             return Ring{make_ring(p, vars, order)};
           }),
           py::arg("p"), py::arg("vars") = std::vector<std::string>{"t", "x", "y"}, py::arg("order") = "grevlex")
      .def_property_readonly("characteristic", [](const Ring& r) { return r.ptr->field().characteristic(); })
      .def_property_readonly("variables", [](const Ring& r) { return r.ptr->variables(); })
      .def("parse", [](const Ring& r, const std::string& s) { return parse(s, r.ptr); })
      .def("__eq__", [](const Ring& a, const Ring& b) { return *a.ptr == *b.ptr; })
      .def("__repr__", [](const Ring& r) {
        return "Ring(p=" + std::to_string(r.ptr->field().characteristic()) + ", order " +
               r.ptr->order().describe(r.ptr->variables()) + ")";
      });

  py::class_<MultiPoly>(m, "Poly")
      .def_property_readonly("ring", [](const MultiPoly& f) { return Ring{f.ring()}; })
      .def_property_readonly("total_degree", &MultiPoly::total_degree)
      .def("is_zero", &MultiPoly::is_zero)
      .def("monic", &MultiPoly::monic)
      .def("frobenius", &MultiPoly::frobenius, py::arg("q"))
      .def("__pow__", [](const MultiPoly& f, std::uint64_t k) { return f.pow(k); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &MultiPoly::to_string)
      .def("__repr__", [](const MultiPoly& f) { return "Poly(" + f.to_string() + ")"; });

  py::class_<Ideal>(m, "Ideal")
      .def(py::init([](const Ring& r, const py::iterable& gens) { return Ideal(r.ptr, as_polys(r.ptr, gens)); }),
           py::arg("ring"), py::arg("gens"))
      .def_property_readonly("ring", [](const Ideal& i) { return Ring{i.ring()}; })
      .def_property_readonly("generators", &Ideal::generators)
      .def("groebner_basis", [](const Ideal& i) { return i.groebner_basis(); })
      .def("is_unit", &Ideal::is_unit)
      .def("is_zero", &Ideal::is_zero)
      .def("__contains__",
           [](const Ideal& i, const py::object& f) {
             return member(py::isinstance<py::str>(f) ? parse(f.cast<std::string>(), i.ring())
                                                      : f.cast<MultiPoly>().in_ring(i.ring()),
                           i);
           })
      .def("__eq__", [](const Ideal& a, const Ideal& b) { return ideal_equal(a, b); })
      .def("__add__", [](const Ideal& a, const Ideal& b) { return a + b; })
      .def("__mul__", [](const Ideal& a, const Ideal& b) { return a * b; })
      .def("intersect", &intersect)
      .def("colon",
           [](const Ideal& a, const py::object& by) {
             if (py::isinstance<Ideal>(by)) return colon_ideal(a, by.cast<Ideal>());
             return colon_element(a, as_polys(a.ring(), py::make_tuple(by)).front());
           })
      .def("saturate", &saturate)
      .def("eliminate", &eliminate, py::arg("drop"))
      .def("bracket_power", &bracket_power, py::arg("q"))
      .def("contract_to_t", &contract_to_t)
      .def("__str__", &Ideal::to_string)
      .def("__repr__", [](const Ideal& i) { return "Ideal" + i.to_string(); });

  m.def("tau", &tau, py::arg("p"), py::arg("e"));
  m.def(
      "factor",
      [](const UniPoly& u, std::uint64_t seed) {
        std::vector<std::pair<UniPoly, unsigned>> out;
        for (const auto& f : uni_factor(u, seed).factors) out.push_back(f);
        return out;
      },
      py::arg("f"), py::arg("seed") = kDefaultFactorSeed);
  m.def("is_irreducible", &is_irreducible);

  m.def(
      "standard_ring", [](std::uint32_t p) { return Ring{standard_ring(p)}; }, py::arg("p"));
  m.def(
      "frobenius_ideal",
      [](const MultiPoly& f, unsigned e) { return frobenius_ideal(hypersurface_from(f), e).ideal; }, py::arg("F"),
      py::arg("e"));
  m.def(
      "four_lines", [](std::uint32_t p) { return Hypersurface::four_lines(p).polynomial(); }, py::arg("p"));
  m.def("witness_colon", &witness_colon, py::arg("p"), py::arg("e"));
  m.def(
      "torsion_divisors",
      [](const MultiPoly& f, unsigned e) {
        const ElementaryDivisors d = torsion_elementary_divisors(hypersurface_from(f), e);
        return py::make_tuple(divisor_strings(d.divisors), d.free_rank);
      },
      py::arg("F"), py::arg("e"), "All nonzero invariant factors (units included) and the free rank.");
  m.def(
      "maximal_ass_primes",
      [](const MultiPoly& f, unsigned e, std::uint64_t seed) {
        py::list out;
        for (const auto& r : maximal_ass_primes(hypersurface_from(f), e, seed)) {
          py::dict d;
          d["prime"] = r.prime;
          d["associated"] = r.associated;
          d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
          out.append(d);
        }
        return out;
      },
      py::arg("F"), py::arg("e"), py::arg("seed") = kDefaultFactorSeed);
  m.def(
      "is_associated_maximal",
      [](const Ideal& i, const UniPoly& pi) {
        const AssProbeResult r = is_associated_maximal(i, pi);
        return py::make_tuple(r.associated, r.witness ? py::cast(*r.witness) : py::none());
      },
      py::arg("ideal"), py::arg("pi"));
  m.def(
      "ge_check", [](const MultiPoly& f, unsigned e) { return ge_check(hypersurface_from(f), e); }, py::arg("F"),
      py::arg("e"));
  m.def("lemma11_check", &lemma11_check, py::arg("p"), py::arg("e"));
  m.def(
      "theorem12_check",
      [](std::uint32_t p, unsigned e) {
        const Theorem12Report r = theorem12_check(p, e);
        py::dict d;
        d["member_tau_g"] = r.member_tau_g;
        d["not_member_g"] = r.not_member_g;
        d["contraction_equals_tau"] = r.contraction_equals_tau;
        return d;
      },
      py::arg("p"), py::arg("e"));
  m.def(
      "sweep_record",
      [](std::uint32_t p, unsigned e, const std::string& f, std::uint64_t seed) {
        return to_jsonl(evaluate_cell(p, e, f, seed));
      },
      py::arg("p"), py::arg("e"), py::arg("F") = std::string(kFourLinesExpr), py::arg("seed") = kDefaultFactorSeed,
      "One sweep cell as a JSON line.");
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
