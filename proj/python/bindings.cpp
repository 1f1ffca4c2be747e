// Text-level bindings: matrices cross the boundary as JSON text, sets and
// ideal descriptors as their canonical strings. The Python package wraps
// these into list/dict values.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "tropmono/errors.hpp"
#include "tropmono/format.hpp"
#include "tropmono/green.hpp"
#include "tropmono/ideals.hpp"
#include "tropmono/structure.hpp"
#include "tropmono/verify.hpp"

namespace py = pybind11;
using namespace tropmono;

namespace {
  TropMatrix m(std::string const& text) {
    return parse_matrix(text);
  }

  ClosedConvexSet s(std::string const& text) {
    return parse_set(text);
  }

  std::optional<std::string> maybe(std::optional<TropMatrix> const& a) {
    if (!a) {
      return std::nullopt;
    }
    return to_json_string(*a);
  }
}  // namespace

PYBIND11_MODULE(_core, mod) {
  py::register_exception<VerificationFailure>(mod, "VerificationFailure",
                                              PyExc_RuntimeError);

  mod.def("mul", [](std::string const& a, std::string const& b) {
    return to_json_string(mat_mul(m(a), m(b)));
  });
  mod.def("add", [](std::string const& a, std::string const& b) {
    return to_json_string(mat_add(m(a), m(b)));
  });
  mod.def("transpose",
          [](std::string const& a) { return to_json_string(transpose(m(a))); });
  mod.def("solve_right", [](std::string const& b, std::string const& a) {
    return maybe(solve_right(m(b), m(a)));
  });

  mod.def("column_space",
          [](std::string const& a) { return to_string(proj_column_space(m(a))); });
  mod.def("row_space",
          [](std::string const& a) { return to_string(proj_row_space(m(a))); });
  mod.def("iso_type", [](std::string const& t) { return to_string(iso_type(s(t))); });
  mod.def("isometric", [](std::string const& x, std::string const& y) {
    return isometric(s(x), s(y));
  });

  mod.def("related", [](std::string const& rel, std::string const& a,
                        std::string const& b) {
    return related(parse_relation(rel), m(a), m(b));
  });
  mod.def("leq_r", [](std::string const& a, std::string const& b) {
    return leq_R(m(a), m(b));
  });
  mod.def("leq_l", [](std::string const& a, std::string const& b) {
    return leq_L(m(a), m(b));
  });
  mod.def("leq_j", [](std::string const& a, std::string const& b) {
    return leq_J(m(a), m(b));
  });
  mod.def("witness_z", [](std::string const& x, std::string const& y) {
    return to_json_string(witness_Z(s(x), s(y)));
  });
  mod.def("d_class_witness", [](std::string const& a, std::string const& b) {
    return to_json_string(d_class_witness(m(a), m(b)));
  });

  mod.def("is_idempotent", [](std::string const& a) { return is_idempotent(m(a)); });
  mod.def("idempotent_in_h", [](std::string const& x, std::string const& y) {
    return maybe(idempotent_in_H(s(x), s(y)));
  });
  mod.def("regular_witness",
          [](std::string const& a) { return to_json_string(regular_witness(m(a))); });
  mod.def("group_type", [](std::string const& x, std::string const& y) {
    return to_string(group_type_of_H(s(x), s(y)));
  });
  mod.def(
      "subgroup_element",
      [](std::string const& family, std::string const& a,
         std::optional<std::string> const& x, std::optional<std::string> const& y) {
        SubgroupParams p;
        if (x) {
          p.x = parse_rational(*x);
        }
        if (y) {
          p.y = parse_rational(*y);
        }
        return to_json_string(
            subgroup_element(parse_subgroup_family(family), parse_rational(a), p));
      },
      py::arg("family"), py::arg("a"), py::arg("x") = py::none(),
      py::arg("y") = py::none());

  mod.def("principal_ideal",
          [](std::string const& a) { return to_string(principal_ideal_of(m(a))); });
  mod.def("ideal_contains", [](std::string const& d, std::string const& a) {
    return ideal_contains(parse_descriptor(d), m(a));
  });
  mod.def("ideal_compare", [](std::string const& x, std::string const& y) {
    auto const c = ideal_compare(parse_descriptor(x), parse_descriptor(y));
    return c < 0 ? -1 : c > 0 ? 1 : 0;
  });
  mod.def("ideal_from_generators", [](std::vector<std::string> const& gens) {
    std::vector<TropMatrix> ms;
    for (auto const& g : gens) {
      ms.push_back(m(g));
    }
    return to_string(ideal_from_generators(ms));
  });

  mod.def("suite_names", &suite_names);
  mod.def("run_suite", [](std::string const& name, std::size_t samples,
                          std::uint64_t seed) {
    auto const r = run_suite(name, samples, seed);
    return py::dict(py::arg("suite") = r.suite, py::arg("passed") = r.passed,
                    py::arg("failed") = r.failed, py::arg("failures") = r.failures);
  });

  mod.def("cli", [](std::vector<std::string> const& args) {
    std::ostringstream out;
    int const          code = cli::run(args, out);
    return py::make_tuple(code, out.str());
  });
}
