#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "leibniz/algebra.hpp"
#include "leibniz/cli.hpp"
#include "leibniz/cohomology.hpp"
#include "leibniz/constructions.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/io.hpp"

namespace py = pybind11;
using namespace leibniz;

namespace {

// Rationals cross the boundary as strings like "-3/4"; the Python layer
// converts them to fractions.Fraction.
std::vector<Rational> parse_all(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(parse_rational_text(x));
  return out;
}

py::dict report_dict(const CohomologyReport& r) {
  py::dict d;
  d["degree"] = r.degree;
  d["dim_CL"] = r.dim_CL;
  d["dim_ZL"] = r.dim_ZL;
  d["dim_BL"] = r.dim_BL;
  d["dim_HL"] = r.dim_HL;
  return d;
}

CohomologyOptions options(std::size_t max_degree, std::uint64_t max_cells) {
  CohomologyOptions o;
  o.max_degree = max_degree;
  o.max_cells = max_cells;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations with finite-dimensional Leibniz algebras over Q";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<MathError> math_error(m, "MathError", PyExc_ArithmeticError);
  static py::exception<GuardError> guard_error(m, "GuardError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GuardError& e) {
      py::set_error(guard_error, e.what());
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const MathError& e) {
      py::set_error(math_error, e.what());
    }
  });

  py::class_<LeibnizAlgebra>(m, "Algebra")
      .def_static("from_json", [](const std::string& text, bool verify) {
        return parse_algebra_json(text, verify ? LeibnizAlgebra::Verify::kIdentity
                                               : LeibnizAlgebra::Verify::kNone);
      }, py::arg("text"), py::arg("verify") = true)
      .def("to_json", &algebra_to_json)
      .def_property_readonly("dim", &LeibnizAlgebra::dim)
      .def_property_readonly("labels", &LeibnizAlgebra::labels)
      .def("product", [](const LeibnizAlgebra& L, std::size_t i, std::size_t j) {
        std::vector<std::pair<std::size_t, std::string>> out;
        for (const auto& e : L.product(i, j)) out.emplace_back(e.index, to_string(e.value));
        return out;
      })
      .def("__repr__", [](const LeibnizAlgebra& L) {
        return "<Algebra dim=" + std::to_string(L.dim()) + ">";
      });

  m.def("identity_failures", [](const LeibnizAlgebra& L) { return check_identity(L).failures; },
        "Number of basis triples where the Leibniz identity fails");
  m.def("is_lie", &is_lie);
  m.def("is_nilpotent", &is_nilpotent_algebra);
  m.def("is_solvable", &is_solvable_algebra);
  m.def("lower_central_dims", [](const LeibnizAlgebra& L) { return lower_central_series(L).dims; });
  m.def("derived_dims", [](const LeibnizAlgebra& L) { return derived_series(L).dims; });
  m.def("center_dim", [](const LeibnizAlgebra& L) { return center(L).dim(); });
  m.def("right_annihilator_dim", [](const LeibnizAlgebra& L) { return right_annihilator(L).dim(); });

  m.def("build_n_c", [](const std::string& seq) { return build_n_c(parse_char_seq(seq)); });
  m.def("build_r_c", [](const std::string& seq) { return build_r_c(parse_char_seq(seq)); });
  m.def("build_L", [](const std::string& seq, const std::vector<std::string>& alphas,
                      const std::vector<std::string>& betas) {
    return build_L_general({parse_char_seq(seq), parse_all(alphas), parse_all(betas)});
  });
  m.def("build_R", [](const std::string& seq) { return build_R_general(parse_char_seq(seq)); });
  m.def("build_R_two_block", &build_R_particular, py::arg("n1"), py::arg("n2"));

  m.def("derivation_dim", [](const LeibnizAlgebra& L) { return derivation_space(L).dim(); });
  m.def("inner_derivation_dim", [](const LeibnizAlgebra& L) { return inner_derivations(L).dim(); });
  m.def("characteristic_sequence", [](const LeibnizAlgebra& L, std::size_t samples, std::uint64_t seed) {
    return characteristic_sequence(L, samples, seed).parts;
  }, py::arg("algebra"), py::arg("samples") = kDefaultCharSeqSamples, py::arg("seed") = kDefaultSeed);

  m.def("cohomology", [](const LeibnizAlgebra& L, std::size_t degree, std::size_t max_degree,
                         std::uint64_t max_cells) {
    py::gil_scoped_release release;
    const auto r = cohomology_report(adjoint_module(L), degree, options(max_degree, max_cells));
    py::gil_scoped_acquire acquire;
    return report_dict(r);
  }, py::arg("algebra"), py::arg("degree"), py::arg("max_degree") = kDefaultMaxDegree,
        py::arg("max_cells") = kDefaultMaxCells, "Adjoint Leibniz cohomology in one degree");
  m.def("is_complete", [](const LeibnizAlgebra& L) { return is_complete(L).complete; });
  m.def("is_rigid", [](const LeibnizAlgebra& L) { return is_cohomologically_rigid(L).rigid; });

  m.def("partition_count", &partition_count);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Runs the command line front end in process; returns (exit_code, stdout, stderr)");
}
