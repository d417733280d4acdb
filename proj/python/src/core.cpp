#include "fockradial/fock.hpp"
#include "fockradial/hermite.hpp"
#include "fockradial/io.hpp"
#include "fockradial/quadrature.hpp"
#include "fockradial/radial.hpp"
#include "fockradial/special.hpp"
#include "fockradial/stft.hpp"
#include "fockradial/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fockradial;

namespace {

using Exponents = std::vector<unsigned>;
using TermDict = std::map<Exponents, Complex>;

CoefficientMap::Terms to_terms(const TermDict& d)
{
  CoefficientMap::Terms terms;
  for (const auto& [e, a] : d) terms.emplace(MultiIndex(e), a);
  return terms;
}

// Keys become tuples so they are hashable on the Python side.
py::dict to_dict(const CoefficientMap& f)
{
  py::dict d;
  for (const auto& [alpha, a] : f.terms()) d[py::tuple(py::cast(alpha.exponents()))] = a;
  return d;
}

std::vector<Exponents> exponents_of(const std::vector<MultiIndex>& v)
{
  std::vector<Exponents> out;
  for (const auto& a : v) out.push_back(a.exponents());
  return out;
}

std::vector<PhasePoint> phase_points(const std::vector<std::pair<RealPoint, RealPoint>>& pts)
{
  std::vector<PhasePoint> out;
  for (const auto& [x, xi] : pts) out.emplace_back(x, xi);
  return out;
}

template <class Series>
void bind_series(py::class_<Series>& c)
{
  c.def(py::init([](std::size_t dim, const TermDict& terms) { return Series(dim, to_terms(terms)); }),
        py::arg("dim"), py::arg("terms") = TermDict{})
      .def_static("basis", [](const Exponents& alpha, Complex c) { return Series::basis(MultiIndex(alpha), c); },
                  py::arg("alpha"), py::arg("c") = Complex(1.0))
      .def_property_readonly("dim", &Series::dim)
      .def_property_readonly("degree", &Series::degree)
      .def_property_readonly("terms", [](const Series& f) { return to_dict(f); })
      .def("coefficient", [](const Series& f, const Exponents& alpha) { return f.coefficient(MultiIndex(alpha)); })
      .def("norm_squared", &Series::norm_squared)
      .def("to_json", [](const Series& f) { return io::to_json(f).dump(); })
      .def("__len__", [](const Series& f) { return f.terms().size(); });
}

} // namespace

PYBIND11_MODULE(_core, m)
{
  m.doc() = "Bargmann transform, Fock space and radial symmetry numerics";

  static py::exception<FormatError> format_error(m, "FormatError", PyExc_ValueError);
  static py::exception<NonRadialError> not_radial(m, "NotRadialError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const FormatError& e) {
      py::set_error(format_error, e.what());
    } catch (const NonRadialError& e) {
      py::set_error(not_radial, e.what());
    }
  });

  m.def("enumerate_multi_indices",
        [](std::size_t dim, unsigned max_degree) { return exponents_of(enumerate_multi_indices(dim, max_degree)); },
        py::arg("dim"), py::arg("max_degree"));
  m.def("enumerate_shell", [](std::size_t dim, unsigned k) { return exponents_of(enumerate_shell(dim, k)); },
        py::arg("dim"), py::arg("degree"));
  m.def("hermite_functions", &hermite_functions, py::arg("max_order"), py::arg("t"));
  m.def("hermite_eval", [](const Exponents& alpha, const RealPoint& x) { return hermite_eval(MultiIndex(alpha), x); },
        py::arg("alpha"), py::arg("x"));
  m.def("gauss_hermite", [](std::size_t n) {
    auto r = gauss_hermite(n);
    return py::make_tuple(r.nodes, r.weights);
  }, py::arg("n"));
  m.def("gauss_laguerre", [](std::size_t n) {
    auto r = gauss_laguerre(n);
    return py::make_tuple(r.nodes, r.weights);
  }, py::arg("n"));
  m.def("shell_weight", [](const Exponents& gamma) { return shell_weight(MultiIndex(gamma)); }, py::arg("gamma"));

  py::class_<HermiteExpansion> hermite(m, "HermiteExpansion");
  bind_series(hermite);
  hermite.def("__call__", [](const HermiteExpansion& f, const RealPoint& x) { return evaluate(f, x); });
  hermite.def_static("from_json", [](const std::string& s) {
    return io::hermite_expansion_from_json(io::json::parse(s));
  });

  py::class_<FockSeries> fock(m, "FockSeries");
  bind_series(fock);
  fock.def("__call__", [](const FockSeries& F, const ComplexPoint& z) { return eval_fock_series(F, z); });
  fock.def_static("from_json", [](const std::string& s) { return io::fock_series_from_json(io::json::parse(s)); });

  py::class_<SampledFunction>(m, "SampledFunction")
      .def_static("from_expansion", &SampledFunction::from_expansion, py::arg("f"), py::arg("order"))
      .def_property_readonly("dim", &SampledFunction::dim)
      .def_property_readonly("order", &SampledFunction::order)
      .def_property_readonly("values", &SampledFunction::values)
      .def("to_json", [](const SampledFunction& s) { return io::to_json(s).dump(); })
      .def_static("from_json", [](const std::string& s) { return io::sampled_function_from_json(io::json::parse(s)); });

  m.def("bargmann", &bargmann_of_expansion, py::arg("f"));
  m.def("inverse_bargmann", &inverse_bargmann, py::arg("F"));
  m.def("bargmann_kernel", [](const ComplexPoint& z, const RealPoint& y) { return bargmann_kernel(z, y); },
        py::arg("z"), py::arg("y"));
  m.def("bargmann_of_samples", [](const SampledFunction& s, const ComplexPoint& z) { return bargmann_of_samples(s, z); },
        py::arg("samples"), py::arg("z"));
  m.def("l2_inner", &l2_inner, py::arg("f"), py::arg("g"));
  m.def("a2_inner", &a2_inner, py::arg("F"), py::arg("G"));
  m.def("a2_inner_quadrature", &a2_inner_quadrature, py::arg("F"), py::arg("G"), py::arg("radial_order") = 0,
        py::arg("angular_order") = 0);

  py::class_<RadialProfile>(m, "RadialProfile")
      .def(py::init([](std::size_t origin_dim, std::vector<Complex> c) { return RadialProfile{origin_dim, std::move(c)}; }),
           py::arg("origin_dim"), py::arg("c"))
      .def_readonly("origin_dim", &RadialProfile::origin_dim)
      .def_readonly("c", &RadialProfile::c)
      .def("to_json", [](const RadialProfile& p) { return io::to_json(p).dump(); });

  py::class_<RadialReport>(m, "RadialReport")
      .def_readonly("is_radial", &RadialReport::is_radial)
      .def_readonly("odd_mass", &RadialReport::odd_mass)
      .def_readonly("shell_deviations", &RadialReport::shell_deviations)
      .def_readonly("profile", &RadialReport::profile)
      .def_readonly("tol", &RadialReport::tol)
      .def("to_json", [](const RadialReport& r) { return io::to_json(r).dump(); });

  m.attr("DEFAULT_RADIAL_TOL") = kDefaultRadialTol;
  m.def("radial_test", &radial_test, py::arg("f"), py::arg("tol") = kDefaultRadialTol);
  m.def("extract_profile", &extract_profile, py::arg("f"), py::arg("tol") = kDefaultRadialTol);
  m.def("eval_F0", &eval_F0, py::arg("profile"), py::arg("w"));
  m.def("eval_via_E0", [](const HermiteExpansion& f, const RealPoint& x) { return eval_via_E0(f, x); },
        py::arg("f"), py::arg("x"));
  m.def("reduce_dimension", &reduce_dimension, py::arg("f"), py::arg("tol") = kDefaultRadialTol);
  m.def("synth_radial", &synth_radial, py::arg("profile"), py::arg("dim"));
  m.def("gaussian_profile", &gaussian_profile, py::arg("a"), py::arg("dim"), py::arg("K"));
  m.def("synth_gaussian", &synth_gaussian, py::arg("a"), py::arg("dim"), py::arg("K"));
  m.def("preset_h0", &preset_h0, py::arg("dim"));
  m.def("preset_h2_shell", &preset_h2_shell, py::arg("dim"));

  m.def("stft_gaussian",
        [](const HermiteExpansion& f, const RealPoint& x, const RealPoint& xi, std::size_t order) {
          return stft_gaussian(f, PhasePoint(x, xi), order);
        },
        py::arg("f"), py::arg("x"), py::arg("xi"), py::arg("order") = 0);
  m.def("stft_from_bargmann",
        [](const FockSeries& F, const RealPoint& x, const RealPoint& xi) { return stft_from_bargmann(F, PhasePoint(x, xi)); },
        py::arg("F"), py::arg("x"), py::arg("xi"));
  m.def("bridge_residual",
        [](const HermiteExpansion& f, const std::vector<std::pair<RealPoint, RealPoint>>& pts) {
          return bridge_residual(f, phase_points(pts));
        },
        py::arg("f"), py::arg("points"));
  m.def("inverse_bridge_residual",
        [](const HermiteExpansion& f, const std::vector<std::pair<RealPoint, RealPoint>>& pts) {
          return inverse_bridge_residual(f, phase_points(pts));
        },
        py::arg("f"), py::arg("points"));

  m.def("verify",
        [](std::uint64_t seed, const std::vector<std::string>& checks) {
          const auto report = run_verification(seed, checks);
          return py::make_tuple(report.pass(), format_report(report));
        },
        py::arg("seed") = 0, py::arg("checks") = std::vector<std::string>{});
  m.def("verification_check_names", &verification_check_names);
}
