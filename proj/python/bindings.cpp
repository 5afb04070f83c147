#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lbverify/cli.hpp"
#include "lbverify/congruence.hpp"
#include "lbverify/curvature.hpp"
#include "lbverify/energy_conditions.hpp"
#include "lbverify/errors.hpp"
#include "lbverify/scalar_field.hpp"
#include "lbverify/special_functions.hpp"
#include "lbverify/stability.hpp"
#include "lbverify/suites.hpp"

namespace py = pybind11;
using namespace lb;

namespace {

py::list rows_of(const VerificationReport& rep) {
  py::list out;
  for (const auto& r : rep.rows())
    out.append(py::make_tuple(r.check, r.location, r.value, r.tolerance, std::string(to_string(r.verdict))));
  return out;
}

congruence::CongruenceConfig config(double e_tilde, int direction) {
  return congruence::make_config(e_tilde, direction >= 0 ? congruence::Direction::Outgoing
                                                         : congruence::Direction::Ingoing);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Verification toolkit for the LB cylindrical solution";

  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  static py::exception<ParameterError> param(m, "ParameterError", base.ptr());
  static py::exception<DomainError> domain(m, "DomainError", base.ptr());
  static py::exception<RangeError> range(m, "RangeError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParameterError& e) {
      param(e.what());
    } catch (const DomainError& e) {
      domain(e.what());
    } catch (const RangeError& e) {
      range(e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  py::class_<SolutionParams>(m, "SolutionParams")
      .def_readonly("lambda_", &SolutionParams::lambda)
      .def_readonly("xi", &SolutionParams::xi)
      .def_readonly("a", &SolutionParams::a)
      .def_readonly("phi_branch", &SolutionParams::phi_branch)
      .def("__repr__", [](const SolutionParams& p) {
        std::ostringstream os;
        os << "SolutionParams(lambda=" << p.lambda << ", xi=" << p.xi << ", a=" << p.a << ")";
        return os.str();
      });

  py::class_<MetricSample>(m, "MetricSample")
      .def_readonly("r", &MetricSample::r)
      .def_readonly("f", &MetricSample::f)
      .def_readonly("f_p", &MetricSample::f_p)
      .def_readonly("f_pp", &MetricSample::f_pp)
      .def_readonly("u", &MetricSample::u)
      .def_readonly("u_p", &MetricSample::u_p)
      .def_readonly("u_pp", &MetricSample::u_pp)
      .def_readonly("w", &MetricSample::w)
      .def_readonly("w_p", &MetricSample::w_p)
      .def_readonly("w_pp", &MetricSample::w_pp);

  m.def("make_params", &make_params, py::arg("lambda_"), py::arg("xi"), py::arg("phi_branch") = 1);
  m.def("de_sitter_radius", &de_sitter_radius);
  m.def("f_eval", [](const SolutionParams& p, double r) {
    const auto f = f_eval(p, r);
    return py::make_tuple(f.f, f.f_p, f.f_pp);
  });
  m.def("metric_eval", &metric_eval);
  m.def("field_residual", [](const SolutionParams& p, double r) { return curvature::field_residual(p, r).max_abs; });
  m.def("phi_prime_sq", [](const SolutionParams& p, double r) {
    return phi_prime_sq_constraint(metric_eval(p, r), p.lambda).value;
  });
  m.def("phi_accumulate", &phi_accumulate);
  m.def("noether_charge", &noether_charge);

  m.def("stability_eigenvalues", [](double lambda) {
    const auto rep = stability::jacobian_eigen(lambda);
    return py::make_tuple(std::vector<std::complex<double>>(rep.eigenvalues.begin(), rep.eigenvalues.end()),
                          std::string(stability::to_string(rep.verdict)));
  });

  m.def("stress", [](const SolutionParams& p, double r) {
    const auto t = energy::stress_decompose(p, r);
    py::dict d;
    d["rho"] = t.rho;
    d["p_r"] = t.p_r;
    d["p_phi"] = t.p_phi;
    d["p_z"] = t.p_z;
    return d;
  });

  m.def("gauss_2f1", [](double a, double b, double c, double z) { return special::gauss_2f1({a, b, c, z}); });
  m.def("tortoise", &congruence::tortoise);
  m.def("tortoise_quadrature", &congruence::tortoise_quadrature);
  m.def("expansion", [](const SolutionParams& p, double r, double e_tilde, int direction) {
    return congruence::expansion_timelike(p, config(e_tilde, direction), r).value;
  }, py::arg("p"), py::arg("r"), py::arg("e_tilde") = 2.0, py::arg("direction") = 1);
  m.def("dtheta_dtau", [](const SolutionParams& p, double r, double e_tilde, int direction) {
    return congruence::dtheta_dtau_direct(p, config(e_tilde, direction), r).value;
  }, py::arg("p"), py::arg("r"), py::arg("e_tilde") = 2.0, py::arg("direction") = 1);
  m.def("null_rate", [](const SolutionParams& p, double r, double e_tilde) {
    return congruence::null_rate(p, config(e_tilde, 1), r).rate;
  }, py::arg("p"), py::arg("r"), py::arg("e_tilde") = 2.0);
  m.def("phi_b", &congruence::phi_b_eval, py::arg("x"), py::arg("b"));
  m.def("radius_from_root", [](const SolutionParams& p, double x) {
    const auto c = congruence::radius_from_root(p, x);
    return py::make_tuple(c.exp_channel, c.w_channel);
  });

  m.def("verify_suite", [](const SolutionParams& p, std::size_t samples) {
    return rows_of(suites::verify_suite(p, suites::default_window(p, samples)));
  }, py::arg("p"), py::arg("samples") = 4096);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });

  m.attr("__version__") = tool_version();
}
