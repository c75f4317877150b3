#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "landau/cli.hpp"
#include "landau/gauge.hpp"
#include "landau/marginals.hpp"
#include "landau/quad.hpp"
#include "landau/staralg.hpp"
#include "landau/symmetry.hpp"
#include "landau/verify.hpp"
#include "landau/wigner.hpp"

namespace py = pybind11;
using namespace landau;

namespace {

PhasePoint point(const std::array<double, 4>& x) { return {x[0], x[1], x[2], x[3]}; }

WignerIndex index(const std::vector<int>& idx) {
  if (idx.size() == 2) return WignerIndex::diag(idx[0], idx[1]);
  if (idx.size() == 4) return {idx[0], idx[1], idx[2], idx[3]};
  throw std::invalid_argument("index must be (n, l) or (n1, n2, l1, l2)");
}

py::list checks(const std::vector<CheckResult>& rs) {
  py::list out;
  for (const CheckResult& r : rs) {
    py::dict d;
    d["name"] = r.name;
    d["status"] = r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL";
    d["residual"] = r.residual;
    d["tolerance"] = r.tolerance;
    d["detail"] = r.detail;
    out.append(d);
  }
  return out;
}

std::string show(const PhasePoly& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Wigner functions and marginals of Landau levels";

  py::class_<Params>(m, "Params")
      .def(py::init<double, double, double>(), py::arg("m") = 1.0, py::arg("omega") = 2.0, py::arg("hbar") = 1.0)
      .def_property_readonly("m", &Params::m)
      .def_property_readonly("omega", &Params::omega)
      .def_property_readonly("hbar", &Params::hbar)
      .def_property_readonly("gamma", &Params::gamma)
      .def_property_readonly("kappa", &Params::kappa)
      .def_property_readonly("h", &Params::h)
      .def("__repr__", [](const Params& p) {
        std::ostringstream os;
        os << "Params(m=" << p.m() << ", omega=" << p.omega() << ", hbar=" << p.hbar() << ")";
        return os.str();
      });

  m.def(
      "eval_wigner", [](const std::vector<int>& idx, const std::array<double, 4>& x, const Params& p) {
        return eval_wigner(index(idx), point(x), p);
      },
      py::arg("index"), py::arg("point"), py::arg("params") = Params());
  m.def(
      "eval_ground", [](const std::array<double, 4>& x, const Params& p) { return eval_ground(point(x), p); },
      py::arg("point"), py::arg("params") = Params());
  m.def(
      "derive_wigner_from_G", [](const std::vector<int>& idx, const std::array<double, 4>& x, const Params& p) {
        return derive_wigner_from_G(index(idx), point(x), p);
      },
      py::arg("index"), py::arg("point"), py::arg("params") = Params());
  m.def(
      "star_eigenvalues", [](int n, int l) {
        const EigenValues ev = eigen_check(WignerIndex::diag(n, l));
        return std::pair{to_double(ev.energy), to_double(ev.momentum)};
      },
      py::arg("n"), py::arg("l"), "(E / hbar omega, J / hbar) from the word algebra");

  m.def(
      "grid",
      [](const std::vector<int>& idx, const std::string& plane, std::pair<double, double> range, int count,
         const std::array<double, 4>& base, const Params& p) {
        const WignerIndex w = index(idx);
        w.validate();
        const Plane pl = parse_plane(plane);
        GridSpec s{range.first, range.second, count, range.first, range.second, count};
        s.validate();
        const FieldGrid g = sample_grid(
            [&](double u, double v) { return eval_wigner(w, plane_point(pl, u, v, point(base)), p); }, s);
        py::array_t<cplx> out({count, count});
        auto a = out.mutable_unchecked<2>();
        for (int j = 0; j < count; ++j)
          for (int i = 0; i < count; ++i) a(j, i) = g.at(i, j);
        return out;
      },
      py::arg("index"), py::arg("plane") = "q1q2", py::arg("range") = std::pair{-6.0, 6.0}, py::arg("count") = 201,
      py::arg("base") = std::array<double, 4>{0, 0, 0, 0}, py::arg("params") = Params(),
      "values[j, i] at (u_i, v_j)");

  m.def(
      "marginal",
      [](int n, int l, const std::string& plane, double u, double v, const std::string& method, int order,
         const Params& p) -> double {
        const Plane pl = parse_plane(plane);
        if (method == "closed") return marginal_closed(pl, n, l, u, v, p);
        if (method == "numeric") return marginal_numeric(WignerIndex::diag(n, l), pl, u, v, p, order).value;
        throw std::invalid_argument("method must be 'closed' or 'numeric'");
      },
      py::arg("n"), py::arg("l"), py::arg("plane"), py::arg("u"), py::arg("v"), py::arg("method") = "closed",
      py::arg("order") = 40, py::arg("params") = Params());
  m.def("wavefunction", &wavefunction, py::arg("n_r"), py::arg("j"), py::arg("q1"), py::arg("q2"),
        py::arg("params") = Params());
  m.def("radial_quantum_numbers", &radial_quantum_numbers, py::arg("n"), py::arg("l"));
  m.def(
      "integrate", [](const std::vector<int>& idx, const Params& p, int order) {
        const WignerIndex w = index(idx);
        return integrate_full([&](const PhasePoint& x) { return eval_wigner(w, x, p); }, p, order);
      },
      py::arg("index"), py::arg("params") = Params(), py::arg("order") = 16, "Gauss-Hermite integral over phase space");

  m.def(
      "check_discrete", [](int n, int l, const std::vector<std::array<double, 4>>& pts, const Params& p) {
        std::vector<PhasePoint> xs;
        for (const auto& x : pts) xs.push_back(point(x));
        const DiscreteResiduals r = check_discrete(n, l, xs, p);
        return py::dict(py::arg("space_inversion") = r.space_inversion, py::arg("time_reversal") = r.time_reversal,
                        py::arg("parity") = r.parity, py::arg("swap") = r.swap);
      },
      py::arg("n"), py::arg("l"), py::arg("points"), py::arg("params") = Params());

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite", [](const std::string& name, int max_index, double tolerance_scale, const Params& p) {
        SuiteOptions so;
        so.max_index = max_index;
        so.tolerance_scale = tolerance_scale;
        so.params = p;
        return checks(run_suite(name, so));
      },
      py::arg("name"), py::arg("max_index") = -1, py::arg("tolerance_scale") = 1.0, py::arg("params") = Params());

  m.def(
      "gauge_transform",
      [](const std::string& chi, int n, int l, std::optional<std::string> c, std::optional<std::string> theta,
         const Params& p) {
        const ExactParams ep = ExactParams::from(p);
        auto constant = [](const std::string& s) {
          const PhasePoly q = parse_gauge_poly(s, Rational(0));
          if (!q.is_constant() || q.constant_term().im != 0) throw std::invalid_argument("expected a real constant");
          return q.constant_term().re;
        };
        GaugeFn g;
        g.chi = parse_gauge_poly(chi, c ? constant(*c) : ep.kappa);
        g.theta = theta ? constant(*theta) : Rational(1) / ep.hbar;
        g.theta.canonicalize();
        SuiteOptions so;
        so.params = p;
        const TransformReport rep = gauge_transform_report(g, n, l, so);
        py::dict d;
        d["chi"] = show(g.chi);
        d["theta"] = g.theta.get_str();
        d["hamiltonian"] = show(rep.hamiltonian);
        d["checks"] = checks(rep.checks);
        return d;
      },
      py::arg("chi"), py::arg("n") = 0, py::arg("l") = 0, py::arg("c") = py::none(), py::arg("theta") = py::none(),
      py::arg("params") = Params(), "c defaults to m omega / 2 and theta to 1/hbar");

  m.def(
      "cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "run the command line in-process: (exit code, stdout, stderr)");
}
