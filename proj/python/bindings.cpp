#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nmweyl/cli.hpp"
#include "nmweyl/io.hpp"
#include "nmweyl/qbg.hpp"
#include "nmweyl/verify.hpp"

namespace py = pybind11;
using namespace nmweyl;

namespace {

Weight to_weight(const EFamily& fam, const std::vector<int>& v) {
  if (static_cast<int>(v.size()) != fam.root_system().rank())
    throw py::value_error("weight has " + std::to_string(v.size()) + " coordinates, rank is " +
                          std::to_string(fam.root_system().rank()));
  return Weight(std::span<const int>(v));
}

// results cross the boundary as canonical JSON text; the Python side parses it
std::string dump(const json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_nmweyl, m) {
  m.doc() = "Nonsymmetric Macdonald polynomials at t = 0, their duals, and character identities";

  py::register_exception<NotStabilized>(m, "NotStabilized", PyExc_RuntimeError);

  py::class_<EFamily>(m, "EFamily")
      .def(py::init([](const std::string& cartan) { return new EFamily(std::string_view(cartan)); }), py::arg("cartan"))
      .def_property_readonly("rank", [](const EFamily& f) { return f.root_system().rank(); })
      .def_property_readonly("cartan", [](const EFamily& f) { return f.root_system().type().name(); })
      .def(
          "e_json",
          [](const EFamily& f, const std::vector<int>& w, int qmax) {
            py::gil_scoped_release nogil;
            return dump(series_json(f.e_t0(to_weight(f, w), qmax)));
          },
          py::arg("weight"), py::arg("qmax"))
      .def(
          "dual_json",
          [](const EFamily& f, const std::vector<int>& w, int qmax) {
            py::gil_scoped_release nogil;
            return dump(series_json(f.f_t_inf(to_weight(f, w), qmax)));
          },
          py::arg("weight"), py::arg("qmax"))
      .def(
          "norm_json", [](const EFamily& f, const std::vector<int>& w) { return dump(series_json(f.q_norm(to_weight(f, w)))); },
          py::arg("weight"))
      .def(
          "m_coeff_json",
          [](const EFamily& f, const std::vector<int>& l, const std::vector<int>& mu, int qmax) {
            const Weight a = to_weight(f, l), b = to_weight(f, mu);
            py::gil_scoped_release nogil;
            const MCoeff c = f.m_coeff(a, b, qmax);
            return dump({{"from_dual", series_json(c.from_dual)},
                         {"from_pairing", series_json(c.from_pairing)},
                         {"agree", c.agree()},
                         {"pairing_box", c.box}});
          },
          py::arg("lam"), py::arg("mu"), py::arg("qmax"))
      .def(
          "lower_set",
          [](const EFamily& f, const std::vector<int>& w) {
            std::vector<std::vector<int>> out;
            for (const Weight& nu : f.group().lower_set(to_weight(f, w))) out.push_back(nu.to_vector());
            return out;
          },
          py::arg("weight"));

  m.def(
      "verify_json",
      [](const std::string& suite, const std::string& cartan, int box, int qmax, std::vector<int> lam, bool pairing) {
        py::gil_scoped_release nogil;
        VerifyOptions opt;
        opt.pairing_route = pairing;
        if (suite == "sl2") return dump(report_json(verify_sl2_golden(opt)));
        if (suite == "anchors") return dump(report_json(verify_a1_anchors()));
        if (suite == "eta") return dump(report_json(verify_eta(*RootSystem::build(cartan), qmax)));
        EFamily fam{std::string_view(cartan)};
        if (suite == "orthogonality") return dump(report_json(verify_orthogonality(fam, box, qmax, opt)));
        if (suite == "positivity") return dump(report_json(verify_positivity(fam, box, qmax, opt)));
        if (suite == "bicharacter") return dump(report_json(verify_bicharacter(fam, box, qmax, opt)));
        if (suite == "expansion") return dump(report_json(verify_expansion(fam, to_weight(fam, lam), box, qmax, opt)));
        throw py::value_error("unknown suite '" + suite + "'");
      },
      py::arg("suite"), py::arg("cartan") = "A1", py::arg("box") = 2, py::arg("qmax") = 4,
      py::arg("lam") = std::vector<int>{}, py::arg("pairing") = false);

  m.def(
      "qbg_dot", [](const std::string& cartan) { return QuantumBruhatGraph(*RootSystem::build(cartan)).to_dot(); },
      py::arg("cartan"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release nogil;
          code = run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
