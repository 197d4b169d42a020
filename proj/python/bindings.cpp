#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ojam/analytic.hpp"
#include "ojam/cli.hpp"
#include "ojam/errors.hpp"
#include "ojam/model.hpp"
#include "ojam/montecarlo.hpp"
#include "ojam/optimize.hpp"
#include "ojam/specfun.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

ojam::SystemParams make_params(double p_s, double p_j, double n0, double d, double alpha, double lambda_j,
                               double lambda_e, double sigma, double epsilon) {
    return ojam::SystemParams::make({p_s, p_j, n0, d, alpha, lambda_j, lambda_e, sigma, epsilon});
}

} // namespace

PYBIND11_MODULE(_ojam, m) {
    m.doc() = "Secrecy throughput of opportunistic jammer selection";

    py::register_exception<ojam::NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<ojam::IoError>(m, "IoError", PyExc_OSError);

    m.def("gamma", &ojam::specfun::gamma, "x"_a);
    m.def("lower_incomplete_gamma", &ojam::specfun::lower_incomplete_gamma, "a"_a, "x"_a);
    m.def("dbm_to_linear", &ojam::dbm_to_linear, "dbm"_a);
    m.def("linear_to_dbm", &ojam::linear_to_dbm, "mw"_a);

    py::class_<ojam::SystemParams>(m, "SystemParams",
                                   "Validated scenario constants (linear mW, meters, points per m^2).")
        .def(py::init(&make_params), "p_s"_a, "p_j"_a, "n0"_a, "d"_a, "alpha"_a, "lambda_j"_a, "lambda_e"_a,
             "sigma"_a, "epsilon"_a)
        .def_static("defaults", &ojam::SystemParams::defaults)
        .def_property_readonly("p_s", &ojam::SystemParams::p_s)
        .def_property_readonly("p_j", &ojam::SystemParams::p_j)
        .def_property_readonly("n0", &ojam::SystemParams::n0)
        .def_property_readonly("d", &ojam::SystemParams::d)
        .def_property_readonly("alpha", &ojam::SystemParams::alpha)
        .def_property_readonly("lambda_j", &ojam::SystemParams::lambda_j)
        .def_property_readonly("lambda_e", &ojam::SystemParams::lambda_e)
        .def_property_readonly("sigma", &ojam::SystemParams::sigma)
        .def_property_readonly("epsilon", &ojam::SystemParams::epsilon)
        .def("replace",
             [](const ojam::SystemParams& p, py::kwargs changes) {
                 ojam::SystemParams::Fields f = p.fields();
                 for (const auto& [key, value] : changes) {
                     const auto name = key.cast<std::string>();
                     const auto v = value.cast<double>();
                     if (name == "p_s") f.p_s = v;
                     else if (name == "p_j") f.p_j = v;
                     else if (name == "n0") f.n0 = v;
                     else if (name == "d") f.d = v;
                     else if (name == "alpha") f.alpha = v;
                     else if (name == "lambda_j") f.lambda_j = v;
                     else if (name == "lambda_e") f.lambda_e = v;
                     else if (name == "sigma") f.sigma = v;
                     else if (name == "epsilon") f.epsilon = v;
                     else throw py::key_error(name);
                 }
                 return ojam::SystemParams::make(f);
             })
        .def("__repr__", [](const ojam::SystemParams& p) {
            std::ostringstream s;
            s << "SystemParams(p_s=" << p.p_s() << ", p_j=" << p.p_j() << ", n0=" << p.n0() << ", d=" << p.d()
              << ", alpha=" << p.alpha() << ", lambda_j=" << p.lambda_j() << ", lambda_e=" << p.lambda_e()
              << ", sigma=" << p.sigma() << ", epsilon=" << p.epsilon() << ")";
            return s.str();
        });

    py::class_<ojam::DerivedConstants>(m, "DerivedConstants")
        .def_readonly("rho", &ojam::DerivedConstants::rho)
        .def_readonly("a", &ojam::DerivedConstants::a)
        .def_readonly("b", &ojam::DerivedConstants::b)
        .def_readonly("c", &ojam::DerivedConstants::c);
    m.def("derive_constants", &ojam::derive_constants, "params"_a);

    py::class_<ojam::DesignPoint>(m, "DesignPoint")
        .def_readonly("delta", &ojam::DesignPoint::delta)
        .def_readonly("beta_b", &ojam::DesignPoint::beta_b)
        .def_readonly("beta_e", &ojam::DesignPoint::beta_e)
        .def_readonly("r_t", &ojam::DesignPoint::r_t)
        .def_readonly("r_e", &ojam::DesignPoint::r_e)
        .def_readonly("mu", &ojam::DesignPoint::mu);

    m.def("selection_probability", &ojam::selection_probability, "delta"_a);
    m.def("conditional_gain_moment", &ojam::conditional_gain_moment, "delta"_a, "rho"_a);
    m.def("connection_outage", py::overload_cast<const ojam::SystemParams&, double, double>(&ojam::connection_outage),
          "params"_a, "delta"_a, "beta_b"_a);
    m.def("secrecy_outage", py::overload_cast<const ojam::SystemParams&, double, double>(&ojam::secrecy_outage),
          "params"_a, "delta"_a, "beta_e"_a);
    m.def("beta_b_star", py::overload_cast<const ojam::SystemParams&, double>(&ojam::beta_b_star), "params"_a,
          "delta"_a);
    m.def("beta_e_star", py::overload_cast<const ojam::SystemParams&, double>(&ojam::beta_e_star), "params"_a,
          "delta"_a);
    m.def("throughput", &ojam::throughput, "params"_a, "delta"_a);
    m.def("throughput_derivative", &ojam::throughput_derivative, "params"_a, "delta"_a);
    m.def("random_baseline_throughput", &ojam::random_baseline_throughput, "params"_a, "retention"_a);

    py::class_<ojam::OptimizationResult>(m, "OptimizationResult")
        .def_readonly("delta_star", &ojam::OptimizationResult::delta_star)
        .def_readonly("design", &ojam::OptimizationResult::design)
        .def_readonly("iterations", &ojam::OptimizationResult::iterations)
        .def_property_readonly("method",
                               [](const ojam::OptimizationResult& r) { return std::string(to_string(r.method)); });
    m.def("optimize_delta", &ojam::optimize_delta, "params"_a, "search_lo"_a = ojam::kDefaultSearchLo,
          "search_hi"_a = ojam::kDefaultSearchHi);
    m.def("golden_section_delta", &ojam::golden_section_delta, "params"_a, "search_lo"_a = ojam::kDefaultSearchLo,
          "search_hi"_a = ojam::kDefaultSearchHi);

    py::class_<ojam::mc::OutageEstimate>(m, "OutageEstimate")
        .def_readonly("p_hat", &ojam::mc::OutageEstimate::p_hat)
        .def_readonly("trials", &ojam::mc::OutageEstimate::trials)
        .def_readonly("std_err", &ojam::mc::OutageEstimate::std_err);
    m.def(
        "estimate_outages",
        [](const ojam::SystemParams& p, double delta, double beta_b, double beta_e, double radius,
           std::uint64_t trials, std::uint64_t seed, unsigned threads, bool far_field_correction) {
            const ojam::mc::SimConfig config{radius, trials, seed, threads, far_field_correction};
            ojam::mc::OutagePair r;
            {
                py::gil_scoped_release release;
                r = ojam::mc::estimate_outages(p, delta, beta_b, beta_e, config);
            }
            return py::make_tuple(r.connection, r.secrecy);
        },
        "params"_a, "delta"_a, "beta_b"_a, "beta_e"_a, "radius"_a = 50.0, "trials"_a = 100000, "seed"_a = 1,
        "threads"_a = 1, "far_field_correction"_a = true,
        "Monte Carlo (connection, secrecy) outage estimates.");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = ojam::cli::run(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        "args"_a, "Runs the command-line front end; returns (exit_code, stdout, stderr).");
}
