// Copyright 2026 The crnoma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "crnoma/analytic.hpp"
#include "crnoma/channel.hpp"
#include "crnoma/config.hpp"
#include "crnoma/montecarlo.hpp"
#include "crnoma/noma.hpp"
#include "crnoma/scenario.hpp"
#include "crnoma/selection.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace crnoma;

namespace
{

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

GainMatrix to_matrix(const Array &a, const char *name)
{
    if (a.ndim() != 2)
        throw py::value_error(std::string(name) + " must be a 2-D array");
    GainMatrix m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
    const auto view = a.unchecked<2>();
    for (py::ssize_t r = 0; r < a.shape(0); ++r)
        for (py::ssize_t c = 0; c < a.shape(1); ++c)
            m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = view(r, c);
    return m;
}

Array to_array(const GainMatrix &m)
{
    Array a({m.rows(), m.cols()});
    auto view = a.mutable_unchecked<2>();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            view(static_cast<py::ssize_t>(r), static_cast<py::ssize_t>(c)) = m(r, c);
    return a;
}

ChannelRealization channels(const Array &h, const Array &g, const SystemConfig &config)
{
    ChannelRealization ch{to_matrix(h, "h"), to_matrix(g, "g")};
    ch.check(config);
    return ch;
}

Array gains_array(std::span<const double> values)
{
    Array a(static_cast<py::ssize_t>(values.size()));
    std::copy(values.begin(), values.end(), a.mutable_data());
    return a;
}

} // namespace

PYBIND11_MODULE(_crnoma, m)
{
    m.doc() = "Joint antenna selection for MIMO cognitive-radio NOMA: selection schemes, outage analysis and "
              "Monte Carlo simulation.";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init([](int n_bs, int m_pu, int k_su, double omega_h, double omega_g, double gamma_p_th,
                         double gamma_s_th) {
                 SystemConfig c{n_bs, m_pu, k_su, omega_h, omega_g, gamma_p_th, gamma_s_th};
                 c.validate();
                 return c;
             }),
             py::arg("n_bs"), py::arg("m_pu"), py::arg("k_su"), py::arg("omega_h"), py::arg("omega_g"),
             py::arg("gamma_p_th"), py::arg("gamma_s_th"))
        .def_readwrite("n_bs", &SystemConfig::n_bs)
        .def_readwrite("m_pu", &SystemConfig::m_pu)
        .def_readwrite("k_su", &SystemConfig::k_su)
        .def_readwrite("omega_h", &SystemConfig::omega_h)
        .def_readwrite("omega_g", &SystemConfig::omega_g)
        .def_readwrite("gamma_p_th", &SystemConfig::gamma_p_th)
        .def_readwrite("gamma_s_th", &SystemConfig::gamma_s_th)
        .def("validate", &SystemConfig::validate)
        .def("__repr__", [](const SystemConfig &c) {
            return "SystemConfig(n_bs=" + std::to_string(c.n_bs) + ", m_pu=" + std::to_string(c.m_pu) +
                   ", k_su=" + std::to_string(c.k_su) + ", omega_h=" + format_double(c.omega_h) +
                   ", omega_g=" + format_double(c.omega_g) + ", gamma_p_th=" + format_double(c.gamma_p_th) +
                   ", gamma_s_th=" + format_double(c.gamma_s_th) + ")";
        });

    m.def("transmit_snr", &transmit_snr, py::arg("tx_power_dbm"), py::arg("noise_power_dbm"));
    m.def("db_to_linear", &db_to_linear);
    m.def("linear_to_db", &linear_to_db);

    m.def("load_scenario", [](const std::string &path) {
        const Scenario s = load_scenario(path);
        return py::make_tuple(s.system_config(), s.noise_dbm);
    }, py::arg("path"), "Returns (SystemConfig, noise_dbm).");
    m.def("parse_scenario", [](const std::string &text) {
        const Scenario s = parse_scenario_string(text);
        return py::make_tuple(s.system_config(), s.noise_dbm);
    }, py::arg("text"), "Returns (SystemConfig, noise_dbm).");

    m.def("optimal_b", &optimal_b_value, py::arg("h"), py::arg("g"), py::arg("rho"), py::arg("gamma_p_th"));
    m.def("achievable_gamma_s", py::overload_cast<double, double, double, double>(&achievable_gamma_s), py::arg("h"),
          py::arg("g"), py::arg("rho"), py::arg("gamma_p_th"));

    py::enum_<Scheme>(m, "Scheme")
        .value("sjas", Scheme::sjas)
        .value("es", Scheme::es)
        .value("maxmin", Scheme::maxmin)
        .value("random", Scheme::random);

    py::class_<AntennaTriple>(m, "AntennaTriple")
        .def_readonly("n", &AntennaTriple::n)
        .def_readonly("m", &AntennaTriple::m)
        .def_readonly("k", &AntennaTriple::k)
        .def("__iter__", [](const AntennaTriple &t) { return py::iter(py::make_tuple(t.n, t.m, t.k)); })
        .def("__eq__", [](const AntennaTriple &a, const AntennaTriple &b) { return a == b; })
        .def("__repr__", [](const AntennaTriple &t) {
            return "AntennaTriple(" + std::to_string(t.n) + ", " + std::to_string(t.m) + ", " + std::to_string(t.k) +
                   ")";
        });

    py::class_<SelectionOutcome>(m, "SelectionOutcome")
        .def_readonly("feasible", &SelectionOutcome::feasible)
        .def_readonly("triple", &SelectionOutcome::triple)
        .def_readonly("b", &SelectionOutcome::b)
        .def_readonly("gamma_s", &SelectionOutcome::gamma_s)
        .def_readonly("outage", &SelectionOutcome::outage);

    m.def("sample_channels", [](const SystemConfig &config, std::uint64_t seed, std::uint64_t trial) {
        CounterStream stream(StreamId{seed, 0, trial, stream_tag::channel});
        const ChannelRealization ch = sample_channels(config, stream);
        return py::make_tuple(to_array(ch.h), to_array(ch.g));
    }, py::arg("config"), py::arg("seed"), py::arg("trial") = 0, "Returns (h, g) gain matrices of shape (N, M), (N, K).");

    m.def("row_maxima", [](const Array &h, const Array &g, const SystemConfig &config) {
        const auto cand = build_candidates(channels(h, g, config));
        std::vector<double> hm, gm, beta;
        for (const auto &c : cand)
        {
            hm.push_back(c.h_max);
            gm.push_back(c.g_max);
            beta.push_back(c.beta);
        }
        return py::make_tuple(gains_array(hm), gains_array(gm), gains_array(beta));
    }, py::arg("h"), py::arg("g"), py::arg("config"), "Returns per-row (h_max, g_max, beta).");

    m.def("sj_as", [](const Array &h, const Array &g, const SystemConfig &config, double rho) {
        OpCounter ops;
        const auto out = sj_as(channels(h, g, config), config, rho, &ops);
        return py::make_tuple(out, ops.steps);
    }, py::arg("h"), py::arg("g"), py::arg("config"), py::arg("rho"), "Returns (SelectionOutcome, steps).");
    m.def("es_as", [](const Array &h, const Array &g, const SystemConfig &config, double rho) {
        OpCounter ops;
        const auto out = es_as(channels(h, g, config), config, rho, &ops);
        return py::make_tuple(out, ops.steps);
    }, py::arg("h"), py::arg("g"), py::arg("config"), py::arg("rho"), "Returns (SelectionOutcome, steps).");
    m.def("maxmin_as", [](const Array &h, const Array &g, const SystemConfig &config, double rho) {
        return maxmin_as(channels(h, g, config), config, rho);
    }, py::arg("h"), py::arg("g"), py::arg("config"), py::arg("rho"));
    m.def("evaluate_triple", [](const Array &h, const Array &g, const SystemConfig &config, double rho, int n, int mm,
                                int k) {
        return evaluate_triple(channels(h, g, config), config, rho, AntennaTriple{n, mm, k});
    }, py::arg("h"), py::arg("g"), py::arg("config"), py::arg("rho"), py::arg("n"), py::arg("m"), py::arg("k"));

    m.def("cdf_row_max_h", &cdf_row_max_h, py::arg("x"), py::arg("config"));
    m.def("cdf_row_max_g", &cdf_row_max_g, py::arg("x"), py::arg("config"));
    m.def("cdf_beta", &cdf_beta, py::arg("x"), py::arg("config"));
    m.def("p_outage_o1", &p_outage_o1, py::arg("config"), py::arg("rho"));
    m.def("q1_term", [](const SystemConfig &c, double rho) { return q1_term(c, rho); }, py::arg("config"),
          py::arg("rho"));
    m.def("q2_term", [](const SystemConfig &c, double rho) { return q2_term(c, rho); }, py::arg("config"),
          py::arg("rho"));
    m.def("p_outage_asymptotic", [](const SystemConfig &c, double rho) { return p_outage_asymptotic(c, rho); },
          py::arg("config"), py::arg("rho"));
    m.def("p_outage_high_snr", &p_outage_high_snr, py::arg("config"), py::arg("rho"));
    m.def("diversity_order", &diversity_order, py::arg("config"));
    m.def("loglog_slope", [](const std::vector<double> &x, const std::vector<double> &y) {
        return loglog_slope(x, y);
    }, py::arg("x"), py::arg("y"));

    py::class_<OutageEstimate>(m, "OutageEstimate")
        .def_property_readonly("scheme", [](const OutageEstimate &e) { return e.scheme; })
        .def_readonly("power_dbm", &OutageEstimate::power_dbm)
        .def_readonly("rho", &OutageEstimate::rho)
        .def_readonly("p_hat", &OutageEstimate::p_hat)
        .def_readonly("trials", &OutageEstimate::trials)
        .def_readonly("outages", &OutageEstimate::outages)
        .def_readonly("ci95_halfwidth", &OutageEstimate::ci95_halfwidth)
        .def_readonly("mean_gamma_s", &OutageEstimate::mean_gamma_s)
        .def_readonly("mean_b", &OutageEstimate::mean_b);

    m.def("run_plan", [](const SystemConfig &config, double noise_dbm, std::vector<double> power_grid_dbm,
                         std::vector<Scheme> schemes, std::uint64_t trials, std::uint64_t seed, bool paired,
                         unsigned workers) {
        ExperimentPlan plan;
        plan.config = config;
        plan.budget.noise_power_dbm = noise_dbm;
        plan.power_grid_dbm = std::move(power_grid_dbm);
        plan.schemes = std::move(schemes);
        plan.trials = trials;
        plan.master_seed = seed;
        plan.paired = paired;
        py::gil_scoped_release release;
        return run_plan(plan, RunOptions{workers});
    }, py::arg("config"), py::arg("noise_dbm"), py::arg("power_grid_dbm"), py::arg("schemes"), py::arg("trials"),
       py::arg("seed"), py::arg("paired") = true, py::arg("workers") = 0);
}
