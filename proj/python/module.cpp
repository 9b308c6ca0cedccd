// Pybind11 bindings for the skgen core: exponent engine, Gaussian and
// binary-quantized closed forms, and the random-binning simulator.

#include <limits>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skgen/binning.hpp"
#include "skgen/dsbs.hpp"
#include "skgen/edms.hpp"
#include "skgen/exponents.hpp"
#include "skgen/gaussian.hpp"
#include "skgen/model_io.hpp"
#include "skgen/numeric.hpp"

namespace py = pybind11;

namespace {

py::dict report_to_dict(const skgen::binning::SimReport& r) {
    py::dict d;
    d["n"] = r.block_length;
    d["r_sk_nats"] = r.key_rate;
    d["r_m_nats"] = r.message_rate;
    d["theta"] = r.theta;
    d["w"] = r.eve_crossover;
    d["trials"] = r.trials;
    d["seed"] = r.seed;
    d["error_estimate"] = r.error_estimate;
    d["error_ci_halfwidth"] = r.error_ci_halfwidth;
    if (r.leakage.has_value())
        d["leakage_nats"] = *r.leakage;
    else
        d["leakage_nats"] = py::none();
    d["leakage_exact"] = r.leakage_exact;
    d["empirical_exponent"] = r.empirical_exponent;
    d["gallager_bound"] = r.bound;
    return d;
}

}  // namespace

PYBIND11_MODULE(_skgen, m) {
    m.doc() = "Secret-key capacities, reliability/secrecy exponents and a "
              "random-binning protocol simulator for excited sources";

    // ---- finite-source exponent engine ----
    py::class_<skgen::FiniteEdms>(m, "FiniteEdms")
        .def(py::init<std::vector<std::string>, std::vector<std::string>,
                      std::vector<std::string>, std::vector<std::string>, std::vector<double>,
                      std::vector<double>>(),
             py::arg("states"), py::arg("alphabet_a"), py::arg("alphabet_b"),
             py::arg("alphabet_e"), py::arg("joint"), py::arg("cost"))
        .def("validate", &skgen::FiniteEdms::validate, py::arg("tol") = 1e-12)
        .def_property_readonly("num_states", &skgen::FiniteEdms::num_states)
        .def("conditional_entropy_a_given_b", &skgen::FiniteEdms::conditional_entropy_a_given_b)
        .def("conditional_entropy_a_given_e", &skgen::FiniteEdms::conditional_entropy_a_given_e)
        .def("mutual_information_ab", &skgen::FiniteEdms::mutual_information_ab)
        .def("mutual_information_ae", &skgen::FiniteEdms::mutual_information_ae)
        .def("has_degraded_eavesdropper", &skgen::FiniteEdms::has_degraded_eavesdropper,
             py::arg("tol") = 1e-9);

    py::class_<skgen::StateDistribution>(m, "StateDistribution")
        .def(py::init([](std::vector<double> mass, double cost_budget) {
                 skgen::StateDistribution d;
                 d.mass = std::move(mass);
                 d.cost_budget = cost_budget;
                 return d;
             }),
             py::arg("mass"), py::arg("cost_budget") = std::numeric_limits<double>::infinity())
        .def_readwrite("mass", &skgen::StateDistribution::mass)
        .def_readwrite("cost_budget", &skgen::StateDistribution::cost_budget);

    m.def("e0_state", &skgen::e0_state, py::arg("model"), py::arg("rho"), py::arg("state"));
    m.def("e0", &skgen::e0, py::arg("model"), py::arg("p_s"), py::arg("rho"));
    m.def("f0_state", &skgen::f0_state, py::arg("model"), py::arg("alpha"), py::arg("state"));
    m.def("f0", &skgen::f0, py::arg("model"), py::arg("p_s"), py::arg("alpha"));
    m.def("reliability_exponent", &skgen::reliability_exponent, py::arg("model"), py::arg("p_s"),
          py::arg("message_rate"));
    m.def(
        "secrecy_exponent",
        [](const skgen::FiniteEdms& model, const skgen::StateDistribution& p_s, double key_rate,
           double message_rate) {
            return skgen::secrecy_exponent(model, p_s, {key_rate, message_rate});
        },
        py::arg("model"), py::arg("p_s"), py::arg("key_rate"), py::arg("message_rate"));
    m.def("conditional_entropy_ab", &skgen::conditional_entropy_ab);
    m.def("conditional_entropy_ae", &skgen::conditional_entropy_ae);
    m.def("degraded_capacity", &skgen::degraded_capacity, py::arg("model"),
          py::arg("cost_budget"));
    m.def("capacity_upper_bound", &skgen::capacity_upper_bound, py::arg("model"),
          py::arg("cost_budget"));
    m.def("optimized_reliability_exponent", &skgen::optimized_reliability_exponent,
          py::arg("model"), py::arg("cost_budget"), py::arg("key_rate"));
    m.def(
        "tradeoff_surface",
        [](const skgen::FiniteEdms& model, const skgen::StateDistribution& p_s, double key_rate,
           const std::vector<double>& message_rates) {
            std::vector<std::tuple<double, double, double>> out;
            for (const auto& p : skgen::tradeoff_surface(model, p_s, key_rate, message_rates))
                out.emplace_back(p.message_rate, p.reliability, p.secrecy);
            return out;
        },
        py::arg("model"), py::arg("p_s"), py::arg("key_rate"), py::arg("message_rates"));

    m.def("load_model_file", &skgen::load_model_file, py::arg("path"));
    m.def("parse_model", &skgen::parse_model, py::arg("text"));
    m.def("dump_model", &skgen::dump_model, py::arg("model"));
    m.def("save_model_file", &skgen::save_model_file, py::arg("model"), py::arg("path"));

    // ---- Gaussian closed forms ----
    auto g = m.def_submodule("gaussian", "Rayleigh-excitation Gaussian source");
    g.def("equivalent_snr", py::overload_cast<double>(&skgen::gaussian::equivalent_snr),
          py::arg("snr"));
    g.def("key_rate", py::overload_cast<double>(&skgen::gaussian::key_rate), py::arg("snr"));
    g.def("threshold_snr", &skgen::gaussian::threshold_snr);
    g.def(
        "capacity",
        [](double snr) {
            const auto c = skgen::gaussian::capacity(snr);
            return std::make_pair(c.capacity, c.duty);
        },
        py::arg("snr"));
    g.def("min_energy_per_key_bit", &skgen::gaussian::min_energy_per_key_bit);
    g.def("reliability_exponent", &skgen::gaussian::reliability_exponent, py::arg("key_rate"),
          py::arg("snr"));
    g.def("reliability_region", &skgen::gaussian::reliability_region, py::arg("key_rate"),
          py::arg("snr"));
    g.def(
        "onoff_reliability_exponent",
        [](double key_rate, double snr) {
            const auto r = skgen::gaussian::onoff_reliability_exponent(key_rate, snr);
            return std::make_pair(r.value, r.duty);
        },
        py::arg("key_rate"), py::arg("snr"));
    g.def("e0", &skgen::gaussian::e0, py::arg("rho"), py::arg("snr"));
    g.def(
        "equivalent_channel",
        [](double snr_a, double snr_b, double noise_power) {
            const auto c =
                skgen::gaussian::equivalent_channel({snr_a, snr_b, noise_power});
            return std::make_tuple(c.gain, c.noise_power, c.snr);
        },
        py::arg("snr_a"), py::arg("snr_b"), py::arg("noise_power") = 1.0);
    g.def(
        "finite_block_energy",
        [](double key_bits, double epsilon, bool on_off) {
            const auto r = skgen::gaussian::finite_block_energy(key_bits, epsilon, on_off);
            return std::make_tuple(r.energy, r.block_length, r.snr);
        },
        py::arg("key_bits"), py::arg("epsilon"), py::arg("on_off") = false);

    // ---- binary-quantized source ----
    auto d = m.def_submodule("dsbs", "Binary phase-quantized source (rates in bits)");
    d.def("crossover_from_snr", &skgen::dsbs::crossover_from_snr, py::arg("snr"));
    d.def("key_rate", &skgen::dsbs::key_rate, py::arg("theta"));
    d.def("key_rate_from_snr", &skgen::dsbs::key_rate_from_snr, py::arg("snr"));
    d.def("threshold_snr", &skgen::dsbs::threshold_snr);
    d.def("reliability_exponent", &skgen::dsbs::reliability_exponent, py::arg("key_rate_bits"),
          py::arg("snr"));
    d.def("reliability_exponent_theta", &skgen::dsbs::reliability_exponent_theta,
          py::arg("key_rate_bits"), py::arg("theta"));
    d.def("reliability_exponent_message_rate", &skgen::dsbs::reliability_exponent_message_rate,
          py::arg("message_rate_bits"), py::arg("theta"));
    d.def("reliability_region", &skgen::dsbs::reliability_region, py::arg("key_rate_bits"),
          py::arg("snr"));
    d.def("secrecy_exponent", &skgen::dsbs::secrecy_exponent, py::arg("sum_rate_bits"),
          py::arg("eve_crossover"));
    d.def(
        "onoff_reliability_exponent",
        [](double key_rate_bits, double snr) {
            const auto r = skgen::dsbs::onoff_reliability_exponent(key_rate_bits, snr);
            return std::make_pair(r.value, r.duty);
        },
        py::arg("key_rate_bits"), py::arg("snr"));

    // ---- random-binning simulator ----
    auto b = m.def_submodule("binning", "Random-binning protocol simulator (rates in nats)");
    py::class_<skgen::binning::BinningCode>(b, "BinningCode")
        .def_readonly("block_length", &skgen::binning::BinningCode::block_length)
        .def_readonly("key_bins", &skgen::binning::BinningCode::key_bins)
        .def_readonly("msg_bins", &skgen::binning::BinningCode::msg_bins)
        .def_readonly("seed", &skgen::binning::BinningCode::seed);
    b.def("generate_code", &skgen::binning::generate_code, py::arg("block_length"),
          py::arg("key_rate"), py::arg("message_rate"), py::arg("seed"));
    b.def(
        "exact_error_probability",
        [](const skgen::binning::BinningCode& code, double theta) {
            const auto e = skgen::binning::exact_error_probability(code, theta);
            return std::make_pair(e.key_mismatch, e.sequence_error);
        },
        py::arg("code"), py::arg("theta"));
    b.def("exact_leakage", &skgen::binning::exact_leakage, py::arg("code"),
          py::arg("eve_crossover"));
    b.def("key_entropy", &skgen::binning::key_entropy, py::arg("code"));
    b.def("gallager_bound", &skgen::binning::gallager_bound, py::arg("block_length"),
          py::arg("msg_bins"), py::arg("theta"), py::arg("rho_grid_points") = 200);
    b.def(
        "ensemble_error_check",
        [](int block_length, double message_rate, double theta, int num_codes,
           std::uint64_t seed) {
            const auto r = skgen::binning::ensemble_error_check(block_length, message_rate, theta,
                                                                num_codes, seed);
            return std::make_tuple(r.mean_sequence_error, r.std_error, r.bound);
        },
        py::arg("block_length"), py::arg("message_rate"), py::arg("theta"), py::arg("num_codes"),
        py::arg("seed"));
    b.def(
        "monte_carlo_run",
        [](const skgen::binning::BinningCode& code, double theta, double eve_crossover,
           std::uint64_t trials, std::uint64_t seed) {
            return report_to_dict(
                skgen::binning::monte_carlo_run(code, theta, eve_crossover, trials, seed));
        },
        py::arg("code"), py::arg("theta"), py::arg("eve_crossover"), py::arg("trials"),
        py::arg("seed"));
    b.def(
        "monte_carlo_json",
        [](const skgen::binning::BinningCode& code, double theta, double eve_crossover,
           std::uint64_t trials, std::uint64_t seed) {
            return skgen::binning::to_json(
                skgen::binning::monte_carlo_run(code, theta, eve_crossover, trials, seed));
        },
        py::arg("code"), py::arg("theta"), py::arg("eve_crossover"), py::arg("trials"),
        py::arg("seed"));

    m.attr("LN2") = skgen::kLn2;
    m.attr("__version__") = "1.0.0";
}
