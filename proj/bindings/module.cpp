#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "idealcalc/config.hpp"
#include "idealcalc/derivations.hpp"
#include "idealcalc/matrix_io.hpp"
#include "idealcalc/multipliers.hpp"
#include "idealcalc/operators.hpp"
#include "idealcalc/random.hpp"
#include "idealcalc/report.hpp"
#include "idealcalc/sequences.hpp"
#include "idealcalc/spaces.hpp"
#include "idealcalc/suites.hpp"

namespace py = pybind11;
using namespace idealcalc;

PYBIND11_MODULE(idealcalc, m) {
    m.doc() = "quasi-norm calculus for symmetric ideals of compact operators";

    // sequences
    m.def("decreasing_rearrangement", &decreasing_rearrangement, py::arg("xi"));
    m.def("dilate", &dilate, py::arg("xi"), py::arg("m"));
    m.def("hadamard", &hadamard, py::arg("a"), py::arg("b"));

    // spaces
    py::enum_<WeightFamily>(m, "WeightFamily")
        .value("harmonic", WeightFamily::harmonic)
        .value("power", WeightFamily::power)
        .value("ones", WeightFamily::ones)
        .value("custom", WeightFamily::custom);

    py::class_<SpaceSpec>(m, "SpaceSpec")
        .def_static("schatten", &SpaceSpec::schatten, py::arg("p"))
        .def_static("lorentz", &SpaceSpec::lorentz, py::arg("family"), py::arg("n"),
                    py::arg("p"), py::arg("alpha") = 0.0)
        .def_static("marcinkiewicz", &SpaceSpec::marcinkiewicz, py::arg("family"), py::arg("n"),
                    py::arg("p"), py::arg("alpha") = 0.0)
        .def_static("uniform", &SpaceSpec::uniform)
        .def_static("parse", &SpaceSpec::parse, py::arg("text"))
        .def("to_string", &SpaceSpec::to_string)
        .def("exponent", &SpaceSpec::exponent)
        .def("weights", &SpaceSpec::weights)
        .def("__repr__",
             [](const SpaceSpec& s) { return "SpaceSpec('" + s.to_string() + "')"; })
        .def("__eq__", [](const SpaceSpec& a, const SpaceSpec& b) { return a == b; });

    m.def("seq_norm", &seq_norm, py::arg("space"), py::arg("xi"));
    m.def("concavity_modulus", &concavity_modulus, py::arg("space"));
    m.def("dilation_constant", &dilation_constant, py::arg("space"), py::arg("m"));
    m.def("default_space_registry", &default_space_registry);

    // operators
    m.def("singular_values", &singular_values, py::arg("x"));
    m.def("operator_norm", &operator_norm, py::arg("x"));
    m.def("ideal_norm", &ideal_norm, py::arg("space"), py::arg("x"));
    m.def("commutator", &commutator, py::arg("a"), py::arg("x"));
    m.def("diagonal_operator",
          py::overload_cast<const Sequence&>(&diagonal_operator), py::arg("entries"));
    m.def("absolute_value", &absolute_value, py::arg("x"));
    m.def("rank_one", &rank_one, py::arg("u"), py::arg("v"));
    m.def("read_matrix_file", &read_matrix_file, py::arg("path"));
    m.def("write_matrix_file", &write_matrix_file, py::arg("path"), py::arg("x"));

    // random
    py::enum_<Ensemble>(m, "Ensemble")
        .value("gaussian", Ensemble::gaussian)
        .value("unitary", Ensemble::unitary)
        .value("diagonal", Ensemble::diagonal);

    py::class_<Rng>(m, "Rng")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("uniform", py::overload_cast<>(&Rng::uniform))
        .def("normal", &Rng::normal);

    m.def("random_matrix", &random_matrix, py::arg("ensemble"), py::arg("n"), py::arg("rng"));
    m.def("random_sequence", &random_sequence, py::arg("len"), py::arg("rng"));
    m.def("random_decreasing", &random_decreasing, py::arg("len"), py::arg("rng"));

    // multipliers
    py::class_<SearchBudget>(m, "SearchBudget")
        .def(py::init<>())
        .def(py::init([](int restarts, int steps, std::uint64_t seed) {
                 SearchBudget b;
                 b.restarts = restarts;
                 b.ascent_steps = steps;
                 b.seed = seed;
                 return b;
             }),
             py::arg("restarts"), py::arg("ascent_steps"), py::arg("seed") = 1)
        .def_readwrite("restarts", &SearchBudget::restarts)
        .def_readwrite("ascent_steps", &SearchBudget::ascent_steps)
        .def_readwrite("seed", &SearchBudget::seed);

    py::enum_<EstimateStatus>(m, "EstimateStatus")
        .value("exact_analytic", EstimateStatus::exact_analytic)
        .value("lower_bound", EstimateStatus::lower_bound);

    py::class_<NormEstimate>(m, "NormEstimate")
        .def_readonly("value", &NormEstimate::value)
        .def_readonly("status", &NormEstimate::status)
        .def_readonly("method", &NormEstimate::method)
        .def_readonly("evaluations", &NormEstimate::evaluations)
        .def_readonly("witness_seq", &NormEstimate::witness_seq)
        .def_readonly("witness_mat", &NormEstimate::witness_mat)
        .def("witness_digest", &NormEstimate::witness_digest)
        .def("__repr__", [](const NormEstimate& e) {
            return "NormEstimate(value=" + std::to_string(e.value) + ", method='" + e.method +
                   "')";
        });

    py::class_<MultiplierOptions>(m, "MultiplierOptions")
        .def(py::init<>())
        .def_readwrite("use_analytic", &MultiplierOptions::use_analytic)
        .def_readwrite("right_side", &MultiplierOptions::right_side);

    m.def("multiplier_norm_seq", &multiplier_norm_seq, py::arg("F"), py::arg("G"), py::arg("xi"),
          py::arg("budget") = SearchBudget{}, py::arg("options") = MultiplierOptions{});
    m.def("multiplier_norm_op", &multiplier_norm_op, py::arg("J"), py::arg("I"), py::arg("a"),
          py::arg("budget") = SearchBudget{}, py::arg("options") = MultiplierOptions{});
    m.def("holder_oracle", &holder_oracle, py::arg("r"), py::arg("p"), py::arg("xi"));

    // derivations
    py::class_<DerivationSpec>(m, "DerivationSpec")
        .def(py::init([](const Matrix& generator) { return DerivationSpec{generator}; }),
             py::arg("generator"))
        .def_readwrite("generator", &DerivationSpec::generator);

    m.def("apply", &apply, py::arg("d"), py::arg("x"));
    m.def("split_star", &split_star, py::arg("d"));

    py::class_<DerivationNormReport>(m, "DerivationNormReport")
        .def_readonly("space_i", &DerivationNormReport::space_i)
        .def_readonly("space_j", &DerivationNormReport::space_j)
        .def_readonly("n", &DerivationNormReport::n)
        .def_readonly("seed", &DerivationNormReport::seed)
        .def_readonly("estimate", &DerivationNormReport::estimate)
        .def_readonly("gauge_generator", &DerivationNormReport::gauge_generator)
        .def_readonly("op_norm_gauge", &DerivationNormReport::op_norm_gauge)
        .def_readonly("concavity", &DerivationNormReport::concavity)
        .def_readonly("multiplier_value", &DerivationNormReport::multiplier_value)
        .def_readonly("multiplier_exact", &DerivationNormReport::multiplier_exact)
        .def_readonly("upper_bound", &DerivationNormReport::upper_bound);

    m.def("norm_estimate", &norm_estimate, py::arg("d"), py::arg("I"), py::arg("J"),
          py::arg("budget") = SearchBudget{});

    py::class_<GeneratorRecovery>(m, "GeneratorRecovery")
        .def_readonly("gauge_generator", &GeneratorRecovery::gauge_generator)
        .def_readonly("max_probe_residual", &GeneratorRecovery::max_probe_residual)
        .def_readonly("probes", &GeneratorRecovery::probes);

    m.def("recover_generator", &recover_generator, py::arg("delta"), py::arg("n"),
          py::arg("probe_count") = 8, py::arg("seed") = 1);

    // experiment runner
    m.def(
        "run_experiments",
        [](const std::string& config_text) {
            const ExperimentReport report = run(parse_config(config_text));
            return to_json(report);
        },
        py::arg("config_text"), "run suites from config text; returns the json report");
    m.def("default_config_text", []() {
        std::string text = "seed = 7\n";
        for (const SuiteConfig& s : default_config().suites) {
            text += "suite " + s.name;
            for (const auto& [k, v] : s.params) text += " " + k + "=" + v;
            text += "\n";
        }
        return text;
    });
}
