#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "prefseq/analysis.hpp"
#include "prefseq/census.hpp"
#include "prefseq/core.hpp"
#include "prefseq/generator.hpp"

namespace py = pybind11;
using namespace prefseq;

namespace {

py::object to_py_int(const BigInt& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

DigitSequence make_sequence(const std::string& digits, unsigned t, unsigned order) {
    return DigitSequence(Alphabet(t), order, parse_sequence(digits, t));
}

std::vector<std::string> cycle_strings(const CompletenessReport& report) {
    std::vector<std::string> cycles;
    for (const auto& cycle : report.forbidden_cycles) {
        std::string text;
        for (std::size_t i = 0; i <= cycle.size(); ++i) {
            if (!text.empty()) text += " -> ";
            text += format_word(word_from_value(cycle[i % cycle.size()], report.t,
                                                report.cycle_span));
        }
        cycles.push_back(std::move(text));
    }
    return cycles;
}

}  // namespace

PYBIND11_MODULE(_prefseq, m) {
    m.doc() = "de Bruijn sequence generation and analysis via preference functions";

    py::class_<PreferenceFunction>(m, "PreferenceFunction")
        .def_static("from_text",
                    [](const std::string& text) { return parse_preference_table(text); })
        .def_property_readonly("t", &PreferenceFunction::t)
        .def_property_readonly("span", &PreferenceFunction::span)
        .def("to_text", &format_preference_table)
        .def("__repr__", [](const PreferenceFunction& p) {
            return "<PreferenceFunction t=" + std::to_string(p.t()) +
                   " span=" + std::to_string(p.span()) + ">";
        });

    m.def("prefer_higher", &prefer_higher, py::arg("t"));
    m.def("prefer_opposite", &prefer_opposite_binary);

    m.def(
        "generate",
        [](const PreferenceFunction& p, unsigned order, const std::string& initial,
           bool wrap) {
            Word start = initial.empty() ? zero_word(order)
                                         : parse_sequence(initial, p.t());
            return generate(p, order, start, {.wrap = wrap}).to_string();
        },
        py::arg("function"), py::arg("order"), py::arg("initial") = "",
        py::arg("wrap") = false,
        "Run the greedy generator; returns the digit string.");

    m.def(
        "halt_length",
        [](const PreferenceFunction& p, unsigned order, const std::string& initial) {
            Word start = initial.empty() ? zero_word(order)
                                         : parse_sequence(initial, p.t());
            return generate(p, order, start).halt_length();
        },
        py::arg("function"), py::arg("order"), py::arg("initial") = "");

    m.def(
        "is_de_bruijn",
        [](const std::string& digits, unsigned t, unsigned order) {
            return is_de_bruijn(make_sequence(digits, t, order));
        },
        py::arg("digits"), py::arg("t"), py::arg("order"));

    m.def(
        "is_complete",
        [](const PreferenceFunction& p) {
            CompletenessReport report = is_complete(p);
            return py::make_tuple(report.complete, cycle_strings(report));
        },
        py::arg("function"),
        "Returns (complete, forbidden cycles as 'c1 -> c2 -> ...' strings).");

    m.def(
        "complexity",
        [](const std::string& digits, unsigned t, unsigned order) {
            ComplexityReport report = complexity(make_sequence(digits, t, order));
            py::dict d;
            d["span"] = report.span;
            d["feasible_by_span"] = report.feasible_by_span;
            d["witness"] = format_preference_table(report.witness);
            return d;
        },
        py::arg("digits"), py::arg("t"), py::arg("order"));

    m.def(
        "equivalent_to_ford",
        [](const std::string& digits, unsigned t,
           unsigned order) -> std::optional<std::vector<unsigned>> {
            auto sigma = equivalent_to_ford(make_sequence(digits, t, order));
            if (!sigma) return std::nullopt;
            return std::vector<unsigned>(sigma->begin(), sigma->end());
        },
        py::arg("digits"), py::arg("t"), py::arg("order"));

    m.def(
        "count_de_bruijn",
        [](unsigned t, unsigned i) { return to_py_int(count_de_bruijn(t, i)); },
        py::arg("t"), py::arg("i"));

    m.def(
        "count_by_complexity",
        [](unsigned t, unsigned i, const std::string& mode) {
            CountMode m = mode == "paper-literal" ? CountMode::paper_literal
                                                  : CountMode::corrected;
            return to_py_int(count_by_complexity(t, i, m));
        },
        py::arg("t"), py::arg("i"), py::arg("mode") = "corrected");

    m.def(
        "enumerate_complete",
        [](unsigned t, unsigned span) {
            std::vector<std::string> tables;
            enumerate_complete(t, span, [&](const PreferenceFunction& p) {
                tables.push_back(format_preference_table(p));
            });
            return tables;
        },
        py::arg("t"), py::arg("span"),
        "All complete preference functions of the span, as table texts.");

    m.def(
        "census",
        [](unsigned t, unsigned order) {
            CensusTable table = empirical_census(t, order);
            py::dict d;
            for (unsigned s = 0; s < table.counts.size(); ++s)
                d[py::int_(s)] = table.counts[s];
            return d;
        },
        py::arg("t"), py::arg("order"));
}
