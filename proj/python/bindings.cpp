// Python bindings. Programs are passed as source text and interpretations as sorted lists of
// literal strings, so no C++ types leak into Python.

#include "commands.hpp"

#include <prefasp/errors.hpp>
#include <prefasp/grounder.hpp>
#include <prefasp/meta.hpp>
#include <prefasp/parser.hpp>
#include <prefasp/preferences.hpp>
#include <prefasp/solver.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace prefasp;

namespace {

using Literals = std::vector<std::string>;

Literals to_list(const Interpretation& I) {
    Literals out;
    for (const auto& l : I) {
        out.push_back(l.str());
    }
    return out;
}

std::vector<Literals> to_lists(const std::vector<Interpretation>& v) {
    std::vector<Literals> out;
    for (const auto& I : v) {
        out.push_back(to_list(I));
    }
    return out;
}

Interpretation from_list(const Literals& v) {
    Interpretation out;
    for (const auto& s : v) {
        out.insert(lit(s));
    }
    return out;
}

std::vector<std::string> ids(const std::vector<RuleId>& v) {
    std::vector<std::string> out;
    for (const auto& id : v) {
        out.push_back(id.str());
    }
    return out;
}

MetaSemantics meta_semantics(const std::string& name) {
    auto s = parse_semantics(name);
    if (!s) {
        throw InvalidInput("unknown semantics '" + name + "'");
    }
    return *s;
}

Semantics native_semantics(const std::string& name) {
    if (name == "b") {
        return Semantics::B;
    }
    if (name == "w") {
        return Semantics::W;
    }
    if (name == "d") {
        return Semantics::D;
    }
    throw InvalidInput("unknown semantics '" + name + "' (expected b, w or d)");
}

} // namespace

PYBIND11_MODULE(_prefasp, m) {
    m.doc() = "Answer sets and preferred answer sets of prioritized logic programs";

    auto parse_error = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);
    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    (void)parse_error;

    m.def(
        "answer_sets",
        [](const std::string& text) { return to_lists(answer_sets(parse_program(text).program)); },
        py::arg("text"), "Answer sets of a propositional program, sorted.");

    m.def(
        "optimal_answer_sets",
        [](const std::string& text) {
            std::vector<std::pair<Literals, std::int64_t>> out;
            for (const auto& a : optimal_answer_sets(parse_program(text).program)) {
                out.emplace_back(to_list(a.set), a.value.H);
            }
            return out;
        },
        py::arg("text"), "Optimal answer sets with their objective value H.");

    m.def(
        "preferred",
        [](const std::string& text, const std::string& semantics) {
            return to_lists(preferred_answer_sets(parse_prioritized(text), native_semantics(semantics)));
        },
        py::arg("text"), py::arg("semantics") = "b", "B-, W- or D-preferred answer sets.");

    m.def(
        "weakly_preferred",
        [](const std::string& text, std::size_t limit) {
            py::list out;
            for (const auto& r : weakly_preferred(parse_prioritized(text), limit)) {
                py::dict d;
                d["literals"] = to_list(r.set);
                d["pvd"]      = r.value;
                d["from"]     = ids(r.from_order.sequence());
                d["to"]       = ids(r.to_order.sequence());
                out.append(d);
            }
            return out;
        },
        py::arg("text"), py::arg("limit") = kDefaultPvdLimit, "Weakly preferred answer sets with pvd and witness orders.");

    m.def(
        "pvd",
        [](const std::string& text, const Literals& answer_set, std::size_t limit) {
            return pvd(parse_prioritized(text), from_list(answer_set), limit).value;
        },
        py::arg("text"), py::arg("answer_set"), py::arg("limit") = kDefaultPvdLimit);

    m.def(
        "emit_facts", [](const std::string& text) { return to_string(emit_facts(parse_prioritized(text))); },
        py::arg("text"));

    m.def(
        "meta_solve",
        [](const std::string& text, const std::string& semantics) {
            return to_lists(meta_solve(parse_prioritized(text), meta_semantics(semantics)).sets);
        },
        py::arg("text"), py::arg("semantics"), "Results of the meta-interpreter, projected and sorted.");

    m.def(
        "cross_validate",
        [](const std::string& text, const std::string& semantics) {
            auto    r = cross_validate(parse_prioritized(text), meta_semantics(semantics));
            py::dict d;
            d["agree"]       = r.agree;
            d["native"]      = to_lists(r.native);
            d["meta"]        = to_lists(r.meta);
            d["only_native"] = to_lists(r.only_native);
            d["only_meta"]   = to_lists(r.only_meta);
            return d;
        },
        py::arg("text"), py::arg("semantics"));

    m.def(
        "ground", [](const std::string& text) { return to_string(ground(parse_meta(text))); }, py::arg("text"));

    m.def("asset_names", &asset_names);
    m.def(
        "asset_text", [](const std::string& name) { return std::string(asset_text(name)); }, py::arg("name"));
    m.def(
        "mangle", [](const std::string& literal) { return mangle(lit(literal)); }, py::arg("literal"));
    m.def(
        "demangle", [](const std::string& constant) { return demangle(constant).str(); }, py::arg("constant"));

    m.def(
        "_run",
        [](const std::string& command, const std::string& input, const std::string& semantics, bool explain,
           std::size_t limit_rules) {
            cli::RunConfig cfg;
            cfg.command     = command;
            cfg.input       = input;
            cfg.semantics   = semantics;
            cfg.explain     = explain;
            cfg.limit_rules = limit_rules;
            auto o          = cli::run(cfg);
            return std::make_pair(o.doc.dump(), o.exit_code);
        },
        py::arg("command"), py::arg("input"), py::arg("semantics") = "", py::arg("explain") = false,
        py::arg("limit_rules") = kDefaultPvdLimit);
}
