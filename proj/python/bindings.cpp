// Python face of the toolkit: string-in, plain-data-out wrappers around the
// pipeline stages. Quivers travel as their text format; monomials and
// reports travel as rendered strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dimerlab/report.hpp"

namespace py = pybind11;
using namespace dimerlab;

namespace {

RunConfig config_with(int trunc) {
    RunConfig cfg;
    cfg.trunc = trunc;
    cfg.validate();
    return cfg;
}

std::vector<std::string> render(const MonomialSet& s) {
    std::vector<std::string> out;
    for (const auto& m : s) out.push_back(to_string(m));
    return out;
}

Impression impression_of(const std::string& text) {
    auto q = parse_quiver_text(text);
    auto c = contract(q);
    if (!c.ok) throw std::runtime_error("contraction failed: " + c.error);
    return build_impression(c);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Homotopy dimer algebra toolkit: validation, contraction, "
              "monomial images, cycle algebra, and certification.";

    m.def(
        "validate",
        [](const std::string& text) {
            auto q = parse_quiver_text(text);
            auto r = validate(q);
            std::vector<std::string> v;
            for (const auto& x : r.violations) v.push_back(x.invariant + ": " + x.detail);
            return py::make_tuple(r.ok(), v);
        },
        py::arg("text"), "Parse and validate a quiver; returns (ok, violations).");

    m.def(
        "simple_matchings",
        [](const std::string& text) {
            auto q = parse_quiver_text(text);
            std::vector<std::vector<int>> out;
            for (const auto& mm : simple_matchings(q)) out.push_back(mm.arrows);
            return out;
        },
        py::arg("text"), "Sorted arrow-id lists of the simple perfect matchings.");

    m.def(
        "contract",
        [](const std::string& text) {
            auto q = parse_quiver_text(text);
            auto c = dimerlab::contract(q);
            if (!c.ok) throw std::runtime_error(c.error);
            return py::make_tuple(format_quiver(c.target), c.star, c.tail);
        },
        py::arg("text"),
        "Contract the arrows into indegree-1 heads; returns "
        "(target text, contracted arrows, tail arrows).");

    m.def(
        "cancellativity",
        [](const std::string& text, int path_bound, int rewrite_bound) {
            auto q = parse_quiver_text(text);
            RunConfig cfg;
            int pb = path_bound > 0 ? path_bound : cfg.path_bound_for(q);
            auto v = is_cancellative(q, pb, rewrite_bound);
            switch (v.kind) {
                case CancellativityVerdict::Kind::Cancellative: return "cancellative";
                case CancellativityVerdict::Kind::NonCancellative: return "non-cancellative";
                case CancellativityVerdict::Kind::Unknown: return "unknown";
            }
            return "unknown";
        },
        py::arg("text"), py::arg("path_bound") = 0, py::arg("rewrite_bound") = 64,
        "Bounded cancellativity verdict for the quiver's path algebra.");

    m.def(
        "arrow_images",
        [](const std::string& text) {
            auto imp = impression_of(text);
            std::vector<std::string> out;
            for (const auto& im : imp.arrow_images) out.push_back(to_string(im));
            return out;
        },
        py::arg("text"), "Monomial image of each arrow, indexed by arrow id.");

    m.def(
        "cycle_algebra_gens",
        [](const std::string& text, int trunc) {
            auto imp = impression_of(text);
            return render(cycle_algebra(imp, config_with(trunc)).S.gens);
        },
        py::arg("text"), py::arg("trunc") = 12,
        "Minimal generators of the truncated cycle algebra.");

    m.def(
        "center_module_gens",
        [](const std::string& text, int trunc) {
            auto imp = impression_of(text);
            return render(center(imp, config_with(trunc)).m.gens);
        },
        py::arg("text"), py::arg("trunc") = 12,
        "Module generators of the center's nonunit part over the cycle algebra.");

    m.def(
        "origin_gens",
        [](const std::string& text, int trunc) {
            auto imp = impression_of(text);
            auto cfg = config_with(trunc);
            auto S = cycle_algebra(imp, cfg);
            return render(origin_ideal(imp, S.S, cfg).m0.gens);
        },
        py::arg("text"), py::arg("trunc") = 12,
        "Generators of the intersection of the tail-arrow cycle ideals.");

    m.def(
        "verdict",
        [](const std::string& text, int trunc) {
            auto q = parse_quiver_text(text);
            return std::string(to_string(certify(q, config_with(trunc)).verdict));
        },
        py::arg("text"), py::arg("trunc") = 12, "Certification verdict name.");

    m.def(
        "certify_json",
        [](const std::string& text, int trunc) {
            auto q = parse_quiver_text(text);
            auto rep = certify(q, config_with(trunc));
            return report_certify(rep, nullptr).dump(2);
        },
        py::arg("text"), py::arg("trunc") = 12,
        "Full certification report as a JSON string.");
}
