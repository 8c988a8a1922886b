// Command-line front end: parse a quiver file, run one stage of the
// pipeline, print text or JSON. Exit codes: 0 success / strongest verdict,
// 1 definite negative verdict, 2 undecided within bounds, 3 input error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "dimerlab/report.hpp"

using namespace dimerlab;

namespace {

struct Options {
    std::string input;
    std::string out;
    std::string alias_path;
    bool as_json = false;
    int trunc = 12;
    int cycle_bound = 0;    // 0 = derive from the quiver
    int rewrite_bound = 64;
    int path_bound = 0;     // 0 = derive from the quiver
};

RunConfig config_from(const Options& o) {
    RunConfig cfg;
    cfg.trunc = o.trunc;
    cfg.rewrite_bound = o.rewrite_bound;
    if (o.cycle_bound > 0) cfg.cycle_bound = o.cycle_bound;
    if (o.path_bound > 0) cfg.path_bound = o.path_bound;
    cfg.validate();
    return cfg;
}

// Route the selected rendering to stdout or --out.
void emit(const Options& o, const std::string& text, const json& j) {
    std::string payload = o.as_json ? j.dump(2) + "\n" : text;
    if (o.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(o.out);
        if (!f) throw std::runtime_error("cannot open output file: " + o.out);
        f << payload;
    }
}

std::string join_monomials(const MonomialSet& s, const AliasTable* alias) {
    std::ostringstream os;
    bool first = true;
    for (const auto& m : s) {
        if (!first) os << ", ";
        os << to_string(m, alias);
        first = false;
    }
    return os.str();
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string cancellative_text(const CancellativityVerdict& v) {
    std::ostringstream os;
    const char* kind = v.kind == CancellativityVerdict::Kind::Cancellative ? "cancellative"
                       : v.kind == CancellativityVerdict::Kind::NonCancellative
                           ? "non-cancellative"
                           : "unknown";
    os << "verdict: " << kind << "\n";
    os << "reason: " << v.reason << "\n";
    if (v.has_witness) {
        os << "witness: p=" << path_to_string(v.p) << " q=" << path_to_string(v.q)
           << " joined on the "
           << (v.side == CancellativityVerdict::Side::Left ? "left" : "right")
           << " by r=" << path_to_string(v.r) << "\n";
    }
    os << "bounds: path " << v.path_bound << ", rewrite " << v.rewrite_bound << "\n";
    return os.str();
}

int cancellative_exit(CancellativityVerdict::Kind k) {
    switch (k) {
        case CancellativityVerdict::Kind::Cancellative: return 0;
        case CancellativityVerdict::Kind::NonCancellative: return 1;
        case CancellativityVerdict::Kind::Unknown: return 2;
    }
    return 2;
}

std::string impression_text(const Impression& imp, const AliasTable* alias) {
    std::ostringstream os;
    int nv = static_cast<int>(imp.variables.size());
    os << "variables (simple matchings of the contracted quiver):\n";
    for (int d = 0; d < nv; ++d) {
        os << "  " << to_string(Monomial::var(nv, d), alias) << " = arrows [";
        for (size_t i = 0; i < imp.variables[d].arrows.size(); ++i)
            os << (i ? " " : "") << imp.variables[d].arrows[i];
        os << "]\n";
    }
    os << "sigma = " << to_string(imp.sigma, alias) << "\n";
    os << "arrow images:\n";
    for (size_t a = 0; a < imp.arrow_images.size(); ++a)
        os << "  " << a << ": " << to_string(imp.arrow_images[a], alias) << "\n";
    os << "unit image exactly on contracted arrows: " << yesno(imp.unit_iff_contracted) << "\n";
    os << "face boundaries map to sigma: " << yesno(imp.faces_give_sigma) << "\n";
    return os.str();
}

// Shared by impression/algebra/decompose/present: contract and build the
// monomial picture, writing failures to stderr with the right exit code.
struct Pipeline {
    Contraction con;
    Impression imp;
    bool ok = false;
    int exit_code = 1;
};

Pipeline build_pipeline(const DimerQuiver& q) {
    Pipeline p;
    p.con = contract(q);
    if (!p.con.ok) {
        std::cerr << "error: contraction failed: " << p.con.error << "\n";
        return p;
    }
    try {
        p.imp = build_impression(p.con);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return p;
    }
    p.ok = true;
    p.exit_code = 0;
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homotopy dimer algebra toolkit"};
    app.require_subcommand(1);

    Options o;
    const char* names[] = {"validate",   "matchings", "contract", "cancellative", "impression",
                           "algebra",    "decompose", "certify",  "present"};
    std::string chosen;
    for (const char* name : names) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("input", o.input, "quiver file")->required();
        sub->add_flag("--json", o.as_json, "emit the structured report");
        sub->add_option("--out", o.out, "write the output to a file");
        sub->add_option("--trunc", o.trunc, "monomial degree truncation")
            ->envname("DIMERLAB_TRUNC");
        sub->add_option("--cycle-bound", o.cycle_bound, "cycle length bound");
        sub->add_option("--rewrite-bound", o.rewrite_bound, "rewrite states per equality query");
        sub->add_option("--path-bound", o.path_bound, "walk length bound for cancellativity");
        sub->add_option("--alias", o.alias_path, "variable label file");
        sub->callback([&chosen, name] { chosen = name; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = config_from(o);
        AliasTable alias_store;
        const AliasTable* alias = nullptr;
        if (!o.alias_path.empty()) {
            alias_store = parse_alias_file(o.alias_path);
            alias = &alias_store;
        }

        DimerQuiver q = parse_quiver_file(o.input);

        if (chosen == "validate") {
            auto rep = validate(q);
            std::ostringstream os;
            if (rep.ok()) {
                os << "ok: " << q.num_vertices << " vertices, " << q.arrows.size()
                   << " arrows, " << q.faces.size() << " faces\n";
            } else {
                os << "invalid: " << rep.violations.size() << " violation(s)\n";
                for (const auto& v : rep.violations)
                    os << "- " << v.invariant << ": " << v.detail << "\n";
            }
            emit(o, os.str(), report_validate(q, rep));
            return rep.ok() ? 0 : 3;
        }

        // Everything past this point needs a valid quiver.
        auto rep = validate(q);
        if (!rep.ok()) {
            std::cerr << "error: invalid quiver (" << rep.violations.size() << " violation(s))\n";
            for (const auto& v : rep.violations)
                std::cerr << "- " << v.invariant << ": " << v.detail << "\n";
            return 3;
        }

        if (chosen == "matchings") {
            auto ms = perfect_matchings(q);
            std::ostringstream os;
            int simple = 0;
            for (const auto& m : ms) simple += m.is_simple ? 1 : 0;
            os << ms.size() << " perfect matching(s), " << simple << " simple\n";
            for (const auto& m : ms) {
                os << "[";
                for (size_t i = 0; i < m.arrows.size(); ++i) os << (i ? " " : "") << m.arrows[i];
                os << "] perfect" << (m.is_simple ? " simple" : "") << "\n";
            }
            emit(o, os.str(), report_matchings(q, ms));
            return 0;
        }

        if (chosen == "contract") {
            auto c = contract(q);
            std::ostringstream os;
            if (!c.ok) {
                os << "contraction failed: " << c.error << "\n";
            } else {
                os << "contracted arrows: [";
                for (size_t i = 0; i < c.star.size(); ++i) os << (i ? " " : "") << c.star[i];
                os << "]\ntail arrows: [";
                for (size_t i = 0; i < c.tail.size(); ++i) os << (i ? " " : "") << c.tail[i];
                os << "]\nvertex map:";
                for (size_t v = 0; v < c.vertex_map.size(); ++v)
                    os << " " << v << "->" << c.vertex_map[v];
                os << "\narrow map:";
                for (size_t a = 0; a < c.arrow_map.size(); ++a) {
                    os << " " << a << "->";
                    if (c.arrow_map[a] < 0) os << "-";
                    else os << c.arrow_map[a];
                }
                os << "\n" << format_quiver(c.target);
            }
            emit(o, os.str(), report_contract(c));
            return c.ok ? 0 : 1;
        }

        if (chosen == "cancellative") {
            auto v = is_cancellative(q, cfg.path_bound_for(q), cfg.rewrite_bound);
            emit(o, cancellative_text(v), report_cancellative(v));
            return cancellative_exit(v.kind);
        }

        if (chosen == "impression") {
            Pipeline p = build_pipeline(q);
            if (!p.ok) return p.exit_code;
            emit(o, impression_text(p.imp, alias), report_impression(p.imp, alias));
            return 0;
        }

        if (chosen == "algebra") {
            Pipeline p = build_pipeline(q);
            if (!p.ok) return p.exit_code;
            auto S = cycle_algebra(p.imp, cfg);
            auto R = center(p.imp, cfg);
            std::ostringstream os;
            os << "bounds: truncation " << cfg.trunc << ", cycle bound "
               << cfg.cycle_bound_for(q) << "\n";
            os << "cycle algebra S: gens " << join_monomials(S.S.gens, alias) << "\n";
            os << "  elements at truncation: " << S.S.elements.size()
               << ", saturated: " << yesno(S.S.saturated)
               << ", corners equal: " << yesno(S.corners_equal) << "\n";
            os << "center R = k + (" << join_monomials(R.m.gens, alias) << ")S\n";
            os << "  equals S: " << yesno(R.equals_cycle_algebra)
               << ", lattice dimension: " << R.dim_lattice << "\n";
            emit(o, os.str(), report_algebra(S, R, cfg, q, alias));
            return 0;
        }

        if (chosen == "decompose") {
            Pipeline p = build_pipeline(q);
            if (!p.ok) return p.exit_code;
            auto S = cycle_algebra(p.imp, cfg);
            auto R = center(p.imp, cfg);
            auto oi = origin_ideal(p.imp, S.S, cfg);
            auto h = heights_report(oi, R);
            int nvars = static_cast<int>(p.imp.variables.size());
            std::ostringstream os;
            if (!oi.applicable) {
                os << "not applicable: the quiver has no tail arrows\n";
            } else {
                os << "m0 gens: " << join_monomials(oi.m0.gens, alias) << "\n";
                os << "per tail arrow:\n";
                for (const auto& ai : oi.per_tail_arrow)
                    os << "  arrow " << ai.arrow << ": gens "
                       << join_monomials(ai.module.gens, alias)
                       << " (matches divisibility ideal: " << yesno(ai.matches_divisibility)
                       << ")\n";
                os << "minimal primes:\n";
                for (const auto& pc : oi.minimal_primes)
                    os << "  q_" << to_string(Monomial::var(nvars, pc.variable), alias)
                       << ": gens " << join_monomials(pc.ideal.module.gens, alias)
                       << "; prime: " << yesno(pc.primality.closed_form)
                       << " (oracle agrees: " << yesno(pc.primality.agree)
                       << "); height: " << pc.height_lattice << "\n";
                os << "decomposition verified: " << yesno(oi.decomposition_verified) << "\n";
                os << "heights: ht_S(m0) " << (h.ht_S_m0 ? std::to_string(*h.ht_S_m0) : "-")
                   << ", geometric " << (h.geometric_height_m0
                                             ? std::to_string(*h.geometric_height_m0)
                                             : "-")
                   << ", ht_R(m0) cited " << h.ht_R_m0_cited << ", dim R cited "
                   << h.dim_R_cited << ", dim R lattice " << h.dim_R_lattice << "\n";
            }
            emit(o, os.str(), report_decompose(oi, h, cfg, q, alias));
            return 0;
        }

        if (chosen == "certify") {
            auto rep = certify(q, cfg);
            std::ostringstream os;
            os << "verdict: " << to_string(rep.verdict) << "\n";
            os << "reason: " << rep.verdict_reason << "\n";
            if (!rep.note.empty()) os << "note: " << rep.note << "\n";
            os << "assumptions: no double-indegree-1 arrows " << yesno(rep.assumption_B)
               << ", contracted quiver cancellative "
               << (rep.assumption_A.holds == Tri::True
                       ? "yes"
                       : rep.assumption_A.holds == Tri::False ? "no" : "unknown")
               << ", contracted arrows exist " << yesno(rep.star_nonempty) << "\n";
            if (rep.impression_ok) {
                os << "tail arrow images pairwise coprime: "
                   << yesno(rep.coprime.pairwise_coprime) << "\n";
                int ok = 0;
                for (const auto& c : rep.principal) ok += c.ok ? 1 : 0;
                os << "principal generation checks: " << ok << "/" << rep.principal.size()
                   << " ok\n";
            }
            emit(o, os.str(), report_certify(rep, alias));
            return exit_code_for(rep.verdict);
        }

        if (chosen == "present") {
            auto rep = certify(q, cfg);
            if (!rep.impression_ok) {
                std::cerr << "error: " << rep.impression_error << "\n";
                return 1;
            }
            auto tiled = tiled_presentation(rep.imp, rep.S.S, cfg);
            int n = q.num_vertices;
            std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
            std::vector<size_t> width(n, 0);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) {
                    cells[j][i] = entry_to_string(tiled.entry[j][i], alias);
                    width[i] = std::max(width[i], cells[j][i].size());
                }
            std::ostringstream os;
            os << "center R = k + (" << join_monomials(rep.R.m.gens, alias) << ")S\n";
            os << "matrix presentation (row j, column i = walks i -> j):\n";
            for (int j = 0; j < n; ++j) {
                os << "  ";
                for (int i = 0; i < n; ++i)
                    os << std::left << std::setw(static_cast<int>(width[i]) + 2) << cells[j][i];
                os << "\n";
            }
            if (!rep.prime_details.empty()) {
                os << "localized diagonals:\n";
                int nvars = static_cast<int>(rep.imp.variables.size());
                for (size_t k = 0; k < rep.prime_details.size(); ++k) {
                    const auto& det = rep.prime_details[k];
                    os << "  q_" << to_string(Monomial::var(nvars, det.variable), alias)
                       << ": (k + " << join_monomials(det.m_D_gens, alias) << ")_loc + ("
                       << join_monomials(
                              rep.origin.minimal_primes[k].ideal.module.gens, alias)
                       << ")*S_loc\n";
                }
            }
            emit(o, os.str(), report_present(rep, tiled, alias));
            return 0;
        }

        std::cerr << "error: unknown subcommand\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
