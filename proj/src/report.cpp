#include "dimerlab/report.hpp"

#include <sstream>

namespace dimerlab {

namespace {

json bounds_json(int trunc, int cycle_bound, int rewrite_bound, int path_bound) {
    return json{{"truncation", trunc},
                {"cycle_bound", cycle_bound},
                {"rewrite_bound", rewrite_bound},
                {"path_bound", path_bound}};
}

json bounds_json(const RunConfig& cfg, const DimerQuiver& q) {
    return bounds_json(cfg.trunc, cfg.cycle_bound_for(q), cfg.rewrite_bound,
                       cfg.path_bound_for(q));
}

std::string variable_label(int nvars, int d, const AliasTable* alias) {
    return to_string(Monomial::var(nvars, d), alias);
}

const char* kind_name(CancellativityVerdict::Kind k) {
    switch (k) {
        case CancellativityVerdict::Kind::Cancellative: return "cancellative";
        case CancellativityVerdict::Kind::NonCancellative: return "non-cancellative";
        case CancellativityVerdict::Kind::Unknown: return "unknown";
    }
    return "unknown";
}

const char* tri_name(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::False: return "false";
        case Tri::Unknown: return "unknown";
    }
    return "unknown";
}

json cancellative_body(const CancellativityVerdict& v) {
    json j;
    j["kind"] = kind_name(v.kind);
    j["reason"] = v.reason;
    j["has_witness"] = v.has_witness;
    if (v.has_witness) {
        j["witness"] = {{"p", path_to_string(v.p)},
                        {"q", path_to_string(v.q)},
                        {"r", path_to_string(v.r)},
                        {"side", v.side == CancellativityVerdict::Side::Left ? "left" : "right"}};
    }
    return j;
}

json impression_body(const Impression& imp, const AliasTable* alias) {
    json j;
    int nv = static_cast<int>(imp.variables.size());
    j["num_variables"] = nv;
    json vars = json::array();
    for (int d = 0; d < nv; ++d) {
        vars.push_back({{"index", d},
                        {"label", variable_label(nv, d, alias)},
                        {"arrows", imp.variables[d].arrows}});
    }
    j["variables"] = vars;
    j["sigma"] = to_string(imp.sigma, alias);
    json imgs = json::array();
    for (size_t a = 0; a < imp.arrow_images.size(); ++a)
        imgs.push_back({{"arrow", static_cast<int>(a)},
                        {"image", to_string(imp.arrow_images[a], alias)}});
    j["arrow_images"] = imgs;
    j["unit_iff_contracted"] = imp.unit_iff_contracted;
    j["faces_give_sigma"] = imp.faces_give_sigma;
    return j;
}

json algebra_body(const CycleAlgebra& S, const CenterPresentation& R, const AliasTable* alias) {
    json j;
    j["cycle_algebra"] = {{"gens", monomial_list(S.S.gens, alias)},
                          {"num_elements", S.S.elements.size()},
                          {"saturated", S.S.saturated},
                          {"corners_equal", S.corners_equal}};
    j["center"] = {{"equals_cycle_algebra", R.equals_cycle_algebra},
                   {"module_gens", monomial_list(R.m.gens, alias)},
                   {"module_closed", R.m.closed},
                   {"num_elements", R.elements.size()},
                   {"dim_lattice", R.dim_lattice}};
    return j;
}

json decompose_body(const OriginIdeal& oi, const HeightsReport& h, int nvars,
                    const AliasTable* alias) {
    json j;
    j["applicable"] = oi.applicable;
    if (!oi.applicable) return j;
    j["m0"] = {{"gens", monomial_list(oi.m0.gens, alias)},
               {"num_elements", oi.m0.elements.size()},
               {"closed", oi.m0.closed}};
    json per = json::array();
    for (const auto& ai : oi.per_tail_arrow)
        per.push_back({{"arrow", ai.arrow},
                       {"module_gens", monomial_list(ai.module.gens, alias)},
                       {"matches_divisibility", ai.matches_divisibility}});
    j["per_tail_arrow"] = per;
    json primes = json::array();
    for (const auto& pc : oi.minimal_primes) {
        json p;
        p["variable"] = pc.variable;
        p["label"] = variable_label(nvars, pc.variable, alias);
        p["gens"] = monomial_list(pc.ideal.module.gens, alias);
        p["prime_closed_form"] = pc.primality.closed_form;
        p["oracle_found_witness"] = pc.primality.oracle_found_witness;
        p["primality_agree"] = pc.primality.agree;
        p["height_lattice"] = pc.height_lattice;
        p["height_closed_form"] = pc.height_closed_form;
        primes.push_back(p);
    }
    j["minimal_primes"] = primes;
    j["decomposition_verified"] = oi.decomposition_verified;
    json hj;
    hj["ht_S_per_prime"] = h.ht_S_per_prime;
    hj["ht_S_m0"] = h.ht_S_m0 ? json(*h.ht_S_m0) : json(nullptr);
    hj["geometric_height_m0"] = h.geometric_height_m0 ? json(*h.geometric_height_m0) : json(nullptr);
    hj["ht_R_m0_cited"] = h.ht_R_m0_cited;
    hj["dim_R_cited"] = h.dim_R_cited;
    hj["dim_R_lattice"] = h.dim_R_lattice;
    j["heights"] = hj;
    return j;
}

std::string gens_to_string(const MonomialSet& gens, const AliasTable* alias) {
    std::ostringstream os;
    bool first = true;
    for (const auto& g : gens) {
        if (!first) os << ", ";
        os << to_string(g, alias);
        first = false;
    }
    return os.str();
}

std::string localized_diagonal(const PrimeDetail& det, const MonomialSet& prime_gens,
                               const AliasTable* alias) {
    return "(k + " + gens_to_string(det.m_D_gens, alias) + ")_loc + (" +
           gens_to_string(prime_gens, alias) + ")*S_loc";
}

}  // namespace

std::string path_to_string(const Path& p) {
    if (p.trivial()) return "e_" + std::to_string(p.base);
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) os << " ";
        os << p.arrows[i];
    }
    os << "]";
    return os.str();
}

json monomial_list(const MonomialSet& s, const AliasTable* alias) {
    json out = json::array();
    for (const auto& m : s) out.push_back(to_string(m, alias));
    return out;
}

std::string entry_to_string(const TiledEntry& e, const AliasTable* alias) {
    switch (e.shape) {
        case TiledEntry::Shape::FullAlgebra: return "S";
        case TiledEntry::Shape::UnitPlusModule:
            return "k + (" + gens_to_string(e.gens, alias) + ")S";
        case TiledEntry::Shape::Module:
            if (e.gens.empty()) return "0";
            return "(" + gens_to_string(e.gens, alias) + ")S";
    }
    return "0";
}

json report_validate(const DimerQuiver& q, const ValidationReport& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["op"] = "validate";
    j["ok"] = r.ok();
    j["num_vertices"] = q.num_vertices;
    j["num_arrows"] = q.arrows.size();
    j["num_faces"] = q.faces.size();
    j["euler_characteristic"] = q.num_vertices - static_cast<int>(q.arrows.size()) +
                                static_cast<int>(q.faces.size());
    json viol = json::array();
    for (const auto& v : r.violations)
        viol.push_back({{"invariant", v.invariant}, {"detail", v.detail}});
    j["violations"] = viol;
    return j;
}

json report_matchings(const DimerQuiver& q, const std::vector<Matching>& ms) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["op"] = "matchings";
    j["num_perfect"] = ms.size();
    int simple = 0;
    json arr = json::array();
    for (const auto& m : ms) {
        if (m.is_simple) ++simple;
        arr.push_back({{"arrows", m.arrows}, {"simple", m.is_simple}});
    }
    j["num_simple"] = simple;
    j["matchings"] = arr;
    (void)q;
    return j;
}

json report_contract(const Contraction& c) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["op"] = "contract";
    j["ok"] = c.ok;
    if (!c.ok) {
        j["error"] = c.error;
        return j;
    }
    j["star_arrows"] = c.star;
    j["tail_arrows"] = c.tail;
    j["vertex_map"] = c.vertex_map;
    j["arrow_map"] = c.arrow_map;
    j["target"] = {{"num_vertices", c.target.num_vertices},
                   {"num_arrows", c.target.arrows.size()},
                   {"num_faces", c.target.faces.size()},
                   {"text", format_quiver(c.target)}};
    return j;
}

json report_cancellative(const CancellativityVerdict& v) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["op"] = "cancellative";
    j["bounds"] = {{"path_bound", v.path_bound}, {"rewrite_bound", v.rewrite_bound}};
    json body = cancellative_body(v);
    j.update(body);
    return j;
}

json report_impression(const Impression& imp, const AliasTable* alias) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["op"] = "impression";
    j.update(impression_body(imp, alias));
    return j;
}

json report_algebra(const CycleAlgebra& S, const CenterPresentation& R, const RunConfig& cfg,
                    const DimerQuiver& q, const AliasTable* alias) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["op"] = "algebra";
    j["bounds"] = bounds_json(cfg, q);
    j.update(algebra_body(S, R, alias));
    return j;
}

json report_decompose(const OriginIdeal& oi, const HeightsReport& h, const RunConfig& cfg,
                      const DimerQuiver& q, const AliasTable* alias) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["op"] = "decompose";
    j["bounds"] = bounds_json(cfg, q);
    int nvars = oi.per_tail_arrow.empty()
                    ? 0
                    : oi.per_tail_arrow.front().divisibility.g.nvars();
    j.update(decompose_body(oi, h, nvars, alias));
    return j;
}

json report_certify(const CertificationReport& r, const AliasTable* alias) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["op"] = "certify";
    j["bounds"] = bounds_json(r.trunc, r.cycle_bound, r.rewrite_bound, r.path_bound);
    j["verdict"] = to_string(r.verdict);
    j["verdict_reason"] = r.verdict_reason;
    if (!r.note.empty()) j["note"] = r.note;
    j["exit_code"] = exit_code_for(r.verdict);

    j["assumptions"] = {{"no_arrow_with_both_ends_indegree_one", r.assumption_B},
                        {"contracted_quiver_cancellative", tri_name(r.assumption_A.holds)},
                        {"contraction_ok", r.contraction.ok},
                        {"star_nonempty", r.star_nonempty},
                        {"impression_ok", r.impression_ok}};
    j["source_cancellativity"] = cancellative_body(r.source_cancellativity);
    j["target_cancellativity"] = cancellative_body(r.assumption_A.target_verdict);
    if (r.contraction.ok) {
        j["contraction"] = {{"star_arrows", r.contraction.star},
                            {"tail_arrows", r.contraction.tail}};
    } else {
        j["contraction"] = {{"error", r.contraction.error}};
    }
    if (!r.impression_ok) {
        j["impression_error"] = r.impression_error;
        return j;
    }

    int nvars = static_cast<int>(r.imp.variables.size());
    j["impression"] = impression_body(r.imp, alias);
    j.update(algebra_body(r.S, r.R, alias));
    j["origin_ideal"] = decompose_body(r.origin, r.heights, nvars, alias);

    json cop;
    cop["pairwise_coprime"] = r.coprime.pairwise_coprime;
    cop["failing_pair"] = r.coprime.failing_pair
                              ? json::array({r.coprime.failing_pair->first,
                                             r.coprime.failing_pair->second})
                              : json(nullptr);
    j["coprimality"] = cop;

    json primes = json::array();
    for (size_t k = 0; k < r.prime_details.size(); ++k) {
        const auto& det = r.prime_details[k];
        json p;
        p["variable"] = det.variable;
        p["label"] = variable_label(nvars, det.variable, alias);
        p["vertices_kept"] = det.epsilon;
        p["simple_modules"] = det.simples;
        p["m_D_gens"] = monomial_list(det.m_D_gens, alias);
        if (k < r.origin.minimal_primes.size())
            p["localized_diagonal"] =
                localized_diagonal(det, r.origin.minimal_primes[k].ideal.module.gens, alias);
        json entries = json::array();
        for (size_t jj = 0; jj < det.entry_gens.size(); ++jj)
            for (size_t kk = 0; kk < det.entry_gens[jj].size(); ++kk) {
                const auto& g = det.entry_gens[jj][kk];
                entries.push_back({{"from", det.epsilon[kk]},
                                   {"to", static_cast<int>(jj)},
                                   {"generator", g ? json(path_to_string(*g)) : json(nullptr)}});
            }
        p["entry_generators"] = entries;
        primes.push_back(p);
    }
    j["primes"] = primes;

    json checks = json::array();
    bool all_ok = true;
    for (const auto& c : r.principal) {
        if (!c.ok) all_ok = false;
        json cj;
        cj["variable"] = c.variable;
        cj["generator"] = to_string(c.generator, alias);
        cj["ok"] = c.ok;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        if (c.ok) {
            cj["cycle"] = path_to_string(c.cycle);
            cj["prefix"] = path_to_string(c.prefix);
            cj["remainder"] = path_to_string(c.remainder);
            cj["face_completion"] = path_to_string(c.face_completion);
            cj["join"] = path_to_string(c.join);
        }
        checks.push_back(cj);
    }
    j["principal_checks"] = checks;
    j["principal_all_ok"] = all_ok;
    return j;
}

json report_present(const CertificationReport& r, const TiledPresentation& tiled,
                    const AliasTable* alias) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["op"] = "present";
    j["bounds"] = bounds_json(r.trunc, r.cycle_bound, r.rewrite_bound, r.path_bound);
    j["verdict"] = to_string(r.verdict);
    if (!r.impression_ok) {
        j["impression_error"] = r.impression_error;
        return j;
    }
    j["center"] = "k + (" + gens_to_string(r.R.m.gens, alias) + ")S";
    json rows = json::array();
    for (const auto& row : tiled.entry) {
        json cells = json::array();
        for (const auto& e : row) cells.push_back(entry_to_string(e, alias));
        rows.push_back(cells);
    }
    j["matrix"] = rows;
    json primes = json::array();
    for (size_t k = 0; k < r.prime_details.size(); ++k) {
        const auto& det = r.prime_details[k];
        int nvars = static_cast<int>(r.imp.variables.size());
        json p;
        p["variable"] = det.variable;
        p["label"] = variable_label(nvars, det.variable, alias);
        if (k < r.origin.minimal_primes.size())
            p["localized_diagonal"] =
                localized_diagonal(det, r.origin.minimal_primes[k].ideal.module.gens, alias);
        primes.push_back(p);
    }
    j["primes"] = primes;
    return j;
}

}  // namespace dimerlab
