#include "dimerlab/nccr.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace dimerlab {

ArrowIdeal ideal_m_a(const Impression& imp, const MonomialAlgebra& S, int a,
                     const RunConfig& cfg) {
    const DimerQuiver& q = imp.con.source;
    if (imp.con.arrow_map.at(a) < 0)
        throw std::invalid_argument("arrow " + std::to_string(a) + " is contracted away");
    ArrowIdeal out;
    out.arrow = a;
    int v = q.arrows[a].tail;
    MonomialSet raw =
        reduced_walk_images(q, imp.arrow_images, v, v, cfg.cycle_bound_for(q), cfg.trunc, a);
    out.module = make_module(raw, S);
    out.divisibility = divisibility_ideal(S, imp.arrow_images[a]);
    out.matches_divisibility = out.module.elements == out.divisibility.module.elements;
    return out;
}

OriginIdeal origin_ideal(const Impression& imp, const MonomialAlgebra& S, const RunConfig& cfg) {
    OriginIdeal oi;
    const auto& tails = imp.con.tail;
    oi.applicable = !tails.empty();
    if (!oi.applicable) return oi;

    bool first = true;
    MonomialSet inter;
    for (int a : tails) {
        ArrowIdeal ai = ideal_m_a(imp, S, a, cfg);
        if (first) {
            inter = ai.module.elements;
            first = false;
        } else {
            inter = intersect_monoids(inter, ai.module.elements);
        }
        oi.per_tail_arrow.push_back(std::move(ai));
    }
    oi.m0.trunc = cfg.trunc;
    oi.m0.elements = inter;
    oi.m0.gens = minimal_module_generators(inter, S.elements);
    oi.m0.closed = true;
    for (const auto& m : inter)
        for (const auto& s : S.gens) {
            if (m.degree() + s.degree() > cfg.trunc) continue;
            if (!inter.count(multiply(m, s))) oi.m0.closed = false;
        }

    // Minimal primes: one divisibility ideal per variable marking a tail arrow.
    std::set<int> vars;
    for (int a : tails) {
        const Monomial& img = imp.arrow_images[a];
        for (int d = 0; d < img.nvars(); ++d)
            if (img.e[d] > 0) vars.insert(d);
    }
    MonomialSet prime_inter;
    first = true;
    for (int d : vars) {
        PrimeComponent pc;
        pc.variable = d;
        pc.ideal = divisibility_ideal(S, Monomial::var(static_cast<int>(imp.variables.size()), d));
        pc.primality = is_prime_divisibility_ideal(S, pc.ideal);
        pc.height_lattice = height_of_divisibility_prime(S, pc.ideal);
        pc.height_closed_form = 1;
        if (first) {
            prime_inter = pc.ideal.module.elements;
            first = false;
        } else {
            prime_inter = intersect_monoids(prime_inter, pc.ideal.module.elements);
        }
        oi.minimal_primes.push_back(std::move(pc));
    }
    oi.decomposition_verified = !oi.minimal_primes.empty() && prime_inter == oi.m0.elements;
    return oi;
}

HeightsReport heights_report(const OriginIdeal& oi, const CenterPresentation& R) {
    HeightsReport h;
    for (const auto& pc : oi.minimal_primes) h.ht_S_per_prime.push_back(pc.height_lattice);
    if (!h.ht_S_per_prime.empty()) {
        h.ht_S_m0 = *std::min_element(h.ht_S_per_prime.begin(), h.ht_S_per_prime.end());
        // The geometric height is witnessed by the depiction the pipeline
        // already built: it equals the minimal prime height over it.
        h.geometric_height_m0 = h.ht_S_m0;
    }
    h.dim_R_lattice = R.dim_lattice;
    return h;
}

CoprimalityResult pairwise_coprime(const std::vector<std::pair<int, Monomial>>& images) {
    CoprimalityResult res;
    res.pairwise_coprime = true;
    for (size_t i = 0; i < images.size(); ++i)
        for (size_t j = i + 1; j < images.size(); ++j) {
            const Monomial& a = images[i].second;
            const Monomial& b = images[j].second;
            for (int d = 0; d < a.nvars(); ++d)
                if (a.e[d] > 0 && b.e[d] > 0) {
                    res.pairwise_coprime = false;
                    if (!res.failing_pair) res.failing_pair = {images[i].first, images[j].first};
                }
        }
    return res;
}

CoprimalityResult pairwise_coprime(const Impression& imp) {
    std::vector<std::pair<int, Monomial>> images;
    for (int a : imp.con.tail) images.push_back({a, imp.arrow_images[a]});
    return pairwise_coprime(images);
}

namespace {

// Tail arrows marked by a variable: x_D divides their image.
std::vector<int> marked_tail_arrows(const Impression& imp, int variable) {
    std::vector<int> out;
    for (int a : imp.con.tail)
        if (imp.arrow_images[a].e.at(variable) > 0) out.push_back(a);
    return out;
}

// The unique arrow feeding a tail arrow (the head equal to the tail arrow's
// tail, which has indegree 1).
int feeder_of(const DimerQuiver& q, int tail_arrow) {
    for (const auto& b : q.arrows)
        if (b.head == q.arrows[tail_arrow].tail) return b.id;
    return -1;
}

// Shortest walk between vertices through arrows the predicate admits;
// breadth-first with ascending arrow ids, so the result is canonical.
std::optional<Path> bfs_walk(const DimerQuiver& q, int from, int to,
                             const std::function<bool(int)>& admit) {
    if (from == to) return trivial_path(from);
    std::vector<int> via(q.num_vertices, -2);  // arrow used to reach each vertex
    std::deque<int> queue{from};
    via[from] = -1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const auto& a : q.arrows) {
            if (a.tail != v || !admit(a.id) || via[a.head] != -2) continue;
            via[a.head] = a.id;
            if (a.head == to) {
                std::vector<int> rev;
                int cur = to;
                while (cur != from) {
                    rev.push_back(via[cur]);
                    cur = q.arrows[via[cur]].tail;
                }
                std::reverse(rev.begin(), rev.end());
                return Path{rev, -1};
            }
            queue.push_back(a.head);
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<int> epsilon_D(const Impression& imp, int variable) {
    const DimerQuiver& q = imp.con.source;
    std::set<int> dropped;
    for (int a : marked_tail_arrows(imp, variable)) dropped.insert(q.arrows[a].tail);
    std::vector<int> out;
    for (int v = 0; v < q.num_vertices; ++v)
        if (!dropped.count(v)) out.push_back(v);
    return out;
}

int simple_count(const Impression& imp, int variable) {
    return 1 + static_cast<int>(marked_tail_arrows(imp, variable).size());
}

bool vertex_invertible(const Impression& imp, int variable, const Path& p) {
    Monomial img = path_image(imp, p);
    if (img.e.at(variable) > 0) return false;
    if (p.trivial()) return true;
    int last = p.arrows.back();
    for (int a : marked_tail_arrows(imp, variable))
        if (last == feeder_of(imp.con.source, a)) return false;
    return true;
}

std::optional<Path> entry_generator(const Impression& imp, int variable, int i, int j,
                                    const RunConfig& cfg) {
    (void)cfg;
    const DimerQuiver& q = imp.con.source;
    auto eps = epsilon_D(imp, variable);
    if (!std::binary_search(eps.begin(), eps.end(), i))
        throw std::invalid_argument("vertex " + std::to_string(i) + " is excluded for this prime");
    auto admit = [&](int a) { return imp.arrow_images[a].e.at(variable) == 0; };

    for (int a : marked_tail_arrows(imp, variable)) {
        if (q.arrows[a].tail != j) continue;
        // j is the tail of a marked tail arrow: route to the feeder's tail,
        // then cross the feeder as the final arrow.
        int delta = feeder_of(q, a);
        auto walk = bfs_walk(q, i, q.arrows[delta].tail, admit);
        if (!walk) return std::nullopt;
        walk->arrows.push_back(delta);
        walk->base = -1;
        return walk;
    }
    return bfs_walk(q, i, j, admit);
}

TiledPresentation tiled_presentation(const Impression& imp, const MonomialAlgebra& S,
                                     const RunConfig& cfg) {
    const DimerQuiver& q = imp.con.source;
    int bound = cfg.cycle_bound_for(q);
    TiledPresentation tp;
    tp.entry.assign(q.num_vertices, std::vector<TiledEntry>(q.num_vertices));
    for (int j = 0; j < q.num_vertices; ++j)
        for (int i = 0; i < q.num_vertices; ++i) {
            TiledEntry& e = tp.entry[j][i];
            MonomialSet raw = reduced_walk_images(q, imp.arrow_images, i, j, bound, cfg.trunc);
            MonomialSet elements;
            if (i == j) {
                elements = truncated_monoid(raw, cfg.trunc);
            } else {
                // Walk images between distinct vertices are presented as a
                // module over the cycle algebra.
                for (const auto& m : raw)
                    for (const auto& s : S.elements) {
                        if (m.degree() + s.degree() > cfg.trunc) continue;
                        elements.insert(multiply(m, s));
                    }
            }
            e.elements = elements;
            bool has_unit = !elements.empty() && elements.begin()->is_unit();
            if (elements == S.elements) {
                e.shape = TiledEntry::Shape::FullAlgebra;
            } else if (has_unit) {
                e.shape = TiledEntry::Shape::UnitPlusModule;
                MonomialSet nonunit = elements;
                nonunit.erase(nonunit.begin());
                e.gens = minimal_module_generators(nonunit, S.elements);
            } else {
                e.shape = TiledEntry::Shape::Module;
                e.gens = minimal_module_generators(elements, S.elements);
            }
        }
    return tp;
}

namespace {

// First cycle (canonical order) whose image is exactly `g`; partial images
// must divide g, which prunes hard.
std::optional<Path> find_cycle_with_image(const DimerQuiver& q,
                                          const std::vector<Monomial>& images, const Monomial& g,
                                          int len_bound) {
    std::vector<std::vector<int>> out_arrows(q.num_vertices);
    for (const auto& a : q.arrows) out_arrows[a.tail].push_back(a.id);
    std::vector<int> walk;
    std::optional<Path> found;
    std::function<void(int, int, const Monomial&)> rec = [&](int start, int at, const Monomial& img) {
        if (found) return;
        if (!walk.empty() && at == start && img == g) {
            found = Path{walk, -1};
            return;
        }
        if (static_cast<int>(walk.size()) >= len_bound) return;
        for (int a : out_arrows[at]) {
            Monomial nimg = multiply(img, images[a]);
            if (!divides(nimg, g)) continue;
            walk.push_back(a);
            rec(start, q.arrows[a].head, nimg);
            walk.pop_back();
            if (found) return;
        }
    };
    int nvars = g.nvars();
    for (int v = 0; v < q.num_vertices && !found; ++v) rec(v, v, Monomial::unit(nvars));
    return found;
}

// Remainder of the face walk after a prefix that sits consecutively in its
// boundary: rotate the boundary to start with the prefix, drop the prefix.
std::optional<Path> face_completion(const DimerQuiver& q, const std::vector<int>& prefix) {
    for (const auto& f : q.faces) {
        const auto& b = f.boundary;
        if (prefix.size() > b.size()) continue;
        for (size_t k = 0; k < b.size(); ++k) {
            bool match = true;
            for (size_t i = 0; i < prefix.size(); ++i)
                if (b[(k + i) % b.size()] != prefix[i]) match = false;
            if (!match) continue;
            Path rest;
            for (size_t i = prefix.size(); i < b.size(); ++i)
                rest.arrows.push_back(b[(k + i) % b.size()]);
            if (rest.arrows.empty()) rest.base = q.arrows[prefix.front()].tail;
            return rest;
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<PrincipalCheck> principal_checks(const Impression& imp, const OriginIdeal& oi,
                                             const RunConfig& cfg) {
    const DimerQuiver& q = imp.con.source;
    std::vector<PrincipalCheck> out;
    std::set<int> star(imp.con.star.begin(), imp.con.star.end());
    std::set<int> tailset(imp.con.tail.begin(), imp.con.tail.end());

    for (const auto& pc : oi.minimal_primes) {
        int d = pc.variable;
        for (const auto& g : pc.ideal.module.gens) {
            PrincipalCheck chk;
            chk.variable = d;
            chk.generator = g;
            auto fail = [&](const std::string& why) {
                chk.ok = false;
                chk.detail = why;
                out.push_back(chk);
            };

            auto cyc = find_cycle_with_image(q, imp.arrow_images, g, cfg.cycle_bound_for(q));
            if (!cyc) {
                fail("no cycle with this image within the length bound");
                continue;
            }

            // Rotate so the walk opens with an admissible prefix.
            const auto& w = cyc->arrows;
            int plen = 0;
            std::vector<int> rotated;
            for (size_t k = 0; k < w.size() && plen == 0; ++k) {
                std::vector<int> rot;
                for (size_t i = 0; i < w.size(); ++i) rot.push_back(w[(k + i) % w.size()]);
                int a0 = rot[0];
                if (!star.count(a0) && !tailset.count(a0) && imp.arrow_images[a0].e.at(d) > 0) {
                    plen = 1;
                    rotated = std::move(rot);
                } else if (rot.size() >= 2 && star.count(a0) && tailset.count(rot[1]) &&
                           imp.arrow_images[rot[1]].e.at(d) > 0) {
                    plen = 2;
                    rotated = std::move(rot);
                }
            }
            if (plen == 0) {
                fail("no rotation opens with a marked arrow or a feeder + marked tail arrow");
                continue;
            }
            chk.cycle = Path{rotated, -1};
            std::vector<int> prefix(rotated.begin(), rotated.begin() + plen);
            chk.prefix = Path{prefix, -1};
            Path remainder{std::vector<int>(rotated.begin() + plen, rotated.end()), -1};
            if (remainder.arrows.empty()) remainder.base = q.arrows[prefix.back()].head;
            chk.remainder = remainder;

            auto b = face_completion(q, prefix);
            if (!b) {
                fail("prefix does not sit in any face boundary");
                continue;
            }
            chk.face_completion = *b;

            int pt = q.arrows[prefix.front()].tail;
            int ph = q.arrows[prefix.back()].head;
            auto admit = [&](int a) { return imp.arrow_images[a].e.at(d) == 0; };
            auto t = bfs_walk(q, pt, ph, admit);
            if (!t) {
                fail("no joining walk avoiding the marked arrows");
                continue;
            }
            chk.join = *t;

            Monomial lhs = multiply(g, multiply(path_image(imp, *t), path_image(imp, *b)));
            Monomial rhs =
                multiply(imp.sigma, multiply(path_image(imp, *t), path_image(imp, remainder)));
            chk.ok = lhs == rhs;
            if (!chk.ok) chk.detail = "monomial identity failed";
            out.push_back(chk);
        }
    }
    return out;
}

int exit_code_for(Verdict v) {
    switch (v) {
        case Verdict::NonnoetherianNCCR: return 0;
        case Verdict::NoncommutativeDesingularization:
        case Verdict::AssumptionsFail: return 1;
        case Verdict::Inconclusive: return 2;
    }
    return 2;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::NonnoetherianNCCR: return "NonnoetherianNCCR";
        case Verdict::NoncommutativeDesingularization: return "NoncommutativeDesingularization";
        case Verdict::AssumptionsFail: return "AssumptionsFail";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

CertificationReport certify(const DimerQuiver& q, const RunConfig& cfg) {
    cfg.validate();
    CertificationReport rep;
    rep.trunc = cfg.trunc;
    rep.cycle_bound = cfg.cycle_bound_for(q);
    rep.rewrite_bound = cfg.rewrite_bound;
    rep.path_bound = cfg.path_bound_for(q);

    auto val = validate(q);
    if (!val.ok()) throw std::invalid_argument("certify requires a valid quiver");

    rep.assumption_B = check_assumption_B(q);
    rep.contraction = contract(q);
    rep.star_nonempty = !rep.contraction.star.empty();
    rep.assumption_A = check_assumption_A(q, cfg);
    rep.source_cancellativity = is_cancellative(q, rep.path_bound, rep.rewrite_bound);

    if (rep.contraction.ok) {
        try {
            rep.imp = build_impression(rep.contraction);
            rep.impression_ok = true;
        } catch (const std::exception& e) {
            rep.impression_error = e.what();
        }
    } else {
        rep.impression_error = rep.contraction.error;
    }

    if (rep.impression_ok) {
        rep.S = cycle_algebra(rep.imp, cfg);
        rep.R = center(rep.imp, cfg);
        rep.origin = origin_ideal(rep.imp, rep.S.S, cfg);
        rep.heights = heights_report(rep.origin, rep.R);
        rep.coprime = pairwise_coprime(rep.imp);
        for (const auto& pc : rep.origin.minimal_primes) {
            PrimeDetail det;
            det.variable = pc.variable;
            det.epsilon = epsilon_D(rep.imp, pc.variable);
            det.simples = simple_count(rep.imp, pc.variable);
            // Intersection of the arrow ideals this variable marks.
            bool first = true;
            MonomialSet md;
            for (const auto& ai : rep.origin.per_tail_arrow) {
                if (rep.imp.arrow_images[ai.arrow].e.at(pc.variable) == 0) continue;
                if (first) {
                    md = ai.module.elements;
                    first = false;
                } else {
                    md = intersect_monoids(md, ai.module.elements);
                }
            }
            det.m_D_gens = minimal_module_generators(md, rep.S.S.elements);
            det.entry_gens.assign(q.num_vertices, {});
            for (int j = 0; j < q.num_vertices; ++j)
                for (int i : det.epsilon)
                    det.entry_gens[j].push_back(entry_generator(rep.imp, pc.variable, i, j, cfg));
            rep.prime_details.push_back(std::move(det));
        }
        rep.principal = principal_checks(rep.imp, rep.origin, cfg);
    }

    // Verdict, worst news first: definite assumption failures, then
    // undecided subresults, then the positive outcomes.
    if (!rep.contraction.ok) {
        rep.verdict = Verdict::AssumptionsFail;
        rep.verdict_reason = "contraction failed: " + rep.contraction.error;
    } else if (rep.assumption_A.holds == Tri::False) {
        rep.verdict = Verdict::AssumptionsFail;
        rep.verdict_reason = "the contracted quiver is not cancellative";
    } else if (!rep.assumption_B) {
        rep.verdict = Verdict::AssumptionsFail;
        rep.verdict_reason = "an arrow has head and tail both of indegree 1";
    } else if (!rep.impression_ok) {
        rep.verdict = Verdict::AssumptionsFail;
        rep.verdict_reason = "monomial images unavailable: " + rep.impression_error;
    } else if (!rep.star_nonempty) {
        rep.verdict = Verdict::AssumptionsFail;
        rep.verdict_reason = "no contractible arrows: the quiver is already cancellative";
        rep.note = "classical context: the algebra equals its contraction and is noetherian";
    } else if (rep.assumption_A.holds == Tri::Unknown) {
        rep.verdict = Verdict::Inconclusive;
        rep.verdict_reason = "cancellativity of the contracted quiver undecided within bounds (path " +
                             std::to_string(rep.assumption_A.target_verdict.path_bound) + ", rewrite " +
                             std::to_string(rep.assumption_A.target_verdict.rewrite_bound) + ")";
    } else if (rep.coprime.pairwise_coprime) {
        rep.verdict = Verdict::NonnoetherianNCCR;
        rep.verdict_reason = "assumptions hold, contractible arrows exist, tail arrows pairwise coprime";
    } else {
        rep.verdict = Verdict::NoncommutativeDesingularization;
        rep.verdict_reason = "assumptions hold but the tail arrows are not pairwise coprime";
    }
    return rep;
}

}  // namespace dimerlab
