#include "dimerlab/impression.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dimerlab {

Impression build_impression(const Contraction& c) {
    if (!c.ok) throw std::runtime_error("impression over an invalid contraction: " + c.error);
    Impression imp;
    imp.con = c;
    imp.variables = simple_matchings(c.target);
    if (imp.variables.empty())
        throw std::runtime_error("the contracted quiver has no simple matchings; the monomial picture is undefined");
    const int nvars = static_cast<int>(imp.variables.size());

    imp.target_images.assign(c.target.arrows.size(), Monomial::unit(nvars));
    for (const auto& b : c.target.arrows) {
        Monomial m = Monomial::unit(nvars);
        for (int d = 0; d < nvars; ++d)
            if (std::binary_search(imp.variables[d].arrows.begin(), imp.variables[d].arrows.end(), b.id))
                m.e[d] += 1;
        imp.target_images[b.id] = m;
    }

    imp.arrow_images.assign(c.source.arrows.size(), Monomial::unit(nvars));
    for (const auto& a : c.source.arrows) {
        int b = c.arrow_map[a.id];
        if (b >= 0) imp.arrow_images[a.id] = imp.target_images[b];
    }

    imp.sigma = Monomial::unit(nvars);
    for (int d = 0; d < nvars; ++d) imp.sigma.e[d] = 1;

    imp.unit_iff_contracted = true;
    for (const auto& a : c.source.arrows) {
        bool unit = imp.arrow_images[a.id].is_unit();
        bool contracted = indegree(c.source, a.head) == 1;
        if (unit != contracted) imp.unit_iff_contracted = false;
    }

    imp.faces_give_sigma = true;
    for (const auto& f : c.source.faces) {
        Monomial m = Monomial::unit(nvars);
        for (int a : f.boundary) m = multiply(m, imp.arrow_images[a]);
        if (!(m == imp.sigma)) imp.faces_give_sigma = false;
    }
    return imp;
}

Monomial path_image(const Impression& imp, const Path& p) {
    Monomial m = Monomial::unit(static_cast<int>(imp.variables.size()));
    for (int a : p.arrows) m = multiply(m, imp.arrow_images.at(a));
    return m;
}

namespace {

// For each arrow, the rotations of its two face boundaries that end with
// that arrow; a walk whose suffix matches one has completed a unit cycle.
std::vector<std::vector<std::vector<int>>> closing_rotations(const DimerQuiver& q) {
    std::vector<std::vector<std::vector<int>>> by_arrow(q.arrows.size());
    for (const auto& f : q.faces) {
        const auto& b = f.boundary;
        for (size_t k = 0; k < b.size(); ++k) {
            std::vector<int> rot;
            for (size_t i = 1; i <= b.size(); ++i) rot.push_back(b[(k + i) % b.size()]);
            by_arrow[b[k]].push_back(std::move(rot));  // rot ends with b[k]
        }
    }
    return by_arrow;
}

bool suffix_matches(const std::vector<int>& walk, const std::vector<int>& rot) {
    if (rot.size() > walk.size()) return false;
    return std::equal(rot.begin(), rot.end(), walk.end() - static_cast<long>(rot.size()));
}

}  // namespace

MonomialSet reduced_walk_images(const DimerQuiver& q, const std::vector<Monomial>& images,
                                int from, int to, int len_bound, int trunc,
                                std::optional<int> first_arrow) {
    const int nvars = images.empty() ? 0 : images.front().nvars();
    MonomialSet out;
    auto closings = closing_rotations(q);
    std::vector<std::vector<int>> out_arrows(q.num_vertices);
    for (const auto& a : q.arrows) out_arrows[a.tail].push_back(a.id);

    std::vector<int> walk;
    std::function<void(int, const Monomial&)> rec = [&](int at, const Monomial& img) {
        // The trivial walk counts only when no first arrow is imposed.
        if (at == to && !(first_arrow && walk.empty())) out.insert(img);
        if (static_cast<int>(walk.size()) >= len_bound) return;
        for (int a : out_arrows[at]) {
            if (walk.empty() && first_arrow && a != *first_arrow) continue;
            const Monomial& ai = images[a];
            if (img.degree() + ai.degree() > trunc) continue;
            Monomial nimg = multiply(img, ai);
            walk.push_back(a);
            bool closed_unit = false;
            for (const auto& rot : closings[a])
                if (suffix_matches(walk, rot)) {
                    closed_unit = true;
                    // The whole walk being exactly a unit cycle is the one
                    // completed-cycle shape we keep: it contributes sigma.
                    if (rot.size() == walk.size() && q.arrows[a].head == to) out.insert(nimg);
                    break;
                }
            if (!closed_unit) rec(q.arrows[a].head, nimg);
            walk.pop_back();
        }
    };
    rec(from, Monomial::unit(nvars));
    return out;
}

CornerImage corner_image(const Impression& imp, int v, const RunConfig& cfg) {
    const DimerQuiver& q = imp.con.source;
    CornerImage ci;
    ci.vertex = v;
    MonomialSet raw =
        reduced_walk_images(q, imp.arrow_images, v, v, cfg.cycle_bound_for(q), cfg.trunc);
    MonomialSet closure = truncated_monoid(raw, cfg.trunc);
    ci.elements = closure;
    ci.min_gens = minimal_generators(closure);
    ci.saturated = truncated_monoid(ci.min_gens, cfg.trunc) == closure;
    return ci;
}

namespace {

CornerImage corner_on(const DimerQuiver& q, const std::vector<Monomial>& images, int v,
                      int cycle_bound, int trunc) {
    CornerImage ci;
    ci.vertex = v;
    MonomialSet raw = reduced_walk_images(q, images, v, v, cycle_bound, trunc);
    MonomialSet closure = truncated_monoid(raw, trunc);
    ci.elements = closure;
    ci.min_gens = minimal_generators(closure);
    ci.saturated = truncated_monoid(ci.min_gens, trunc) == closure;
    return ci;
}

}  // namespace

CycleAlgebra cycle_algebra(const Impression& imp, const RunConfig& cfg) {
    const DimerQuiver& t = imp.con.target;
    int bound = cfg.cycle_bound_for(t);
    CycleAlgebra out;
    CornerImage first = corner_on(t, imp.target_images, 0, bound, cfg.trunc);
    out.corners_equal = true;
    for (int v = 1; v < t.num_vertices; ++v) {
        CornerImage other = corner_on(t, imp.target_images, v, bound, cfg.trunc);
        if (other.elements != first.elements) out.corners_equal = false;
    }
    out.S = make_algebra(first.elements, cfg.trunc);
    return out;
}

CenterPresentation center(const Impression& imp, const RunConfig& cfg) {
    const DimerQuiver& q = imp.con.source;
    CenterPresentation r;
    CycleAlgebra ca = cycle_algebra(imp, cfg);
    r.S = ca.S;
    r.corners_equal = ca.corners_equal;

    // Corners at indegree >= 2 vertices equal the full cycle algebra, so
    // intersecting the indegree-1 corners with one reference corner suffices.
    std::vector<int> probe;
    int reference = -1;
    for (int v = 0; v < q.num_vertices; ++v) {
        if (indegree(q, v) == 1)
            probe.push_back(v);
        else if (reference < 0)
            reference = v;
    }
    if (reference >= 0) probe.push_back(reference);

    bool started = false;
    for (int v : probe) {
        CornerImage ci = corner_image(imp, v, cfg);
        if (!started) {
            r.elements = ci.elements;
            started = true;
        } else {
            r.elements = intersect_monoids(r.elements, ci.elements);
        }
    }
    r.equals_cycle_algebra = r.elements == ca.S.elements;
    r.dim_lattice = lattice_dim(r.elements);

    MonomialSet nonunit = r.elements;
    if (!nonunit.empty() && nonunit.begin()->is_unit()) nonunit.erase(nonunit.begin());
    r.m.trunc = cfg.trunc;
    r.m.elements = nonunit;
    r.m.gens = minimal_module_generators(nonunit, ca.S.elements);
    r.m.closed = true;
    for (const auto& m : nonunit)
        for (const auto& s : ca.S.gens) {
            if (m.degree() + s.degree() > cfg.trunc) continue;
            if (!nonunit.count(multiply(m, s))) r.m.closed = false;
        }
    return r;
}

}  // namespace dimerlab
