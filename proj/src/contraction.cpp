#include "dimerlab/contraction.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "dimerlab/matchings.hpp"

namespace dimerlab {

std::vector<int> star_arrows(const DimerQuiver& q) {
    std::vector<int> out;
    for (const auto& a : q.arrows)
        if (indegree(q, a.head) == 1) out.push_back(a.id);
    return out;
}

std::vector<int> tail_arrows(const DimerQuiver& q) {
    std::vector<int> out;
    for (const auto& a : q.arrows)
        if (indegree(q, a.tail) == 1) out.push_back(a.id);
    return out;
}

bool check_assumption_B(const DimerQuiver& q) {
    for (const auto& a : q.arrows)
        if (indegree(q, a.head) == 1 && indegree(q, a.tail) == 1) return false;
    return true;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

}  // namespace

Contraction contract(const DimerQuiver& q) {
    Contraction c;
    c.source = q;
    c.star = star_arrows(q);
    c.tail = tail_arrows(q);

    auto fail = [&](const std::string& why) {
        c.ok = false;
        c.error = why;
        return c;
    };

    UnionFind uf(q.num_vertices);
    for (int a : c.star) {
        if (!uf.unite(q.arrows[a].tail, q.arrows[a].head))
            return fail("contracted arrows close a cycle (arrow " + std::to_string(a) + ")");
    }

    // Vertex potential phi with phi(head) = phi(tail) + disp on the
    // contracted forest; shifting every displacement by the coboundary of
    // phi zeroes the contracted arrows and preserves all face sums.
    std::vector<std::array<int, 2>> phi(q.num_vertices, {0, 0});
    {
        std::vector<std::vector<std::pair<int, std::array<int, 2>>>> adj(q.num_vertices);
        for (int ai : c.star) {
            const Arrow& a = q.arrows[ai];
            adj[a.tail].push_back({a.head, a.disp});
            adj[a.head].push_back({a.tail, {-a.disp[0], -a.disp[1]}});
        }
        std::vector<char> seen(q.num_vertices, 0);
        for (int root = 0; root < q.num_vertices; ++root) {
            if (seen[root]) continue;
            seen[root] = 1;
            std::vector<int> stack{root};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (auto& [w, d] : adj[v])
                    if (!seen[w]) {
                        seen[w] = 1;
                        phi[w] = {phi[v][0] + d[0], phi[v][1] + d[1]};
                        stack.push_back(w);
                    }
            }
        }
    }

    // Dense target vertex ids by ascending class representative.
    std::map<int, int> class_to_new;
    c.vertex_map.resize(q.num_vertices);
    for (int v = 0; v < q.num_vertices; ++v) {
        int r = uf.find(v);
        if (!class_to_new.count(r)) class_to_new[r] = static_cast<int>(class_to_new.size());
    }
    for (int v = 0; v < q.num_vertices; ++v) c.vertex_map[v] = class_to_new[uf.find(v)];

    std::set<int> star_set(c.star.begin(), c.star.end());
    c.arrow_map.assign(q.arrows.size(), -1);
    c.target.num_vertices = static_cast<int>(class_to_new.size());
    int next_id = 0;
    for (const auto& a : q.arrows) {
        if (star_set.count(a.id)) continue;
        Arrow b;
        b.id = next_id;
        c.arrow_map[a.id] = next_id;
        ++next_id;
        b.tail = c.vertex_map[a.tail];
        b.head = c.vertex_map[a.head];
        b.disp = {a.disp[0] + phi[a.tail][0] - phi[a.head][0],
                  a.disp[1] + phi[a.tail][1] - phi[a.head][1]};
        c.target.arrows.push_back(b);
    }

    for (const auto& f : q.faces) {
        Face g;
        g.sign = f.sign;
        for (int a : f.boundary)
            if (!star_set.count(a)) g.boundary.push_back(c.arrow_map[a]);
        c.target.faces.push_back(std::move(g));
    }

    auto rep = validate(c.target);
    if (!rep.ok()) {
        std::string why = "contraction target is not a valid quiver:";
        for (const auto& v : rep.violations) why += " [" + v.invariant + ": " + v.detail + "]";
        return fail(why);
    }
    c.ok = true;
    return c;
}

std::pair<Path, Path> arrow_relation(const DimerQuiver& q, int a) {
    Path sides[2];
    int found = 0;
    for (const auto& f : q.faces) {
        auto it = std::find(f.boundary.begin(), f.boundary.end(), a);
        if (it == f.boundary.end()) continue;
        // Rotate the boundary to start at `a`, then drop it: the remainder
        // runs head(a) -> tail(a).
        Path side;
        size_t start = static_cast<size_t>(it - f.boundary.begin());
        for (size_t k = 1; k < f.boundary.size(); ++k)
            side.arrows.push_back(f.boundary[(start + k) % f.boundary.size()]);
        if (side.arrows.empty()) side.base = q.arrows[a].head;
        if (found < 2) sides[found] = std::move(side);
        ++found;
    }
    if (found != 2) throw std::invalid_argument("arrow " + std::to_string(a) + " does not lie in exactly two faces");
    return {sides[0], sides[1]};
}

namespace {

// One rewriting system per quiver: for every arrow, the two sides of its
// relation as raw arrow sequences.
std::vector<std::pair<std::vector<int>, std::vector<int>>> relations(const DimerQuiver& q) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> rel;
    for (const auto& a : q.arrows) {
        auto [l, r] = arrow_relation(q, a.id);
        if (l.arrows == r.arrows) continue;  // degenerate, nothing to rewrite
        rel.push_back({l.arrows, r.arrows});
    }
    return rel;
}

// All words obtained from w by one rewrite.
void neighbors(const std::vector<int>& w,
               const std::vector<std::pair<std::vector<int>, std::vector<int>>>& rel,
               std::vector<std::vector<int>>& out) {
    out.clear();
    for (const auto& [lhs, rhs] : rel) {
        for (int dir = 0; dir < 2; ++dir) {
            const auto& from = dir == 0 ? lhs : rhs;
            const auto& to = dir == 0 ? rhs : lhs;
            if (from.size() > w.size()) continue;
            for (size_t i = 0; i + from.size() <= w.size(); ++i) {
                if (!std::equal(from.begin(), from.end(), w.begin() + i)) continue;
                std::vector<int> nw;
                nw.reserve(w.size() - from.size() + to.size());
                nw.insert(nw.end(), w.begin(), w.begin() + i);
                nw.insert(nw.end(), to.begin(), to.end());
                nw.insert(nw.end(), w.begin() + i + from.size(), w.end());
                out.push_back(std::move(nw));
            }
        }
    }
}

}  // namespace

Tri paths_equal_mod_I(const DimerQuiver& q, const Path& p, const Path& r, int rewrite_bound) {
    if (!path_composable(q, p) || !path_composable(q, r))
        throw std::invalid_argument("non-composable path");
    if (path_tail(q, p) != path_tail(q, r) || path_head(q, p) != path_head(q, r))
        throw std::invalid_argument("endpoint mismatch");
    if (p.arrows == r.arrows) return Tri::True;
    if (p.trivial() || r.trivial()) return Tri::False;  // relation sides are nonempty

    auto rel = relations(q);
    std::set<std::vector<int>> seen{p.arrows};
    std::deque<std::vector<int>> queue{p.arrows};
    int expanded = 0;
    std::vector<std::vector<int>> nbrs;
    while (!queue.empty()) {
        if (expanded >= rewrite_bound) return Tri::Unknown;
        auto w = std::move(queue.front());
        queue.pop_front();
        ++expanded;
        neighbors(w, rel, nbrs);
        for (auto& nw : nbrs) {
            if (nw == r.arrows) return Tri::True;
            if (seen.insert(nw).second) queue.push_back(nw);
        }
    }
    return Tri::False;
}

namespace {

// Enumerate every composable walk of length 1..len_bound, in canonical
// order (start vertex, then arrow choices ascending).
template <typename F>
void for_each_walk(const DimerQuiver& q, int len_bound, F&& visit) {
    std::vector<std::vector<int>> out_arrows(q.num_vertices);
    for (const auto& a : q.arrows) out_arrows[a.tail].push_back(a.id);
    std::vector<int> walk;
    std::function<void(int)> rec = [&](int at) {
        if (static_cast<int>(walk.size()) >= len_bound) return;
        for (int a : out_arrows[at]) {
            walk.push_back(a);
            visit(walk);
            rec(q.arrows[a].head);
            walk.pop_back();
        }
    };
    for (int v = 0; v < q.num_vertices; ++v) rec(v);
}

struct BucketKey {
    int tail, head;
    std::vector<int> image;  // exponents over the quiver's own simple matchings
    std::array<int, 2> homology;
    auto operator<=>(const BucketKey&) const = default;
};

}  // namespace

CancellativityVerdict is_cancellative(const DimerQuiver& q, int path_bound, int rewrite_bound) {
    CancellativityVerdict v;
    v.path_bound = path_bound;
    v.rewrite_bound = rewrite_bound;

    auto sm = simple_matchings(q);
    // Necessary condition: every arrow of a cancellative quiver lies in a
    // simple matching. Failure decides the verdict outright.
    int uncovered = -1;
    for (const auto& a : q.arrows) {
        bool in_some = false;
        for (const auto& d : sm)
            if (std::binary_search(d.arrows.begin(), d.arrows.end(), a.id)) in_some = true;
        if (!in_some) {
            uncovered = a.id;
            break;
        }
    }

    // Own-matching image of an arrow: which simple matchings contain it.
    auto own_image = [&](const std::vector<int>& walk) {
        std::vector<int> img(sm.size(), 0);
        for (int a : walk)
            for (size_t d = 0; d < sm.size(); ++d)
                if (std::binary_search(sm[d].arrows.begin(), sm[d].arrows.end(), a)) ++img[d];
        return img;
    };

    // Bucket all walks by the rewrite invariants (endpoints, image, homology).
    std::map<BucketKey, std::vector<std::vector<int>>> buckets;
    for_each_walk(q, path_bound, [&](const std::vector<int>& walk) {
        BucketKey key;
        key.tail = q.arrows[walk.front()].tail;
        key.head = q.arrows[walk.back()].head;
        key.image = own_image(walk);
        key.homology = {0, 0};
        for (int a : walk) {
            key.homology[0] += q.arrows[a].disp[0];
            key.homology[1] += q.arrows[a].disp[1];
        }
        buckets[key].push_back(walk);
    });

    auto rel = relations(q);
    bool any_unknown = false;

    // Walks from a given vertex, by increasing length then canonical order,
    // for the joining-multiplier search.
    std::vector<std::vector<int>> out_arrows(q.num_vertices);
    for (const auto& a : q.arrows) out_arrows[a.tail].push_back(a.id);
    auto joins = [&](const std::vector<int>& pw, const std::vector<int>& qw) -> std::optional<Path> {
        Path p{pw, -1}, pq{qw, -1};
        for (int len = 1; len <= path_bound; ++len) {
            // All walks of exactly `len`; check left (after) and right (before).
            std::vector<int> walk;
            std::optional<Path> found;
            std::function<void(int, int)> rec = [&](int at, int remaining) {
                if (found) return;
                if (remaining == 0) {
                    Path r{walk, -1};
                    int rt = q.arrows[walk.front()].tail;
                    int rh = q.arrows[walk.back()].head;
                    if (rt == q.arrows[pw.back()].head) {  // left: r after p
                        Tri t = paths_equal_mod_I(q, compose(q, r, p), compose(q, r, pq), rewrite_bound);
                        if (t == Tri::True) {
                            found = r;
                            v.side = CancellativityVerdict::Side::Left;
                            return;
                        }
                        if (t == Tri::Unknown) any_unknown = true;
                    }
                    if (rh == q.arrows[pw.front()].tail) {  // right: r before p
                        Tri t = paths_equal_mod_I(q, compose(q, p, r), compose(q, pq, r), rewrite_bound);
                        if (t == Tri::True) {
                            found = r;
                            v.side = CancellativityVerdict::Side::Right;
                            return;
                        }
                        if (t == Tri::Unknown) any_unknown = true;
                    }
                    return;
                }
                for (int a : out_arrows[at]) {
                    walk.push_back(a);
                    rec(q.arrows[a].head, remaining - 1);
                    walk.pop_back();
                    if (found) return;
                }
            };
            for (int s = 0; s < q.num_vertices && !found; ++s) rec(s, len);
            if (found) return found;
        }
        return std::nullopt;
    };

    for (auto& [key, walks] : buckets) {
        if (walks.size() < 2) continue;
        std::sort(walks.begin(), walks.end());
        // Equivalence classes inside the bucket via bounded closures.
        std::map<std::vector<int>, int> cls;
        int nclasses = 0;
        for (const auto& w : walks) {
            if (cls.count(w)) continue;
            int id = nclasses++;
            cls[w] = id;
            std::set<std::vector<int>> seen{w};
            std::deque<std::vector<int>> queue{w};
            int expanded = 0;
            std::vector<std::vector<int>> nbrs;
            bool truncated = false;
            while (!queue.empty()) {
                if (expanded >= rewrite_bound) {
                    truncated = true;
                    break;
                }
                auto cur = std::move(queue.front());
                queue.pop_front();
                ++expanded;
                neighbors(cur, rel, nbrs);
                for (auto& nw : nbrs)
                    if (seen.insert(nw).second) queue.push_back(nw);
            }
            if (truncated) any_unknown = true;
            for (const auto& s : seen) {
                auto [it, fresh] = cls.insert({s, id});
                (void)it;
                (void)fresh;
            }
        }
        if (nclasses <= 1) continue;
        // Distinct classes with equal invariants: hunt for a joining walk.
        std::vector<std::vector<int>> rep_of;
        rep_of.resize(nclasses);
        for (const auto& w : walks) {
            int id = cls[w];
            if (rep_of[id].empty()) rep_of[id] = w;
        }
        for (int i = 0; i < nclasses; ++i)
            for (int j = i + 1; j < nclasses; ++j) {
                if (rep_of[i].empty() || rep_of[j].empty()) continue;
                auto r = joins(rep_of[i], rep_of[j]);
                if (r) {
                    v.kind = CancellativityVerdict::Kind::NonCancellative;
                    v.has_witness = true;
                    v.p = Path{rep_of[i], -1};
                    v.q = Path{rep_of[j], -1};
                    v.r = *r;
                    v.reason = uncovered >= 0
                                   ? "arrow " + std::to_string(uncovered) + " lies in no simple matching; witness attached"
                                   : "witness pair found by bounded search";
                    return v;
                }
            }
    }

    if (uncovered >= 0) {
        v.kind = CancellativityVerdict::Kind::NonCancellative;
        v.reason = "arrow " + std::to_string(uncovered) +
                   " lies in no simple matching (necessary condition); no witness within bounds";
        return v;
    }
    if (any_unknown) {
        v.kind = CancellativityVerdict::Kind::Unknown;
        v.reason = "bounded search hit the rewrite bound before exhausting the space";
        return v;
    }
    v.kind = CancellativityVerdict::Kind::Cancellative;
    v.reason = "search space exhausted below the bounds; every arrow lies in a simple matching";
    return v;
}

AssumptionA check_assumption_A(const DimerQuiver& q, const RunConfig& cfg) {
    AssumptionA a;
    Contraction c = contract(q);
    a.contraction_ok = c.ok;
    if (!c.ok) {
        a.holds = Tri::False;
        a.error = c.error;
        return a;
    }
    a.target_verdict = is_cancellative(c.target, cfg.path_bound_for(c.target), cfg.rewrite_bound);
    switch (a.target_verdict.kind) {
        case CancellativityVerdict::Kind::Cancellative: a.holds = Tri::True; break;
        case CancellativityVerdict::Kind::NonCancellative: a.holds = Tri::False; break;
        case CancellativityVerdict::Kind::Unknown: a.holds = Tri::Unknown; break;
    }
    return a;
}

}  // namespace dimerlab
