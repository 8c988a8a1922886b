#include "dimerlab/matchings.hpp"

#include <algorithm>
#include <functional>

namespace dimerlab {

bool is_perfect_matching(const DimerQuiver& q, const std::vector<int>& arrows) {
    std::vector<char> in(q.arrows.size(), 0);
    for (int a : arrows) {
        if (a < 0 || a >= static_cast<int>(q.arrows.size())) return false;
        in[a] = 1;
    }
    for (const auto& f : q.faces) {
        int hits = 0;
        for (int a : f.boundary)
            if (in[a]) ++hits;
        if (hits != 1) return false;
    }
    return true;
}

std::vector<std::vector<int>> enumerate_exact_covers(int num_items,
                                                     const std::vector<std::vector<int>>& groups) {
    std::vector<std::vector<int>> item_groups(num_items);  // groups each item belongs to
    for (size_t g = 0; g < groups.size(); ++g)
        for (int it : groups[g]) item_groups[it].push_back(static_cast<int>(g));

    std::vector<std::vector<int>> covers;
    std::vector<int> chosen;
    std::vector<int> hit(groups.size(), 0);

    std::function<void()> rec = [&]() {
        // Pick the uncovered group with the fewest still-usable items.
        int best = -1, best_count = -1;
        for (size_t g = 0; g < groups.size(); ++g) {
            if (hit[g]) continue;
            int count = 0;
            for (int it : groups[g]) {
                bool usable = true;
                for (int og : item_groups[it])
                    if (hit[og]) usable = false;
                if (usable) ++count;
            }
            if (best == -1 || count < best_count) {
                best = static_cast<int>(g);
                best_count = count;
            }
        }
        if (best == -1) {
            covers.push_back(chosen);
            return;
        }
        if (best_count == 0) return;  // dead end
        for (int it : groups[best]) {
            bool usable = true;
            for (int og : item_groups[it])
                if (hit[og]) usable = false;
            if (!usable) continue;
            for (int og : item_groups[it]) ++hit[og];
            chosen.push_back(it);
            rec();
            chosen.pop_back();
            for (int og : item_groups[it]) --hit[og];
        }
    };
    rec();
    for (auto& c : covers) std::sort(c.begin(), c.end());
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    return covers;
}

std::vector<Matching> perfect_matchings(const DimerQuiver& q) {
    auto rep = validate(q);
    if (!rep.ok()) throw std::invalid_argument("perfect_matchings requires a valid quiver");
    std::vector<std::vector<int>> groups;
    groups.reserve(q.faces.size());
    for (const auto& f : q.faces) groups.push_back(f.boundary);
    auto covers = enumerate_exact_covers(static_cast<int>(q.arrows.size()), groups);
    std::vector<Matching> out;
    for (auto& c : covers) {
        Matching m;
        m.arrows = std::move(c);
        m.is_perfect = true;
        m.is_simple = is_simple(q, m);
        out.push_back(std::move(m));
    }
    return out;
}

bool is_simple(const DimerQuiver& q, const Matching& d) {
    if (!d.is_perfect || !is_perfect_matching(q, d.arrows))
        throw std::invalid_argument("is_simple requires a perfect matching");
    // Strong connectivity of the complement, spanning every vertex: one
    // forward and one reverse reachability sweep from vertex 0.
    std::vector<char> removed(q.arrows.size(), 0);
    for (int a : d.arrows) removed[a] = 1;
    auto sweep = [&](bool forward) {
        std::vector<std::vector<int>> adj(q.num_vertices);
        for (const auto& a : q.arrows) {
            if (removed[a.id]) continue;
            if (forward)
                adj[a.tail].push_back(a.head);
            else
                adj[a.head].push_back(a.tail);
        }
        std::vector<char> seen(q.num_vertices, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        return seen;
    };
    auto fwd = sweep(true), bwd = sweep(false);
    for (int v = 0; v < q.num_vertices; ++v)
        if (!fwd[v] || !bwd[v]) return false;
    return true;
}

std::vector<Matching> simple_matchings(const DimerQuiver& q) {
    std::vector<Matching> out;
    for (auto& m : perfect_matchings(q))
        if (m.is_simple) out.push_back(std::move(m));
    return out;
}

}  // namespace dimerlab
