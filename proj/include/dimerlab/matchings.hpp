#pragma once

#include <vector>

#include "dimerlab/quiver.hpp"

namespace dimerlab {

struct Matching {
    std::vector<int> arrows;  // sorted ascending
    bool is_perfect = false;
    bool is_simple = false;
};

// Independent re-check of the defining predicate: the set meets every face
// boundary exactly once.
bool is_perfect_matching(const DimerQuiver& q, const std::vector<int>& arrows);

// All perfect matchings, as sorted arrow sets in ascending lexicographic
// order (exact-cover search over the faces).
std::vector<Matching> perfect_matchings(const DimerQuiver& q);

// True iff the subquiver with d's arrows removed is strongly connected and
// spans every vertex. Throws std::invalid_argument when d is not perfect.
bool is_simple(const DimerQuiver& q, const Matching& d);

// perfect_matchings filtered to the simple ones; this sequence fixes the
// canonical variable order of the ambient polynomial ring.
std::vector<Matching> simple_matchings(const DimerQuiver& q);

// Exact-cover core, exposed for direct testing: choose a subset of items
// 0..num_items-1 such that every group is hit exactly once. Groups may be
// unsatisfiable; the result is then empty.
std::vector<std::vector<int>> enumerate_exact_covers(
    int num_items, const std::vector<std::vector<int>>& groups);

}  // namespace dimerlab
