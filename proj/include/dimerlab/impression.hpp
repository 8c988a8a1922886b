#pragma once

#include <optional>
#include <vector>

#include "dimerlab/config.hpp"
#include "dimerlab/contraction.hpp"
#include "dimerlab/matchings.hpp"
#include "dimerlab/monomial.hpp"
#include "dimerlab/quiver.hpp"

namespace dimerlab {

// Monomial images of the source quiver's arrows: a surviving arrow maps to
// the product of the variables of the simple matchings containing its image
// in the contracted quiver; a contracted arrow maps to the unit monomial.
struct Impression {
    Contraction con;
    std::vector<Matching> variables;     // simple matchings of the target, canonical order
    std::vector<Monomial> arrow_images;  // indexed by source arrow id
    std::vector<Monomial> target_images; // indexed by target arrow id
    Monomial sigma;                      // product of all variables = image of every unit cycle
    // Invariant check results (true on every valid input; surfaced, not assumed):
    bool unit_iff_contracted = false;  // image(a) == 1 exactly on arrows into indegree-1 heads
    bool faces_give_sigma = false;     // every source face boundary image == sigma
};

// Throws std::runtime_error when the target has no simple matchings (the
// monomial picture is undefined then) or the contraction is invalid.
Impression build_impression(const Contraction& c);

Monomial path_image(const Impression& imp, const Path& p);

// Images of all walks from `from` to `to` of length <= len_bound in the
// given quiver, with two sound reductions: branches whose image degree
// exceeds trunc are cut, and any walk containing a complete unit-cycle
// subwalk is cut (the full unit cycle itself is recorded first, so sigma is
// kept; every pruned image is sigma times a retained one). `first_arrow`
// forces the initial arrow. Walks include the trivial one when from == to.
MonomialSet reduced_walk_images(const DimerQuiver& q, const std::vector<Monomial>& images,
                                int from, int to, int len_bound, int trunc,
                                std::optional<int> first_arrow = std::nullopt);

struct CornerImage {
    int vertex = -1;
    MonomialSet elements;  // truncated monoid of cycle images at the vertex
    MonomialSet min_gens;  // algebra-minimal generators of that monoid
    bool saturated = false;
};

// Cycle images at a source-quiver vertex.
CornerImage corner_image(const Impression& imp, int v, const RunConfig& cfg);

struct CycleAlgebra {
    MonomialAlgebra S;
    bool corners_equal = false;  // all target-vertex corners agreed at truncation
};

// Corner image of a contracted-quiver vertex, with the pairwise-equality
// cross-check over all target vertices.
CycleAlgebra cycle_algebra(const Impression& imp, const RunConfig& cfg);

struct CenterPresentation {
    MonomialSet elements;          // intersection of corner images over source vertices
    bool equals_cycle_algebra = false;
    MonomialModule m;              // nonunit part as a module over the cycle algebra
    MonomialAlgebra S;             // the ambient cycle algebra used
    bool corners_equal = false;    // carried from cycle_algebra
    int dim_lattice = 0;           // rank of the lattice spanned by the center's elements
};

// Intersection over the source vertices of the corner images, presented as
// unit + module. Only indegree-1 vertices and one reference vertex are
// intersected (full corners at indegree >= 2 cannot cut the set down);
// the property tests re-verify that shortcut on every fixture.
CenterPresentation center(const Impression& imp, const RunConfig& cfg);

}  // namespace dimerlab
