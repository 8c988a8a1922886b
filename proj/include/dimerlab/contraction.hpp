#pragma once

#include <string>
#include <vector>

#include "dimerlab/config.hpp"
#include "dimerlab/quiver.hpp"

namespace dimerlab {

enum class Tri { True, False, Unknown };

// Result of contracting every arrow whose head has indegree 1. Surviving
// arrows keep their source ids when those stay dense (always the case when
// the contracted arrows form a suffix of the id range); otherwise they are
// renumbered densely in ascending source-id order via arrow_map.
struct Contraction {
    DimerQuiver source;
    DimerQuiver target;
    std::vector<int> vertex_map;  // source vertex -> target vertex
    std::vector<int> arrow_map;   // source arrow -> target arrow, -1 on contracted arrows
    std::vector<int> star;        // arrows with head of indegree 1, sorted
    std::vector<int> tail;        // arrows with tail of indegree 1, sorted
    bool ok = false;
    std::string error;
};

std::vector<int> star_arrows(const DimerQuiver& q);
std::vector<int> tail_arrows(const DimerQuiver& q);

// True iff no arrow has head and tail both of indegree 1.
bool check_assumption_B(const DimerQuiver& q);

Contraction contract(const DimerQuiver& q);

// The two return walks completing arrow `a` around its two faces; each runs
// head(a) -> tail(a). These generate the path relations.
std::pair<Path, Path> arrow_relation(const DimerQuiver& q, int a);

// Bounded breadth-first closure of p under replacing one relation side by
// the other (as a consecutive subwalk). True if r is reached, False if the
// closure saturates first, Unknown once `rewrite_bound` states have been
// expanded. Throws std::invalid_argument on an endpoint mismatch.
Tri paths_equal_mod_I(const DimerQuiver& q, const Path& p, const Path& r, int rewrite_bound);

struct CancellativityVerdict {
    enum class Kind { Cancellative, NonCancellative, Unknown } kind = Kind::Unknown;
    // Witness (when found): p != q mod I with the same endpoints, and
    // r*p == r*q (side Left) or p*r == q*r (side Right) mod I.
    bool has_witness = false;
    Path p, q, r;
    enum class Side { Left, Right } side = Side::Left;
    std::string reason;
    int path_bound = 0;
    int rewrite_bound = 0;
};

// Necessary condition first: an arrow contained in no simple matching makes
// the verdict NonCancellative outright (witness search still runs to attach
// evidence). Cancellative is returned only when the bounded witness search
// exhausts with no Unknown subresult and every arrow lies in some simple
// matching.
CancellativityVerdict is_cancellative(const DimerQuiver& q, int path_bound, int rewrite_bound);

struct AssumptionA {
    Tri holds = Tri::Unknown;
    CancellativityVerdict target_verdict;
    bool contraction_ok = false;
    std::string error;
};

// Contract, then test cancellativity of the target. The path bound is
// derived from the target's own size when the config leaves it unset.
AssumptionA check_assumption_A(const DimerQuiver& q, const RunConfig& cfg);

}  // namespace dimerlab
