#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "dimerlab/quiver.hpp"

namespace dimerlab {

// Bounds used by every truncated computation. Unset cycle/path bounds are
// derived from the quiver size at use time.
struct RunConfig {
    int trunc = 12;                  // total-degree truncation of monomial sets
    std::optional<int> cycle_bound;  // default 4 * |arrows|
    int rewrite_bound = 64;          // states expanded per path-equality query
    std::optional<int> path_bound;   // default 2 * |arrows|

    int cycle_bound_for(const DimerQuiver& q) const {
        int b = cycle_bound.value_or(4 * static_cast<int>(q.arrows.size()));
        check(b, "cycle bound");
        return b;
    }
    int path_bound_for(const DimerQuiver& q) const {
        int b = path_bound.value_or(2 * static_cast<int>(q.arrows.size()));
        check(b, "path bound");
        return b;
    }
    void validate() const {
        check(trunc, "truncation degree");
        check(rewrite_bound, "rewrite bound");
        if (cycle_bound) check(*cycle_bound, "cycle bound");
        if (path_bound) check(*path_bound, "path bound");
    }

private:
    static void check(int b, const char* what) {
        if (b < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
    }
};

}  // namespace dimerlab
