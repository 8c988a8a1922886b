#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimerlab {

// Arrow of a quiver embedded on the two-torus. The displacement is the
// lattice translation head_lift - tail_lift of the arrow's lift to the
// plane; it is part of the input format, not computed.
struct Arrow {
    int id = -1;
    int tail = -1;
    int head = -1;
    std::array<int, 2> disp{0, 0};
};

// Oriented face, bounded by a closed walk of arrows listed in traversal
// order (head of each arrow = tail of the next; the walk closes up).
struct Face {
    int sign = +1;  // +1 or -1
    std::vector<int> boundary;
};

struct DimerQuiver {
    int num_vertices = 0;
    std::vector<Arrow> arrows;  // indexed by id, ids dense 0..n-1
    std::vector<Face> faces;
};

// Path: arrows in traversal order (arrows[0] is traversed first, i.e. the
// rightmost factor when the path is written as a product). A trivial path
// has no arrows and a base vertex.
struct Path {
    std::vector<int> arrows;
    int base = -1;  // only meaningful when arrows is empty

    bool trivial() const { return arrows.empty(); }
    int length() const { return static_cast<int>(arrows.size()); }
    bool operator==(const Path& o) const = default;
};

struct Violation {
    std::string invariant;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

ValidationReport validate(const DimerQuiver& q);

// Count of arrows with head (resp. tail) v. Throws std::out_of_range on an
// unknown vertex id.
int indegree(const DimerQuiver& q, int v);
int outdegree(const DimerQuiver& q, int v);

Path trivial_path(int v);
// Endpoints in traversal terms: tail = start vertex, head = end vertex.
int path_tail(const DimerQuiver& q, const Path& p);
int path_head(const DimerQuiver& q, const Path& p);
// True when consecutive arrows compose (head of one = tail of the next).
bool path_composable(const DimerQuiver& q, const Path& p);

// Sum of arrow displacements; the torus homology class for closed paths.
// Throws std::invalid_argument if p does not compose.
std::array<int, 2> homology_class(const DimerQuiver& q, const Path& p);

// Product p*r, i.e. r traversed first then p. Requires head(r) == tail(p);
// throws std::invalid_argument otherwise.
Path compose(const DimerQuiver& q, const Path& p, const Path& r);

// Text format, one statement per line, '#' starts a comment:
//   vertices N
//   arrow <id> <tail> <head> <dx> <dy>
//   face <+|-> <arrow-id> <arrow-id> ...
// Errors are reported as ParseError with the offending line number.
DimerQuiver parse_quiver(std::istream& in);
DimerQuiver parse_quiver_text(const std::string& text);
DimerQuiver parse_quiver_file(const std::string& path);
std::string format_quiver(const DimerQuiver& q);

}  // namespace dimerlab
