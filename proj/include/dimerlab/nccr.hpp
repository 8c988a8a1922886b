#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dimerlab/config.hpp"
#include "dimerlab/impression.hpp"

namespace dimerlab {

// Module of images of cycles that traverse arrow `a` first, together with
// the cross-check against the divisibility ideal at image(a).
struct ArrowIdeal {
    int arrow = -1;
    MonomialModule module;
    DivisibilityIdeal divisibility;     // ideal of S at g = image(a)
    bool matches_divisibility = false;  // truncated sets agree
};

ArrowIdeal ideal_m_a(const Impression& imp, const MonomialAlgebra& S, int a,
                     const RunConfig& cfg);

struct PrimeComponent {
    int variable = -1;           // index of the simple matching D
    DivisibilityIdeal ideal;     // q_D in S
    PrimalityResult primality;
    int height_lattice = 0;
    int height_closed_form = 1;  // cited value for these primes
};

struct OriginIdeal {
    bool applicable = false;  // false when there are no tail arrows
    MonomialModule m0;
    std::vector<ArrowIdeal> per_tail_arrow;
    std::vector<PrimeComponent> minimal_primes;
    bool decomposition_verified = false;  // intersection of the primes == m0 at truncation
};

OriginIdeal origin_ideal(const Impression& imp, const MonomialAlgebra& S, const RunConfig& cfg);

struct HeightsReport {
    std::vector<int> ht_S_per_prime;
    std::optional<int> ht_S_m0;            // min over the primes
    std::optional<int> geometric_height_m0;  // via a depiction: equals the prime height
    int ht_R_m0_cited = 3;                   // theoretical constant, not computed here
    int dim_R_cited = 3;
    int dim_R_lattice = 0;  // computed rank of the center's element lattice
};

HeightsReport heights_report(const OriginIdeal& oi, const CenterPresentation& R);

struct CoprimalityResult {
    bool pairwise_coprime = false;
    std::optional<std::pair<int, int>> failing_pair;  // arrow ids sharing a variable
};

// Tail arrows are coprime when no two of their images share a variable.
CoprimalityResult pairwise_coprime(const Impression& imp);
CoprimalityResult pairwise_coprime(const std::vector<std::pair<int, Monomial>>& images);

// Vertices that remain after dropping the tails of D-marked tail arrows.
std::vector<int> epsilon_D(const Impression& imp, int variable);

// 1 + number of tail arrows whose image x_D divides.
int simple_count(const Impression& imp, int variable);

// A path is vertex invertible at q_D iff x_D does not divide its image and
// its leftmost (last-traversed) arrow is not the contracted arrow feeding a
// D-marked tail arrow.
bool vertex_invertible(const Impression& imp, int variable, const Path& p);

// Single generator of the corner between i and j after localizing at q_D:
// a walk i -> j through arrows whose images x_D does not divide, prefixed
// (as final arrow) by the contracted feeder when j is the tail of a
// D-marked tail arrow. Requires i in epsilon_D; returns nullopt if no
// admissible walk exists within the bound (reported, never fabricated).
std::optional<Path> entry_generator(const Impression& imp, int variable, int i, int j,
                                    const RunConfig& cfg);

struct TiledEntry {
    enum class Shape { FullAlgebra, UnitPlusModule, Module } shape = Shape::Module;
    MonomialSet gens;  // module generators over S; empty for shape FullAlgebra
    MonomialSet elements;
};

struct TiledPresentation {
    // entry[j][i] = presentation of the images of walks i -> j
    std::vector<std::vector<TiledEntry>> entry;
};

TiledPresentation tiled_presentation(const Impression& imp, const MonomialAlgebra& S,
                                     const RunConfig& cfg);

// Truncated factorization check for a minimal generator g of q_D: find a
// cycle with image g whose first steps are either one uncontracted,
// non-tail arrow with x_D-divisible image, or the contracted feeder
// followed by a D-marked tail arrow; complete that prefix around its face
// (walk b) and join the prefix's endpoints by a walk t avoiding D-marked
// arrows; then g * image(t b) must equal sigma * image(t p) for the cycle
// remainder p. Exact monomial identity, no tolerance.
struct PrincipalCheck {
    int variable = -1;
    Monomial generator;
    bool ok = false;
    std::string detail;  // failure stage, empty on success
    Path cycle, prefix, remainder, face_completion, join;
};

std::vector<PrincipalCheck> principal_checks(const Impression& imp, const OriginIdeal& oi,
                                             const RunConfig& cfg);

enum class Verdict {
    NonnoetherianNCCR,
    NoncommutativeDesingularization,
    AssumptionsFail,
    Inconclusive,
};

struct PrimeDetail {
    int variable = -1;
    std::vector<int> epsilon;
    int simples = 0;
    MonomialSet m_D_gens;  // intersection of the arrow ideals D marks
    // entry_gen[j][k]: generator path for (source vertex j, k-th epsilon vertex)
    std::vector<std::vector<std::optional<Path>>> entry_gens;
};

struct CertificationReport {
    // resolved bounds
    int trunc = 0, cycle_bound = 0, rewrite_bound = 0, path_bound = 0;
    bool assumption_B = false;
    Contraction contraction;
    AssumptionA assumption_A;
    CancellativityVerdict source_cancellativity;
    bool star_nonempty = false;
    bool impression_ok = false;
    std::string impression_error;
    Impression imp;            // valid when impression_ok
    CycleAlgebra S;
    CenterPresentation R;
    OriginIdeal origin;
    HeightsReport heights;
    CoprimalityResult coprime;
    std::vector<PrimeDetail> prime_details;
    std::vector<PrincipalCheck> principal;
    Verdict verdict = Verdict::Inconclusive;
    std::string verdict_reason;
    std::string note;  // context remarks (e.g. the already-cancellative case)
};

// Full pipeline. Precedence: assumption failures beat Inconclusive, which
// beats the positive verdicts; both positive verdicts need assumptions (A)
// and (B); the stronger one additionally needs contracted arrows to exist
// and the tail arrows to be pairwise coprime.
CertificationReport certify(const DimerQuiver& q, const RunConfig& cfg);

int exit_code_for(Verdict v);  // 0 NCCR, 1 other definite, 2 inconclusive
const char* to_string(Verdict v);

}  // namespace dimerlab
