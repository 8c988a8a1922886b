#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dimerlab {

// Monomial in the polynomial ring whose variables are indexed by the
// canonical simple-matching order of the contracted quiver. Exact integer
// exponent vectors throughout; no floating point anywhere.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
    static Monomial unit(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial var(int nvars, int i, int power = 1) {
        std::vector<int> v(nvars, 0);
        v[i] = power;
        return Monomial(std::move(v));
    }

    int nvars() const { return static_cast<int>(e.size()); }
    int degree() const;
    bool is_unit() const { return degree() == 0; }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator<(const Monomial& o) const { return e < o.e; }
};

using MonomialSet = std::set<Monomial>;

Monomial multiply(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);  // a | b componentwise
// Quotient b / a; requires divides(a, b) (throws std::invalid_argument).
Monomial quotient(const Monomial& b, const Monomial& a);

// All products of gens (including the empty product) of total degree <= bound.
MonomialSet truncated_monoid(const MonomialSet& gens, int degree_bound);

// Elements of the set that are not products of two nonconstant elements of
// the set. Units are never generators.
MonomialSet minimal_generators(const MonomialSet& elements);

// Elements not of the form (nonconstant coefficient monomial) * (element).
MonomialSet minimal_module_generators(const MonomialSet& elements, const MonomialSet& coeff);

MonomialSet intersect_monoids(const MonomialSet& a, const MonomialSet& b);

// Truncated monomial subalgebra: minimal generators plus the full truncated
// monoid they span. `saturated` records that re-generating from the minimal
// generators reproduces exactly the elements it was built from.
struct MonomialAlgebra {
    int nvars = 0;
    MonomialSet gens;      // minimal, nonconstant
    MonomialSet elements;  // truncated monoid, unit included
    int trunc = 0;
    bool saturated = false;
};

// Build from any truncated generating set of elements (the monoid closure
// of `elements` up to trunc must equal `elements` for `saturated`).
MonomialAlgebra make_algebra(const MonomialSet& elements, int trunc);

// Truncated module over an algebra's monoid.
struct MonomialModule {
    MonomialSet gens;      // minimal over the coefficient monoid
    MonomialSet elements;  // truncated: gens * coefficient monoid
    int trunc = 0;
    bool closed = false;  // S*elements stayed inside elements at truncation
};

// Module spanned by `raw` over the algebra's monoid, truncated.
MonomialModule make_module(const MonomialSet& raw, const MonomialAlgebra& ambient);

// Ideal of the ambient algebra generated by its monomials divisible by g.
struct DivisibilityIdeal {
    Monomial g;
    MonomialModule module;
    bool proper = true;  // false when g is a unit (ideal = whole algebra)
};

DivisibilityIdeal divisibility_ideal(const MonomialAlgebra& ambient, const Monomial& g);

struct PrimalityResult {
    bool closed_form = false;  // g is a single variable
    bool oracle_found_witness = false;
    std::optional<std::pair<Monomial, Monomial>> witness;  // h1*h2 in, h1 and h2 out
    bool agree = false;  // closed form == !witness found, within the bound
};

// Closed form (prime iff g is one variable) cross-checked against a
// brute-force search for h1, h2 in the ambient monoid with h1*h2 in the
// ideal but neither factor in it. Throws std::invalid_argument when the
// ideal is improper.
PrimalityResult is_prime_divisibility_ideal(const MonomialAlgebra& ambient,
                                            const DivisibilityIdeal& ideal);

// Rank of the integer lattice spanned by the exponent vectors.
int lattice_dim(const MonomialSet& gens);
int lattice_dim(const std::vector<Monomial>& gens);

// Height of a prime divisibility ideal (g a single variable) as the rank
// drop: lattice_dim(ambient gens) - lattice_dim(gens not divisible by g).
// Valid for saturated ambient monoids; callers surface ambient.saturated.
int height_of_divisibility_prime(const MonomialAlgebra& ambient, const DivisibilityIdeal& q);

// Optional variable labels for printing (i-th whitespace-separated token of
// the file labels variable i).
struct AliasTable {
    std::vector<std::string> labels;
};

AliasTable parse_alias_file(const std::string& path);

// Without an alias: space-separated powers like "x0^1 x2^1". With one:
// concatenated labels, exponents > 1 carried as ^k, e.g. "xz", "x^2zw".
// The unit monomial prints as "1" either way.
std::string to_string(const Monomial& m, const AliasTable* alias = nullptr);

}  // namespace dimerlab
