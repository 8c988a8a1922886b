#include "dimerlab/monomial.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dimerlab {

int Monomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

Monomial multiply(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
    Monomial out = a;
    for (int i = 0; i < b.nvars(); ++i) out.e[i] += b.e[i];
    return out;
}

bool divides(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) return false;
    for (int i = 0; i < a.nvars(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
    if (!divides(a, b)) throw std::invalid_argument("quotient of non-divisible monomials");
    Monomial out = b;
    for (int i = 0; i < a.nvars(); ++i) out.e[i] -= a.e[i];
    return out;
}

MonomialSet truncated_monoid(const MonomialSet& gens, int degree_bound) {
    if (gens.empty()) return {};
    int nvars = gens.begin()->nvars();
    MonomialSet out;
    std::deque<Monomial> queue;
    Monomial one = Monomial::unit(nvars);
    out.insert(one);
    queue.push_back(one);
    while (!queue.empty()) {
        Monomial m = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            if (g.is_unit()) continue;
            if (m.degree() + g.degree() > degree_bound) continue;
            Monomial p = multiply(m, g);
            if (out.insert(p).second) queue.push_back(p);
        }
    }
    return out;
}

MonomialSet minimal_generators(const MonomialSet& elements) {
    MonomialSet out;
    for (const auto& m : elements) {
        if (m.is_unit()) continue;
        bool redundant = false;
        for (const auto& f : elements) {
            if (f.is_unit() || f.degree() >= m.degree()) continue;
            if (divides(f, m) && elements.count(quotient(m, f))) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.insert(m);
    }
    return out;
}

MonomialSet minimal_module_generators(const MonomialSet& elements, const MonomialSet& coeff) {
    MonomialSet out;
    for (const auto& m : elements) {
        bool redundant = false;
        for (const auto& s : coeff) {
            if (s.is_unit() || s.degree() > m.degree()) continue;
            if (divides(s, m) && elements.count(quotient(m, s))) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.insert(m);
    }
    return out;
}

MonomialSet intersect_monoids(const MonomialSet& a, const MonomialSet& b) {
    MonomialSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
    return out;
}

MonomialAlgebra make_algebra(const MonomialSet& elements, int trunc) {
    MonomialAlgebra alg;
    alg.trunc = trunc;
    alg.nvars = elements.empty() ? 0 : elements.begin()->nvars();
    alg.gens = minimal_generators(elements);
    alg.elements = truncated_monoid(alg.gens, trunc);
    MonomialSet input = elements;
    if (alg.nvars > 0) input.insert(Monomial::unit(alg.nvars));
    alg.saturated = alg.elements == input;
    return alg;
}

MonomialModule make_module(const MonomialSet& raw, const MonomialAlgebra& ambient) {
    MonomialModule mod;
    mod.trunc = ambient.trunc;
    MonomialSet closure;
    for (const auto& m : raw)
        for (const auto& s : ambient.elements) {
            if (m.degree() + s.degree() > ambient.trunc) continue;
            closure.insert(multiply(m, s));
        }
    mod.elements = closure;
    mod.gens = minimal_module_generators(closure, ambient.elements);
    mod.closed = true;
    for (const auto& m : mod.elements)
        for (const auto& s : ambient.gens) {
            if (m.degree() + s.degree() > ambient.trunc) continue;
            if (!mod.elements.count(multiply(m, s))) mod.closed = false;
        }
    return mod;
}

DivisibilityIdeal divisibility_ideal(const MonomialAlgebra& ambient, const Monomial& g) {
    DivisibilityIdeal ideal;
    ideal.g = g;
    ideal.proper = !g.is_unit();
    MonomialSet members;
    for (const auto& m : ambient.elements)
        if (divides(g, m)) members.insert(m);
    ideal.module.trunc = ambient.trunc;
    ideal.module.elements = members;
    ideal.module.gens = minimal_module_generators(members, ambient.elements);
    ideal.module.closed = true;  // divisibility sets are closed by construction
    return ideal;
}

PrimalityResult is_prime_divisibility_ideal(const MonomialAlgebra& ambient,
                                            const DivisibilityIdeal& ideal) {
    if (!ideal.proper) throw std::invalid_argument("primality is asked of proper ideals only");
    PrimalityResult res;
    res.closed_form = ideal.g.degree() == 1;
    for (const auto& h1 : ambient.elements) {
        if (h1.is_unit() || divides(ideal.g, h1)) continue;
        for (const auto& h2 : ambient.elements) {
            if (h2.is_unit() || divides(ideal.g, h2)) continue;
            if (h1.degree() + h2.degree() > ambient.trunc) continue;
            Monomial prod = multiply(h1, h2);
            if (divides(ideal.g, prod)) {
                res.oracle_found_witness = true;
                res.witness = {h1, h2};
                break;
            }
        }
        if (res.oracle_found_witness) break;
    }
    res.agree = res.closed_form == !res.oracle_found_witness;
    return res;
}

namespace {

int rank_of(std::vector<std::vector<long long>> rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows.size(); ++col) {
        size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        for (size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            long long g = std::gcd(rows[r][col], rows[row][col]);
            long long mul_r = rows[row][col] / g;
            long long mul_p = rows[r][col] / g;
            for (size_t c = col; c < cols; ++c) rows[r][c] = rows[r][c] * mul_r - rows[row][c] * mul_p;
            // Keep entries small; the row's gcd carries no rank information.
            long long rg = 0;
            for (size_t c = col; c < cols; ++c) rg = std::gcd(rg, std::abs(rows[r][c]));
            if (rg > 1)
                for (size_t c = col; c < cols; ++c) rows[r][c] /= rg;
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

int lattice_dim(const std::vector<Monomial>& gens) {
    std::vector<std::vector<long long>> rows;
    for (const auto& m : gens) rows.emplace_back(m.e.begin(), m.e.end());
    return rank_of(std::move(rows));
}

int lattice_dim(const MonomialSet& gens) {
    return lattice_dim(std::vector<Monomial>(gens.begin(), gens.end()));
}

int height_of_divisibility_prime(const MonomialAlgebra& ambient, const DivisibilityIdeal& q) {
    if (q.g.degree() != 1) throw std::invalid_argument("height formula applies to single-variable ideals");
    int var = 0;
    for (int i = 0; i < q.g.nvars(); ++i)
        if (q.g.e[i] == 1) var = i;
    MonomialSet survivors;
    for (const auto& m : ambient.gens)
        if (m.e[var] == 0) survivors.insert(m);
    return lattice_dim(ambient.gens) - lattice_dim(survivors);
}

AliasTable parse_alias_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open alias file: " + path);
    AliasTable t;
    std::string tok;
    while (f >> tok) t.labels.push_back(tok);
    return t;
}

std::string to_string(const Monomial& m, const AliasTable* alias) {
    if (m.is_unit()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.e[i] == 0) continue;
        if (alias) {
            if (i >= static_cast<int>(alias->labels.size()))
                throw std::invalid_argument("alias table has too few labels for variable " + std::to_string(i));
            out << alias->labels[i];
            if (m.e[i] > 1) out << "^" << m.e[i];
        } else {
            if (!first) out << " ";
            out << "x" << i << "^" << m.e[i];
        }
        first = false;
    }
    return out.str();
}

}  // namespace dimerlab
