#include "dimerlab/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

namespace dimerlab {

int indegree(const DimerQuiver& q, int v) {
    if (v < 0 || v >= q.num_vertices) throw std::out_of_range("unknown vertex id " + std::to_string(v));
    int n = 0;
    for (const auto& a : q.arrows)
        if (a.head == v) ++n;
    return n;
}

int outdegree(const DimerQuiver& q, int v) {
    if (v < 0 || v >= q.num_vertices) throw std::out_of_range("unknown vertex id " + std::to_string(v));
    int n = 0;
    for (const auto& a : q.arrows)
        if (a.tail == v) ++n;
    return n;
}

Path trivial_path(int v) {
    Path p;
    p.base = v;
    return p;
}

int path_tail(const DimerQuiver& q, const Path& p) {
    if (p.trivial()) return p.base;
    return q.arrows.at(p.arrows.front()).tail;
}

int path_head(const DimerQuiver& q, const Path& p) {
    if (p.trivial()) return p.base;
    return q.arrows.at(p.arrows.back()).head;
}

bool path_composable(const DimerQuiver& q, const Path& p) {
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        int a = p.arrows[i];
        if (a < 0 || a >= static_cast<int>(q.arrows.size())) return false;
        if (i > 0 && q.arrows[p.arrows[i - 1]].head != q.arrows[a].tail) return false;
    }
    return true;
}

std::array<int, 2> homology_class(const DimerQuiver& q, const Path& p) {
    if (!path_composable(q, p)) throw std::invalid_argument("path does not compose");
    std::array<int, 2> h{0, 0};
    for (int a : p.arrows) {
        h[0] += q.arrows[a].disp[0];
        h[1] += q.arrows[a].disp[1];
    }
    return h;
}

Path compose(const DimerQuiver& q, const Path& p, const Path& r) {
    if (path_head(q, r) != path_tail(q, p))
        throw std::invalid_argument("endpoint mismatch: head of the first factor's argument must equal tail of the second");
    if (p.trivial() && r.trivial()) return r;
    Path out;
    out.arrows = r.arrows;
    out.arrows.insert(out.arrows.end(), p.arrows.begin(), p.arrows.end());
    return out;
}

ValidationReport validate(const DimerQuiver& q) {
    ValidationReport rep;
    auto bad = [&](const std::string& inv, const std::string& det) {
        rep.violations.push_back({inv, det});
    };

    const int nv = q.num_vertices;
    const int na = static_cast<int>(q.arrows.size());

    if (nv <= 0) bad("vertex count", "quiver has no vertices");

    for (int i = 0; i < na; ++i) {
        const Arrow& a = q.arrows[i];
        if (a.id != i) bad("dense arrow ids", "arrow at position " + std::to_string(i) + " has id " + std::to_string(a.id));
        if (a.tail < 0 || a.tail >= nv || a.head < 0 || a.head >= nv)
            bad("arrow endpoints", "arrow " + std::to_string(a.id) + " references an unknown vertex");
        int lim = std::max(nv, na);
        if (std::abs(a.disp[0]) > lim || std::abs(a.disp[1]) > lim)
            bad("displacement range", "arrow " + std::to_string(a.id) + " displacement exceeds the quiver size");
    }
    if (!rep.ok()) return rep;  // later checks assume well-formed references

    // Each arrow in exactly one positive and one negative face.
    std::vector<int> pos(na, 0), neg(na, 0);
    for (const auto& f : q.faces)
        for (int a : f.boundary) {
            if (a < 0 || a >= na) {
                bad("face boundary ids", "face references unknown arrow " + std::to_string(a));
                return rep;
            }
            (f.sign > 0 ? pos : neg)[a]++;
        }
    for (int a = 0; a < na; ++a)
        if (pos[a] != 1 || neg[a] != 1)
            bad("arrow in exactly one +face and one -face",
                "arrow " + std::to_string(a) + " lies in " + std::to_string(pos[a]) + " positive and " +
                    std::to_string(neg[a]) + " negative faces");

    if (nv - na + static_cast<int>(q.faces.size()) != 0)
        bad("Euler characteristic",
            std::to_string(nv) + " - " + std::to_string(na) + " + " + std::to_string(q.faces.size()) + " != 0");

    // Connectivity of the underlying graph.
    if (nv > 0) {
        std::vector<std::vector<int>> adj(nv);
        for (const auto& a : q.arrows)
            if (a.tail >= 0 && a.head >= 0) {
                adj[a.tail].push_back(a.head);
                adj[a.head].push_back(a.tail);
            }
        std::vector<char> seen(nv, 0);
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
        for (int v = 0; v < nv; ++v)
            if (!seen[v]) {
                bad("connected", "vertex " + std::to_string(v) + " is disconnected from vertex 0");
                break;
            }
    }

    for (int v = 0; v < nv; ++v) {
        int in = 0, out = 0;
        for (const auto& a : q.arrows) {
            if (a.head == v) ++in;
            if (a.tail == v) ++out;
        }
        if (in != out)
            bad("indegree equals outdegree",
                "vertex " + std::to_string(v) + " has indegree " + std::to_string(in) + ", outdegree " + std::to_string(out));
    }

    for (size_t fi = 0; fi < q.faces.size(); ++fi) {
        const Face& f = q.faces[fi];
        if (static_cast<int>(f.boundary.size()) < 2) {
            bad("face length >= 2", "face " + std::to_string(fi) + " has length " + std::to_string(f.boundary.size()));
            continue;
        }
        bool composes = true;
        for (size_t i = 0; i < f.boundary.size(); ++i) {
            const Arrow& cur = q.arrows[f.boundary[i]];
            const Arrow& nxt = q.arrows[f.boundary[(i + 1) % f.boundary.size()]];
            if (cur.head != nxt.tail) {
                bad("face boundary composes and closes",
                    "face " + std::to_string(fi) + ": arrow " + std::to_string(cur.id) + " does not meet arrow " +
                        std::to_string(nxt.id));
                composes = false;
                break;
            }
        }
        if (!composes) continue;
        int dx = 0, dy = 0;
        for (int a : f.boundary) {
            dx += q.arrows[a].disp[0];
            dy += q.arrows[a].disp[1];
        }
        if (dx != 0 || dy != 0)
            bad("face displacement sum (0,0)",
                "face " + std::to_string(fi) + " sums to (" + std::to_string(dx) + "," + std::to_string(dy) + ")");
    }

    return rep;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string stripped = line.substr(0, line.find('#'));
    std::istringstream ss(stripped);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, int line) {
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
    return v;
}

}  // namespace

DimerQuiver parse_quiver(std::istream& in) {
    DimerQuiver q;
    bool have_vertices = false;
    std::map<int, Arrow> arrows_by_id;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "vertices") {
            if (toks.size() != 2) throw ParseError(lineno, "vertices takes exactly one count");
            if (have_vertices) throw ParseError(lineno, "duplicate vertices statement");
            q.num_vertices = parse_int(toks[1], lineno);
            if (q.num_vertices <= 0) throw ParseError(lineno, "vertex count must be positive");
            have_vertices = true;
        } else if (kw == "arrow") {
            if (toks.size() != 6) throw ParseError(lineno, "arrow takes: id tail head dx dy");
            Arrow a;
            a.id = parse_int(toks[1], lineno);
            a.tail = parse_int(toks[2], lineno);
            a.head = parse_int(toks[3], lineno);
            a.disp = {parse_int(toks[4], lineno), parse_int(toks[5], lineno)};
            if (a.id < 0) throw ParseError(lineno, "arrow id must be non-negative");
            if (arrows_by_id.count(a.id)) throw ParseError(lineno, "duplicate arrow id " + std::to_string(a.id));
            arrows_by_id[a.id] = a;
        } else if (kw == "face") {
            if (toks.size() < 3) throw ParseError(lineno, "face takes: <+|-> followed by arrow ids");
            Face f;
            if (toks[1] == "+")
                f.sign = +1;
            else if (toks[1] == "-")
                f.sign = -1;
            else
                throw ParseError(lineno, "face orientation must be + or -, got '" + toks[1] + "'");
            for (size_t i = 2; i < toks.size(); ++i) f.boundary.push_back(parse_int(toks[i], lineno));
            q.faces.push_back(std::move(f));
        } else {
            throw ParseError(lineno, "unknown statement '" + kw + "'");
        }
    }
    if (!have_vertices) throw ParseError(lineno, "missing vertices statement");
    int expect = 0;
    for (const auto& [id, a] : arrows_by_id) {
        if (id != expect) throw ParseError(lineno, "arrow ids are not dense: missing id " + std::to_string(expect));
        q.arrows.push_back(a);
        ++expect;
    }
    return q;
}

DimerQuiver parse_quiver_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_quiver(ss);
}

DimerQuiver parse_quiver_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open quiver file: " + path);
    return parse_quiver(f);
}

std::string format_quiver(const DimerQuiver& q) {
    std::ostringstream out;
    out << "vertices " << q.num_vertices << "\n";
    for (const auto& a : q.arrows)
        out << "arrow " << a.id << " " << a.tail << " " << a.head << " " << a.disp[0] << " " << a.disp[1] << "\n";
    for (const auto& f : q.faces) {
        out << "face " << (f.sign > 0 ? "+" : "-");
        for (int a : f.boundary) out << " " << a;
        out << "\n";
    }
    return out.str();
}

}  // namespace dimerlab
