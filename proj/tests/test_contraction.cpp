#include "doctest.h"
#include "dimerlab/contraction.hpp"
#include "test_util.hpp"

using namespace dimerlab;

namespace {

DimerQuiver conifold() { return testutil::load("conifold.quiver"); }

bool same_quiver(const DimerQuiver& a, const DimerQuiver& b) {
    if (a.num_vertices != b.num_vertices || a.arrows.size() != b.arrows.size() ||
        a.faces.size() != b.faces.size())
        return false;
    for (size_t i = 0; i < a.arrows.size(); ++i) {
        const auto& x = a.arrows[i];
        const auto& y = b.arrows[i];
        if (x.id != y.id || x.tail != y.tail || x.head != y.head || x.disp != y.disp) return false;
    }
    for (size_t i = 0; i < a.faces.size(); ++i)
        if (a.faces[i].sign != b.faces[i].sign || a.faces[i].boundary != b.faces[i].boundary)
            return false;
    return true;
}

}  // namespace

TEST_CASE("star and tail arrows per fixture") {
    CHECK(star_arrows(conifold()).empty());
    CHECK(tail_arrows(conifold()).empty());
    auto q1 = testutil::load("example1.quiver");
    CHECK(star_arrows(q1) == std::vector<int>{4});
    CHECK(tail_arrows(q1) == std::vector<int>{2});
    auto q2 = testutil::load("example2.quiver");
    CHECK(star_arrows(q2) == std::vector<int>{4, 5});
    CHECK(tail_arrows(q2) == std::vector<int>{2, 3});
}

TEST_CASE("no arrow may have indegree-one vertices at both ends") {
    for (const char* name : {"conifold.quiver", "example1.quiver", "example2.quiver"})
        CHECK(check_assumption_B(testutil::load(name)));

    // a directed triangle: every vertex has indegree one, so every arrow fails
    DimerQuiver tri;
    tri.num_vertices = 3;
    tri.arrows = {{0, 0, 1, {0, 0}}, {1, 1, 2, {0, 0}}, {2, 2, 0, {0, 0}}};
    CHECK_FALSE(check_assumption_B(tri));
}

TEST_CASE("contracting the three-vertex fixture yields the two-vertex one") {
    auto c = contract(testutil::load("example1.quiver"));
    REQUIRE(c.ok);
    CHECK(c.star == std::vector<int>{4});
    CHECK(c.tail == std::vector<int>{2});
    CHECK(c.vertex_map == std::vector<int>{0, 1, 0});
    CHECK(c.arrow_map == std::vector<int>{0, 1, 2, 3, -1});
    CHECK(same_quiver(c.target, conifold()));
}

TEST_CASE("contracting the four-vertex fixture yields the two-vertex one") {
    auto c = contract(testutil::load("example2.quiver"));
    REQUIRE(c.ok);
    CHECK(c.star == std::vector<int>{4, 5});
    CHECK(c.tail == std::vector<int>{2, 3});
    CHECK(c.vertex_map == std::vector<int>{0, 1, 0, 0});
    CHECK(c.arrow_map == std::vector<int>{0, 1, 2, 3, -1, -1});
    CHECK(same_quiver(c.target, conifold()));
}

TEST_CASE("a quiver without contractible arrows contracts to itself") {
    auto q = conifold();
    auto c = contract(q);
    REQUIRE(c.ok);
    CHECK(c.star.empty());
    CHECK(c.vertex_map == std::vector<int>{0, 1});
    CHECK(c.arrow_map == std::vector<int>{0, 1, 2, 3});
    CHECK(same_quiver(c.target, q));
}

TEST_CASE("contraction rebalances displacements via a vertex potential") {
    // Same shape as the three-vertex fixture but with the unit cell boundary
    // crossing moved onto arrows 4 and 2; the target must still come out with
    // arrow 2 carrying displacement zero.
    auto q = testutil::load("example1.quiver");
    q.arrows[4].disp = {1, 0};
    q.arrows[2].disp = {-1, 0};
    REQUIRE(validate(q).ok());
    auto c = contract(q);
    REQUIRE(c.ok);
    CHECK(same_quiver(c.target, conifold()));
}

TEST_CASE("contracted arrows that close a cycle are rejected") {
    DimerQuiver q;
    q.num_vertices = 2;
    q.arrows = {{0, 0, 1, {0, 0}}, {1, 1, 0, {0, 0}}};
    auto c = contract(q);
    CHECK_FALSE(c.ok);
    CHECK(c.error.find("cycle") != std::string::npos);
}

TEST_CASE("the two relation sides of an arrow run head to tail") {
    auto [l, r] = arrow_relation(conifold(), 2);
    CHECK(l.arrows == std::vector<int>{0, 3, 1});
    CHECK(r.arrows == std::vector<int>{1, 3, 0});

    for (const char* name : {"conifold.quiver", "example1.quiver", "example2.quiver"}) {
        auto q = testutil::load(name);
        for (const auto& a : q.arrows) {
            auto [p, s] = arrow_relation(q, a.id);
            for (const Path* side : {&p, &s}) {
                REQUIRE(path_composable(q, *side));
                CHECK(path_tail(q, *side) == a.head);
                CHECK(path_head(q, *side) == a.tail);
                auto h = homology_class(q, *side);
                CHECK(h[0] == -a.disp[0]);
                CHECK(h[1] == -a.disp[1]);
                // closing the side with the arrow itself gives a null-homologous cycle
                Path one;
                one.arrows = {a.id};
                auto cyc = compose(q, *side, one);
                CHECK(path_tail(q, cyc) == a.tail);
                CHECK(path_head(q, cyc) == a.tail);
                CHECK(homology_class(q, cyc) == std::array<int, 2>{0, 0});
            }
        }
    }
}

TEST_CASE("bounded path equality modulo the face relations") {
    auto q = conifold();
    auto mk = [](std::vector<int> a) {
        Path p;
        p.arrows = std::move(a);
        return p;
    };

    SUBCASE("relation sides are equal") {
        for (const auto& a : q.arrows) {
            auto [l, r] = arrow_relation(q, a.id);
            CHECK(paths_equal_mod_I(q, l, r, 64) == Tri::True);
        }
    }
    SUBCASE("whole face boundaries agree") {
        CHECK(paths_equal_mod_I(q, mk({2, 0, 3, 1}), mk({2, 1, 3, 0}), 64) == Tri::True);
    }
    SUBCASE("short parallel cycles with different images stay apart") {
        CHECK(paths_equal_mod_I(q, mk({2, 0}), mk({3, 1}), 64) == Tri::False);
    }
    SUBCASE("length differences are never bridged") {
        CHECK(paths_equal_mod_I(q, mk({0, 3, 1}), mk({0}), 8) == Tri::False);
    }
    SUBCASE("a starved bound reports unknown instead of guessing") {
        CHECK(paths_equal_mod_I(q, mk({0, 3, 1}), mk({0}), 1) == Tri::Unknown);
    }
    SUBCASE("trivial versus nontrivial cycles differ") {
        CHECK(paths_equal_mod_I(q, trivial_path(0), mk({2, 0}), 64) == Tri::False);
    }
    SUBCASE("identical paths are equal without search") {
        CHECK(paths_equal_mod_I(q, mk({2, 0}), mk({2, 0}), 1) == Tri::True);
    }
    SUBCASE("endpoint mismatches throw") {
        CHECK_THROWS_AS(paths_equal_mod_I(q, mk({2}), mk({3, 1}), 8), std::invalid_argument);
        CHECK_THROWS_AS(paths_equal_mod_I(q, mk({2, 3}), mk({2, 3}), 8), std::invalid_argument);
    }
}

TEST_CASE("the two-vertex fixture is cancellative within default bounds") {
    auto v = is_cancellative(conifold(), 8, 64);
    CHECK(v.kind == CancellativityVerdict::Kind::Cancellative);
    CHECK_FALSE(v.has_witness);
    CHECK(v.reason.find("exhausted") != std::string::npos);
}

TEST_CASE("a starved rewrite bound yields unknown, not a verdict") {
    auto v = is_cancellative(conifold(), 4, 1);
    CHECK(v.kind == CancellativityVerdict::Kind::Unknown);
}

namespace {

// Any claimed witness must be checkable from scratch: p and q parallel,
// inequivalent, yet equalized by composing with r on the reported side.
void reverify_witness(const DimerQuiver& q, const CancellativityVerdict& v, int rewrite_bound) {
    REQUIRE(v.kind == CancellativityVerdict::Kind::NonCancellative);
    REQUIRE(v.has_witness);
    REQUIRE(path_composable(q, v.p));
    REQUIRE(path_composable(q, v.q));
    REQUIRE(path_composable(q, v.r));
    CHECK(v.p.arrows != v.q.arrows);
    CHECK(path_tail(q, v.p) == path_tail(q, v.q));
    CHECK(path_head(q, v.p) == path_head(q, v.q));
    CHECK(paths_equal_mod_I(q, v.p, v.q, rewrite_bound) == Tri::False);
    Path lp, lq;
    if (v.side == CancellativityVerdict::Side::Left) {
        lp = compose(q, v.r, v.p);
        lq = compose(q, v.r, v.q);
    } else {
        lp = compose(q, v.p, v.r);
        lq = compose(q, v.q, v.r);
    }
    CHECK(paths_equal_mod_I(q, lp, lq, rewrite_bound) == Tri::True);
}

}  // namespace

TEST_CASE("both workout fixtures fail cancellativity with a checkable witness") {
    for (const char* name : {"example1.quiver", "example2.quiver"}) {
        auto q = testutil::load(name);
        auto v = is_cancellative(q, 2 * static_cast<int>(q.arrows.size()), 64);
        reverify_witness(q, v, 256);
        CHECK(v.reason.find("no simple matching") != std::string::npos);
    }
}

TEST_CASE("the contracted quiver of each workout fixture is cancellative") {
    for (const char* name : {"example1.quiver", "example2.quiver"}) {
        auto a = check_assumption_A(testutil::load(name), RunConfig{});
        CHECK(a.contraction_ok);
        CHECK(a.holds == Tri::True);
        CHECK(a.target_verdict.kind == CancellativityVerdict::Kind::Cancellative);
    }
    // trivially: an already-cancellative quiver contracts to itself
    auto a = check_assumption_A(conifold(), RunConfig{});
    CHECK(a.holds == Tri::True);
}

TEST_CASE("a starved config leaves the contracted-target question open") {
    RunConfig cfg;
    cfg.path_bound = 4;
    cfg.rewrite_bound = 1;
    auto a = check_assumption_A(testutil::load("example1.quiver"), cfg);
    CHECK(a.contraction_ok);
    CHECK(a.holds == Tri::Unknown);
}
