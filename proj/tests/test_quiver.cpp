#include <random>
#include <sstream>

#include "doctest.h"
#include "dimerlab/quiver.hpp"
#include "test_util.hpp"

using namespace dimerlab;

TEST_CASE("conifold fixture parses with the documented layout") {
    auto q = testutil::load("conifold.quiver");
    CHECK(q.num_vertices == 2);
    CHECK(q.arrows.size() == 4);
    CHECK(q.faces.size() == 2);
    CHECK(q.arrows[0].tail == 1);
    CHECK(q.arrows[0].head == 0);
    CHECK(q.arrows[0].disp == std::array<int, 2>{1, 0});
    CHECK(q.arrows[3].disp == std::array<int, 2>{-1, -1});
    CHECK(q.faces[0].sign == 1);
    CHECK(q.faces[0].boundary == std::vector<int>{2, 0, 3, 1});
    CHECK(q.faces[1].sign == -1);
}

TEST_CASE("format and parse round-trip every fixture") {
    for (const char* name : {"conifold.quiver", "example1.quiver", "example2.quiver"}) {
        auto q = testutil::load(name);
        auto q2 = parse_quiver_text(format_quiver(q));
        CHECK(q2.num_vertices == q.num_vertices);
        REQUIRE(q2.arrows.size() == q.arrows.size());
        for (size_t i = 0; i < q.arrows.size(); ++i) {
            CHECK(q2.arrows[i].tail == q.arrows[i].tail);
            CHECK(q2.arrows[i].head == q.arrows[i].head);
            CHECK(q2.arrows[i].disp == q.arrows[i].disp);
        }
        REQUIRE(q2.faces.size() == q.faces.size());
        for (size_t i = 0; i < q.faces.size(); ++i) {
            CHECK(q2.faces[i].sign == q.faces[i].sign);
            CHECK(q2.faces[i].boundary == q.faces[i].boundary);
        }
    }
}

TEST_CASE("parser reports the offending line") {
    auto expect_line = [](const std::string& text, int line) {
        try {
            parse_quiver_text(text);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_line("vertices 1\nvertices 2\n", 2);
    expect_line("vertices 1\narrow 0 0 0 0 0\narrow 0 0 0 0 0\n", 3);
    expect_line("vertices 1\nbogus 1 2 3\n", 2);
    expect_line("vertices 1\narrow 1 0 0 0 0\n", 2);  // ids must be dense from 0
    expect_line("vertices 1\narrow 0 0 0 0 x\n", 2);
    expect_line("arrow 0 0 0 0 0\n", 1);  // vertices must come somewhere
}

TEST_CASE("comments and blank lines are ignored") {
    auto q = parse_quiver_text(
        "# one vertex, three loops, two triangular faces\n"
        "vertices 1\n"
        "\n"
        "arrow 0 0 0 1 0  # horizontal loop\n"
        "arrow 1 0 0 0 1\n"
        "arrow 2 0 0 -1 -1\n"
        "face + 0 1 2\n"
        "face - 0 2 1\n");
    CHECK(q.arrows.size() == 3);
    CHECK(q.arrows[0].disp == std::array<int, 2>{1, 0});
    CHECK(validate(q).ok());
}

TEST_CASE("every shipped fixture except broken validates") {
    CHECK(validate(testutil::load("conifold.quiver")).ok());
    CHECK(validate(testutil::load("example1.quiver")).ok());
    CHECK(validate(testutil::load("example2.quiver")).ok());
    auto rep = validate(testutil::load("broken.quiver"));
    CHECK_FALSE(rep.ok());
}

TEST_CASE("validation catches specific defects") {
    auto base = testutil::load("conifold.quiver");

    SUBCASE("missing face coverage") {
        auto q = base;
        q.faces.pop_back();
        auto rep = validate(q);
        REQUIRE_FALSE(rep.ok());
        bool face_rule = false;
        for (const auto& v : rep.violations)
            if (v.invariant.find("face") != std::string::npos) face_rule = true;
        CHECK(face_rule);
    }
    SUBCASE("face displacements must cancel") {
        auto q = base;
        q.arrows[0].disp = {2, 0};
        CHECK_FALSE(validate(q).ok());
    }
    SUBCASE("indegree must equal outdegree") {
        auto q = base;
        // retarget arrow 2 to make vertex degrees lopsided
        q.arrows[2].head = 0;
        CHECK_FALSE(validate(q).ok());
    }
    SUBCASE("face boundaries must close up") {
        auto q = base;
        // [2,0,3,1] -> [0,2,3,1]: arrow 2's head no longer feeds arrow 3
        std::swap(q.faces[0].boundary[0], q.faces[0].boundary[1]);
        auto rep = validate(q);
        REQUIRE_FALSE(rep.ok());
        bool closure_rule = false;
        for (const auto& v : rep.violations)
            if (v.invariant.find("composes and closes") != std::string::npos) closure_rule = true;
        CHECK(closure_rule);
    }
}

TEST_CASE("degrees on the conifold") {
    auto q = testutil::load("conifold.quiver");
    CHECK(indegree(q, 0) == 2);
    CHECK(outdegree(q, 0) == 2);
    CHECK(indegree(q, 1) == 2);
    CHECK(outdegree(q, 1) == 2);
    CHECK_THROWS_AS(indegree(q, 7), std::out_of_range);
}

TEST_CASE("paths compose in traversal order") {
    auto q = testutil::load("conifold.quiver");
    Path r{{2}, -1};  // 0 -> 1
    Path p{{0}, -1};  // 1 -> 0
    CHECK(path_tail(q, r) == 0);
    CHECK(path_head(q, r) == 1);
    auto pr = compose(q, p, r);
    CHECK(pr.arrows == std::vector<int>{2, 0});
    CHECK(path_tail(q, pr) == 0);
    CHECK(path_head(q, pr) == 0);
    CHECK(homology_class(q, pr) == std::array<int, 2>{1, 0});

    // composing with a trivial path is the identity
    auto e0 = trivial_path(0);
    CHECK(compose(q, pr, e0).arrows == pr.arrows);
    CHECK(compose(q, e0, pr).arrows == pr.arrows);

    // endpoint mismatch is an error: head(p) = 0 but tail(p) = 1 != 0
    CHECK_THROWS_AS(compose(q, p, p), std::invalid_argument);
}

TEST_CASE("face boundaries are closed cycles of homology zero") {
    for (const char* name : {"conifold.quiver", "example1.quiver", "example2.quiver"}) {
        auto q = testutil::load(name);
        for (const auto& f : q.faces) {
            Path walk{f.boundary, -1};
            CHECK(path_composable(q, walk));
            CHECK(path_tail(q, walk) == path_head(q, walk));
            CHECK(homology_class(q, walk) == std::array<int, 2>{0, 0});
        }
    }
}

TEST_CASE("random composable pairs satisfy the composition laws") {
    std::mt19937 rng(12345);
    for (const char* name : {"conifold.quiver", "example1.quiver", "example2.quiver"}) {
        auto q = testutil::load(name);
        for (int trial = 0; trial < 1000; ++trial) {
            auto whole = testutil::random_walk(q, rng, 2 + trial % 6);
            // split into r then p
            size_t cut = 1 + trial % whole.arrows.size();
            Path r{std::vector<int>(whole.arrows.begin(), whole.arrows.begin() + cut), -1};
            Path p{std::vector<int>(whole.arrows.begin() + cut, whole.arrows.end()), -1};
            if (p.arrows.empty()) p = trivial_path(path_head(q, r));
            auto back = compose(q, p, r);
            CHECK(back.arrows == whole.arrows);
            auto h = homology_class(q, back);
            auto hr = homology_class(q, r);
            auto hp = homology_class(q, p);
            CHECK(h == std::array<int, 2>{hr[0] + hp[0], hr[1] + hp[1]});
        }
    }
}
