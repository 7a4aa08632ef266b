#include <algorithm>
#include <random>

#include "doctest.h"

#include "brg/graph_text.hpp"
#include "brg/ribbon_graph.hpp"
#include "support.hpp"

using namespace brg;

namespace {

const char* kUntwistedLoop =
    "ribbon v1\n"
    "edge e 0\n"
    "vertex v: e.a e.b\n";

const char* kTwistedLoop =
    "ribbon v1\n"
    "edge e 1\n"
    "vertex v: e.a e.b\n";

const char* kPath =
    "ribbon v1\n"
    "edge b 0\n"
    "vertex u: b.a\n"
    "vertex w: b.b\n";

const char* kTwoPetals =
    "ribbon v1\n"
    "edge e1 0\n"
    "edge e2 0\n"
    "vertex v: e1.a e2.a e1.b e2.b\n";

}  // namespace

TEST_CASE("validate") {
    SUBCASE("bare disc is fine") {
        RibbonGraph g;
        g.add_vertex("v");
        CHECK_NOTHROW(validate(g));
    }
    SUBCASE("dangling end") {
        RibbonGraph g;
        g.add_vertex("v");
        g.vertices[0].rotation.push_back(EndRef{0, EndTag::A});
        CHECK_THROWS_AS(validate(g), GraphError);
    }
    SUBCASE("duplicate end") {
        RibbonGraph g;
        g.add_vertex("v");
        g.add_edge("e");
        g.vertices[0].rotation = {EndRef{0, EndTag::A}, EndRef{0, EndTag::A},
                                  EndRef{0, EndTag::B}};
        CHECK_THROWS_AS(validate(g), GraphError);
    }
    SUBCASE("missing end") {
        RibbonGraph g;
        g.add_vertex("v");
        g.add_edge("e");
        g.vertices[0].rotation = {EndRef{0, EndTag::A}};
        CHECK_THROWS_AS(validate(g), GraphError);
    }
    SUBCASE("duplicate names") {
        RibbonGraph g;
        g.add_vertex("v");
        g.add_vertex("v");
        CHECK_THROWS_AS(validate(g), GraphError);
    }
}

TEST_CASE("boundary components of the pinned examples") {
    RibbonGraph bare;
    bare.add_vertex("v");
    CHECK(boundary_components(bare, SubgraphSelector::all(bare)) == 1);

    const RibbonGraph untw = parse_graph(kUntwistedLoop);
    CHECK(boundary_components(untw, SubgraphSelector::all(untw)) == 2);

    const RibbonGraph tw = parse_graph(kTwistedLoop);
    CHECK(boundary_components(tw, SubgraphSelector::all(tw)) == 1);

    const RibbonGraph petals = parse_graph(kTwoPetals);
    CHECK(boundary_components(petals, SubgraphSelector::all(petals)) == 1);
}

TEST_CASE("stats") {
    RibbonGraph bare;
    bare.add_vertex("v");
    CHECK(stats(bare, SubgraphSelector::all(bare)) == SubgraphStats{1, 0, 1, 0, 0, 1});

    const RibbonGraph path = parse_graph(kPath);
    CHECK(stats(path, SubgraphSelector::all(path)) == SubgraphStats{2, 1, 1, 1, 0, 1});

    const RibbonGraph flower3 = flowers::build_flower(
        flowers::FlowerSpec{{{3, flowers::PetalSign::Untwisted}}, flowers::Layout::Merged});
    const SubgraphStats st = stats(flower3, SubgraphSelector::all(flower3));
    CHECK(st.n == 3);
    CHECK(st.bc == 2);
}

TEST_CASE("classify_edge") {
    const RibbonGraph path = parse_graph(kPath);
    CHECK(classify_edge(path, 0) == EdgeClass::Bridge);

    const RibbonGraph untw = parse_graph(kUntwistedLoop);
    CHECK(classify_edge(untw, 0) == EdgeClass::TrivialUntwistedLoop);
    const RibbonGraph tw = parse_graph(kTwistedLoop);
    CHECK(classify_edge(tw, 0) == EdgeClass::TrivialTwistedLoop);

    const RibbonGraph petals = parse_graph(kTwoPetals);
    CHECK(classify_edge(petals, 0) == EdgeClass::NontrivialLoop);
    CHECK(classify_edge(petals, 1) == EdgeClass::NontrivialLoop);

    CHECK_THROWS_AS(classify_edge(path, 5), GraphError);
}

TEST_CASE("delete_edge") {
    const RibbonGraph untw = parse_graph(kUntwistedLoop);
    const RibbonGraph bare = delete_edge(untw, 0);
    CHECK(bare.edge_count() == 0);
    CHECK(bare.vertices[0].rotation.empty());
    CHECK_NOTHROW(validate(bare));

    const RibbonGraph path = parse_graph(kPath);
    const RibbonGraph split = delete_edge(path, 0);
    CHECK(component_count(split, SubgraphSelector::all(split)) == 2);

    const RibbonGraph petals = parse_graph(kTwoPetals);
    const RibbonGraph one = delete_edge(petals, 0);
    CHECK(one.edge_count() == 1);
    CHECK(one.vertices[0].rotation ==
          std::vector<EndRef>{EndRef{0, EndTag::A}, EndRef{0, EndTag::B}});
}

TEST_CASE("contract_edge") {
    SUBCASE("bridge of a path becomes a bare vertex") {
        const RibbonGraph path = parse_graph(kPath);
        const RibbonGraph c = contract_edge(path, 0);
        CHECK(c.vertex_count() == 1);
        CHECK(c.edge_count() == 0);
        CHECK_NOTHROW(validate(c));
    }
    SUBCASE("contracting a self-loop deletes it") {
        const RibbonGraph petals = parse_graph(kTwoPetals);
        CHECK(format_graph(contract_edge(petals, 1)) == format_graph(delete_edge(petals, 1)));
    }
    SUBCASE("non-loop contraction drops one vertex and one edge, keeps nullity") {
        std::mt19937 rng(99);
        int done = 0;
        while (done < 40) {
            const RibbonGraph g = testing::random_graph(rng, 6);
            int target = -1;
            for (int e = 0; e < g.edge_count(); ++e)
                if (!is_self_loop(g, e)) {
                    target = e;
                    break;
                }
            if (target < 0) continue;
            ++done;
            const RibbonGraph c = contract_edge(g, target);
            CHECK_NOTHROW(validate(c));
            CHECK(c.vertex_count() == g.vertex_count() - 1);
            CHECK(c.edge_count() == g.edge_count() - 1);
            CHECK(stats(c, SubgraphSelector::all(c)).n ==
                  stats(g, SubgraphSelector::all(g)).n);
        }
    }
}

TEST_CASE("vertex_flip") {
    SUBCASE("loop twist is preserved, boundary unchanged") {
        const RibbonGraph untw = parse_graph(kUntwistedLoop);
        const RibbonGraph flipped = vertex_flip(untw, 0);
        CHECK_FALSE(flipped.edges[0].twisted);
        CHECK(boundary_components(flipped, SubgraphSelector::all(flipped)) == 2);
    }
    SUBCASE("non-loop twists toggle, double flip is the identity") {
        const RibbonGraph path = parse_graph(kPath);
        const RibbonGraph once = vertex_flip(path, 0);
        CHECK(once.edges[0].twisted);
        CHECK(format_graph(vertex_flip(once, 0)) == format_graph(path));
    }
    SUBCASE("boundary components are invariant under flips") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 60; ++trial) {
            const RibbonGraph g = testing::random_graph(rng, 6);
            std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
            const RibbonGraph f = vertex_flip(g, pick(rng));
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << g.edge_count()); ++mask)
                CHECK(boundary_components(g, SubgraphSelector::of_mask(g, mask)) ==
                      boundary_components(f, SubgraphSelector::of_mask(f, mask)));
        }
    }
}

TEST_CASE("subgraph invariants on random graphs") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const RibbonGraph g = testing::random_graph(rng, 8);
        CHECK_NOTHROW(validate(g));
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << g.edge_count()); ++mask) {
            const SubgraphStats st = stats(g, SubgraphSelector::of_mask(g, mask));
            CHECK(st.r == st.v - st.k);
            CHECK(st.n == st.E - st.r);
            CHECK(st.k >= 1);
            CHECK(st.k <= st.v);
            CHECK(st.bc >= st.k);
            CHECK(st.k - st.bc + st.n >= 0);
        }
        for (int e = 0; e < g.edge_count(); ++e) CHECK_NOTHROW(validate(delete_edge(g, e)));
    }
}

TEST_CASE("boundary components are invariant under rotation of a rotation") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        RibbonGraph g = testing::random_graph(rng, 6);
        const int bc = boundary_components(g, SubgraphSelector::all(g));
        for (auto& v : g.vertices) {
            if (v.rotation.empty()) continue;
            std::rotate(v.rotation.begin(), v.rotation.begin() + 1, v.rotation.end());
        }
        CHECK(boundary_components(g, SubgraphSelector::all(g)) == bc);
    }
}

TEST_CASE("graph text format") {
    SUBCASE("round trip") {
        std::mt19937 rng(41);
        for (int trial = 0; trial < 25; ++trial) {
            const RibbonGraph g = testing::random_graph(rng, 6);
            const std::string text = format_graph(g);
            CHECK(format_graph(parse_graph(text)) == text);
        }
    }
    SUBCASE("comments and blank lines") {
        const RibbonGraph g = parse_graph(
            "# leading comment\n"
            "ribbon v1\n"
            "\n"
            "edge e 1  # trailing comment\n"
            "vertex v: e.a e.b\n");
        CHECK(g.edges[0].twisted);
    }
    SUBCASE("errors carry line numbers") {
        try {
            parse_graph("ribbon v1\nvertex v: ghost.a\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
        try {
            parse_graph("ribbon v1\nedge e 0\nvertex v: e.a e.a e.b\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
        }
        try {
            parse_graph("ribbon v1\nedge e 2\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
        CHECK_THROWS_AS(parse_graph("not a header\n"), ParseError);
        // edge declared but never placed
        try {
            parse_graph("ribbon v1\nedge e 0\nvertex v:\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("selector from names") {
        const RibbonGraph g = parse_graph(kTwoPetals);
        CHECK(SubgraphSelector::of_edges(g, {"e2"}).count() == 1);
        CHECK_THROWS_AS(SubgraphSelector::of_edges(g, {"nope"}), GraphError);
    }
}
