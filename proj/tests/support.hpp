#pragma once
// Shared test fixtures: golden polynomial tables, deterministic random
// graphs, and a builder realizing terminal profiles as explicit graphs.

#include <random>
#include <vector>

#include "brg/flowers.hpp"
#include "brg/poly3.hpp"
#include "brg/ribbon_graph.hpp"

namespace brg::testing {

struct YzTerm {
    int y;
    int z;
    long long coeff;
};

inline Poly3 yz_poly(const std::vector<YzTerm>& terms) {
    Poly3 p(Basis::X);
    for (const auto& t : terms) p.add_term(0, t.y, t.z, t.coeff);
    return p;
}

// The ten explicit flower polynomials, N = 1..5 per family.
inline std::vector<Poly3> golden_untwisted() {
    return {
        yz_poly({{1, 0, 1}, {0, 0, 1}}),
        yz_poly({{2, 2, 1}, {1, 0, 2}, {0, 0, 1}}),
        yz_poly({{3, 2, 1}, {2, 2, 2}, {2, 0, 1}, {1, 0, 3}, {0, 0, 1}}),
        yz_poly({{4, 4, 1}, {3, 2, 4}, {2, 2, 3}, {2, 0, 3}, {1, 0, 4}, {0, 0, 1}}),
        yz_poly({{5, 4, 1},
                 {4, 4, 3},
                 {4, 2, 2},
                 {3, 2, 9},
                 {3, 0, 1},
                 {2, 2, 4},
                 {2, 0, 6},
                 {1, 0, 5},
                 {0, 0, 1}}),
    };
}

inline std::vector<Poly3> golden_twisted() {
    return {
        yz_poly({{1, 1, 1}, {0, 0, 1}}),
        yz_poly({{2, 1, 1}, {1, 1, 2}, {0, 0, 1}}),
        yz_poly({{3, 3, 1}, {2, 2, 1}, {2, 1, 2}, {1, 1, 3}, {0, 0, 1}}),
        yz_poly({{4, 4, 1}, {3, 3, 2}, {3, 2, 2}, {2, 2, 3}, {2, 1, 3}, {1, 1, 4}, {0, 0, 1}}),
        yz_poly({{5, 4, 1},
                 {4, 4, 4},
                 {4, 2, 1},
                 {3, 3, 4},
                 {3, 2, 6},
                 {2, 2, 6},
                 {2, 1, 4},
                 {1, 1, 5},
                 {0, 0, 1}}),
    };
}

// Arbitrary signed rotation system: random endpoints, twists, and insertion
// positions, valid by construction.
inline RibbonGraph random_graph(std::mt19937& rng, int max_edges, int max_vertices = 5) {
    RibbonGraph g;
    std::uniform_int_distribution<int> nv(1, max_vertices);
    const int v_count = nv(rng);
    for (int v = 0; v < v_count; ++v) g.add_vertex("v" + std::to_string(v + 1));
    std::uniform_int_distribution<int> ne(0, max_edges);
    const int e_count = ne(rng);
    std::uniform_int_distribution<int> pick_vertex(0, v_count - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int e = 0; e < e_count; ++e) {
        const int id = g.add_edge("e" + std::to_string(e + 1), coin(rng) == 1);
        for (int tag = 0; tag < 2; ++tag) {
            auto& rot = g.vertices[static_cast<std::size_t>(pick_vertex(rng))].rotation;
            std::uniform_int_distribution<std::size_t> pos(0, rot.size());
            rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(pos(rng)),
                       EndRef{id, static_cast<EndTag>(tag)});
        }
    }
    return g;
}

// Realizes a terminal profile as an explicit graph: a random bridge tree,
// trivial loops appended as adjacent end pairs, flowers appended as
// contiguous chain-word blocks.
inline RibbonGraph build_composite(const flowers::TerminalProfile& profile, std::mt19937& rng) {
    RibbonGraph g;
    g.add_vertex("v1");
    int edge_serial = 0;
    for (int b = 0; b < profile.bridges; ++b) {
        const int child = g.add_vertex("v" + std::to_string(g.vertex_count() + 1));
        std::uniform_int_distribution<int> pick_parent(0, child - 1);
        const int parent = pick_parent(rng);
        const int e = g.add_edge("b" + std::to_string(++edge_serial), false);
        auto& prot = g.vertices[static_cast<std::size_t>(parent)].rotation;
        std::uniform_int_distribution<std::size_t> pos(0, prot.size());
        prot.insert(prot.begin() + static_cast<std::ptrdiff_t>(pos(rng)), EndRef{e, EndTag::A});
        g.vertices[static_cast<std::size_t>(child)].rotation.push_back(EndRef{e, EndTag::B});
    }
    auto append_loop = [&](bool twisted) {
        std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
        auto& rot = g.vertices[static_cast<std::size_t>(pick(rng))].rotation;
        const int e = g.add_edge("l" + std::to_string(++edge_serial), twisted);
        std::uniform_int_distribution<std::size_t> pos(0, rot.size());
        const auto at = pos(rng);
        rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(at), EndRef{e, EndTag::B});
        rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(at), EndRef{e, EndTag::A});
    };
    for (int i = 0; i < profile.untwisted_loops; ++i) append_loop(false);
    for (int i = 0; i < profile.twisted_loops; ++i) append_loop(true);
    auto append_flower = [&](int petals, bool twisted) {
        std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
        auto& rot = g.vertices[static_cast<std::size_t>(pick(rng))].rotation;
        std::uniform_int_distribution<std::size_t> pos(0, rot.size());
        const auto at = pos(rng);
        std::vector<int> ids;
        for (int i = 0; i < petals; ++i)
            ids.push_back(g.add_edge("f" + std::to_string(++edge_serial), twisted));
        std::vector<int> seen(static_cast<std::size_t>(petals), 0);
        std::vector<EndRef> block;
        for (int w : flowers::detail::chain_word(petals)) {
            const int occurrence = seen[static_cast<std::size_t>(w)]++;
            block.push_back(EndRef{ids[static_cast<std::size_t>(w)],
                                   occurrence == 0 ? EndTag::A : EndTag::B});
        }
        rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(at), block.begin(), block.end());
    };
    for (int n : profile.untwisted_flowers) append_flower(n, false);
    for (int n : profile.twisted_flowers) append_flower(n, true);
    return g;
}

}  // namespace brg::testing
