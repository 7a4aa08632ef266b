#pragma once
// Ribbon graphs as signed rotation systems.
//
// A vertex is a disc with a cyclic order of edge ends around it (its
// rotation); an edge is a band joining its two ends, glued flat (untwisted)
// or with a half turn (twisted). Boundary components of a spanning subgraph
// are traced on the side points of the retained ends: every end has a side
// facing its rotation predecessor and a side facing its successor, corner
// arcs of the vertex disc join the facing sides of consecutive retained
// ends, and the two sides of a band join same-named sides of its ends when
// the band is twisted and opposite sides when it is not. The boundary is
// then a disjoint union of cycles and bc is their number; an isolated
// vertex contributes one circle.

#include <cstdint>
#include <string>
#include <vector>

#include "brg/errors.hpp"

namespace brg {

enum class EndTag : int { A = 0, B = 1 };

struct EndRef {
    int edge = -1;
    EndTag tag = EndTag::A;

    friend bool operator==(const EndRef&, const EndRef&) = default;
};

// Dense id of an edge end: 2*edge + tag.
inline int end_id(const EndRef& e) {
    return 2 * e.edge + static_cast<int>(e.tag);
}

struct Vertex {
    std::string name;
    std::vector<EndRef> rotation;
};

struct Edge {
    std::string name;
    bool twisted = false;
};

struct RibbonGraph {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    int add_vertex(std::string name);
    int add_edge(std::string name, bool twisted = false);

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    // -1 when the name is not present.
    int vertex_index(const std::string& name) const;
    int edge_index(const std::string& name) const;
};

// A spanning subgraph: all vertices, a subset of the edges.
struct SubgraphSelector {
    std::vector<char> retained;  // one flag per edge

    static SubgraphSelector all(const RibbonGraph& g);
    static SubgraphSelector none(const RibbonGraph& g);
    static SubgraphSelector of_mask(const RibbonGraph& g, std::uint64_t mask);
    static SubgraphSelector of_edges(const RibbonGraph& g, const std::vector<std::string>& names);

    int count() const;
    bool contains(int edge) const { return retained[static_cast<std::size_t>(edge)] != 0; }
};

struct SubgraphStats {
    int v = 0;   // vertices (spanning, so always v of the host graph)
    int E = 0;   // retained edges
    int k = 0;   // connected components
    int r = 0;   // rank, v - k
    int n = 0;   // nullity, E - r
    int bc = 0;  // boundary components

    friend bool operator==(const SubgraphStats&, const SubgraphStats&) = default;
};

enum class EdgeClass {
    Bridge,
    TrivialUntwistedLoop,
    TrivialTwistedLoop,
    NontrivialLoop,
    Ordinary,
};

// Throws GraphError naming the first violated invariant: duplicate names,
// rotation entries referencing unknown edges, ends placed twice or missing.
void validate(const RibbonGraph& g);

int boundary_components(const RibbonGraph& g, const SubgraphSelector& sel);
int component_count(const RibbonGraph& g, const SubgraphSelector& sel);
SubgraphStats stats(const RibbonGraph& g, const SubgraphSelector& sel);

bool is_self_loop(const RibbonGraph& g, int edge);

// A self-loop is trivial when no other loop at its vertex has ends that
// alternate with its own in the cyclic order there.
EdgeClass classify_edge(const RibbonGraph& g, int edge);

// Removes the edge and its two ends; vertices are untouched.
RibbonGraph delete_edge(const RibbonGraph& g, int edge);

// For a self-loop this is deletion. For a twisted non-loop edge the far
// endpoint is flipped first, making the edge untwisted; then the far
// vertex's rotation, read from just after its removed end, is spliced into
// the gap left by the near end.
RibbonGraph contract_edge(const RibbonGraph& g, int edge);

// Re-embeds the vertex disc with reversed local orientation: reverses its
// rotation and toggles the twist of every non-loop edge incident to it.
RibbonGraph vertex_flip(const RibbonGraph& g, int vertex);

namespace detail {

// Scratch buffers for tight subgraph loops; one instance per graph per
// thread, initialized with init_scratch.
struct SubgraphScratch {
    std::vector<char> retained;
    std::vector<int> end_vertex;  // indexed by end_id
    std::vector<int> arc;         // side-point links along vertex corners
    std::vector<int> rib;         // side-point links across bands
    std::vector<char> seen;
    std::vector<int> uf;
};

void init_scratch(const RibbonGraph& g, SubgraphScratch& s);
void fill_mask(std::uint64_t mask, int edge_count, SubgraphScratch& s);
int boundary_components_flags(const RibbonGraph& g, const char* retained, SubgraphScratch& s);
int component_count_flags(const RibbonGraph& g, const char* retained, SubgraphScratch& s);

// Table mapping end_id to the vertex whose rotation holds that end.
std::vector<int> end_vertex_table(const RibbonGraph& g);

}  // namespace detail

}  // namespace brg
