#include "brg/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>

namespace brg {

int RibbonGraph::add_vertex(std::string name) {
    vertices.push_back(Vertex{std::move(name), {}});
    return vertex_count() - 1;
}

int RibbonGraph::add_edge(std::string name, bool twisted) {
    edges.push_back(Edge{std::move(name), twisted});
    return edge_count() - 1;
}

int RibbonGraph::vertex_index(const std::string& name) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (vertices[static_cast<std::size_t>(i)].name == name) return i;
    return -1;
}

int RibbonGraph::edge_index(const std::string& name) const {
    for (int i = 0; i < edge_count(); ++i)
        if (edges[static_cast<std::size_t>(i)].name == name) return i;
    return -1;
}

SubgraphSelector SubgraphSelector::all(const RibbonGraph& g) {
    return SubgraphSelector{std::vector<char>(static_cast<std::size_t>(g.edge_count()), 1)};
}

SubgraphSelector SubgraphSelector::none(const RibbonGraph& g) {
    return SubgraphSelector{std::vector<char>(static_cast<std::size_t>(g.edge_count()), 0)};
}

SubgraphSelector SubgraphSelector::of_mask(const RibbonGraph& g, std::uint64_t mask) {
    SubgraphSelector sel = none(g);
    for (int e = 0; e < g.edge_count(); ++e)
        if (mask >> e & 1u) sel.retained[static_cast<std::size_t>(e)] = 1;
    return sel;
}

SubgraphSelector SubgraphSelector::of_edges(const RibbonGraph& g,
                                            const std::vector<std::string>& names) {
    SubgraphSelector sel = none(g);
    for (const auto& name : names) {
        int e = g.edge_index(name);
        if (e < 0) throw GraphError("selector references unknown edge '" + name + "'");
        sel.retained[static_cast<std::size_t>(e)] = 1;
    }
    return sel;
}

int SubgraphSelector::count() const {
    int n = 0;
    for (char c : retained) n += c != 0;
    return n;
}

namespace {

void check_edge_index(const RibbonGraph& g, int edge) {
    if (edge < 0 || edge >= g.edge_count())
        throw GraphError("unknown edge index " + std::to_string(edge));
}

void check_vertex_index(const RibbonGraph& g, int vertex) {
    if (vertex < 0 || vertex >= g.vertex_count())
        throw GraphError("unknown vertex index " + std::to_string(vertex));
}

void check_selector(const RibbonGraph& g, const SubgraphSelector& sel) {
    if (static_cast<int>(sel.retained.size()) != g.edge_count())
        throw GraphError("selector size does not match edge count");
}

std::string end_name(const RibbonGraph& g, const EndRef& er) {
    return g.edges[static_cast<std::size_t>(er.edge)].name +
           (er.tag == EndTag::A ? ".a" : ".b");
}

int uf_find(std::vector<int>& uf, int a) {
    while (uf[static_cast<std::size_t>(a)] != a) {
        uf[static_cast<std::size_t>(a)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(a)])];
        a = uf[static_cast<std::size_t>(a)];
    }
    return a;
}

// Ends of two loops at the same vertex alternate when exactly one end of f
// lies strictly between the two ends of e along the rotation.
bool loops_alternate(const Vertex& v, int e, int f) {
    bool inside = false;
    int f_inside = 0;
    for (const EndRef& er : v.rotation) {
        if (er.edge == e)
            inside = !inside;
        else if (er.edge == f && inside)
            ++f_inside;
    }
    return f_inside == 1;
}

}  // namespace

namespace detail {

std::vector<int> end_vertex_table(const RibbonGraph& g) {
    std::vector<int> table(static_cast<std::size_t>(2 * g.edge_count()), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (const EndRef& er : g.vertices[static_cast<std::size_t>(v)].rotation) {
            int id = end_id(er);
            if (id >= 0 && id < static_cast<int>(table.size())) table[static_cast<std::size_t>(id)] = v;
        }
    return table;
}

void init_scratch(const RibbonGraph& g, SubgraphScratch& s) {
    const std::size_t E = static_cast<std::size_t>(g.edge_count());
    s.retained.assign(E, 0);
    s.end_vertex = end_vertex_table(g);
    s.arc.assign(4 * E, -1);
    s.rib.assign(4 * E, -1);
    s.seen.assign(4 * E, 0);
    s.uf.assign(static_cast<std::size_t>(g.vertex_count()), 0);
}

void fill_mask(std::uint64_t mask, int edge_count, SubgraphScratch& s) {
    for (int e = 0; e < edge_count; ++e)
        s.retained[static_cast<std::size_t>(e)] = static_cast<char>(mask >> e & 1u);
}

int boundary_components_flags(const RibbonGraph& g, const char* retained, SubgraphScratch& s) {
    const int E = g.edge_count();
    std::fill(s.seen.begin(), s.seen.end(), 0);

    int bc = 0;
    // Corner arcs: side 2h+1 of an end faces its successor, side 2h its
    // predecessor in the rotation restricted to retained edges.
    for (const Vertex& v : g.vertices) {
        int first = -1, prev = -1, cnt = 0;
        for (const EndRef& er : v.rotation) {
            if (!retained[er.edge]) continue;
            const int h = end_id(er);
            ++cnt;
            if (first < 0) first = h;
            if (prev >= 0) {
                s.arc[static_cast<std::size_t>(2 * prev + 1)] = 2 * h;
                s.arc[static_cast<std::size_t>(2 * h)] = 2 * prev + 1;
            }
            prev = h;
        }
        if (cnt == 0) {
            ++bc;  // bare disc
            continue;
        }
        s.arc[static_cast<std::size_t>(2 * prev + 1)] = 2 * first;
        s.arc[static_cast<std::size_t>(2 * first)] = 2 * prev + 1;
    }

    // Band sides: a twisted band joins same-named sides of its two ends, an
    // untwisted one joins opposite sides.
    for (int e = 0; e < E; ++e) {
        if (!retained[e]) continue;
        const int ha = 2 * e, hb = 2 * e + 1;
        int pa0, pa1;
        if (g.edges[static_cast<std::size_t>(e)].twisted) {
            pa0 = 2 * hb;      // cw(a) <-> cw(b)
            pa1 = 2 * hb + 1;  // ccw(a) <-> ccw(b)
        } else {
            pa0 = 2 * hb + 1;  // cw(a) <-> ccw(b)
            pa1 = 2 * hb;      // ccw(a) <-> cw(b)
        }
        s.rib[static_cast<std::size_t>(2 * ha)] = pa0;
        s.rib[static_cast<std::size_t>(pa0)] = 2 * ha;
        s.rib[static_cast<std::size_t>(2 * ha + 1)] = pa1;
        s.rib[static_cast<std::size_t>(pa1)] = 2 * ha + 1;
    }

    // Each retained side point has one arc link and one band link, so the
    // boundary decomposes into alternating cycles.
    for (int e = 0; e < E; ++e) {
        if (!retained[e]) continue;
        for (int sp = 4 * e; sp < 4 * e + 4; ++sp) {
            if (s.seen[static_cast<std::size_t>(sp)]) continue;
            ++bc;
            int cur = sp;
            do {
                s.seen[static_cast<std::size_t>(cur)] = 1;
                const int a = s.arc[static_cast<std::size_t>(cur)];
                s.seen[static_cast<std::size_t>(a)] = 1;
                cur = s.rib[static_cast<std::size_t>(a)];
            } while (cur != sp);
        }
    }
    return bc;
}

int component_count_flags(const RibbonGraph& g, const char* retained, SubgraphScratch& s) {
    const int V = g.vertex_count();
    std::iota(s.uf.begin(), s.uf.end(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!retained[e]) continue;
        const int u = s.end_vertex[static_cast<std::size_t>(2 * e)];
        const int v = s.end_vertex[static_cast<std::size_t>(2 * e + 1)];
        const int ru = uf_find(s.uf, u);
        const int rv = uf_find(s.uf, v);
        if (ru != rv) s.uf[static_cast<std::size_t>(ru)] = rv;
    }
    int k = 0;
    for (int v = 0; v < V; ++v) k += uf_find(s.uf, v) == v;
    return k;
}

}  // namespace detail

void validate(const RibbonGraph& g) {
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
            if (g.vertices[i].name == g.vertices[j].name)
                throw GraphError("duplicate vertex name '" + g.vertices[i].name + "'");
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        for (std::size_t j = i + 1; j < g.edges.size(); ++j)
            if (g.edges[i].name == g.edges[j].name)
                throw GraphError("duplicate edge name '" + g.edges[i].name + "'");

    std::vector<int> uses(static_cast<std::size_t>(2 * g.edge_count()), 0);
    for (const Vertex& v : g.vertices)
        for (const EndRef& er : v.rotation) {
            if (er.edge < 0 || er.edge >= g.edge_count())
                throw GraphError("rotation of vertex '" + v.name + "' references an unknown edge");
            int id = end_id(er);
            if (++uses[static_cast<std::size_t>(id)] > 1)
                throw GraphError("end " + end_name(g, er) + " appears more than once");
        }
    for (int e = 0; e < g.edge_count(); ++e)
        for (int t = 0; t < 2; ++t)
            if (uses[static_cast<std::size_t>(2 * e + t)] == 0)
                throw GraphError("end " + end_name(g, EndRef{e, static_cast<EndTag>(t)}) +
                                 " is not placed in any rotation");
}

int boundary_components(const RibbonGraph& g, const SubgraphSelector& sel) {
    check_selector(g, sel);
    detail::SubgraphScratch s;
    detail::init_scratch(g, s);
    return detail::boundary_components_flags(g, sel.retained.data(), s);
}

int component_count(const RibbonGraph& g, const SubgraphSelector& sel) {
    check_selector(g, sel);
    detail::SubgraphScratch s;
    detail::init_scratch(g, s);
    return detail::component_count_flags(g, sel.retained.data(), s);
}

SubgraphStats stats(const RibbonGraph& g, const SubgraphSelector& sel) {
    check_selector(g, sel);
    detail::SubgraphScratch s;
    detail::init_scratch(g, s);
    SubgraphStats st;
    st.v = g.vertex_count();
    st.E = sel.count();
    st.k = detail::component_count_flags(g, sel.retained.data(), s);
    st.r = st.v - st.k;
    st.n = st.E - st.r;
    st.bc = detail::boundary_components_flags(g, sel.retained.data(), s);
    return st;
}

bool is_self_loop(const RibbonGraph& g, int edge) {
    check_edge_index(g, edge);
    auto table = detail::end_vertex_table(g);
    return table[static_cast<std::size_t>(2 * edge)] == table[static_cast<std::size_t>(2 * edge + 1)];
}

EdgeClass classify_edge(const RibbonGraph& g, int edge) {
    check_edge_index(g, edge);
    auto table = detail::end_vertex_table(g);
    const int u = table[static_cast<std::size_t>(2 * edge)];
    const int v = table[static_cast<std::size_t>(2 * edge + 1)];
    if (u == v) {
        const Vertex& vert = g.vertices[static_cast<std::size_t>(u)];
        for (const EndRef& er : vert.rotation) {
            if (er.edge == edge || er.tag != EndTag::A) continue;
            if (table[static_cast<std::size_t>(2 * er.edge)] !=
                table[static_cast<std::size_t>(2 * er.edge + 1)])
                continue;  // not a loop
            if (loops_alternate(vert, edge, er.edge)) return EdgeClass::NontrivialLoop;
        }
        return g.edges[static_cast<std::size_t>(edge)].twisted ? EdgeClass::TrivialTwistedLoop
                                                               : EdgeClass::TrivialUntwistedLoop;
    }
    // Bridge iff dropping the edge increases the component count.
    detail::SubgraphScratch s;
    detail::init_scratch(g, s);
    std::vector<char> with(static_cast<std::size_t>(g.edge_count()), 1);
    const int k_full = detail::component_count_flags(g, with.data(), s);
    with[static_cast<std::size_t>(edge)] = 0;
    const int k_without = detail::component_count_flags(g, with.data(), s);
    return k_without > k_full ? EdgeClass::Bridge : EdgeClass::Ordinary;
}

RibbonGraph delete_edge(const RibbonGraph& g, int edge) {
    check_edge_index(g, edge);
    RibbonGraph out;
    out.vertices.reserve(g.vertices.size());
    out.edges.reserve(g.edges.size() - 1);
    for (int e = 0; e < g.edge_count(); ++e)
        if (e != edge) out.edges.push_back(g.edges[static_cast<std::size_t>(e)]);
    for (const Vertex& v : g.vertices) {
        Vertex nv{v.name, {}};
        nv.rotation.reserve(v.rotation.size());
        for (const EndRef& er : v.rotation) {
            if (er.edge == edge) continue;
            nv.rotation.push_back(EndRef{er.edge > edge ? er.edge - 1 : er.edge, er.tag});
        }
        out.vertices.push_back(std::move(nv));
    }
    return out;
}

RibbonGraph vertex_flip(const RibbonGraph& g, int vertex) {
    check_vertex_index(g, vertex);
    RibbonGraph out = g;
    Vertex& v = out.vertices[static_cast<std::size_t>(vertex)];
    std::reverse(v.rotation.begin(), v.rotation.end());
    std::vector<int> ends_here(out.edges.size(), 0);
    for (const EndRef& er : v.rotation) ++ends_here[static_cast<std::size_t>(er.edge)];
    for (std::size_t e = 0; e < out.edges.size(); ++e)
        if (ends_here[e] == 1) out.edges[e].twisted = !out.edges[e].twisted;
    return out;
}

RibbonGraph contract_edge(const RibbonGraph& g, int edge) {
    check_edge_index(g, edge);
    if (is_self_loop(g, edge)) return delete_edge(g, edge);

    RibbonGraph work = g;
    {
        auto table = detail::end_vertex_table(work);
        if (work.edges[static_cast<std::size_t>(edge)].twisted)
            work = vertex_flip(work, table[static_cast<std::size_t>(2 * edge + 1)]);
    }
    auto table = detail::end_vertex_table(work);
    const int u = table[static_cast<std::size_t>(2 * edge)];
    const int v = table[static_cast<std::size_t>(2 * edge + 1)];

    const auto& urot = work.vertices[static_cast<std::size_t>(u)].rotation;
    const auto& vrot = work.vertices[static_cast<std::size_t>(v)].rotation;
    std::size_t upos = 0, vpos = 0;
    for (std::size_t i = 0; i < urot.size(); ++i)
        if (urot[i].edge == edge) upos = i;
    for (std::size_t i = 0; i < vrot.size(); ++i)
        if (vrot[i].edge == edge) vpos = i;

    // Splice v's rotation, read from just after its removed end, into the
    // gap left by u's removed end.
    Vertex merged{work.vertices[static_cast<std::size_t>(u)].name, {}};
    merged.rotation.reserve(urot.size() + vrot.size() - 2);
    auto push = [&](const EndRef& er) {
        merged.rotation.push_back(EndRef{er.edge > edge ? er.edge - 1 : er.edge, er.tag});
    };
    for (std::size_t i = 0; i < upos; ++i) push(urot[i]);
    for (std::size_t j = 1; j < vrot.size(); ++j) push(vrot[(vpos + j) % vrot.size()]);
    for (std::size_t i = upos + 1; i < urot.size(); ++i) push(urot[i]);

    RibbonGraph out;
    out.edges.reserve(work.edges.size() - 1);
    for (int e = 0; e < work.edge_count(); ++e)
        if (e != edge) out.edges.push_back(work.edges[static_cast<std::size_t>(e)]);
    out.vertices.reserve(work.vertices.size() - 1);
    for (int w = 0; w < work.vertex_count(); ++w) {
        if (w == v) continue;
        if (w == u) {
            out.vertices.push_back(merged);
            continue;
        }
        Vertex nv{work.vertices[static_cast<std::size_t>(w)].name, {}};
        nv.rotation.reserve(work.vertices[static_cast<std::size_t>(w)].rotation.size());
        for (const EndRef& er : work.vertices[static_cast<std::size_t>(w)].rotation)
            nv.rotation.push_back(EndRef{er.edge > edge ? er.edge - 1 : er.edge, er.tag});
        out.vertices.push_back(std::move(nv));
    }
    return out;
}

}  // namespace brg
