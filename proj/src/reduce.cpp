#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "brg/br_polynomial.hpp"
#include "brg/flowers.hpp"

namespace brg {

namespace {

// First ordinary edge in index order, -1 when the graph is a terminal form.
int find_ordinary_edge(const RibbonGraph& g) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (classify_edge(g, e) == EdgeClass::Ordinary) return e;
    return -1;
}

int find_non_loop_edge(const RibbonGraph& g) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (!is_self_loop(g, e)) return e;
    return -1;
}

bool loops_alternate_at(const Vertex& v, int e, int f) {
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

// Sub-rosette induced by one interleaving class: a fresh vertex whose
// rotation is the original one restricted to the class's ends.
RibbonGraph induced_rosette(const RibbonGraph& g, const Vertex& v, const std::vector<int>& loops) {
    RibbonGraph out;
    out.add_vertex(v.name);
    std::map<int, int> renum;
    for (int e : loops) {
        renum[e] = out.add_edge(g.edges[static_cast<std::size_t>(e)].name,
                                g.edges[static_cast<std::size_t>(e)].twisted);
    }
    std::map<int, int> seen;
    for (const EndRef& er : v.rotation) {
        auto it = renum.find(er.edge);
        if (it == renum.end()) continue;
        int occurrence = seen[er.edge]++;
        out.vertices[0].rotation.push_back(
            EndRef{it->second, occurrence == 0 ? EndTag::A : EndTag::B});
    }
    return out;
}

Poly3 rosette_class_factor(const RibbonGraph& g, const Vertex& v, const std::vector<int>& loops,
                           const ReduceOptions& opts) {
    if (loops.size() == 1) {
        Poly3 f(Basis::XMinusOne);
        f.add_term(0, 0, 0, 1);
        f.add_term(0, 1, g.edges[static_cast<std::size_t>(loops[0])].twisted ? 1 : 0, 1);
        return f;
    }
    const RibbonGraph rosette = induced_rosette(g, v, loops);

    std::vector<int> word;
    word.reserve(rosette.vertices[0].rotation.size());
    for (const EndRef& er : rosette.vertices[0].rotation) word.push_back(er.edge);

    if (flowers::detail::is_chain_word(word)) {
        bool all_twisted = true, all_untwisted = true;
        for (const Edge& e : rosette.edges) (e.twisted ? all_untwisted : all_twisted) = false;
        const int n = rosette.edge_count();
        if (all_untwisted) return flowers::closed_form_untwisted(n).to_basis(Basis::XMinusOne);
        if (all_twisted) return flowers::closed_form_twisted(n).to_basis(Basis::XMinusOne);
    }
    StateSumOptions ss;
    ss.max_edges = opts.fallback_cap;
    return state_sum(rosette, ss).to_basis(Basis::XMinusOne);
}

// The graph has no ordinary edges here: contract the bridges away (factor X
// each), leaving one rosette per component, then factor each rosette over
// the interleaving classes of its loops.
Poly3 terminal_value(RibbonGraph g, const ReduceOptions& opts) {
    Poly3 result = Poly3::constant(1, Basis::XMinusOne);
    Poly3 x_factor(Basis::XMinusOne);
    x_factor.add_term(0, 0, 0, 1);
    x_factor.add_term(1, 0, 0, 1);

    for (int e = find_non_loop_edge(g); e >= 0; e = find_non_loop_edge(g)) {
        result *= x_factor;
        g = contract_edge(g, e);
    }

    for (const Vertex& v : g.vertices) {
        std::vector<int> loops;
        for (const EndRef& er : v.rotation)
            if (er.tag == EndTag::A) loops.push_back(er.edge);
        if (loops.empty()) continue;

        // Connected components of the alternation relation.
        std::vector<int> uf(loops.size());
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int a) {
            while (uf[static_cast<std::size_t>(a)] != a) a = uf[static_cast<std::size_t>(a)];
            return a;
        };
        for (std::size_t i = 0; i < loops.size(); ++i)
            for (std::size_t j = i + 1; j < loops.size(); ++j)
                if (loops_alternate_at(v, loops[i], loops[j]))
                    uf[static_cast<std::size_t>(find(static_cast<int>(i)))] =
                        find(static_cast<int>(j));

        std::map<int, std::vector<int>> classes;
        for (std::size_t i = 0; i < loops.size(); ++i)
            classes[find(static_cast<int>(i))].push_back(loops[i]);

        for (const auto& [root, members] : classes)
            result *= rosette_class_factor(g, v, members, opts);
    }
    return result;
}

Poly3 reduce_rec(const RibbonGraph& g, const ReduceOptions& opts) {
    const int e = find_ordinary_edge(g);
    if (e < 0) return terminal_value(g, opts);
    return reduce_rec(delete_edge(g, e), opts) + reduce_rec(contract_edge(g, e), opts);
}

}  // namespace

Poly3 reduce(const RibbonGraph& g, const ReduceOptions& opts) {
    validate(g);
    return reduce_rec(g, opts).to_basis(Basis::X);
}

}  // namespace brg
