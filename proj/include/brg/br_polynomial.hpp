#pragma once
// The Bollobas-Riordan polynomial of a ribbon graph, two ways: a direct sum
// over all spanning subgraphs, and a deletion/contraction reducer that
// factorizes terminal forms (bridges, trivial loops, recognized flowers)
// and falls back to the subgraph sum only for rosette residues it does not
// recognize. Both return the same polynomial, in the X basis.

#include "brg/poly3.hpp"
#include "brg/ribbon_graph.hpp"

namespace brg {

struct StateSumOptions {
    int max_edges = 24;   // refuse graphs with more edges than this
    unsigned threads = 1; // disjoint mask ranges, deterministic combination
};

// Sum over all 2^E spanning subgraphs A of
//   (X-1)^(r(G)-r(A)) * Y^n(A) * Z^(k(A)-bc(A)+n(A)),
// accumulated exactly in the shifted basis and returned in the X basis.
// The result does not depend on evaluation order or thread count.
Poly3 state_sum(const RibbonGraph& g, const StateSumOptions& opts = {});

struct ReduceOptions {
    int fallback_cap = 24;  // edge cap for state-sum fallback on residues
};

// Deletion/contraction: splits on an ordinary edge while one exists, then
// contracts bridges (factor X each), and factorizes every remaining rosette
// over its loop interleaving classes: a lone untwisted loop gives 1+Y, a
// lone twisted loop gives 1+Y*Z, a chain-interleaved single-sign class gives
// the flower closed form, and anything else is state-summed.
Poly3 reduce(const RibbonGraph& g, const ReduceOptions& opts = {});

// Z = 1 specialization, recovering the Tutte polynomial in X and Y.
// Requires the X basis.
Poly3 tutte_specialize(const Poly3& p);

}  // namespace brg
