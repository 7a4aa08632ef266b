#include "brg/br_polynomial.hpp"

#include <bit>
#include <future>
#include <stdexcept>
#include <vector>

namespace brg {

namespace {

Poly3 state_sum_range(const RibbonGraph& g, std::uint64_t lo, std::uint64_t hi, int k_full) {
    detail::SubgraphScratch s;
    detail::init_scratch(g, s);
    const int E = g.edge_count();
    const int v = g.vertex_count();
    Poly3 acc(Basis::XMinusOne);
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        detail::fill_mask(mask, E, s);
        const int k = detail::component_count_flags(g, s.retained.data(), s);
        const int bc = detail::boundary_components_flags(g, s.retained.data(), s);
        const int selected = static_cast<int>(std::popcount(mask));
        const int n = selected - (v - k);
        acc.add_term(k - k_full, n, k - bc + n, 1);
    }
    return acc;
}

}  // namespace

Poly3 state_sum(const RibbonGraph& g, const StateSumOptions& opts) {
    validate(g);
    const int E = g.edge_count();
    const int cap = opts.max_edges < 62 ? opts.max_edges : 62;
    if (E > cap)
        throw CapExceeded("state_sum: graph has " + std::to_string(E) +
                          " edges, above the cap of " + std::to_string(cap));

    const int k_full = component_count(g, SubgraphSelector::all(g));
    const std::uint64_t total = std::uint64_t(1) << E;

    unsigned threads = opts.threads == 0 ? 1 : opts.threads;
    if (std::uint64_t(threads) > total) threads = static_cast<unsigned>(total);

    Poly3 acc(Basis::XMinusOne);
    if (threads <= 1) {
        acc = state_sum_range(g, 0, total, k_full);
    } else {
        std::vector<std::future<Poly3>> parts;
        parts.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t lo = total / threads * t;
            const std::uint64_t hi = t + 1 == threads ? total : total / threads * (t + 1);
            parts.push_back(std::async(std::launch::async, state_sum_range, std::cref(g), lo, hi,
                                       k_full));
        }
        for (auto& part : parts) acc += part.get();
    }
    return acc.to_basis(Basis::X);
}

Poly3 tutte_specialize(const Poly3& p) {
    if (p.basis() != Basis::X)
        throw std::invalid_argument("tutte_specialize: polynomial must be in the X basis");
    Poly3 out(Basis::X);
    for (const auto& [key, c] : p.terms()) out.add_term(key[0], key[1], 0, c);
    return out;
}

}  // namespace brg
