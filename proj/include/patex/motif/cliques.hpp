#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "patex/graph/simple_view.hpp"

namespace patex {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Adjacency rows of a simple view as bitsets.
inline std::vector<Bitset> adjacency_bitsets(const SimpleView& g) {
    std::vector<Bitset> rows(g.size(), Bitset(g.size()));
    for (std::size_t v = 0; v < g.size(); ++v)
        for (std::size_t u : g.neighbors(v)) rows[v].set(u);
    return rows;
}

namespace detail {

struct CliqueSearch {
    const std::vector<Bitset>& adj;
    std::size_t min_size;
    const std::function<void(const std::vector<std::size_t>&)>& emit;
    std::vector<std::size_t> current;

    void expand(Bitset candidates, Bitset excluded) {
        if (candidates.none()) {
            if (excluded.none() && current.size() >= min_size) emit(current);
            return;
        }
        if (current.size() + candidates.count() < min_size) return;

        // Tomita pivot: the vertex of P ∪ X covering most of P.
        Bitset pool = candidates | excluded;
        std::size_t pivot = pool.find_first();
        std::size_t best = (candidates & adj[pivot]).count();
        for (std::size_t u = pool.find_next(pivot); u != Bitset::npos; u = pool.find_next(u)) {
            std::size_t c = (candidates & adj[u]).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        }

        Bitset branch = candidates - adj[pivot];
        for (std::size_t v = branch.find_first(); v != Bitset::npos; v = branch.find_next(v)) {
            current.push_back(v);
            expand(candidates & adj[v], excluded & adj[v]);
            current.pop_back();
            candidates.reset(v);
            excluded.set(v);
        }
    }
};

}  // namespace detail

/// Bron–Kerbosch with pivoting. Calls `emit` once per maximal clique with at
/// least `min_size` vertices; vertices come in insertion order, not sorted.
inline void for_each_maximal_clique(const std::vector<Bitset>& adj, std::size_t min_size,
                                    const std::function<void(const std::vector<std::size_t>&)>& emit) {
    const std::size_t n = adj.size();
    if (n == 0) return;
    Bitset all(n);
    all.set();
    detail::CliqueSearch search{adj, min_size, emit, {}};
    search.expand(all, Bitset(n));
}

}  // namespace patex
