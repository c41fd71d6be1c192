#pragma once

// Builders shared by the unit, integration and acceptance suites.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "patex/graph/network.hpp"

namespace patex::test {

inline std::string node_name(std::size_t i) { return "v" + std::to_string(i); }

/// Undirected network on nodes v0..v{n-1} with unit-weight links.
inline Network from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                          bool directed = false) {
    std::vector<Node> nodes;
    for (std::size_t i = 0; i < n; ++i) nodes.push_back({node_name(i), node_name(i)});
    std::vector<Link> links;
    for (std::size_t i = 0; i < edges.size(); ++i)
        links.push_back({"e" + std::to_string(i), node_name(edges[i].first), node_name(edges[i].second), 1.0, "", {}});
    return Network::create(std::move(nodes), std::move(links), directed);
}

inline std::vector<std::pair<std::size_t, std::size_t>> complete_edges(std::size_t first, std::size_t count) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = first; i < first + count; ++i)
        for (std::size_t j = i + 1; j < first + count; ++j) e.emplace_back(i, j);
    return e;
}

inline Network complete(std::size_t n) { return from_edges(n, complete_edges(0, n)); }

inline Network path(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edges(n, e);
}

/// Uniform double in [0, 1) that is identical on every standard library
/// (std::uniform_real_distribution is not).
inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::size_t below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(unit(rng) * n); }

/// Erdős–Rényi G(n, p) edge list.
inline std::vector<std::pair<std::size_t, std::size_t>> gnp_edges(std::size_t n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (unit(rng) < p) e.emplace_back(i, j);
    return e;
}

inline Network gnp(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return from_edges(n, gnp_edges(n, p, rng));
}

/// Random temporal directed network: weights 1..5, types a/b, times 0..9,
/// occasional self and parallel links.
inline Network random_temporal(std::size_t n, std::size_t links, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Node> nodes;
    for (std::size_t i = 0; i < n; ++i) nodes.push_back({node_name(i), "node " + std::to_string(i)});
    std::vector<Link> ls;
    for (std::size_t i = 0; i < links; ++i) {
        std::size_t s = below(rng, n), t = below(rng, n);
        if (s == t && unit(rng) < 0.8) t = (s + 1) % n;
        ls.push_back({"e" + std::to_string(i), node_name(s), node_name(t), 1.0 + static_cast<double>(below(rng, 5)),
                      unit(rng) < 0.5 ? "a" : "b", static_cast<std::int64_t>(below(rng, 10))});
    }
    return Network::create(std::move(nodes), std::move(ls), true);
}

}  // namespace patex::test
