#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "patex/graph/simple_view.hpp"

namespace patex {

struct WeightRank {
    std::string link;
    double weight = 0.0;
    std::size_t rank = 0;  // competition ranking: equal weights share a rank

    bool operator==(const WeightRank&) const = default;
};

struct BasicStats {
    std::size_t node_count = 0;
    std::size_t link_count = 0;
    double density = 0.0;
    std::vector<WeightRank> weight_ranks;
};

/// Undirected simple-graph density: distinct non-self node pairs that are
/// linked, over N(N-1)/2. Zero for fewer than two nodes.
inline double simple_density(std::size_t nodes, std::size_t linked_pairs) {
    if (nodes < 2) return 0.0;
    return static_cast<double>(linked_pairs) / (static_cast<double>(nodes) * static_cast<double>(nodes - 1) / 2.0);
}

/// Links of `links` (parent indices) ordered by descending weight, ties by id.
inline std::vector<WeightRank> rank_by_weight(const Network& net, const std::vector<std::size_t>& links) {
    std::vector<WeightRank> table;
    table.reserve(links.size());
    for (std::size_t l : links) table.push_back({net.links()[l].id, net.links()[l].weight, 0});
    std::sort(table.begin(), table.end(), [](const WeightRank& a, const WeightRank& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        return a.link < b.link;
    });
    for (std::size_t i = 0; i < table.size(); ++i)
        table[i].rank = (i > 0 && table[i].weight == table[i - 1].weight) ? table[i - 1].rank : i + 1;
    return table;
}

inline BasicStats basic_stats(const Scope& scope) {
    const Network& net = *scope.network;
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t l : scope.links) {
        auto [s, t] = net.endpoints(l);
        if (s != t) pairs.insert(std::minmax(s, t));
    }
    BasicStats stats;
    stats.node_count = scope.nodes.size();
    stats.link_count = scope.links.size();
    stats.density = simple_density(stats.node_count, pairs.size());
    stats.weight_ranks = rank_by_weight(net, scope.links);
    return stats;
}

inline BasicStats basic_stats(const Network& net) { return basic_stats(Scope::whole(net)); }
inline BasicStats basic_stats(const Subgraph& sub) { return basic_stats(Scope::of(sub)); }

}  // namespace patex
