#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "patex/graph/simple_view.hpp"

namespace patex {

/// Bijection between nodes and ordinal positions.
class NodeOrdering {
public:
    NodeOrdering() = default;

    static NodeOrdering identity(std::size_t n) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        return from_order(std::move(order));
    }

    /// `order[k]` is the node index placed at position k. Must be a permutation.
    static NodeOrdering from_order(std::vector<std::size_t> order) {
        NodeOrdering o;
        o.position_.assign(order.size(), order.size());
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (order[k] >= order.size() || o.position_[order[k]] != order.size())
                throw std::invalid_argument("node ordering is not a permutation");
            o.position_[order[k]] = k;
        }
        o.order_ = std::move(order);
        return o;
    }

    std::size_t size() const { return order_.size(); }
    const std::vector<std::size_t>& order() const { return order_; }
    std::size_t position(std::size_t node) const { return position_[node]; }
    std::size_t node_at(std::size_t k) const { return order_[k]; }

    bool operator==(const NodeOrdering&) const = default;

private:
    std::vector<std::size_t> order_;
    std::vector<std::size_t> position_;
};

/// Σ |pos(u) − pos(v)| over the distinct linked node pairs.
inline std::int64_t arrangement_cost(const SimpleView& g, const NodeOrdering& o) {
    std::int64_t cost = 0;
    for (const auto& [pair, links] : g.pairs()) {
        auto a = static_cast<std::int64_t>(o.position(g.global(pair.first)));
        auto b = static_cast<std::int64_t>(o.position(g.global(pair.second)));
        cost += a > b ? a - b : b - a;
    }
    return cost;
}

inline std::int64_t arrangement_cost(const Network& net, const NodeOrdering& o) {
    return arrangement_cost(SimpleView(Scope::whole(net)), o);
}

/// Largest |pos(u) − pos(v)| over linked pairs.
inline std::size_t bandwidth(const Network& net, const NodeOrdering& o) {
    std::size_t bw = 0;
    for (std::size_t l = 0; l < net.link_count(); ++l) {
        auto [s, t] = net.endpoints(l);
        std::size_t a = o.position(s), b = o.position(t);
        bw = std::max(bw, a > b ? a - b : b - a);
    }
    return bw;
}

struct SeriationRun {
    NodeOrdering ordering;
    /// Cost before the first sweep, then after every accepted sweep.
    std::vector<std::int64_t> costs;
};

/// Barycenter sweeps from `start`: every node moves to the mean position of its
/// neighbours (isolated nodes keep theirs), nodes are re-ranked by that value
/// with the current position breaking ties. A sweep is kept only if it lowers
/// the arrangement cost; the first one that does not ends the run.
inline SeriationRun barycenter_sweeps(const SimpleView& g, NodeOrdering start, int max_sweeps = 100) {
    SeriationRun run{std::move(start), {}};
    run.costs.push_back(arrangement_cost(g, run.ordering));
    const std::size_t n = g.size();
    std::vector<double> centre(n);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        for (std::size_t v = 0; v < n; ++v) {
            const auto& nb = g.neighbors(v);
            if (nb.empty()) {
                centre[v] = static_cast<double>(run.ordering.position(g.global(v)));
                continue;
            }
            double sum = 0.0;
            for (std::size_t u : nb) sum += static_cast<double>(run.ordering.position(g.global(u)));
            centre[v] = sum / static_cast<double>(nb.size());
        }
        std::vector<std::size_t> local(n);
        std::iota(local.begin(), local.end(), std::size_t{0});
        std::sort(local.begin(), local.end(), [&](std::size_t a, std::size_t b) {
            if (centre[a] != centre[b]) return centre[a] < centre[b];
            return run.ordering.position(g.global(a)) < run.ordering.position(g.global(b));
        });
        std::vector<std::size_t> order(n);
        for (std::size_t k = 0; k < n; ++k) order[k] = g.global(local[k]);
        auto next = NodeOrdering::from_order(std::move(order));
        const std::int64_t cost = arrangement_cost(g, next);
        if (cost >= run.costs.back()) break;
        run.ordering = std::move(next);
        run.costs.push_back(cost);
    }
    return run;
}

/// Cuthill–McKee order (not reversed): components in order of their earliest
/// node in `start`, each traversed breadth-first from a pseudo-peripheral
/// node, neighbours by ascending degree then `start` position.
inline NodeOrdering cuthill_mckee(const SimpleView& g, const NodeOrdering& start) {
    const std::size_t n = g.size();
    auto before = [&](std::size_t a, std::size_t b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
        return start.position(g.global(a)) < start.position(g.global(b));
    };
    auto bfs_levels = [&](std::size_t root, std::vector<std::size_t>& level) {
        std::fill(level.begin(), level.end(), n);
        std::vector<std::size_t> visited{root};
        level[root] = 0;
        for (std::size_t i = 0; i < visited.size(); ++i)
            for (std::size_t u : g.neighbors(visited[i]))
                if (level[u] == n) {
                    level[u] = level[visited[i]] + 1;
                    visited.push_back(u);
                }
        return visited;
    };

    std::vector<char> placed(n, 0);
    std::vector<std::size_t> level(n), order;
    order.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        auto seed = g.local(start.node_at(k));
        if (!seed || placed[*seed]) continue;

        // George–Liu: hop to the farthest, lowest-degree node while the
        // eccentricity keeps growing.
        auto eccentricity = [&](std::size_t v, std::vector<std::size_t>& reach) {
            reach = bfs_levels(v, level);
            std::size_t far = 0;
            for (std::size_t u : reach) far = std::max(far, level[u]);
            return far;
        };
        auto component = bfs_levels(*seed, level);
        std::size_t root = *std::min_element(component.begin(), component.end(), before);
        std::vector<std::size_t> reach;
        std::size_t ecc = eccentricity(root, reach);
        for (int hop = 0; hop < 16; ++hop) {
            std::size_t cand = n;
            for (std::size_t v : reach)
                if (level[v] == ecc && (cand == n || before(v, cand))) cand = v;
            std::vector<std::size_t> cand_reach;
            std::size_t cand_ecc = eccentricity(cand, cand_reach);
            if (cand_ecc <= ecc) break;
            root = cand;
            ecc = cand_ecc;
            reach = std::move(cand_reach);
        }

        std::deque<std::size_t> queue{root};
        placed[root] = 1;
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            order.push_back(g.global(v));
            std::vector<std::size_t> next;
            for (std::size_t u : g.neighbors(v))
                if (!placed[u]) {
                    placed[u] = 1;
                    next.push_back(u);
                }
            std::sort(next.begin(), next.end(), before);
            queue.insert(queue.end(), next.begin(), next.end());
        }
    }
    return NodeOrdering::from_order(std::move(order));
}

/// Row/column order shared by the matrix and time-arcs views. Runs barycenter
/// sweeps from `start` and from a Cuthill–McKee order of it and keeps the
/// cheaper result, preferring the run from `start` on ties.
inline NodeOrdering barycenter_order(const Network& net, const NodeOrdering& start) {
    SimpleView g(Scope::whole(net));
    auto from_start = barycenter_sweeps(g, start);
    auto from_bfs = barycenter_sweeps(g, cuthill_mckee(g, start));
    return from_bfs.costs.back() < from_start.costs.back() ? from_bfs.ordering : from_start.ordering;
}

inline NodeOrdering barycenter_order(const Network& net) {
    return barycenter_order(net, NodeOrdering::identity(net.node_count()));
}

}  // namespace patex
