#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "patex/graph/simple_view.hpp"

namespace patex {

namespace detail {

/// Symmetric integer-weighted graph. `self[i]` holds A_ii, which for an
/// aggregated community is twice its internal edge weight.
struct WeightedGraph {
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adj;  // j != i
    std::vector<std::int64_t> self;

    std::size_t size() const { return adj.size(); }

    std::int64_t strength(std::size_t i) const {
        std::int64_t k = self[i];
        for (const auto& [j, w] : adj[i]) k += w;
        return k;
    }
};

/// One level of greedy local moving. Nodes are visited in index order; a node
/// joins the neighbouring community with the strictly largest modularity gain,
/// staying put on ties, and lower community ids win among equal newcomers.
/// Gains are compared as exact integers scaled by 2m.
inline bool local_moving(const WeightedGraph& g, std::vector<std::size_t>& comm) {
    const std::size_t n = g.size();
    std::vector<std::int64_t> k(n), tot(n, 0);
    std::int64_t two_m = 0;
    for (std::size_t i = 0; i < n; ++i) {
        k[i] = g.strength(i);
        two_m += k[i];
    }
    if (two_m == 0) return false;
    for (std::size_t i = 0; i < n; ++i) tot[comm[i]] += k[i];

    bool any_move = false;
    std::vector<std::int64_t> link_to(n, 0);
    std::vector<std::size_t> touched;
    for (int pass = 0; pass < 1000; ++pass) {
        bool moved = false;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t old = comm[i];
            tot[old] -= k[i];

            touched.clear();
            touched.push_back(old);
            for (const auto& [j, w] : g.adj[i]) {
                if (link_to[comm[j]] == 0) touched.push_back(comm[j]);
                link_to[comm[j]] += w;
            }
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

            auto gain = [&](std::size_t c) { return link_to[c] * two_m - tot[c] * k[i]; };
            std::size_t best = old;
            std::int64_t best_gain = gain(old);
            for (std::size_t c : touched) {
                if (c == old) continue;
                std::int64_t gc = gain(c);
                if (gc > best_gain) {
                    best_gain = gc;
                    best = c;
                }
            }
            for (std::size_t c : touched) link_to[c] = 0;

            tot[best] += k[i];
            if (best != old) {
                comm[i] = best;
                moved = true;
                any_move = true;
            }
        }
        if (!moved) break;
    }
    return any_move;
}

/// Renumbers communities 0.. in order of first appearance; returns the count.
inline std::size_t renumber(std::vector<std::size_t>& comm) {
    std::map<std::size_t, std::size_t> ids;
    for (auto& c : comm) {
        auto [it, inserted] = ids.emplace(c, ids.size());
        c = it->second;
    }
    return ids.size();
}

inline WeightedGraph aggregate(const WeightedGraph& g, const std::vector<std::size_t>& comm, std::size_t count) {
    WeightedGraph out;
    out.adj.resize(count);
    out.self.assign(count, 0);
    std::vector<std::map<std::size_t, std::int64_t>> acc(count);
    for (std::size_t i = 0; i < g.size(); ++i) {
        out.self[comm[i]] += g.self[i];
        for (const auto& [j, w] : g.adj[i]) {
            if (comm[i] == comm[j]) out.self[comm[i]] += w;
            else acc[comm[i]][comm[j]] += w;
        }
    }
    for (std::size_t c = 0; c < count; ++c) out.adj[c].assign(acc[c].begin(), acc[c].end());
    return out;
}

}  // namespace detail

/// Multi-level greedy modularity maximisation (local moving plus community
/// aggregation) on the unweighted simple view. Fully deterministic for a given
/// node order. Returns communities as sorted local vertex lists, ordered by
/// their smallest member.
inline std::vector<std::vector<std::size_t>> detect_communities(const SimpleView& view) {
    const std::size_t n = view.size();
    detail::WeightedGraph g;
    g.adj.resize(n);
    g.self.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t u : view.neighbors(v)) g.adj[v].emplace_back(u, 1);

    std::vector<std::size_t> membership(n);
    for (std::size_t v = 0; v < n; ++v) membership[v] = v;

    for (int level = 0; level < 64; ++level) {
        std::vector<std::size_t> comm(g.size());
        for (std::size_t i = 0; i < comm.size(); ++i) comm[i] = i;
        if (!detail::local_moving(g, comm)) break;
        std::size_t count = detail::renumber(comm);
        for (auto& m : membership) m = comm[m];
        g = detail::aggregate(g, comm, count);
    }

    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t v = 0; v < n; ++v) groups[membership[v]].push_back(v);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [id, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

/// Newman modularity of a partition of the simple view.
inline double modularity(const SimpleView& view, const std::vector<std::vector<std::size_t>>& parts) {
    const double two_m = 2.0 * static_cast<double>(view.edge_count());
    if (two_m == 0.0) return 0.0;
    std::vector<std::size_t> of(view.size());
    for (std::size_t c = 0; c < parts.size(); ++c)
        for (std::size_t v : parts[c]) of[v] = c;
    std::vector<double> in(parts.size(), 0.0), tot(parts.size(), 0.0);
    for (std::size_t v = 0; v < view.size(); ++v) {
        tot[of[v]] += static_cast<double>(view.degree(v));
        for (std::size_t u : view.neighbors(v))
            if (of[u] == of[v]) in[of[v]] += 1.0;
    }
    double q = 0.0;
    for (std::size_t c = 0; c < parts.size(); ++c) q += in[c] / two_m - (tot[c] / two_m) * (tot[c] / two_m);
    return q;
}

}  // namespace patex
