#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "patex/graph/simple_view.hpp"
#include "patex/motif/cliques.hpp"
#include "patex/motif/community.hpp"
#include "patex/motif/instance.hpp"

namespace patex {

/// Qualification thresholds for the detectors.
struct Heuristics {
    double strong_link_percentile = 0.9;
    double hub_stddevs = 2.0;
    std::size_t hub_min_degree = 5;
    std::size_t fan_min_nodes = 4;
    std::size_t chain_min_interior = 3;
    std::size_t clique_min_nodes = 5;
    std::size_t cluster_min_nodes = 5;
    double cluster_min_density = 0.5;
    std::size_t biclique_min_part = 2;
    std::size_t biclique_min_nodes = 5;
    std::size_t recurring_min_times = 3;
};

namespace detail {

inline void finish(std::vector<PatternInstance>& out) { std::sort(out.begin(), out.end(), instance_less); }

/// Nodes of `local` plus every non-self link among them.
inline ElementSet induced_elements(const SimpleView& g, const std::vector<std::size_t>& local) {
    std::vector<std::size_t> nodes, links;
    for (std::size_t v : local) nodes.push_back(g.global(v));
    for (std::size_t i = 0; i < local.size(); ++i)
        for (std::size_t j = i + 1; j < local.size(); ++j)
            for (std::size_t l : g.links_between(local[i], local[j])) links.push_back(l);
    return element_set(g.network(), nodes, links);
}

/// The node, its neighbours and every link touching it.
inline ElementSet neighbourhood_elements(const SimpleView& g, std::size_t v) {
    std::vector<std::size_t> nodes{g.global(v)};
    for (std::size_t u : g.neighbors(v)) nodes.push_back(g.global(u));
    return element_set(g.network(), nodes, g.incident_links(v));
}

inline std::size_t count_internal_pairs(const SimpleView& g, const std::vector<std::size_t>& local) {
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < local.size(); ++i)
        for (std::size_t j = i + 1; j < local.size(); ++j)
            if (g.adjacent(local[i], local[j])) ++pairs;
    return pairs;
}

}  // namespace detail

struct StrongLinkThreshold {
    double percentile_weight = 0.0;  // nearest-rank percentile
    double median = 0.0;
};

/// Nearest-rank percentile and median of the weights. Empty input gives zeros.
inline StrongLinkThreshold strong_link_threshold(std::vector<double> weights, double percentile = 0.9) {
    StrongLinkThreshold t;
    if (weights.empty()) return t;
    std::sort(weights.begin(), weights.end());
    const std::size_t n = weights.size();
    auto rank = static_cast<std::size_t>(std::ceil(percentile * static_cast<double>(n) - 1e-9));
    t.percentile_weight = weights[std::clamp<std::size_t>(rank, 1, n) - 1];
    t.median = n % 2 == 1 ? weights[n / 2] : (weights[n / 2 - 1] + weights[n / 2]) / 2.0;
    return t;
}

/// StrongLink, SelfLink and ParallelLinks.
inline std::vector<PatternInstance> detect_link_motifs(const Scope& scope, const Heuristics& h = {}) {
    const Network& net = *scope.network;
    std::vector<PatternInstance> out;

    std::vector<double> weights;
    for (std::size_t l : scope.links) weights.push_back(net.links()[l].weight);
    const auto strong = strong_link_threshold(weights, h.strong_link_percentile);

    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_pair;
    for (std::size_t l : scope.links) {
        const Link& link = net.links()[l];
        auto [s, t] = net.endpoints(l);
        std::vector<std::size_t> ends = s == t ? std::vector<std::size_t>{s} : std::vector<std::size_t>{s, t};
        if (link.weight >= strong.percentile_weight && link.weight > strong.median)
            out.push_back(make_instance(MotifKind::StrongLink, element_set(net, ends, {l}), net));
        if (s == t) out.push_back(make_instance(MotifKind::SelfLink, element_set(net, ends, {l}), net));
        by_pair[std::minmax(s, t)].push_back(l);
    }
    for (const auto& [pair, links] : by_pair) {
        if (links.size() < 2) continue;
        out.push_back(make_instance(MotifKind::ParallelLinks, element_set(net, {pair.first, pair.second}, links), net));
    }
    detail::finish(out);
    return out;
}

/// Degree a node needs to count as a hub: mean + k·stddev (population) of the
/// simple degrees, and never below the absolute minimum.
inline double hub_threshold(const SimpleView& g, const Heuristics& h = {}) {
    if (g.size() == 0) return static_cast<double>(h.hub_min_degree);
    double sum = 0.0, sq = 0.0;
    for (std::size_t v = 0; v < g.size(); ++v) {
        double d = static_cast<double>(g.degree(v));
        sum += d;
        sq += d * d;
    }
    const double n = static_cast<double>(g.size());
    const double mean = sum / n;
    const double stddev = std::sqrt(std::max(0.0, sq / n - mean * mean));
    return std::max(mean + h.hub_stddevs * stddev, static_cast<double>(h.hub_min_degree));
}

/// Local vertices whose removal disconnects their component (iterative
/// Hopcroft–Tarjan), ascending.
inline std::vector<std::size_t> articulation_points(const SimpleView& g) {
    const std::size_t n = g.size();
    constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, kUnseen), low(n, 0), parent(n, kUnseen), children(n, 0);
    std::vector<char> cut(n, 0);
    std::size_t timer = 0;

    struct Frame {
        std::size_t v;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (disc[root] != kUnseen) continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                std::size_t u = nb[f.next++];
                if (disc[u] == kUnseen) {
                    parent[u] = f.v;
                    ++children[f.v];
                    disc[u] = low[u] = timer++;
                    stack.push_back({u, 0});
                } else if (u != parent[f.v]) {
                    low[f.v] = std::min(low[f.v], disc[u]);
                }
                continue;
            }
            std::size_t v = f.v;
            stack.pop_back();
            if (std::size_t p = parent[v]; p != kUnseen) {
                low[p] = std::min(low[p], low[v]);
                if (parent[p] != kUnseen && low[v] >= disc[p]) cut[p] = 1;
            }
        }
        if (children[root] > 1) cut[root] = 1;
    }
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n; ++v)
        if (cut[v]) out.push_back(v);
    return out;
}

/// Hub, BridgeNode and IsolatedNode. Hub and BridgeNode instances carry the
/// node's 1-hop neighbourhood so the whole structure can be highlighted.
inline std::vector<PatternInstance> detect_node_motifs(const Scope& scope, const Heuristics& h = {}) {
    SimpleView g(scope);
    const Network& net = *scope.network;
    std::vector<PatternInstance> out;
    const double hub_min = hub_threshold(g, h);
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.degree(v) == 0)
            out.push_back(make_instance(MotifKind::IsolatedNode, element_set(net, {g.global(v)}, {}), net));
        else if (static_cast<double>(g.degree(v)) >= hub_min)
            out.push_back(make_instance(MotifKind::Hub, detail::neighbourhood_elements(g, v), net));
    }
    for (std::size_t v : articulation_points(g))
        out.push_back(make_instance(MotifKind::BridgeNode, detail::neighbourhood_elements(g, v), net));
    detail::finish(out);
    return out;
}

/// A centre plus its neighbours of degree exactly 1, when that makes at least
/// `fan_min_nodes` nodes.
inline std::vector<PatternInstance> detect_fans(const Scope& scope, const Heuristics& h = {}) {
    SimpleView g(scope);
    const Network& net = *scope.network;
    std::vector<PatternInstance> out;
    for (std::size_t c = 0; c < g.size(); ++c) {
        std::vector<std::size_t> nodes{g.global(c)}, links;
        for (std::size_t u : g.neighbors(c)) {
            if (g.degree(u) != 1) continue;
            nodes.push_back(g.global(u));
            for (std::size_t l : g.links_between(c, u)) links.push_back(l);
        }
        if (nodes.size() >= h.fan_min_nodes)
            out.push_back(make_instance(MotifKind::Fan, element_set(net, nodes, links), net));
    }
    detail::finish(out);
    return out;
}

/// Maximal paths whose interior nodes all have degree 2, with at least
/// `chain_min_interior` interior nodes. Pure cycles do not qualify.
inline std::vector<PatternInstance> detect_chains(const Scope& scope, const Heuristics& h = {}) {
    SimpleView g(scope);
    const Network& net = *scope.network;
    std::vector<PatternInstance> out;
    std::vector<char> seen(g.size(), 0);

    auto other = [&](std::size_t v, std::size_t from) {
        const auto& nb = g.neighbors(v);
        return nb[0] == from ? nb[1] : nb[0];
    };

    for (std::size_t start = 0; start < g.size(); ++start) {
        if (seen[start] || g.degree(start) != 2) continue;
        seen[start] = 1;
        // Walk both ways; each side ends at its first non-degree-2 node.
        std::vector<std::size_t> sides[2];
        std::size_t ends[2];
        bool cycle = false;
        for (int side = 0; side < 2 && !cycle; ++side) {
            std::size_t prev = start;
            std::size_t cur = g.neighbors(start)[side];
            while (g.degree(cur) == 2 && cur != start) {
                seen[cur] = 1;
                sides[side].push_back(cur);
                std::size_t next = other(cur, prev);
                prev = cur;
                cur = next;
            }
            if (cur == start) cycle = true;
            ends[side] = cur;
        }
        if (cycle) continue;

        std::vector<std::size_t> path{ends[0]};
        path.insert(path.end(), sides[0].rbegin(), sides[0].rend());
        path.push_back(start);
        path.insert(path.end(), sides[1].begin(), sides[1].end());
        path.push_back(ends[1]);
        if (path.size() - 2 < h.chain_min_interior) continue;

        std::vector<std::size_t> nodes, links;
        for (std::size_t v : path) nodes.push_back(g.global(v));
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            for (std::size_t l : g.links_between(path[i], path[i + 1])) links.push_back(l);
        out.push_back(make_instance(MotifKind::Chain, element_set(net, nodes, links), net));
    }
    detail::finish(out);
    return out;
}

/// Maximal cliques of the simple view with at least `clique_min_nodes` nodes.
inline std::vector<PatternInstance> detect_cliques(const Scope& scope, const Heuristics& h = {}) {
    SimpleView g(scope);
    std::vector<PatternInstance> out;
    for_each_maximal_clique(adjacency_bitsets(g), h.clique_min_nodes, [&](const std::vector<std::size_t>& c) {
        std::vector<std::size_t> sorted(c);
        std::sort(sorted.begin(), sorted.end());
        out.push_back(make_instance(MotifKind::Clique, detail::induced_elements(g, sorted), g.network()));
    });
    detail::finish(out);
    return out;
}

/// Communities of at least `cluster_min_nodes` nodes and internal density at
/// least `cluster_min_density`. A community of density 1 is reported as a
/// Clique instead.
inline std::vector<PatternInstance> detect_clusters(const Scope& scope, const Heuristics& h = {}) {
    SimpleView g(scope);
    std::vector<PatternInstance> out;
    for (const auto& community : detect_communities(g)) {
        if (community.size() < h.cluster_min_nodes) continue;
        const std::size_t pairs = detail::count_internal_pairs(g, community);
        const std::size_t possible = community.size() * (community.size() - 1) / 2;
        if (static_cast<double>(pairs) < h.cluster_min_density * static_cast<double>(possible)) continue;
        MotifKind kind = pairs == possible ? MotifKind::Clique : MotifKind::Cluster;
        out.push_back(make_instance(kind, detail::induced_elements(g, community), g.network()));
    }
    detail::finish(out);
    return out;
}

struct BicliqueParts {
    std::vector<std::size_t> left;   // sorted local vertices
    std::vector<std::size_t> right;  // sorted, left < right lexicographically
    auto operator<=>(const BicliqueParts&) const = default;
};

/// Maximal induced bicliques (both parts independent, all cross pairs linked)
/// meeting the part and total size minimums.
///
/// Runs Bron–Kerbosch on a doubled vertex set: vertex v on the left is v, on the
/// right n+v. Same-side vertices are compatible when non-adjacent in the graph,
/// cross-side vertices when adjacent. Every search is seeded by one edge so
/// both sides are non-empty, and branches that cannot meet the size minimums
/// are cut.
inline std::vector<BicliqueParts> maximal_bicliques(const SimpleView& g, std::size_t min_part, std::size_t min_total) {
    const std::size_t n = g.size();
    const auto adj = adjacency_bitsets(g);
    std::vector<Bitset> aux(2 * n, Bitset(2 * n));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) continue;
            if (adj[u][v]) {
                aux[u].set(n + v);
                aux[n + u].set(v);
            } else {
                aux[u].set(v);
                aux[n + u].set(n + v);
            }
        }
    }
    Bitset left_mask(2 * n), right_mask(2 * n);
    for (std::size_t v = 0; v < n; ++v) {
        left_mask.set(v);
        right_mask.set(n + v);
    }

    std::set<BicliqueParts> found;
    std::vector<std::size_t> current;
    std::size_t cur_left = 0;

    auto record = [&]() {
        BicliqueParts p;
        for (std::size_t x : current) (x < n ? p.left : p.right).push_back(x < n ? x : x - n);
        std::sort(p.left.begin(), p.left.end());
        std::sort(p.right.begin(), p.right.end());
        if (p.right < p.left) std::swap(p.left, p.right);
        found.insert(std::move(p));
    };

    auto expand = [&](auto&& self, Bitset cand, Bitset excl) -> void {
        const std::size_t cand_left = (cand & left_mask).count();
        const std::size_t cand_right = cand.count() - cand_left;
        const std::size_t cur_right = current.size() - cur_left;
        if (cur_left + cand_left < min_part || cur_right + cand_right < min_part ||
            current.size() + cand.count() < min_total)
            return;
        if (cand.none()) {
            if (excl.none()) record();
            return;
        }
        Bitset pool = cand | excl;
        std::size_t pivot = pool.find_first();
        std::size_t best = (cand & aux[pivot]).count();
        for (std::size_t u = pool.find_next(pivot); u != Bitset::npos; u = pool.find_next(u)) {
            std::size_t c = (cand & aux[u]).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        Bitset branch = cand - aux[pivot];
        for (std::size_t x = branch.find_first(); x != Bitset::npos; x = branch.find_next(x)) {
            current.push_back(x);
            if (x < n) ++cur_left;
            self(self, cand & aux[x], excl & aux[x]);
            if (x < n) --cur_left;
            current.pop_back();
            cand.reset(x);
            excl.set(x);
        }
    };

    for (const auto& [pair, links] : g.pairs()) {
        const std::size_t u = pair.first, v = pair.second;
        current = {u, n + v};
        cur_left = 1;
        expand(expand, aux[u] & aux[n + v], Bitset(2 * n));
    }
    return {found.begin(), found.end()};
}

inline std::vector<PatternInstance> detect_bicliques(const Scope& scope, const Heuristics& h = {}) {
    SimpleView g(scope);
    const Network& net = *scope.network;
    std::vector<PatternInstance> out;
    for (const auto& p : maximal_bicliques(g, h.biclique_min_part, h.biclique_min_nodes)) {
        std::vector<std::size_t> nodes, links;
        for (std::size_t v : p.left) nodes.push_back(g.global(v));
        for (std::size_t v : p.right) nodes.push_back(g.global(v));
        for (std::size_t a : p.left)
            for (std::size_t b : p.right)
                for (std::size_t l : g.links_between(a, b)) links.push_back(l);
        out.push_back(make_instance(MotifKind::Biclique, element_set(net, nodes, links), net));
    }
    detail::finish(out);
    return out;
}

/// ReciprocalLink (links in both directions between two nodes, at any times)
/// and RecurringLink (one direction at `recurring_min_times` or more distinct
/// timestamps). Throws NotTemporal on a network without timestamps.
inline std::vector<PatternInstance> detect_temporal_motifs(const Scope& scope, const Heuristics& h = {}) {
    const Network& net = *scope.network;
    if (!net.temporal()) throw NotTemporal("temporal motifs need a temporal network");
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> directed;
    for (std::size_t l : scope.links) {
        auto ends = net.endpoints(l);
        if (ends.first != ends.second) directed[ends].push_back(l);
    }
    std::vector<PatternInstance> out;
    for (const auto& [ends, links] : directed) {
        auto [s, t] = ends;
        if (s < t) {
            if (auto back = directed.find({t, s}); back != directed.end()) {
                std::vector<std::size_t> both(links);
                both.insert(both.end(), back->second.begin(), back->second.end());
                out.push_back(make_instance(MotifKind::ReciprocalLink, element_set(net, {s, t}, both), net));
            }
        }
        std::set<std::int64_t> times;
        for (std::size_t l : links) times.insert(*net.links()[l].time);
        if (times.size() >= h.recurring_min_times)
            out.push_back(make_instance(MotifKind::RecurringLink, element_set(net, {s, t}, links), net));
    }
    detail::finish(out);
    return out;
}

inline std::vector<PatternInstance> detect_cliques(const Network& n, const Heuristics& h = {}) { return detect_cliques(Scope::whole(n), h); }
inline std::vector<PatternInstance> detect_link_motifs(const Network& n, const Heuristics& h = {}) { return detect_link_motifs(Scope::whole(n), h); }
inline std::vector<PatternInstance> detect_node_motifs(const Network& n, const Heuristics& h = {}) { return detect_node_motifs(Scope::whole(n), h); }
inline std::vector<PatternInstance> detect_fans(const Network& n, const Heuristics& h = {}) { return detect_fans(Scope::whole(n), h); }
inline std::vector<PatternInstance> detect_chains(const Network& n, const Heuristics& h = {}) { return detect_chains(Scope::whole(n), h); }
inline std::vector<PatternInstance> detect_clusters(const Network& n, const Heuristics& h = {}) { return detect_clusters(Scope::whole(n), h); }
inline std::vector<PatternInstance> detect_bicliques(const Network& n, const Heuristics& h = {}) { return detect_bicliques(Scope::whole(n), h); }
inline std::vector<PatternInstance> detect_temporal_motifs(const Network& n, const Heuristics& h = {}) { return detect_temporal_motifs(Scope::whole(n), h); }

}  // namespace patex
