#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "patex/graph/network.hpp"
#include "patex/graph/subgraph.hpp"

namespace patex {

/// The part of a network a computation runs over: sorted parent indices.
struct Scope {
    const Network* network = nullptr;
    std::vector<std::size_t> nodes;
    std::vector<std::size_t> links;

    static Scope whole(const Network& net) {
        Scope s{&net, {}, {}};
        s.nodes.resize(net.node_count());
        s.links.resize(net.link_count());
        for (std::size_t i = 0; i < s.nodes.size(); ++i) s.nodes[i] = i;
        for (std::size_t i = 0; i < s.links.size(); ++i) s.links[i] = i;
        return s;
    }

    static Scope of(const Subgraph& sub) { return Scope{&sub.parent(), sub.node_indices(), sub.link_indices()}; }
};

/// Undirected simple-graph view of a scope: self links and parallel links
/// collapse, but the original link indices stay reachable per node pair.
/// Vertices are local indices 0..size()-1 in scope node order.
class SimpleView {
public:
    explicit SimpleView(const Scope& scope) : scope_(scope) {
        const Network& net = *scope.network;
        local_.assign(net.node_count(), kAbsent);
        for (std::size_t i = 0; i < scope.nodes.size(); ++i) local_[scope.nodes[i]] = i;

        adj_.resize(scope.nodes.size());
        incident_.resize(scope.nodes.size());
        for (std::size_t l : scope.links) {
            auto [gs, gt] = net.endpoints(l);
            std::size_t s = local_[gs], t = local_[gt];
            incident_[s].push_back(l);
            if (s == t) {
                self_links_.push_back(l);
                continue;
            }
            incident_[t].push_back(l);
            auto key = std::minmax(s, t);
            auto& bucket = pair_links_[key];
            if (bucket.empty()) {
                adj_[s].push_back(t);
                adj_[t].push_back(s);
            }
            bucket.push_back(l);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    const Network& network() const { return *scope_.network; }
    const Scope& scope() const { return scope_; }
    std::size_t size() const { return adj_.size(); }
    std::size_t edge_count() const { return pair_links_.size(); }

    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
    std::size_t degree(std::size_t v) const { return adj_[v].size(); }
    bool adjacent(std::size_t u, std::size_t v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

    std::size_t global(std::size_t v) const { return scope_.nodes[v]; }
    std::optional<std::size_t> local(std::size_t global_node) const {
        if (local_[global_node] == kAbsent) return std::nullopt;
        return local_[global_node];
    }

    /// Parent link indices joining u and v (u != v), in scope order.
    const std::vector<std::size_t>& links_between(std::size_t u, std::size_t v) const {
        static const std::vector<std::size_t> none;
        auto it = pair_links_.find(std::minmax(u, v));
        return it == pair_links_.end() ? none : it->second;
    }

    /// Every scope link touching v, self links included.
    const std::vector<std::size_t>& incident_links(std::size_t v) const { return incident_[v]; }

    /// Node pairs keyed by (min, max) local index, with their parent link indices.
    const std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>& pairs() const { return pair_links_; }

    const std::vector<std::size_t>& self_links() const { return self_links_; }

private:
    static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

    Scope scope_;
    std::vector<std::size_t> local_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::vector<std::size_t>> incident_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> pair_links_;
    std::vector<std::size_t> self_links_;
};

}  // namespace patex
