#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "patex/errors.hpp"

namespace patex {

struct Node {
    std::string id;
    std::string label;

    bool operator==(const Node&) const = default;
};

struct Link {
    std::string id;
    std::string source;
    std::string target;
    double weight = 1.0;
    std::string type;
    std::optional<std::int64_t> time;

    bool self() const { return source == target; }
    bool operator==(const Link&) const = default;
};

/// Node and link ids referenced by a selection or a pattern instance.
struct ElementSet {
    std::set<std::string> nodes;
    std::set<std::string> links;

    std::size_t size() const { return nodes.size() + links.size(); }
    bool empty() const { return nodes.empty() && links.empty(); }
    bool operator==(const ElementSet&) const = default;
    auto operator<=>(const ElementSet&) const = default;
};

/// Immutable node/link store. Construction validates every invariant, so a
/// `Network` that exists is always consistent.
class Network {
public:
    /// `temporal` defaults to "some link carries a timestamp".
    static Network create(std::vector<Node> nodes, std::vector<Link> links, bool directed = false,
                          std::optional<bool> temporal = std::nullopt) {
        Network net;
        net.directed_ = directed;
        if (nodes.empty()) throw EmptyNetwork("network has no nodes");

        net.node_index_.reserve(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (nodes[i].id.empty()) throw ParseError("node " + std::to_string(i) + " has an empty id");
            if (!net.node_index_.emplace(nodes[i].id, i).second)
                throw ParseError("duplicate node id '" + nodes[i].id + "'");
        }

        bool any_time = false;
        bool all_time = true;
        net.link_index_.reserve(links.size());
        net.endpoints_.reserve(links.size());
        for (std::size_t i = 0; i < links.size(); ++i) {
            Link& l = links[i];
            if (l.id.empty()) l.id = "e" + std::to_string(i);
            if (!net.link_index_.emplace(l.id, i).second)
                throw ParseError("duplicate link id '" + l.id + "'");
            if (!(l.weight >= 0.0)) throw ParseError("link '" + l.id + "' has a negative or NaN weight");
            auto s = net.node_index_.find(l.source);
            auto t = net.node_index_.find(l.target);
            if (s == net.node_index_.end() || t == net.node_index_.end())
                throw DanglingEndpoint("link '" + l.id + "' references an undeclared node");
            net.endpoints_.emplace_back(s->second, t->second);
            any_time = any_time || l.time.has_value();
            all_time = all_time && l.time.has_value();
        }

        net.temporal_ = temporal.value_or(any_time);
        if (!net.temporal_ && any_time)
            throw ParseError("non-temporal network has timestamped links");
        if (net.temporal_ && !all_time)
            throw ParseError("temporal network has links without a timestamp");

        net.nodes_ = std::move(nodes);
        net.links_ = std::move(links);
        return net;
    }

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Link>& links() const { return links_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t link_count() const { return links_.size(); }
    bool directed() const { return directed_; }
    bool temporal() const { return temporal_; }

    std::optional<std::size_t> node_index(const std::string& id) const { return lookup(node_index_, id); }
    std::optional<std::size_t> link_index(const std::string& id) const { return lookup(link_index_, id); }

    /// Node indices of link `i`'s (source, target).
    std::pair<std::size_t, std::size_t> endpoints(std::size_t link) const { return endpoints_[link]; }

    ElementSet all_elements() const {
        ElementSet all;
        for (const auto& n : nodes_) all.nodes.insert(n.id);
        for (const auto& l : links_) all.links.insert(l.id);
        return all;
    }

    bool operator==(const Network& o) const {
        return directed_ == o.directed_ && temporal_ == o.temporal_ && nodes_ == o.nodes_ && links_ == o.links_;
    }

private:
    Network() = default;

    static std::optional<std::size_t> lookup(const std::unordered_map<std::string, std::size_t>& m,
                                             const std::string& id) {
        auto it = m.find(id);
        if (it == m.end()) return std::nullopt;
        return it->second;
    }

    std::vector<Node> nodes_;
    std::vector<Link> links_;
    std::vector<std::pair<std::size_t, std::size_t>> endpoints_;
    std::unordered_map<std::string, std::size_t> node_index_;
    std::unordered_map<std::string, std::size_t> link_index_;
    bool directed_ = false;
    bool temporal_ = false;
};

}  // namespace patex
