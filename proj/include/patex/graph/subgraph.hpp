#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "patex/graph/network.hpp"

namespace patex {

/// A closed element set of a parent network: every included link has both
/// endpoints included. Only `close_selection` creates one.
class Subgraph {
public:
    const Network& parent() const { return *parent_; }
    const ElementSet& elements() const { return elements_; }

    /// Sorted parent indices of the included nodes and links.
    const std::vector<std::size_t>& node_indices() const { return node_indices_; }
    const std::vector<std::size_t>& link_indices() const { return link_indices_; }

    bool contains_node(std::size_t i) const { return std::binary_search(node_indices_.begin(), node_indices_.end(), i); }
    bool contains_link(std::size_t i) const { return std::binary_search(link_indices_.begin(), link_indices_.end(), i); }

private:
    friend Subgraph close_selection(const Network& network, const ElementSet& raw);

    const Network* parent_ = nullptr;
    ElementSet elements_;
    std::vector<std::size_t> node_indices_;
    std::vector<std::size_t> link_indices_;
};

/// Turns the raw elements hit by a selection into a closed subgraph: the raw
/// elements, the endpoints of every raw link, and every link whose endpoints
/// both lie in the resulting node set. Closing a closed subgraph is a no-op.
inline Subgraph close_selection(const Network& network, const ElementSet& raw) {
    std::vector<char> node_in(network.node_count(), 0);
    std::vector<char> link_in(network.link_count(), 0);

    for (const auto& id : raw.nodes) {
        auto i = network.node_index(id);
        if (!i) throw UnknownElement("unknown node '" + id + "'");
        node_in[*i] = 1;
    }
    for (const auto& id : raw.links) {
        auto i = network.link_index(id);
        if (!i) throw UnknownElement("unknown link '" + id + "'");
        link_in[*i] = 1;
        auto [s, t] = network.endpoints(*i);
        node_in[s] = 1;
        node_in[t] = 1;
    }
    for (std::size_t l = 0; l < network.link_count(); ++l) {
        auto [s, t] = network.endpoints(l);
        if (node_in[s] && node_in[t]) link_in[l] = 1;
    }

    Subgraph sub;
    sub.parent_ = &network;
    for (std::size_t i = 0; i < node_in.size(); ++i) {
        if (!node_in[i]) continue;
        sub.node_indices_.push_back(i);
        sub.elements_.nodes.insert(network.nodes()[i].id);
    }
    for (std::size_t i = 0; i < link_in.size(); ++i) {
        if (!link_in[i]) continue;
        sub.link_indices_.push_back(i);
        sub.elements_.links.insert(network.links()[i].id);
    }
    return sub;
}

}  // namespace patex
