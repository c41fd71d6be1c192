#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "patex/graph/stats.hpp"
#include "patex/motif/kind.hpp"
#include "patex/util/hash.hpp"

namespace patex {

/// Data facts shown next to an explanation.
struct Facts {
    std::size_t nodes = 0;
    std::size_t links = 0;
    double density = 0.0;
    /// Rank of the instance's heaviest link among all network links
    /// (1 = heaviest). Empty when the instance holds no link.
    std::optional<std::size_t> top_weight_rank;
    /// Other network links share that weight.
    bool top_weight_tied = false;
    double top_weight = 0.0;

    bool operator==(const Facts&) const = default;
};

struct PatternInstance {
    MotifKind kind{};
    ElementSet elements;
    Facts facts;
    std::string key;  // salience key, stable across runs and platforms

    bool operator==(const PatternInstance&) const = default;
};

struct MiningResult {
    std::vector<PatternInstance> instances;
    std::map<MotifKind, std::size_t> counts;

    std::size_t total() const { return instances.size(); }
};

inline std::string salience_key(MotifKind kind, const ElementSet& elements) {
    std::string canon;
    for (const auto& n : elements.nodes) canon.append("n\x1f").append(n).push_back('\x1e');
    for (const auto& l : elements.links) canon.append("l\x1f").append(l).push_back('\x1e');
    return to_string(kind) + "-" + hex64(fnv1a64(canon));
}

/// Node/link counts and simple density of the instance subgraph, plus the
/// weight rank of its heaviest link among every link of `net`.
inline Facts data_facts(const ElementSet& elements, const Network& net) {
    Facts f;
    f.nodes = elements.nodes.size();
    f.links = elements.links.size();
    for (const auto& id : elements.nodes)
        if (!net.node_index(id)) throw UnknownElement("unknown node '" + id + "'");

    std::set<std::pair<std::size_t, std::size_t>> pairs;
    std::optional<double> heaviest;
    for (const auto& id : elements.links) {
        auto l = net.link_index(id);
        if (!l) throw UnknownElement("unknown link '" + id + "'");
        auto [s, t] = net.endpoints(*l);
        if (s != t) pairs.insert(std::minmax(s, t));
        double w = net.links()[*l].weight;
        if (!heaviest || w > *heaviest) heaviest = w;
    }
    f.density = simple_density(f.nodes, pairs.size());
    if (heaviest) {
        std::size_t above = 0, equal = 0;
        for (const auto& l : net.links()) {
            if (l.weight > *heaviest) ++above;
            else if (l.weight == *heaviest) ++equal;
        }
        f.top_weight = *heaviest;
        f.top_weight_rank = above + 1;
        f.top_weight_tied = equal > 1;
    }
    return f;
}

inline Facts data_facts(const PatternInstance& inst, const Network& net) { return data_facts(inst.elements, net); }

inline PatternInstance make_instance(MotifKind kind, ElementSet elements, const Network& net) {
    PatternInstance inst;
    inst.kind = kind;
    inst.facts = data_facts(elements, net);
    inst.key = salience_key(kind, elements);
    inst.elements = std::move(elements);
    return inst;
}

/// Builds the element set from parent indices.
inline ElementSet element_set(const Network& net, const std::vector<std::size_t>& nodes,
                              const std::vector<std::size_t>& links) {
    ElementSet e;
    for (std::size_t n : nodes) e.nodes.insert(net.nodes()[n].id);
    for (std::size_t l : links) e.links.insert(net.links()[l].id);
    return e;
}

/// Canonical instance order: kind, then node ids, then link ids.
inline bool instance_less(const PatternInstance& a, const PatternInstance& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.elements < b.elements;
}

inline nlohmann::json to_json(const Facts& f) {
    nlohmann::json j = {{"nodes", f.nodes}, {"links", f.links}, {"density", f.density}};
    if (f.top_weight_rank) {
        j["top_weight_rank"] = *f.top_weight_rank;
        j["top_weight_tied"] = f.top_weight_tied;
        j["top_weight"] = f.top_weight;
    } else {
        j["top_weight_rank"] = nullptr;
    }
    return j;
}

inline nlohmann::json to_json(const PatternInstance& inst) {
    return {{"kind", to_string(inst.kind)},
            {"key", inst.key},
            {"nodes", std::vector<std::string>(inst.elements.nodes.begin(), inst.elements.nodes.end())},
            {"links", std::vector<std::string>(inst.elements.links.begin(), inst.elements.links.end())},
            {"facts", to_json(inst.facts)}};
}

inline nlohmann::json to_json(const MiningResult& r) {
    nlohmann::json instances = nlohmann::json::array();
    for (const auto& i : r.instances) instances.push_back(to_json(i));
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [k, c] : r.counts) counts[to_string(k)] = c;
    return {{"instances", instances}, {"counts", counts}};
}

}  // namespace patex
