#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <vector>

#include "patex/graph/subgraph.hpp"
#include "patex/motif/detectors.hpp"

namespace patex {

enum class MiningMode { BottomUp, TopDown };

struct MiningOptions {
    Heuristics heuristics;
    /// Share of an instance's elements (nodes and links together) that must
    /// lie inside the selection for bottom-up mining to report it.
    double containment = 0.8;
};

namespace detail {

inline bool node_subset(const PatternInstance& a, const PatternInstance& b) {
    return std::includes(b.elements.nodes.begin(), b.elements.nodes.end(), a.elements.nodes.begin(),
                         a.elements.nodes.end());
}

/// Sorts, drops exact duplicates, and drops Clique instances whose nodes sit
/// inside another Clique (a density-1 community is never a new clique).
inline MiningResult assemble(std::vector<PatternInstance> all) {
    std::sort(all.begin(), all.end(), instance_less);
    all.erase(std::unique(all.begin(), all.end(),
                          [](const auto& a, const auto& b) { return a.kind == b.kind && a.elements == b.elements; }),
              all.end());

    std::vector<const PatternInstance*> cliques;
    for (const auto& i : all)
        if (i.kind == MotifKind::Clique) cliques.push_back(&i);

    MiningResult r;
    for (auto& inst : all) {
        if (inst.kind == MotifKind::Clique) {
            bool covered = std::any_of(cliques.begin(), cliques.end(), [&](const PatternInstance* other) {
                return other != &inst && other->elements.nodes.size() > inst.elements.nodes.size() &&
                       node_subset(inst, *other);
            });
            if (covered) continue;
        }
        ++r.counts[inst.kind];
        r.instances.push_back(std::move(inst));
    }
    return r;
}

template <typename Out>
void append(Out& out, std::vector<PatternInstance> more) {
    std::move(more.begin(), more.end(), std::back_inserter(out));
}

}  // namespace detail

/// Every detector over the scope, deduplicated and in canonical order.
inline MiningResult detect_all(const Scope& scope, const Heuristics& h = {}) {
    std::vector<PatternInstance> all;
    detail::append(all, detect_link_motifs(scope, h));
    detail::append(all, detect_node_motifs(scope, h));
    detail::append(all, detect_fans(scope, h));
    detail::append(all, detect_chains(scope, h));
    detail::append(all, detect_cliques(scope, h));
    detail::append(all, detect_clusters(scope, h));
    detail::append(all, detect_bicliques(scope, h));
    if (scope.network->temporal()) detail::append(all, detect_temporal_motifs(scope, h));
    return detail::assemble(std::move(all));
}

inline MiningResult mine_top_down(const Network& net, const MiningOptions& options = {}) {
    return detect_all(Scope::whole(net), options.heuristics);
}

/// Share of the instance's elements inside the subgraph.
inline double containment(const PatternInstance& inst, const Subgraph& sub) {
    if (inst.elements.empty()) return 0.0;
    std::size_t inside = 0;
    for (const auto& n : inst.elements.nodes) inside += sub.elements().nodes.count(n);
    for (const auto& l : inst.elements.links) inside += sub.elements().links.count(l);
    return static_cast<double>(inside) / static_cast<double>(inst.elements.size());
}

/// Patterns explaining a selection. Kinds with a network-wide predicate come
/// from top-down mining and qualify when enough of their elements lie in the
/// selection; degree-local kinds (Fan, Chain, IsolatedNode) are detected on
/// the selection itself. `top_down` may pass a cached top-down result.
inline MiningResult mine_bottom_up(const Subgraph& selection, const MiningOptions& options = {},
                                   const MiningResult* top_down = nullptr) {
    std::optional<MiningResult> computed;
    if (!top_down) top_down = &computed.emplace(mine_top_down(selection.parent(), options));

    std::vector<PatternInstance> all;
    for (const auto& inst : top_down->instances) {
        if (info(inst.kind).scope_local) continue;
        if (containment(inst, selection) + 1e-12 >= options.containment) all.push_back(inst);
    }
    const Scope scope = Scope::of(selection);
    const Heuristics& h = options.heuristics;
    for (auto& inst : detect_node_motifs(scope, h))
        if (inst.kind == MotifKind::IsolatedNode) all.push_back(std::move(inst));
    detail::append(all, detect_fans(scope, h));
    detail::append(all, detect_chains(scope, h));
    return detail::assemble(std::move(all));
}

inline MiningResult mine(const Network& net, MiningMode /*mode*/, const MiningOptions& options = {}) {
    // Bottom-up over the whole network selects everything, which is top-down.
    return mine_top_down(net, options);
}

inline MiningResult mine(const Subgraph& sub, MiningMode mode, const MiningOptions& options = {}) {
    if (mode == MiningMode::BottomUp) return mine_bottom_up(sub, options);
    return detect_all(Scope::of(sub), options.heuristics);
}

}  // namespace patex
