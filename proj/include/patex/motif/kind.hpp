#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace patex {

enum class MotifKind {
    StrongLink,
    SelfLink,
    ParallelLinks,
    IsolatedNode,
    Hub,
    BridgeNode,
    Fan,
    Chain,
    Clique,
    Cluster,
    Biclique,
    ReciprocalLink,
    RecurringLink,
};

inline constexpr std::array<MotifKind, 13> kAllMotifKinds = {
    MotifKind::StrongLink, MotifKind::SelfLink, MotifKind::ParallelLinks, MotifKind::IsolatedNode,
    MotifKind::Hub,        MotifKind::BridgeNode, MotifKind::Fan,         MotifKind::Chain,
    MotifKind::Clique,     MotifKind::Cluster,  MotifKind::Biclique,      MotifKind::ReciprocalLink,
    MotifKind::RecurringLink,
};

struct MotifKindInfo {
    MotifKind kind;
    std::string_view name;      // wire name
    std::string_view singular;  // prose
    std::string_view plural;
    bool temporal;
    /// Predicate depends on degrees inside the scope, so bottom-up mining
    /// evaluates it on the selection rather than on the whole network.
    bool scope_local;
};

inline constexpr std::array<MotifKindInfo, 13> kMotifKindInfo = {{
    {MotifKind::StrongLink, "StrongLink", "strong link", "strong links", false, false},
    {MotifKind::SelfLink, "SelfLink", "self-link", "self-links", false, false},
    {MotifKind::ParallelLinks, "ParallelLinks", "group of parallel links", "groups of parallel links", false, false},
    {MotifKind::IsolatedNode, "IsolatedNode", "isolated node", "isolated nodes", false, true},
    {MotifKind::Hub, "Hub", "hub", "hubs", false, false},
    {MotifKind::BridgeNode, "BridgeNode", "bridge node", "bridge nodes", false, false},
    {MotifKind::Fan, "Fan", "fan", "fans", false, true},
    {MotifKind::Chain, "Chain", "chain", "chains", false, true},
    {MotifKind::Clique, "Clique", "clique", "cliques", false, false},
    {MotifKind::Cluster, "Cluster", "cluster", "clusters", false, false},
    {MotifKind::Biclique, "Biclique", "biclique", "bicliques", false, false},
    {MotifKind::ReciprocalLink, "ReciprocalLink", "reciprocal link", "reciprocal links", true, false},
    {MotifKind::RecurringLink, "RecurringLink", "recurring link", "recurring links", true, false},
}};

inline constexpr const MotifKindInfo& info(MotifKind k) { return kMotifKindInfo[static_cast<std::size_t>(k)]; }

inline std::string to_string(MotifKind k) { return std::string(info(k).name); }

inline std::optional<MotifKind> parse_motif_kind(std::string_view name) {
    for (const auto& i : kMotifKindInfo)
        if (i.name == name) return i.kind;
    return std::nullopt;
}

}  // namespace patex
