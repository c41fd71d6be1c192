#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "patex/motif/instance.hpp"
#include "patex/motif/mine.hpp"

namespace patex {

enum class MappingCase { Artifact, OneToOne, Confuser };

inline std::string to_string(MappingCase c) {
    switch (c) {
        case MappingCase::Artifact: return "Artifact";
        case MappingCase::OneToOne: return "OneToOne";
        case MappingCase::Confuser: return "Confuser";
    }
    return {};
}

inline MappingCase classify_mapping(std::size_t instances) {
    if (instances == 0) return MappingCase::Artifact;
    return instances == 1 ? MappingCase::OneToOne : MappingCase::Confuser;
}

inline MappingCase classify_mapping(const MiningResult& r) { return classify_mapping(r.total()); }

inline const std::string kArtifactMessage =
    "No network pattern was found in your selection. The visual pattern you selected is most likely an artifact of "
    "the layout or the encoding.";

struct SelectorSummary {
    std::size_t total = 0;
    std::vector<std::pair<MotifKind, std::size_t>> per_kind;
    std::string message;
};

inline std::string count_phrase(MotifKind k, std::size_t n) {
    return std::to_string(n) + " " + std::string(n == 1 ? info(k).singular : info(k).plural);
}

/// "Your selection has N network pattern(s), including a, b and c." with kinds
/// by count descending, then by name.
inline SelectorSummary selector_summary(const MiningResult& r) {
    SelectorSummary s;
    for (const auto& [kind, n] : r.counts)
        if (n > 0) {
            s.per_kind.emplace_back(kind, n);
            s.total += n;
        }
    std::sort(s.per_kind.begin(), s.per_kind.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return info(a.first).singular < info(b.first).singular;
    });
    if (s.total == 0) {
        s.message = kArtifactMessage;
        return s;
    }
    std::string list;
    for (std::size_t i = 0; i < s.per_kind.size(); ++i) {
        if (i > 0) list += i + 1 == s.per_kind.size() ? " and " : ", ";
        list += count_phrase(s.per_kind[i].first, s.per_kind[i].second);
    }
    s.message = "Your selection has " + std::to_string(s.total) + " network pattern" + (s.total == 1 ? "" : "s") +
                ", including " + list + ".";
    return s;
}

/// Other instances of `kind` in a top-down result, largest first. Ties go by
/// salience key; `exclude_key` is dropped.
inline std::vector<PatternInstance> related_instances(MotifKind kind, const MiningResult& top_down,
                                                      const std::string& exclude_key) {
    std::vector<PatternInstance> out;
    for (const auto& inst : top_down.instances)
        if (inst.kind == kind && inst.key != exclude_key) out.push_back(inst);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.elements.nodes.size() != b.elements.nodes.size()) return a.elements.nodes.size() > b.elements.nodes.size();
        return a.key < b.key;
    });
    return out;
}

inline std::vector<PatternInstance> related_instances(MotifKind kind, const Network& net, const PatternInstance& exclude) {
    return related_instances(kind, mine_top_down(net), exclude.key);
}

inline nlohmann::json to_json(const SelectorSummary& s) {
    nlohmann::json kinds = nlohmann::json::array();
    for (const auto& [k, n] : s.per_kind) kinds.push_back({{"kind", to_string(k)}, {"count", n}});
    return {{"total", s.total}, {"per_kind", std::move(kinds)}, {"message", s.message}};
}

}  // namespace patex
