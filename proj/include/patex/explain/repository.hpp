#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "patex/errors.hpp"
#include "patex/layout/geometry.hpp"
#include "patex/motif/instance.hpp"
#include "patex/motif/kind.hpp"

#ifndef PATEX_DEFAULT_REPO
#define PATEX_DEFAULT_REPO "data/pattern_repository.json"
#endif

namespace patex {

struct Variation {
    std::string icon;
    std::string text;

    bool operator==(const Variation&) const = default;
};

/// One repository entry: a network pattern explained for one visualization.
struct ExplanationCard {
    MotifKind motif{};
    Viz viz{};
    std::string network_icon;
    std::string network_text;
    std::string facts_template;
    std::string visual_name;
    std::string visual_icon;
    std::string visual_text;
    std::array<Variation, 3> variations;

    bool operator==(const ExplanationCard&) const = default;
};

class PatternRepository {
public:
    /// Parses a json array of cards. Rejects unknown motifs or views, a
    /// variation count other than 3, temporal motifs outside time-arcs and
    /// duplicate (motif, view) pairs.
    static PatternRepository parse(const nlohmann::json& doc) {
        if (!doc.is_array()) throw ParseError("pattern repository must be a json array");
        PatternRepository repo;
        for (std::size_t i = 0; i < doc.size(); ++i) {
            const auto& c = doc[i];
            const std::string where = "card " + std::to_string(i);
            auto text = [&](const char* key) {
                if (!c.contains(key) || !c[key].is_string()) throw ParseError(where + ": missing string '" + key + "'");
                return c[key].get<std::string>();
            };
            ExplanationCard card;
            auto motif = parse_motif_kind(text("motif"));
            if (!motif) throw ParseError(where + ": unknown motif");
            auto viz = parse_viz(text("viz"));
            if (!viz) throw ParseError(where + ": unknown visualization");
            card.motif = *motif;
            card.viz = *viz;
            if (info(card.motif).temporal && card.viz != Viz::TimeArcs)
                throw ParseError(where + ": temporal motif outside time-arcs");
            card.network_icon = text("network_icon");
            card.network_text = text("network_text");
            card.facts_template = text("facts_template");
            card.visual_name = text("visual_name");
            card.visual_icon = text("visual_icon");
            card.visual_text = text("visual_text");
            if (!c.contains("variations") || !c["variations"].is_array() || c["variations"].size() != 3)
                throw ParseError(where + ": needs exactly 3 variations");
            for (std::size_t k = 0; k < 3; ++k) {
                const auto& v = c["variations"][k];
                if (!v.is_object() || !v.contains("icon") || !v.contains("text") || !v["icon"].is_string() ||
                    !v["text"].is_string())
                    throw ParseError(where + ": malformed variation");
                card.variations[k] = {v["icon"].get<std::string>(), v["text"].get<std::string>()};
            }
            if (!repo.index_.emplace(std::pair{card.motif, card.viz}, repo.cards_.size()).second)
                throw ParseError(where + ": duplicate card for " + to_string(card.motif) + "/" + to_string(card.viz));
            repo.cards_.push_back(std::move(card));
        }
        return repo;
    }

    static PatternRepository load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open pattern repository '" + path + "'");
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("pattern repository: " + std::string(e.what()));
        }
        return parse(doc);
    }

    const std::vector<ExplanationCard>& cards() const { return cards_; }

    const ExplanationCard& get_card(MotifKind motif, Viz viz) const {
        auto it = index_.find({motif, viz});
        if (it == index_.end())
            throw UnknownPair("no card for " + to_string(motif) + " in " + to_string(viz));
        return cards_[it->second];
    }

    /// Cards of one visualization in motif order.
    std::vector<ExplanationCard> for_viz(Viz viz) const {
        std::vector<ExplanationCard> out;
        for (const auto& [key, idx] : index_)
            if (key.second == viz) out.push_back(cards_[idx]);
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.motif < b.motif; });
        return out;
    }

private:
    std::vector<ExplanationCard> cards_;
    std::map<std::pair<MotifKind, Viz>, std::size_t> index_;
};

/// PATTERN_REPO if set, else `fallback` if given, else the build's data file.
inline std::string repository_path(const std::string& fallback = {}) {
    if (const char* env = std::getenv("PATTERN_REPO"); env && *env) return env;
    if (!fallback.empty()) return fallback;
    return PATEX_DEFAULT_REPO;
}

inline nlohmann::json to_json(const ExplanationCard& c) {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& v : c.variations) vars.push_back({{"icon", v.icon}, {"text", v.text}});
    return {{"motif", to_string(c.motif)},
            {"viz", to_string(c.viz)},
            {"network_icon", c.network_icon},
            {"network_text", c.network_text},
            {"facts_template", c.facts_template},
            {"visual_name", c.visual_name},
            {"visual_icon", c.visual_icon},
            {"visual_text", c.visual_text},
            {"variations", std::move(vars)}};
}

/// Fills {nodes}, {links}, {density} and {top_weight_rank} in a facts template.
inline std::string render_facts(const std::string& tmpl, const Facts& f) {
    char density[32];
    std::snprintf(density, sizeof density, "%.3f", f.density);
    std::string rank = "n/a";
    if (f.top_weight_rank) rank = std::to_string(*f.top_weight_rank) + (f.top_weight_tied ? " (tied)" : "");
    const std::map<std::string, std::string> values = {
        {"nodes", std::to_string(f.nodes)}, {"links", std::to_string(f.links)}, {"density", density}, {"top_weight_rank", rank}};
    std::string out;
    for (std::size_t i = 0; i < tmpl.size(); ++i) {
        if (tmpl[i] == '{') {
            auto close = tmpl.find('}', i);
            if (close != std::string::npos) {
                auto it = values.find(tmpl.substr(i + 1, close - i - 1));
                if (it != values.end()) {
                    out += it->second;
                    i = close;
                    continue;
                }
            }
        }
        out += tmpl[i];
    }
    return out;
}

}  // namespace patex
