#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "patex/explain/mapping.hpp"
#include "patex/explain/repository.hpp"
#include "patex/graph/io.hpp"
#include "patex/graph/subgraph.hpp"
#include "patex/service/store.hpp"

namespace patex {

/// Status code plus serialized json body.
struct Response {
    int status = 200;
    std::string body;

    nlohmann::json json() const { return nlohmann::json::parse(body); }
};

inline Response error_response(int status, const std::string& code, const std::string& message) {
    return {status, nlohmann::json{{"code", code}, {"message", message}}.dump()};
}

/// Status for an engine error: bad input is 400, a view or card that does
/// not exist for this network is 409.
inline int status_for(const Error& e) {
    if (dynamic_cast<const NotTemporal*>(&e) || dynamic_cast<const UnknownPair*>(&e)) return 409;
    return 400;
}

inline nlohmann::json to_json(const ElementSet& e) { return {{"nodes", e.nodes}, {"links", e.links}}; }

/// Request handlers behind the http routes, callable without a socket. Every
/// handler maps engine errors to {code, message} bodies.
class Service {
public:
    explicit Service(PatternRepository repo) : repo_(std::move(repo)) {}

    const PatternRepository& repository() const { return repo_; }
    SessionStore& store() { return store_; }

    /// POST /api/v1/networks?format=json|csv
    Response upload(const std::string& body, const std::string& format = "json", bool directed = false) {
        return guard([&] {
            auto fmt = parse_network_format(format);
            if (!fmt) return error_response(400, "BadRequest", "unknown format '" + format + "'");
            auto entry = store_.add(load_network(body, *fmt, LoadOptions{directed}));
            const Network& net = entry->network();
            nlohmann::json out = {{"id", entry->id()},
                                  {"summary",
                                   {{"nodes", net.node_count()},
                                    {"links", net.link_count()},
                                    {"directed", net.directed()},
                                    {"temporal", net.temporal()}}}};
            return Response{201, out.dump()};
        });
    }

    /// GET /api/v1/networks/{id}/views/{viz}
    Response view(const std::string& id, const std::string& viz_name, std::optional<Canvas> canvas = std::nullopt) {
        return guard([&] {
            auto entry = store_.find(id);
            if (!entry) return not_found("network", id);
            auto viz = parse_viz(viz_name);
            if (!viz) return error_response(400, "BadRequest", "unknown visualization '" + viz_name + "'");
            if (canvas) {
                if (!(canvas->width > 0 && canvas->height > 0))
                    return error_response(400, "BadRequest", "canvas size must be positive");
                return Response{200, to_json(entry->geometry(*viz, *canvas)).dump()};
            }
            return Response{200, entry->geometry_bytes(*viz)};
        });
    }

    /// POST /api/v1/networks/{id}/selection
    /// body: {"viz", "region": {"kind": "rectangle"|"lasso", "points": [[x, y], ...]}, "canvas"?: {"w", "h"}}
    Response selection(const std::string& id, const std::string& body) {
        return guard([&] {
            auto entry = store_.find(id);
            if (!entry) return not_found("network", id);
            nlohmann::json req;
            try {
                req = nlohmann::json::parse(body);
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(std::string("selection body: ") + e.what());
            }
            auto viz = parse_viz(req.value("viz", std::string{}));
            if (!viz) return error_response(400, "BadRequest", "selection needs a valid 'viz'");
            SelectionRegion region = parse_region(req);

            ElementSet raw;
            if (req.contains("canvas")) {
                Canvas canvas = parse_canvas(req["canvas"]);
                raw = resolve_selection(entry->geometry(*viz, canvas), region);
            } else {
                raw = entry->resolver(*viz).resolve(region);
            }
            Subgraph sub = close_selection(entry->network(), raw);
            MiningResult result = mine_bottom_up(sub, {}, &entry->top_down());
            entry->remember(result.instances);

            nlohmann::json instances = nlohmann::json::array();
            for (const auto& i : result.instances) instances.push_back(to_json(i));
            nlohmann::json out = {{"selection", to_json(sub.elements())},
                                  {"summary", to_json(selector_summary(result))},
                                  {"mapping", to_string(classify_mapping(result))},
                                  {"instances", std::move(instances)}};
            return Response{200, out.dump()};
        });
    }

    /// GET /api/v1/networks/{id}/patterns
    Response patterns(const std::string& id) {
        return guard([&] {
            auto entry = store_.find(id);
            if (!entry) return not_found("network", id);
            return Response{200, entry->top_down_bytes()};
        });
    }

    /// GET /api/v1/networks/{id}/explanations/{instance}?viz=
    Response explanation(const std::string& id, const std::string& instance, const std::string& viz_name = "node-link") {
        return guard([&] {
            auto entry = store_.find(id);
            if (!entry) return not_found("network", id);
            auto viz = parse_viz(viz_name);
            if (!viz) return error_response(400, "BadRequest", "unknown visualization '" + viz_name + "'");
            auto inst = entry->find_instance(instance);
            if (!inst) return not_found("instance", instance);
            const auto& card = repo_.get_card(inst->kind, *viz);
            nlohmann::json related = nlohmann::json::array();
            for (const auto& r : related_instances(inst->kind, entry->top_down(), inst->key)) related.push_back(to_json(r));
            nlohmann::json facts = to_json(inst->facts);
            facts["text"] = render_facts(card.facts_template, inst->facts);
            nlohmann::json out = {{"instance", to_json(*inst)},
                                  {"card", to_json(card)},
                                  {"facts", std::move(facts)},
                                  {"related", std::move(related)}};
            return Response{200, out.dump()};
        });
    }

    /// GET /api/v1/repository/cards
    Response cards() const {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& c : repo_.cards()) out.push_back(to_json(c));
        return {200, out.dump()};
    }

private:
    template <class F>
    static Response guard(F&& f) {
        try {
            return f();
        } catch (const Error& e) {
            return error_response(status_for(e), e.code(), e.what());
        }
    }

    static Response not_found(const std::string& what, const std::string& id) {
        return error_response(404, "NotFound", "unknown " + what + " '" + id + "'");
    }

    static Canvas parse_canvas(const nlohmann::json& j) {
        if (!j.is_object() || !j.contains("w") || !j.contains("h") || !j["w"].is_number() || !j["h"].is_number())
            throw ParseError("canvas needs numeric 'w' and 'h'");
        Canvas c{j["w"].get<double>(), j["h"].get<double>()};
        if (!(c.width > 0 && c.height > 0)) throw ParseError("canvas size must be positive");
        return c;
    }

    static SelectionRegion parse_region(const nlohmann::json& req) {
        if (!req.contains("region") || !req["region"].is_object()) throw ParseError("selection needs a 'region'");
        const auto& r = req["region"];
        std::string kind = r.value("kind", std::string{});
        SelectionRegion region;
        if (kind == "rectangle") region.kind = SelectionRegion::Kind::Rectangle;
        else if (kind == "lasso") region.kind = SelectionRegion::Kind::Lasso;
        else throw ParseError("region kind must be 'rectangle' or 'lasso'");
        if (!r.contains("points") || !r["points"].is_array()) throw ParseError("region needs 'points'");
        for (const auto& p : r["points"]) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
                throw ParseError("region points are [x, y] pairs");
            region.points.push_back({p[0].get<double>(), p[1].get<double>()});
        }
        return region;
    }

    PatternRepository repo_;
    SessionStore store_;
};

}  // namespace patex
