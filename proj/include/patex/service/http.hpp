#pragma once

#include <optional>
#include <string>

#include <httplib.h>

#include "patex/service/service.hpp"

namespace patex {

namespace detail {

inline void reply(httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
}

inline std::optional<Canvas> canvas_param(const httplib::Request& req) {
    if (!req.has_param("w") && !req.has_param("h")) return std::nullopt;
    Canvas c;
    try {
        if (req.has_param("w")) c.width = std::stod(req.get_param_value("w"));
        if (req.has_param("h")) c.height = std::stod(req.get_param_value("h"));
    } catch (const std::exception&) {
        c.width = c.height = -1;  // rejected by the handler
    }
    return c;
}

}  // namespace detail

/// Registers the /api/v1 routes of `service` on `server`.
inline void mount(httplib::Server& server, Service& service) {
    server.Post("/api/v1/networks", [&](const httplib::Request& req, httplib::Response& res) {
        std::string format = req.has_param("format") ? req.get_param_value("format") : "json";
        bool directed = req.has_param("directed") && req.get_param_value("directed") == "true";
        detail::reply(res, service.upload(req.body, format, directed));
    });
    server.Get(R"(/api/v1/networks/([^/]+)/views/([^/]+))", [&](const httplib::Request& req, httplib::Response& res) {
        detail::reply(res, service.view(req.matches[1], req.matches[2], detail::canvas_param(req)));
    });
    server.Post(R"(/api/v1/networks/([^/]+)/selection)", [&](const httplib::Request& req, httplib::Response& res) {
        detail::reply(res, service.selection(req.matches[1], req.body));
    });
    server.Get(R"(/api/v1/networks/([^/]+)/patterns)", [&](const httplib::Request& req, httplib::Response& res) {
        detail::reply(res, service.patterns(req.matches[1]));
    });
    server.Get(R"(/api/v1/networks/([^/]+)/explanations/([^/]+))", [&](const httplib::Request& req, httplib::Response& res) {
        std::string viz = req.has_param("viz") ? req.get_param_value("viz") : "node-link";
        detail::reply(res, service.explanation(req.matches[1], req.matches[2], viz));
    });
    server.Get("/api/v1/repository/cards", [&](const httplib::Request&, httplib::Response& res) {
        detail::reply(res, service.cards());
    });
    server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
        if (!res.body.empty()) return;
        res.set_content(nlohmann::json{{"code", res.status == 404 ? "NotFound" : "HttpError"},
                                       {"message", "no route for " + req.method + " " + req.path}}
                            .dump(),
                        "application/json");
    });
}

}  // namespace patex
