#pragma once

#include <charconv>
#include <cmath>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "patex/graph/network.hpp"

namespace patex {

enum class NetworkFormat { Json, Csv };

inline std::optional<NetworkFormat> parse_network_format(std::string_view s) {
    if (s == "json") return NetworkFormat::Json;
    if (s == "csv") return NetworkFormat::Csv;
    return std::nullopt;
}

/// Picks the format from a file extension; json otherwise.
inline NetworkFormat format_for_path(std::string_view path) {
    auto dot = path.rfind('.');
    if (dot != std::string_view::npos && path.substr(dot) == ".csv") return NetworkFormat::Csv;
    return NetworkFormat::Json;
}

struct LoadOptions {
    /// csv carries no header, so direction comes from here. Ignored for json,
    /// which states it in the document.
    bool directed = false;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

/// Splits one csv row on commas; double-quoted fields may contain commas and
/// "" escapes.
inline std::vector<std::string> split_csv_row(std::string_view row, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < row.size(); ++i) {
        char c = row[i];
        if (quoted) {
            if (c == '"' && i + 1 < row.size() && row[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"' && trim(cur).empty()) {
            cur.clear();
            quoted = was_quoted = true;
        } else if (c == ',') {
            fields.push_back(was_quoted ? cur : std::string(trim(cur)));
            cur.clear();
            was_quoted = false;
        } else {
            cur += c;
        }
    }
    if (quoted) throw ParseError("line " + std::to_string(line_no) + ": unterminated quote");
    fields.push_back(was_quoted ? cur : std::string(trim(cur)));
    return fields;
}

inline double parse_weight(std::string_view s, std::size_t line_no) {
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), w);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(w))
        throw ParseError("line " + std::to_string(line_no) + ": bad weight '" + std::string(s) + "'");
    return w;
}

inline std::int64_t parse_time(std::string_view s, const std::string& where) {
    std::int64_t t = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), t);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(where + ": bad timestamp '" + std::string(s) + "'");
    return t;
}

inline Network load_csv(std::istream& in, const LoadOptions& options) {
    std::vector<Node> nodes;
    std::unordered_set<std::string> seen;
    std::vector<Link> links;
    auto add_node = [&](const std::string& id) {
        if (seen.insert(id).second) nodes.push_back({id, id});
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view row = trim(line);
        if (row.empty() || row.front() == '#') continue;
        auto f = split_csv_row(row, line_no);
        if (f.size() < 2 || f.size() > 5)
            throw ParseError("line " + std::to_string(line_no) + ": expected 2 to 5 fields, got " +
                             std::to_string(f.size()));
        if (f[0].empty() || f[1].empty())
            throw ParseError("line " + std::to_string(line_no) + ": empty endpoint");
        Link l;
        l.id = "e" + std::to_string(links.size());
        l.source = f[0];
        l.target = f[1];
        if (f.size() > 2 && !f[2].empty()) l.weight = parse_weight(f[2], line_no);
        if (f.size() > 3) l.type = f[3];
        if (f.size() > 4 && !f[4].empty()) l.time = parse_time(f[4], "line " + std::to_string(line_no));
        add_node(l.source);
        add_node(l.target);
        links.push_back(std::move(l));
    }
    return Network::create(std::move(nodes), std::move(links), options.directed);
}

inline std::string json_string(const nlohmann::json& j, const char* key, const std::string& where,
                               const std::string& fallback = {}) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return fallback;
    if (it->is_string()) return it->get<std::string>();
    if (it->is_number_integer()) return std::to_string(it->get<std::int64_t>());
    throw ParseError(where + ": field '" + key + "' must be a string");
}

inline Network load_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed json: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("network document must be a json object");

    const auto& jnodes = doc.contains("nodes") ? doc["nodes"] : nlohmann::json::array();
    const auto& jlinks = doc.contains("links") ? doc["links"] : nlohmann::json::array();
    if (!jnodes.is_array() || !jlinks.is_array()) throw ParseError("'nodes' and 'links' must be arrays");

    std::vector<Node> nodes;
    for (std::size_t i = 0; i < jnodes.size(); ++i) {
        const auto& jn = jnodes[i];
        std::string where = "node " + std::to_string(i);
        if (!jn.is_object()) throw ParseError(where + " is not an object");
        Node n;
        n.id = json_string(jn, "id", where);
        if (n.id.empty()) throw ParseError(where + " has no id");
        n.label = json_string(jn, "label", where, n.id);
        nodes.push_back(std::move(n));
    }

    std::vector<Link> links;
    for (std::size_t i = 0; i < jlinks.size(); ++i) {
        const auto& jl = jlinks[i];
        std::string where = "link " + std::to_string(i);
        if (!jl.is_object()) throw ParseError(where + " is not an object");
        Link l;
        l.id = json_string(jl, "id", where, "e" + std::to_string(i));
        l.source = json_string(jl, "source", where);
        l.target = json_string(jl, "target", where);
        if (l.source.empty() || l.target.empty()) throw ParseError(where + " lacks source or target");
        if (auto w = jl.find("weight"); w != jl.end() && !w->is_null()) {
            if (!w->is_number()) throw ParseError(where + ": weight must be a number");
            l.weight = w->get<double>();
        }
        l.type = json_string(jl, "type", where);
        if (auto t = jl.find("time"); t != jl.end() && !t->is_null()) {
            if (t->is_number_integer()) {
                l.time = t->get<std::int64_t>();
            } else if (t->is_number_float() && std::floor(t->get<double>()) == t->get<double>()) {
                l.time = static_cast<std::int64_t>(t->get<double>());
            } else if (t->is_string()) {
                l.time = parse_time(t->get<std::string>(), where);
            } else {
                throw ParseError(where + ": time must be an integer");
            }
        }
        links.push_back(std::move(l));
    }

    bool directed = false;
    if (auto d = doc.find("directed"); d != doc.end()) {
        if (!d->is_boolean()) throw ParseError("'directed' must be a boolean");
        directed = d->get<bool>();
    }
    std::optional<bool> temporal;
    if (auto t = doc.find("temporal"); t != doc.end()) {
        if (!t->is_boolean()) throw ParseError("'temporal' must be a boolean");
        temporal = t->get<bool>();
    }
    return Network::create(std::move(nodes), std::move(links), directed, temporal);
}

}  // namespace detail

/// Reads a network in the given format. Throws ParseError, DanglingEndpoint
/// or EmptyNetwork.
inline Network load_network(std::istream& in, NetworkFormat format, const LoadOptions& options = {}) {
    return format == NetworkFormat::Csv ? detail::load_csv(in, options) : detail::load_json(in);
}

inline Network load_network(std::string_view text, NetworkFormat format, const LoadOptions& options = {}) {
    std::istringstream in{std::string(text)};
    return load_network(in, format, options);
}

inline nlohmann::json to_json(const Network& net) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : net.nodes()) nodes.push_back({{"id", n.id}, {"label", n.label}});
    nlohmann::json links = nlohmann::json::array();
    for (const auto& l : net.links()) {
        nlohmann::json jl = {{"id", l.id},         {"source", l.source}, {"target", l.target},
                             {"weight", l.weight}, {"type", l.type}};
        if (l.time) jl["time"] = *l.time;
        links.push_back(std::move(jl));
    }
    return {{"directed", net.directed()}, {"temporal", net.temporal()}, {"nodes", nodes}, {"links", links}};
}

}  // namespace patex
