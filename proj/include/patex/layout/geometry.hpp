#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "patex/errors.hpp"
#include "patex/graph/network.hpp"
#include "patex/layout/seriation.hpp"
#include "patex/layout/stress.hpp"

namespace patex {

enum class Viz { NodeLink, Matrix, TimeArcs };

inline constexpr std::array<Viz, 3> kAllViz = {Viz::NodeLink, Viz::Matrix, Viz::TimeArcs};

inline std::string to_string(Viz v) {
    switch (v) {
        case Viz::NodeLink: return "node-link";
        case Viz::Matrix: return "matrix";
        case Viz::TimeArcs: return "time-arcs";
    }
    return {};
}

inline std::optional<Viz> parse_viz(std::string_view s) {
    for (Viz v : kAllViz)
        if (to_string(v) == s) return v;
    return std::nullopt;
}

/// Drawing area; origin top-left, y grows downward.
struct Canvas {
    double width = 800.0;
    double height = 600.0;
};

enum class ElementKind { Node, Link };

struct ElementRef {
    ElementKind kind = ElementKind::Node;
    std::string id;

    bool operator==(const ElementRef&) const = default;
};

struct Disc {
    Point center;
    double radius = 0.0;
};

/// Axis-aligned rectangle.
struct Rect {
    Point min;
    Point max;
};

/// Stroked line; `half_width` is half the drawn thickness.
struct Segment {
    Point a;
    Point b;
    double half_width = 0.5;
};

/// Circular arc. Angles in degrees, measured counter-clockwise as seen on
/// screen: the point at angle θ is (cx + r·cos θ, cy − r·sin θ). `path` is the
/// sampled polyline used for hit testing, widened by `tolerance`.
struct Arc {
    Point center;
    double radius = 0.0;
    double start = 0.0;
    double sweep = 0.0;
    std::vector<Point> path;
    double tolerance = 3.0;
};

using Shape = std::variant<Disc, Rect, Segment, Arc>;

struct Channels {
    std::optional<double> thickness;
    std::optional<double> shade;  // 0 = white, 1 = black
    std::optional<std::string> color;
};

struct Mark {
    std::string id;
    ElementRef element;
    std::string role;
    Shape shape;
    Channels channels;
};

struct MarkGeometry {
    Viz viz = Viz::NodeLink;
    Canvas canvas;
    std::vector<Mark> marks;
};

/// Stroke width for a link of weight w.
inline double link_thickness(double weight) { return 1.0 + 2.0 * std::log1p(weight); }

/// Cell darkness for a link of weight w, in [0, 1).
inline double link_shade(double weight) { return 1.0 - 1.0 / (1.0 + std::log1p(weight)); }

inline constexpr double kArcTolerance = 3.0;
inline constexpr double kLabelGutter = 80.0;
inline constexpr double kCanvasMargin = 20.0;

namespace detail {

inline constexpr double kPi = 3.14159265358979323846;

inline Point arc_point(Point c, double r, double degrees) {
    double t = degrees * kPi / 180.0;
    return {c.x + r * std::cos(t), c.y - r * std::sin(t)};
}

inline Arc make_arc(Point center, double radius, double start, double sweep) {
    Arc a{center, radius, start, sweep, {}, kArcTolerance};
    auto steps = static_cast<std::size_t>(std::max(8.0, std::ceil(std::abs(sweep) / 5.0)));
    a.path.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i)
        a.path.push_back(arc_point(center, radius, start + sweep * static_cast<double>(i) / static_cast<double>(steps)));
    return a;
}

inline Channels link_channels(const Link& l) { return {link_thickness(l.weight), std::nullopt, l.type}; }

inline MarkGeometry node_link(const Network& net, const NodeCoordinates& coords, Canvas canvas) {
    MarkGeometry g{Viz::NodeLink, canvas, {}};
    const auto& pos = coords.positions;
    double minx = pos[0].x, maxx = pos[0].x, miny = pos[0].y, maxy = pos[0].y;
    for (const auto& p : pos) {
        minx = std::min(minx, p.x), maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y), maxy = std::max(maxy, p.y);
    }
    const double r = coords.node_radius;
    const double bw = maxx - minx + 2 * r, bh = maxy - miny + 2 * r;
    double scale = 1.0;
    if (bw > 0) scale = std::min(scale, (canvas.width - 2 * kCanvasMargin) / bw);
    if (bh > 0) scale = std::min(scale, (canvas.height - 2 * kCanvasMargin) / bh);
    const Point mid{(minx + maxx) / 2, (miny + maxy) / 2};
    std::vector<Point> at(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i)
        at[i] = {canvas.width / 2 + (pos[i].x - mid.x) * scale, canvas.height / 2 + (pos[i].y - mid.y) * scale};
    const double radius = r * scale;

    for (std::size_t i = 0; i < net.node_count(); ++i)
        g.marks.push_back({"node:" + net.nodes()[i].id, {ElementKind::Node, net.nodes()[i].id}, "node",
                           Disc{at[i], radius}, {}});

    // parallel links fan out sideways; self links become loops above the node
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> groups;
    for (std::size_t l = 0; l < net.link_count(); ++l) groups[std::minmax(net.endpoints(l).first, net.endpoints(l).second)].push_back(l);
    for (const auto& [pair, links] : groups) {
        const auto [u, v] = pair;
        for (std::size_t k = 0; k < links.size(); ++k) {
            const Link& link = net.links()[links[k]];
            Channels ch = link_channels(link);
            ElementRef ref{ElementKind::Link, link.id};
            if (u == v) {
                double loop = radius * (1.2 + 0.5 * static_cast<double>(k)) + 2.0;
                g.marks.push_back({"link:" + link.id, ref, "loop",
                                   make_arc({at[u].x, at[u].y - loop}, loop, 0.0, 360.0), ch});
                continue;
            }
            double dx = at[v].x - at[u].x, dy = at[v].y - at[u].y;
            double len = std::hypot(dx, dy);
            double off = (static_cast<double>(k) - static_cast<double>(links.size() - 1) / 2.0) * 4.0;
            double ox = len > 0 ? -dy / len * off : 0.0, oy = len > 0 ? dx / len * off : off;
            auto [s, t] = net.endpoints(links[k]);
            g.marks.push_back({"link:" + link.id, ref, "link",
                               Segment{{at[s].x + ox, at[s].y + oy}, {at[t].x + ox, at[t].y + oy}, *ch.thickness / 2},
                               ch});
        }
    }
    return g;
}

inline MarkGeometry matrix(const Network& net, const NodeOrdering& order, Canvas canvas) {
    MarkGeometry g{Viz::Matrix, canvas, {}};
    const std::size_t n = net.node_count();
    const double gutter = std::min({kLabelGutter, canvas.width / 4, canvas.height / 4});
    const double cell = std::min((canvas.width - gutter) / static_cast<double>(n),
                                 (canvas.height - gutter) / static_cast<double>(n));
    const double end = gutter + cell * static_cast<double>(n);

    // row and column bands span label gutter and grid
    for (std::size_t k = 0; k < n; ++k) {
        const Node& node = net.nodes()[order.node_at(k)];
        double lo = gutter + cell * static_cast<double>(k);
        g.marks.push_back({"row:" + node.id, {ElementKind::Node, node.id}, "row", Rect{{0, lo}, {end, lo + cell}}, {}});
        g.marks.push_back({"col:" + node.id, {ElementKind::Node, node.id}, "col", Rect{{lo, 0}, {lo + cell, end}}, {}});
    }

    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> cells;
    for (std::size_t l = 0; l < net.link_count(); ++l) {
        auto [s, t] = net.endpoints(l);
        std::size_t r = order.position(s), c = order.position(t);
        cells[{r, c}].push_back(l);
        if (!net.directed() && r != c) cells[{c, r}].push_back(l);
    }
    for (const auto& [rc, links] : cells) {
        const auto [r, c] = rc;
        const double x = gutter + cell * static_cast<double>(c);
        const double y = gutter + cell * static_cast<double>(r);
        const double slice = cell / static_cast<double>(links.size());
        for (std::size_t k = 0; k < links.size(); ++k) {
            const Link& link = net.links()[links[k]];
            bool mirror = order.position(net.endpoints(links[k]).first) != r;
            g.marks.push_back({"cell:" + link.id + (mirror ? ":mirror" : ""),
                               {ElementKind::Link, link.id},
                               r == c ? "diagonal" : "cell",
                               Rect{{x, y + slice * static_cast<double>(k)}, {x + cell, y + slice * static_cast<double>(k + 1)}},
                               {std::nullopt, link_shade(link.weight), link.type}});
        }
    }
    return g;
}

inline MarkGeometry time_arcs(const Network& net, const NodeOrdering& order, Canvas canvas) {
    MarkGeometry g{Viz::TimeArcs, canvas, {}};
    const std::size_t n = net.node_count();
    std::vector<std::int64_t> times;
    for (const auto& l : net.links()) times.push_back(*l.time);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    const double gutter = std::min(kLabelGutter, canvas.width / 4);
    const double row = canvas.height / static_cast<double>(n);
    const double col = (canvas.width - gutter) / static_cast<double>(std::max<std::size_t>(times.size(), 1));
    const double dot = std::min({4.0, 0.4 * row, 0.4 * col});
    auto y_of = [&](std::size_t node) { return row * (static_cast<double>(order.position(node)) + 0.5); };
    auto x_of = [&](std::int64_t t) {
        auto k = std::lower_bound(times.begin(), times.end(), t) - times.begin();
        return gutter + col * (static_cast<double>(k) + 0.5);
    };

    for (std::size_t k = 0; k < n; ++k) {
        const Node& node = net.nodes()[order.node_at(k)];
        double lo = row * static_cast<double>(k);
        g.marks.push_back({"row:" + node.id, {ElementKind::Node, node.id}, "row", Rect{{0, lo}, {gutter, lo + row}}, {}});
    }
    for (std::size_t l = 0; l < net.link_count(); ++l) {
        const Link& link = net.links()[l];
        auto [s, t] = net.endpoints(l);
        const double x = x_of(*link.time), ys = y_of(s), yt = y_of(t);
        g.marks.push_back({"src:" + link.id, {ElementKind::Node, link.source}, "source", Disc{{x, ys}, dot}, {}});
        g.marks.push_back({"tgt:" + link.id, {ElementKind::Node, link.target}, "target", Disc{{x, yt}, dot}, {}});
        Arc arc;
        if (s == t) {
            double loop = dot * 1.5;
            arc = make_arc({x - loop, ys}, loop, 0.0, 360.0);
        } else {
            // counter-clockwise on screen: bulges left going down, right going up
            arc = make_arc({x, (ys + yt) / 2}, std::abs(yt - ys) / 2, ys < yt ? 90.0 : 270.0, 180.0);
        }
        g.marks.push_back({"arc:" + link.id, {ElementKind::Link, link.id}, "arc", std::move(arc), link_channels(link)});
    }
    return g;
}

}  // namespace detail

/// Marks for one visualization. Matrix and time-arcs need `ordering`,
/// node-link needs `coordinates`; time-arcs needs a temporal network.
inline MarkGeometry mark_geometry(const Network& net, Viz viz, const NodeOrdering* ordering,
                                  const NodeCoordinates* coordinates, Canvas canvas = {}) {
    switch (viz) {
        case Viz::NodeLink:
            if (!coordinates || coordinates->positions.size() != net.node_count())
                throw MissingCoordinates("node-link view needs one position per node");
            return detail::node_link(net, *coordinates, canvas);
        case Viz::Matrix:
            if (!ordering || ordering->size() != net.node_count())
                throw MissingOrdering("matrix view needs a node ordering");
            return detail::matrix(net, *ordering, canvas);
        case Viz::TimeArcs:
            if (!net.temporal()) throw NotTemporal("time-arcs view needs a temporal network");
            if (!ordering || ordering->size() != net.node_count())
                throw MissingOrdering("time-arcs view needs a node ordering");
            return detail::time_arcs(net, *ordering, canvas);
    }
    return {};
}

inline nlohmann::json to_json(const Point& p) { return {p.x, p.y}; }

inline nlohmann::json to_json(const Mark& m) {
    nlohmann::json params;
    std::string shape;
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disc>) {
                shape = "disc";
                params = {{"cx", s.center.x}, {"cy", s.center.y}, {"r", s.radius}};
            } else if constexpr (std::is_same_v<T, Rect>) {
                shape = "rect";
                params = {{"x", s.min.x}, {"y", s.min.y}, {"w", s.max.x - s.min.x}, {"h", s.max.y - s.min.y}};
            } else if constexpr (std::is_same_v<T, Segment>) {
                shape = "segment";
                params = {{"x1", s.a.x}, {"y1", s.a.y}, {"x2", s.b.x}, {"y2", s.b.y}};
            } else {
                shape = "arc";
                nlohmann::json path = nlohmann::json::array();
                for (const auto& p : s.path) path.push_back(to_json(p));
                params = {{"cx", s.center.x}, {"cy", s.center.y}, {"r", s.radius},
                          {"start", s.start}, {"sweep", s.sweep}, {"path", std::move(path)}};
            }
        },
        m.shape);
    nlohmann::json channels = nlohmann::json::object();
    if (m.channels.thickness) channels["thickness"] = *m.channels.thickness;
    if (m.channels.shade) channels["shade"] = *m.channels.shade;
    if (m.channels.color) channels["color"] = *m.channels.color;
    return {{"id", m.id},
            {"element", {{"kind", m.element.kind == ElementKind::Node ? "node" : "link"}, {"id", m.element.id}}},
            {"role", m.role},
            {"shape", shape},
            {"params", std::move(params)},
            {"channels", std::move(channels)}};
}

inline nlohmann::json to_json(const MarkGeometry& g) {
    nlohmann::json marks = nlohmann::json::array();
    for (const auto& m : g.marks) marks.push_back(to_json(m));
    return {{"viz", to_string(g.viz)}, {"canvas", {{"w", g.canvas.width}, {"h", g.canvas.height}}}, {"marks", std::move(marks)}};
}

}  // namespace patex
