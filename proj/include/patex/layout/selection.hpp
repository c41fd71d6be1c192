#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "patex/errors.hpp"
#include "patex/graph/network.hpp"
#include "patex/layout/geometry.hpp"

namespace patex {

/// Rectangle (two opposite corners) or lasso (polygon, implicitly closed).
struct SelectionRegion {
    enum class Kind { Rectangle, Lasso };
    Kind kind = Kind::Rectangle;
    std::vector<Point> points;

    static SelectionRegion rectangle(Point a, Point b) { return {Kind::Rectangle, {a, b}}; }
    static SelectionRegion lasso(std::vector<Point> pts) { return {Kind::Lasso, std::move(pts)}; }
};

/// Radius of the point pick that replaces a zero-area region.
inline constexpr double kPickRadius = 4.0;

namespace geom {

inline double cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

inline double point_segment_distance(Point p, Point a, Point b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, {a.x + t * dx, a.y + t * dy});
}

inline bool segments_cross(Point a, Point b, Point c, Point d) {
    auto side = [](double v) { return (v > 0) - (v < 0); };
    auto on = [](Point p, Point q, Point r) {
        return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
               r.y <= std::max(p.y, q.y);
    };
    int d1 = side(cross(c, d, a)), d2 = side(cross(c, d, b));
    int d3 = side(cross(a, b, c)), d4 = side(cross(a, b, d));
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    return (d1 == 0 && on(c, d, a)) || (d2 == 0 && on(c, d, b)) || (d3 == 0 && on(a, b, c)) ||
           (d4 == 0 && on(a, b, d));
}

inline double segment_distance(Point a, Point b, Point c, Point d) {
    if (segments_cross(a, b, c, d)) return 0.0;
    return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                     point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

/// Even-odd rule.
inline bool inside(const std::vector<Point>& poly, Point p) {
    bool in = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const Point& a = poly[i];
        const Point& b = poly[j];
        if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) in = !in;
    }
    return in;
}

inline double polygon_distance(const std::vector<Point>& poly, Point a, Point b) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++)
        best = std::min(best, segment_distance(a, b, poly[j], poly[i]));
    return best;
}

/// Does the polyline `path`, widened by `halo`, touch the polygon?
inline bool polyline_hits(const std::vector<Point>& poly, const std::vector<Point>& path, double halo) {
    if (path.empty()) return false;
    if (inside(poly, path.front())) return true;
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
        if (polygon_distance(poly, path[k], path[k + 1]) <= halo) return true;
    return path.size() == 1 && polygon_distance(poly, path[0], path[0]) <= halo;
}

inline std::vector<Point> corners(const Rect& r) {
    return {r.min, {r.max.x, r.min.y}, r.max, {r.min.x, r.max.y}};
}

inline bool hits(const Shape& shape, const std::vector<Point>& poly) {
    return std::visit(
        [&](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disc>) {
                return inside(poly, s.center) || polygon_distance(poly, s.center, s.center) <= s.radius;
            } else if constexpr (std::is_same_v<T, Rect>) {
                auto box = corners(s);
                if (inside(poly, box[0])) return true;
                for (const auto& p : poly)
                    if (p.x >= s.min.x && p.x <= s.max.x && p.y >= s.min.y && p.y <= s.max.y) return true;
                for (std::size_t k = 0; k < 4; ++k)
                    if (polygon_distance(poly, box[k], box[(k + 1) % 4]) == 0.0) return true;
                return false;
            } else if constexpr (std::is_same_v<T, Segment>) {
                return inside(poly, s.a) || polygon_distance(poly, s.a, s.b) <= s.half_width;
            } else {
                return polyline_hits(poly, s.path, s.tolerance);
            }
        },
        shape);
}

/// Distance from p to the drawn shape (0 inside).
inline double distance_to(const Shape& shape, Point p) {
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disc>) {
                return std::max(0.0, distance(p, s.center) - s.radius);
            } else if constexpr (std::is_same_v<T, Rect>) {
                double dx = std::max({s.min.x - p.x, 0.0, p.x - s.max.x});
                double dy = std::max({s.min.y - p.y, 0.0, p.y - s.max.y});
                return std::hypot(dx, dy);
            } else if constexpr (std::is_same_v<T, Segment>) {
                return std::max(0.0, point_segment_distance(p, s.a, s.b) - s.half_width);
            } else {
                double best = std::numeric_limits<double>::infinity();
                for (std::size_t k = 0; k + 1 < s.path.size(); ++k)
                    best = std::min(best, point_segment_distance(p, s.path[k], s.path[k + 1]));
                return std::max(0.0, best - s.tolerance);
            }
        },
        shape);
}

inline Rect bounds(const Shape& shape) {
    return std::visit(
        [](const auto& s) -> Rect {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disc>) {
                return {{s.center.x - s.radius, s.center.y - s.radius}, {s.center.x + s.radius, s.center.y + s.radius}};
            } else if constexpr (std::is_same_v<T, Rect>) {
                return s;
            } else if constexpr (std::is_same_v<T, Segment>) {
                const double h = s.half_width;
                return {{std::min(s.a.x, s.b.x) - h, std::min(s.a.y, s.b.y) - h},
                        {std::max(s.a.x, s.b.x) + h, std::max(s.a.y, s.b.y) + h}};
            } else {
                constexpr double inf = std::numeric_limits<double>::infinity();
                Rect r{{inf, inf}, {-inf, -inf}};
                for (const auto& p : s.path) {
                    r.min.x = std::min(r.min.x, p.x), r.min.y = std::min(r.min.y, p.y);
                    r.max.x = std::max(r.max.x, p.x), r.max.y = std::max(r.max.y, p.y);
                }
                r.min.x -= s.tolerance, r.min.y -= s.tolerance;
                r.max.x += s.tolerance, r.max.y += s.tolerance;
                return r;
            }
        },
        shape);
}

}  // namespace geom

/// Validated region as a polygon. A zero-area region collapses to `pick`.
struct NormalizedRegion {
    std::vector<Point> polygon;
    std::optional<Point> pick;
};

inline NormalizedRegion normalize(const SelectionRegion& region) {
    for (const auto& p : region.points)
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw DegenerateRegion("region has a non-finite coordinate");
    NormalizedRegion out;
    if (region.kind == SelectionRegion::Kind::Rectangle) {
        if (region.points.size() != 2) throw DegenerateRegion("rectangle needs exactly 2 corners");
        const Point a = region.points[0], b = region.points[1];
        Rect r{{std::min(a.x, b.x), std::min(a.y, b.y)}, {std::max(a.x, b.x), std::max(a.y, b.y)}};
        out.polygon = geom::corners(r);
    } else {
        out.polygon = region.points;
        if (out.polygon.size() > 1 && out.polygon.front() == out.polygon.back()) out.polygon.pop_back();
        if (out.polygon.size() < 3) throw DegenerateRegion("lasso needs at least 3 points");
    }
    // zero area = every vertex on one line
    const auto& poly = out.polygon;
    bool flat = true;
    for (std::size_t i = 1; i < poly.size() && flat; ++i)
        for (std::size_t j = i + 1; j < poly.size() && flat; ++j) flat = geom::cross(poly[0], poly[i], poly[j]) == 0.0;
    if (flat) {
        Point centroid;
        for (const auto& p : poly) centroid.x += p.x, centroid.y += p.y;
        centroid.x /= static_cast<double>(poly.size());
        centroid.y /= static_cast<double>(poly.size());
        out.pick = centroid;
    }
    return out;
}

/// Spatial index over the marks of one geometry. Answers which marks a region
/// touches; the geometry must outlive the resolver.
class SelectionResolver {
public:
    explicit SelectionResolver(const MarkGeometry& geometry, std::size_t cells_per_side = 32)
        : geometry_(&geometry), side_(std::max<std::size_t>(cells_per_side, 1)) {
        const auto& marks = geometry.marks;
        boxes_.reserve(marks.size());
        for (const auto& m : marks) boxes_.push_back(geom::bounds(m.shape));
        cw_ = geometry.canvas.width / static_cast<double>(side_);
        ch_ = geometry.canvas.height / static_cast<double>(side_);
        grid_.resize(side_ * side_);
        for (std::size_t i = 0; i < marks.size(); ++i) {
            auto [x0, y0, x1, y1] = cell_range(boxes_[i]);
            for (std::size_t y = y0; y <= y1; ++y)
                for (std::size_t x = x0; x <= x1; ++x) grid_[y * side_ + x].push_back(i);
        }
    }

    /// Indices of the selected marks, ascending.
    std::vector<std::size_t> selected_marks(const SelectionRegion& region) const {
        auto norm = normalize(region);
        if (norm.pick) return pick(*norm.pick);
        constexpr double inf = std::numeric_limits<double>::infinity();
        Rect box{{inf, inf}, {-inf, -inf}};
        for (const auto& p : norm.polygon) {
            box.min.x = std::min(box.min.x, p.x), box.min.y = std::min(box.min.y, p.y);
            box.max.x = std::max(box.max.x, p.x), box.max.y = std::max(box.max.y, p.y);
        }
        std::vector<std::size_t> out;
        for (std::size_t i : candidates(box))
            if (overlaps(boxes_[i], box) && geom::hits(geometry_->marks[i].shape, norm.polygon)) out.push_back(i);
        return out;
    }

    /// Elements referenced by the selected marks (not closed).
    ElementSet resolve(const SelectionRegion& region) const {
        ElementSet out;
        for (std::size_t i : selected_marks(region)) {
            const auto& ref = geometry_->marks[i].element;
            (ref.kind == ElementKind::Node ? out.nodes : out.links).insert(ref.id);
        }
        return out;
    }

private:
    struct Range {
        std::size_t x0, y0, x1, y1;
    };

    std::size_t clamp_cell(double v, double size) const {
        if (!(v > 0)) return 0;
        auto c = static_cast<std::size_t>(std::min(v / size, static_cast<double>(side_ - 1)));
        return std::min(c, side_ - 1);
    }

    Range cell_range(const Rect& r) const {
        return {clamp_cell(r.min.x, cw_), clamp_cell(r.min.y, ch_), clamp_cell(r.max.x, cw_), clamp_cell(r.max.y, ch_)};
    }

    static bool overlaps(const Rect& a, const Rect& b) {
        return a.min.x <= b.max.x && b.min.x <= a.max.x && a.min.y <= b.max.y && b.min.y <= a.max.y;
    }

    std::vector<std::size_t> candidates(const Rect& box) const {
        auto [x0, y0, x1, y1] = cell_range(box);
        std::vector<std::size_t> out;
        for (std::size_t y = y0; y <= y1; ++y)
            for (std::size_t x = x0; x <= x1; ++x) out.insert(out.end(), grid_[y * side_ + x].begin(), grid_[y * side_ + x].end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    std::vector<std::size_t> pick(Point p) const {
        Rect box{{p.x - kPickRadius, p.y - kPickRadius}, {p.x + kPickRadius, p.y + kPickRadius}};
        std::size_t best = geometry_->marks.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t i : candidates(box)) {
            double d = geom::distance_to(geometry_->marks[i].shape, p);
            if (d <= kPickRadius && d < best_d) best = i, best_d = d;
        }
        if (best == geometry_->marks.size()) return {};
        return {best};
    }

    const MarkGeometry* geometry_;
    std::size_t side_;
    double cw_ = 1.0, ch_ = 1.0;
    std::vector<Rect> boxes_;
    std::vector<std::vector<std::size_t>> grid_;
};

/// One-shot form of SelectionResolver::resolve.
inline ElementSet resolve_selection(const MarkGeometry& geometry, const SelectionRegion& region) {
    return SelectionResolver(geometry).resolve(region);
}

}  // namespace patex
