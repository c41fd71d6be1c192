#pragma once

// Mark-by-mark reference for selection. Written from scratch against the
// shape definitions: winding-number containment and closest points between
// segments by clamped parametric solve. No spatial index.

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include "patex/layout/geometry.hpp"

namespace patex::oracle {

struct P {
    double x, y;
};

inline P sub(P a, P b) { return {a.x - b.x, a.y - b.y}; }
inline double dot(P a, P b) { return a.x * b.x + a.y * b.y; }
inline double len(P a) { return std::sqrt(dot(a, a)); }

/// Winding number of the closed polygon around q; nonzero means inside for
/// simple polygons. Self-intersecting lassos follow the even-odd rule, so
/// the parity of the winding number is what counts.
inline bool contains(const std::vector<P>& poly, P q) {
    int wn = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        P a = poly[i], b = poly[(i + 1) % poly.size()];
        double side = (b.x - a.x) * (q.y - a.y) - (q.x - a.x) * (b.y - a.y);
        if (a.y <= q.y) {
            if (b.y > q.y && side > 0) ++wn;
        } else if (b.y <= q.y && side < 0) {
            --wn;
        }
    }
    return wn % 2 != 0;
}

/// Closest distance between segments p1q1 and p2q2.
inline double seg_seg(P p1, P q1, P p2, P q2) {
    P d1 = sub(q1, p1), d2 = sub(q2, p2), r = sub(p1, p2);
    double a = dot(d1, d1), e = dot(d2, d2), f = dot(d2, r);
    double s = 0, t = 0;
    if (a <= 0 && e <= 0) return len(r);
    if (a <= 0) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else {
        double c = dot(d1, r);
        if (e <= 0) {
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            double b = dot(d1, d2), denom = a * e - b * b;
            s = denom > 0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
            t = (b * s + f) / e;
            if (t < 0) {
                t = 0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (t > 1) {
                t = 1;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            }
        }
    }
    P c1{p1.x + d1.x * s, p1.y + d1.y * s}, c2{p2.x + d2.x * t, p2.y + d2.y * t};
    return len(sub(c1, c2));
}

/// Proper or touching intersection by orientation signs.
inline bool seg_cross(P a, P b, P c, P d) {
    auto orient = [](P p, P q, P r) {
        double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    };
    auto within = [](P p, P q, P r) {
        return r.x >= std::min(p.x, q.x) && r.x <= std::max(p.x, q.x) && r.y >= std::min(p.y, q.y) &&
               r.y <= std::max(p.y, q.y);
    };
    int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    return (o1 == 0 && within(a, b, c)) || (o2 == 0 && within(a, b, d)) || (o3 == 0 && within(c, d, a)) ||
           (o4 == 0 && within(c, d, b));
}

inline double dist_to_boundary(const std::vector<P>& poly, P a, P b) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        P c = poly[i], d = poly[(i + 1) % poly.size()];
        best = std::min(best, seg_cross(a, b, c, d) ? 0.0 : seg_seg(a, b, c, d));
    }
    return best;
}

inline P conv(Point p) { return {p.x, p.y}; }

inline bool mark_hit(const Shape& shape, const std::vector<P>& poly) {
    if (const auto* d = std::get_if<Disc>(&shape)) {
        P c = conv(d->center);
        return contains(poly, c) || dist_to_boundary(poly, c, c) <= d->radius;
    }
    if (const auto* r = std::get_if<Rect>(&shape)) {
        std::vector<P> box{{r->min.x, r->min.y}, {r->max.x, r->min.y}, {r->max.x, r->max.y}, {r->min.x, r->max.y}};
        for (const auto& q : poly)
            if (contains(box, q) || (q.x >= r->min.x && q.x <= r->max.x && q.y >= r->min.y && q.y <= r->max.y))
                return true;
        for (const auto& q : box)
            if (contains(poly, q)) return true;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < poly.size(); ++j)
                if (seg_cross(box[i], box[(i + 1) % 4], poly[j], poly[(j + 1) % poly.size()])) return true;
        return false;
    }
    if (const auto* s = std::get_if<Segment>(&shape)) {
        P a = conv(s->a), b = conv(s->b);
        return contains(poly, a) || contains(poly, b) || dist_to_boundary(poly, a, b) <= s->half_width;
    }
    const auto& arc = std::get<Arc>(shape);
    for (const auto& p : arc.path)
        if (contains(poly, conv(p))) return true;
    for (std::size_t k = 0; k + 1 < arc.path.size(); ++k)
        if (dist_to_boundary(poly, conv(arc.path[k]), conv(arc.path[k + 1])) <= arc.tolerance) return true;
    return false;
}

inline double mark_distance(const Shape& shape, P q) {
    if (const auto* d = std::get_if<Disc>(&shape)) return std::max(0.0, len(sub(q, conv(d->center))) - d->radius);
    if (const auto* r = std::get_if<Rect>(&shape)) {
        double cx = std::clamp(q.x, r->min.x, r->max.x), cy = std::clamp(q.y, r->min.y, r->max.y);
        return len(sub(q, {cx, cy}));
    }
    if (const auto* s = std::get_if<Segment>(&shape))
        return std::max(0.0, seg_seg(q, q, conv(s->a), conv(s->b)) - s->half_width);
    const auto& arc = std::get<Arc>(shape);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < arc.path.size(); ++k)
        best = std::min(best, seg_seg(q, q, conv(arc.path[k]), conv(arc.path[k + 1])));
    return std::max(0.0, best - arc.tolerance);
}

/// Selected mark indices by linear scan. `poly` must already be a valid region
/// of positive area; `pick` handles the zero-area case.
inline std::set<std::size_t> brute_force_hits(const MarkGeometry& g, const std::vector<Point>& polygon) {
    std::vector<P> poly;
    for (const auto& p : polygon) poly.push_back(conv(p));
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < g.marks.size(); ++i)
        if (mark_hit(g.marks[i].shape, poly)) out.insert(i);
    return out;
}

inline std::set<std::size_t> brute_force_pick(const MarkGeometry& g, Point at, double radius) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t idx = g.marks.size();
    for (std::size_t i = 0; i < g.marks.size(); ++i) {
        double d = mark_distance(g.marks[i].shape, conv(at));
        if (d <= radius && d < best) best = d, idx = i;
    }
    if (idx == g.marks.size()) return {};
    return {idx};
}

inline ElementSet elements_of(const MarkGeometry& g, const std::set<std::size_t>& marks) {
    ElementSet out;
    for (auto i : marks) {
        const auto& ref = g.marks[i].element;
        (ref.kind == ElementKind::Node ? out.nodes : out.links).insert(ref.id);
    }
    return out;
}

}  // namespace patex::oracle
