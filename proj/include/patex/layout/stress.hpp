#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "patex/graph/simple_view.hpp"

namespace patex {

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point&) const = default;
};

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Node positions in layout units, centred on the origin; index = node index.
struct NodeCoordinates {
    std::vector<Point> positions;
    double node_radius = 0.0;
};

struct LayoutOptions {
    double link_length = 40.0;
    double node_radius = 6.0;
    /// Minimum empty space between two node discs after overlap removal.
    double node_gap = 2.0;
    int max_iterations = 300;
    double tolerance = 1e-5;  // relative stress change that ends iteration
};

namespace detail {

/// Hop distances of the simple view; unreachable pairs get one more than the
/// largest finite distance so components keep apart.
inline std::vector<std::vector<double>> hop_distances(const SimpleView& g) {
    const std::size_t n = g.size();
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
    double longest = 1.0;
    for (std::size_t s = 0; s < n; ++s) {
        d[s][s] = 0.0;
        std::vector<std::size_t> frontier{s};
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            std::size_t v = frontier[i];
            for (std::size_t u : g.neighbors(v))
                if (d[s][u] == kInf) {
                    d[s][u] = d[s][v] + 1.0;
                    longest = std::max(longest, d[s][u]);
                    frontier.push_back(u);
                }
        }
    }
    for (auto& row : d)
        for (double& x : row)
            if (x == kInf) x = longest + 1.0;
    return d;
}

inline double stress(const std::vector<Point>& p, const std::vector<std::vector<double>>& target) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            double diff = distance(p[i], p[j]) - target[i][j];
            s += diff * diff / (target[i][j] * target[i][j]);
        }
    return s;
}

/// Pushes overlapping discs apart until every pair is at least `min_sep`
/// apart. A final uniform scale-up guarantees the bound if pushing stalls.
inline void remove_overlaps(std::vector<Point>& p, double min_sep) {
    const std::size_t n = p.size();
    for (int pass = 0; pass < 200; ++pass) {
        bool moved = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                double dx = p[j].x - p[i].x, dy = p[j].y - p[i].y;
                double d = std::hypot(dx, dy);
                if (d >= min_sep) continue;
                if (d < 1e-9) {
                    // Coincident: separate along a direction fixed by the pair.
                    double angle = static_cast<double>((i * 7919 + j * 104729) % 360) * 3.14159265358979323846 / 180.0;
                    dx = std::cos(angle);
                    dy = std::sin(angle);
                    d = 1.0;
                    double push = min_sep / 2.0 * 1.001;
                    p[i].x -= dx * push, p[i].y -= dy * push;
                    p[j].x += dx * push, p[j].y += dy * push;
                } else {
                    double push = (min_sep - d) / 2.0 * 1.001;
                    p[i].x -= dx / d * push, p[i].y -= dy / d * push;
                    p[j].x += dx / d * push, p[j].y += dy / d * push;
                }
                moved = true;
            }
        if (!moved) return;
    }
    double closest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) closest = std::min(closest, distance(p[i], p[j]));
    if (closest < min_sep && closest > 0.0) {
        double scale = min_sep / closest * 1.001;
        for (auto& q : p) q.x *= scale, q.y *= scale;
    }
}

}  // namespace detail

/// Stress-majorisation node-link layout. Target distances are hop counts
/// times `link_length`, weighted by 1/d². Nodes are updated one at a time
/// with the majoriser's closed-form solution, which never raises stress.
/// Start positions come from `seed`, so (network, seed) fixes the result bit
/// for bit. Overlapping discs are separated afterwards and the layout is
/// centred on the origin.
inline NodeCoordinates force_layout(const Network& net, std::uint64_t seed, const LayoutOptions& options = {}) {
    SimpleView g(Scope::whole(net));
    const std::size_t n = g.size();
    NodeCoordinates out;
    out.node_radius = options.node_radius;
    out.positions.resize(n);

    std::mt19937_64 rng(seed);
    auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    const double extent = options.link_length * std::sqrt(static_cast<double>(n));
    for (auto& p : out.positions) {
        p.x = unit() * extent;
        p.y = unit() * extent;
    }

    if (n > 1) {
        auto target = detail::hop_distances(g);
        for (auto& row : target)
            for (double& d : row) d *= options.link_length;

        double previous = detail::stress(out.positions, target);
        for (int it = 0; it < options.max_iterations; ++it) {
            for (std::size_t i = 0; i < n; ++i) {
                double wsum = 0.0, nx = 0.0, ny = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == i) continue;
                    const double dij = target[i][j];
                    const double w = 1.0 / (dij * dij);
                    const Point& pi = out.positions[i];
                    const Point& pj = out.positions[j];
                    const double len = distance(pi, pj);
                    nx += w * pj.x;
                    ny += w * pj.y;
                    if (len > 1e-12) {
                        nx += w * dij * (pi.x - pj.x) / len;
                        ny += w * dij * (pi.y - pj.y) / len;
                    }
                    wsum += w;
                }
                out.positions[i] = {nx / wsum, ny / wsum};
            }
            const double current = detail::stress(out.positions, target);
            if (previous - current <= options.tolerance * previous) break;
            previous = current;
        }
    }

    detail::remove_overlaps(out.positions, 2.0 * options.node_radius + options.node_gap);

    Point centre;
    for (const auto& p : out.positions) centre.x += p.x, centre.y += p.y;
    centre.x /= static_cast<double>(n);
    centre.y /= static_cast<double>(n);
    for (auto& p : out.positions) p.x -= centre.x, p.y -= centre.y;
    return out;
}

}  // namespace patex
