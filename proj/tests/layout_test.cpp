#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "hit_oracle.hpp"
#include "oracles.hpp"
#include "patex/graph/io.hpp"
#include "patex/layout/geometry.hpp"
#include "patex/layout/selection.hpp"
#include "support.hpp"

using namespace patex;

namespace {

NodeOrdering shuffled(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[test::below(rng, i)]);
    return NodeOrdering::from_order(order);
}

/// Σ|pos(u) − pos(v)| straight from the adjacency matrix.
long long oracle_cost(const Network& net, const NodeOrdering& o) {
    auto a = oracle::adjacency(net);
    long long c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i][j]) c += std::llabs(static_cast<long long>(o.position(i)) - static_cast<long long>(o.position(j)));
    return c;
}

MarkGeometry geometry_for(const Network& net, Viz viz, Canvas canvas = {}) {
    auto order = barycenter_order(net);
    auto coords = force_layout(net, 0);
    return mark_geometry(net, viz, &order, &coords, canvas);
}

const Mark* find_mark(const MarkGeometry& g, const std::string& id) {
    for (const auto& m : g.marks)
        if (m.id == id) return &m;
    return nullptr;
}

/// Undirected weighted network with parallel and self links.
Network random_undirected(std::size_t n, std::size_t links, std::uint64_t seed) {
    auto t = test::random_temporal(n, links, seed);
    std::vector<Link> ls = t.links();
    for (auto& l : ls) l.time.reset();
    return Network::create(t.nodes(), ls, false);
}

}  // namespace

TEST(Seriation, CostNeverIncreasesAcrossSweeps) {
    std::mt19937_64 rng(11);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto net = test::gnp(10 + seed % 20, 0.1 + 0.01 * static_cast<double>(seed % 10), seed);
        SimpleView g(Scope::whole(net));
        auto start = shuffled(net.node_count(), rng);
        auto run = barycenter_sweeps(g, start);
        EXPECT_EQ(run.costs.front(), oracle_cost(net, start));
        EXPECT_EQ(run.costs.back(), oracle_cost(net, run.ordering));
        for (std::size_t k = 1; k < run.costs.size(); ++k) EXPECT_LT(run.costs[k], run.costs[k - 1]) << "seed " << seed;
        auto best = barycenter_order(net, start);
        EXPECT_LE(oracle_cost(net, best), run.costs.front());
    }
}

TEST(Seriation, PathBandwidthOptimumIsOne) {
    // exhaustive over P6: no permutation beats bandwidth 1
    auto p6 = test::path(6);
    std::vector<std::size_t> perm(6);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::size_t best = 99;
    do {
        best = std::min(best, bandwidth(p6, NodeOrdering::from_order(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(best, 1u);
}

TEST(Seriation, PathTenReachesBandwidthOneFromRandomStarts) {
    auto p10 = test::path(10);
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 20; ++round) {
        auto start = shuffled(10, rng);
        auto o = barycenter_order(p10, start);
        EXPECT_EQ(bandwidth(p10, o), 1u) << "round " << round;
    }
}

TEST(Seriation, OptimalOrderIsFixedPoint) {
    auto p10 = test::path(10);
    auto id = NodeOrdering::identity(10);
    EXPECT_EQ(barycenter_order(p10, id), id);
    auto run = barycenter_sweeps(SimpleView(Scope::whole(p10)), id);
    EXPECT_EQ(run.costs.size(), 1u);
}

TEST(Seriation, NoLinksKeepsInitialOrder) {
    auto net = test::from_edges(7, {});
    std::mt19937_64 rng(5);
    auto start = shuffled(7, rng);
    EXPECT_EQ(barycenter_order(net, start), start);
}

TEST(Seriation, OrderingRejectsNonPermutation) {
    EXPECT_THROW(NodeOrdering::from_order({0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(NodeOrdering::from_order({0, 3}), std::invalid_argument);
}

TEST(ForceLayout, SameSeedIsBitIdentical) {
    auto net = test::gnp(30, 0.1, 3);
    auto a = force_layout(net, 42), b = force_layout(net, 42);
    ASSERT_EQ(a.positions.size(), b.positions.size());
    for (std::size_t i = 0; i < a.positions.size(); ++i) {
        EXPECT_EQ(std::memcmp(&a.positions[i], &b.positions[i], sizeof(Point)), 0);
    }
}

TEST(ForceLayout, SingleNodeAtCanvasCentre) {
    auto net = test::from_edges(1, {});
    auto c = force_layout(net, 9);
    EXPECT_EQ(c.positions[0], (Point{0, 0}));
    Canvas canvas{640, 480};
    auto g = mark_geometry(net, Viz::NodeLink, nullptr, &c, canvas);
    const auto& d = std::get<Disc>(g.marks.at(0).shape);
    EXPECT_DOUBLE_EQ(d.center.x, 320);
    EXPECT_DOUBLE_EQ(d.center.y, 240);
}

TEST(ForceLayout, LinkedPairsSitCloserThanUnlinked) {
    // K5 on v0..v4, pendant chain v4-v5-v6 ending far out
    auto edges = test::complete_edges(0, 5);
    edges.emplace_back(4, 5);
    edges.emplace_back(5, 6);
    auto net = test::from_edges(7, edges);
    auto adj = oracle::adjacency(net);
    double linked_total = 0, unlinked_total = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto c = force_layout(net, seed);
        double ls = 0, us = 0;
        int ln = 0, un = 0;
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = i + 1; j < 7; ++j) {
                double d = distance(c.positions[i], c.positions[j]);
                (adj[i][j] ? ls : us) += d;
                ++(adj[i][j] ? ln : un);
            }
        linked_total += ls / ln;
        unlinked_total += us / un;
        EXPECT_LT(ls / ln, us / un) << "seed " << seed;
    }
    EXPECT_LT(linked_total, unlinked_total);
}

TEST(ForceLayout, NoOverlapsOrCoincidentNodes) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto net = seed % 2 ? test::gnp(25, 0.15, seed) : test::from_edges(12, {});
        LayoutOptions opt;
        auto c = force_layout(net, seed, opt);
        ASSERT_EQ(c.positions.size(), net.node_count());
        for (std::size_t i = 0; i < c.positions.size(); ++i)
            for (std::size_t j = i + 1; j < c.positions.size(); ++j)
                EXPECT_GE(distance(c.positions[i], c.positions[j]), 2 * opt.node_radius) << seed;
    }
}

TEST(Geometry, EveryElementHasAMark) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto temporal = test::random_temporal(8 + seed, 20 + 2 * seed, seed);
        auto plain = random_undirected(8 + seed, 20 + 2 * seed, seed + 100);
        for (const Network* net : {&temporal, &plain})
            for (Viz viz : kAllViz) {
                if (viz == Viz::TimeArcs && !net->temporal()) continue;
                auto g = geometry_for(*net, viz);
                ElementSet seen;
                std::set<std::string> ids;
                for (const auto& m : g.marks) {
                    EXPECT_TRUE(ids.insert(m.id).second) << "duplicate mark id " << m.id;
                    (m.element.kind == ElementKind::Node ? seen.nodes : seen.links).insert(m.element.id);
                }
                EXPECT_EQ(seen, net->all_elements()) << to_string(viz) << " seed " << seed;
            }
    }
}

TEST(Geometry, TriangleMatrixHasSixSymmetricCells) {
    auto g = geometry_for(test::complete(3), Viz::Matrix);
    std::set<std::pair<double, double>> cells;
    for (const auto& m : g.marks)
        if (m.role == "cell") {
            const auto& r = std::get<Rect>(m.shape);
            cells.insert({r.min.x, r.min.y});
        }
    EXPECT_EQ(cells.size(), 6u);
    for (auto [x, y] : cells) EXPECT_TRUE(cells.count({y, x}));
    for (const auto& m : g.marks) EXPECT_NE(m.role, "diagonal");
}

TEST(Geometry, DiagonalOnlyForSelfLinks) {
    auto net = load_network("a,a\na,b\n", NetworkFormat::Csv);
    auto g = geometry_for(net, Viz::Matrix);
    int diagonal = 0;
    for (const auto& m : g.marks) diagonal += m.role == "diagonal";
    EXPECT_EQ(diagonal, 1);
}

TEST(Geometry, DoubledWeightIsDarkerAndThicker) {
    auto light = load_network("a,b,2\n", NetworkFormat::Csv);
    auto dark = load_network("a,b,4\n", NetworkFormat::Csv);
    auto gl = geometry_for(light, Viz::Matrix), gd = geometry_for(dark, Viz::Matrix);
    EXPECT_GT(*find_mark(gd, "cell:e0")->channels.shade, *find_mark(gl, "cell:e0")->channels.shade);
    auto nl = geometry_for(light, Viz::NodeLink), nd = geometry_for(dark, Viz::NodeLink);
    EXPECT_GT(*find_mark(nd, "link:e0")->channels.thickness, *find_mark(nl, "link:e0")->channels.thickness);
}

TEST(Geometry, ChannelsMonotoneInWeight) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 1000; ++i) {
        double a = test::unit(rng) * 100, b = test::unit(rng) * 100;
        if (a > b) std::swap(a, b);
        EXPECT_LE(link_shade(a), link_shade(b));
        EXPECT_LE(link_thickness(a), link_thickness(b));
        if (a < b) EXPECT_LT(link_shade(a), link_shade(b));
    }
    EXPECT_EQ(link_shade(0), 0.0);
}

TEST(Geometry, NodeLinkColourIsLinkType) {
    auto net = load_network("a,b,1,trade\nb,c,1,kin\n", NetworkFormat::Csv);
    auto g = geometry_for(net, Viz::NodeLink);
    EXPECT_EQ(*find_mark(g, "link:e0")->channels.color, "trade");
    EXPECT_EQ(*find_mark(g, "link:e1")->channels.color, "kin");
}

TEST(Geometry, ParallelLinksDoNotOverlap) {
    auto net = load_network("a,b,1,x\na,b,1,y\n", NetworkFormat::Csv);
    auto g = geometry_for(net, Viz::NodeLink);
    const auto& s0 = std::get<Segment>(find_mark(g, "link:e0")->shape);
    const auto& s1 = std::get<Segment>(find_mark(g, "link:e1")->shape);
    EXPECT_GT(distance(s0.a, s1.a), 1.0);
    auto m = geometry_for(net, Viz::Matrix);
    const auto& c0 = std::get<Rect>(find_mark(m, "cell:e0")->shape);
    const auto& c1 = std::get<Rect>(find_mark(m, "cell:e1")->shape);
    EXPECT_LE(c0.max.y, c1.min.y);
}

TEST(Geometry, TimeArcsDiscsAndCounterClockwiseArc) {
    auto net = load_network("a,b,1,t,7\nb,a,1,t,3\nc,c,1,t,7\n", NetworkFormat::Csv, {true});
    auto order = barycenter_order(net);
    Canvas canvas{400, 300};
    auto g = mark_geometry(net, Viz::TimeArcs, &order, nullptr, canvas);
    double row = 300.0 / 3;
    auto y = [&](const std::string& id) { return row * (static_cast<double>(order.position(*net.node_index(id))) + 0.5); };
    // two timestamps 3 and 7 → columns 0 and 1 after the gutter
    const double col = (400.0 - kLabelGutter) / 2;
    for (const auto& [link, x] : std::map<std::string, double>{{"e0", kLabelGutter + 1.5 * col}, {"e1", kLabelGutter + 0.5 * col}}) {
        const Link& l = net.links()[*net.link_index(link)];
        const auto& src = std::get<Disc>(find_mark(g, "src:" + link)->shape);
        const auto& tgt = std::get<Disc>(find_mark(g, "tgt:" + link)->shape);
        EXPECT_DOUBLE_EQ(src.center.x, x);
        EXPECT_DOUBLE_EQ(tgt.center.x, x);
        EXPECT_DOUBLE_EQ(src.center.y, y(l.source));
        EXPECT_DOUBLE_EQ(tgt.center.y, y(l.target));
        EXPECT_EQ(find_mark(g, "src:" + link)->element.id, l.source);
        const auto& arc = std::get<Arc>(find_mark(g, "arc:" + link)->shape);
        EXPECT_NEAR(arc.path.front().x, src.center.x, 1e-9);
        EXPECT_NEAR(arc.path.front().y, src.center.y, 1e-9);
        EXPECT_NEAR(arc.path.back().x, tgt.center.x, 1e-9);
        EXPECT_NEAR(arc.path.back().y, tgt.center.y, 1e-9);
        // with y flipped up, turning counter-clockwise means positive cross products
        for (std::size_t k = 0; k + 2 < arc.path.size(); ++k) {
            double ax = arc.path[k + 1].x - arc.path[k].x, ay = -(arc.path[k + 1].y - arc.path[k].y);
            double bx = arc.path[k + 2].x - arc.path[k + 1].x, by = -(arc.path[k + 2].y - arc.path[k + 1].y);
            EXPECT_GT(ax * by - ay * bx, 0.0);
        }
    }
    EXPECT_NE(find_mark(g, "arc:e2"), nullptr);
}

TEST(Geometry, PreconditionErrors) {
    auto plain = test::complete(3);
    auto order = barycenter_order(plain);
    EXPECT_THROW(mark_geometry(plain, Viz::Matrix, nullptr, nullptr), MissingOrdering);
    EXPECT_THROW(mark_geometry(plain, Viz::NodeLink, &order, nullptr), MissingCoordinates);
    EXPECT_THROW(mark_geometry(plain, Viz::TimeArcs, &order, nullptr), NotTemporal);
    auto wrong = NodeOrdering::identity(2);
    EXPECT_THROW(mark_geometry(plain, Viz::Matrix, &wrong, nullptr), MissingOrdering);
}

TEST(Geometry, JsonShape) {
    auto j = to_json(geometry_for(test::complete(3), Viz::Matrix));
    EXPECT_EQ(j["viz"], "matrix");
    EXPECT_EQ(j["canvas"]["w"], 800.0);
    const auto& m = j["marks"][0];
    for (const char* k : {"id", "element", "shape", "params", "channels"}) EXPECT_TRUE(m.contains(k)) << k;
}

TEST(Selection, WholeCanvasSelectsEverything) {
    auto net = test::random_temporal(10, 25, 4);
    for (Viz viz : kAllViz) {
        auto g = geometry_for(net, viz);
        auto sel = resolve_selection(g, SelectionRegion::rectangle({0, 0}, {800, 600}));
        EXPECT_EQ(sel, net.all_elements()) << to_string(viz);
    }
}

TEST(Selection, BackgroundIsEmpty) {
    auto net = test::complete(5);
    auto m = geometry_for(net, Viz::Matrix);
    // grid ends at gutter + 5 * cell = 600; the strip to the right is empty
    EXPECT_TRUE(resolve_selection(m, SelectionRegion::rectangle({700, 100}, {790, 500})).empty());
    auto nl = geometry_for(net, Viz::NodeLink);
    EXPECT_TRUE(resolve_selection(nl, SelectionRegion::rectangle({1, 1}, {15, 15})).empty());
}

TEST(Selection, MatrixBlockOfRowsTwoToFour) {
    auto net = test::gnp(9, 0.5, 21);
    auto order = barycenter_order(net);
    Canvas canvas{800, 600};
    auto g = mark_geometry(net, Viz::Matrix, &order, nullptr, canvas);
    const double cell = (600.0 - kLabelGutter) / 9;
    auto at = [&](double k) { return kLabelGutter + cell * k; };
    auto sel = resolve_selection(g, SelectionRegion::rectangle({at(2.1), at(2.1)}, {at(4.9), at(4.9)}));
    ElementSet expect;
    for (std::size_t k = 2; k <= 4; ++k) expect.nodes.insert(net.nodes()[order.node_at(k)].id);
    for (const auto& l : net.links()) {
        auto ps = order.position(*net.node_index(l.source)), pt = order.position(*net.node_index(l.target));
        if (ps >= 2 && ps <= 4 && pt >= 2 && pt <= 4) expect.links.insert(l.id);
    }
    EXPECT_EQ(sel, expect);
}

TEST(Selection, DegenerateRegions) {
    auto g = geometry_for(test::complete(5), Viz::Matrix);
    EXPECT_THROW(resolve_selection(g, SelectionRegion::lasso({{0, 0}, {5, 5}})), DegenerateRegion);
    EXPECT_THROW(resolve_selection(g, SelectionRegion::lasso({{0, 0}, {5, 5}, {0, 0}})), DegenerateRegion);
    EXPECT_THROW(resolve_selection(g, SelectionRegion{SelectionRegion::Kind::Rectangle, {{0, 0}}}), DegenerateRegion);
    EXPECT_THROW(resolve_selection(g, SelectionRegion::rectangle({0, 0}, {NAN, 1})), DegenerateRegion);
}

TEST(Selection, ZeroAreaIsPointPick) {
    auto net = test::complete(5);
    auto g = geometry_for(net, Viz::NodeLink);
    const auto& d = std::get<Disc>(g.marks[2].shape);
    auto sel = resolve_selection(g, SelectionRegion::rectangle(d.center, d.center));
    EXPECT_EQ(sel.nodes, (std::set<std::string>{net.nodes()[2].id}));
    EXPECT_TRUE(sel.links.empty());
    EXPECT_TRUE(resolve_selection(g, SelectionRegion::rectangle({2, 2}, {2, 40})).empty());
}

TEST(Selection, MatchesBruteForce) {
    std::mt19937_64 rng(77);
    std::size_t regions = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto net = test::random_temporal(6 + 3 * seed, 10 + 6 * seed, seed);
        for (Viz viz : kAllViz) {
            auto g = geometry_for(net, viz);
            SelectionResolver resolver(g);
            for (int k = 0; k < 40; ++k, ++regions) {
                auto pt = [&] { return Point{test::unit(rng) * 840 - 20, test::unit(rng) * 640 - 20}; };
                SelectionRegion region;
                std::set<std::size_t> expect;
                if (k % 10 == 9) {
                    Point p = pt();
                    region = SelectionRegion::rectangle(p, {p.x, p.y + 10});
                    expect = oracle::brute_force_pick(g, {p.x, p.y + 5}, kPickRadius);
                } else if (k % 2) {
                    region = SelectionRegion::rectangle(pt(), pt());
                    auto a = region.points[0], b = region.points[1];
                    expect = oracle::brute_force_hits(g, {{a.x, a.y}, {b.x, a.y}, {b.x, b.y}, {a.x, b.y}});
                } else {
                    Point c = pt();
                    std::vector<Point> poly;
                    std::size_t sides = 3 + test::below(rng, 8);
                    for (std::size_t s = 0; s < sides; ++s) {
                        double ang = 6.283185307179586 * (static_cast<double>(s) + test::unit(rng)) / static_cast<double>(sides);
                        double rad = 10 + test::unit(rng) * 150;
                        poly.push_back({c.x + rad * std::cos(ang), c.y + rad * std::sin(ang)});
                    }
                    if (k % 4 == 0) std::swap(poly[0], poly[1]);  // sometimes self-intersecting
                    region = SelectionRegion::lasso(poly);
                    expect = oracle::brute_force_hits(g, poly);
                }
                auto got = resolver.selected_marks(region);
                ASSERT_EQ(std::set<std::size_t>(got.begin(), got.end()), expect)
                    << to_string(viz) << " seed " << seed << " region " << k;
                EXPECT_EQ(resolver.resolve(region), oracle::elements_of(g, expect));
            }
        }
    }
    EXPECT_GE(regions, 1000u);
}
