#include "doctest.h"
#include "ptw/graph.hpp"

using namespace ptw;

TEST_CASE("parse minimal instances") {
    auto a = parse_instance("p graph 2 1\ne 1 2\n");
    CHECK(a.cg.graph.n() == 2);
    CHECK(a.cg.graph.m() == 1);
    auto b = parse_instance("p graph 1 0\n");
    CHECK(b.cg.graph.n() == 1);
    CHECK(b.cg.graph.m() == 0);
    CHECK_THROWS_AS(parse_instance("p graph 2 1\ne 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p graph 2 2\ne 1 2\ne 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p graph 2 1\ne 1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p graph 2 1\nx 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("e 1 2\n"), ParseError);
}

TEST_CASE("colors, requests and rotations round-trip") {
    Instance in;
    in.cg = ColoredGraph(grid(2, 3));
    in.cg.colors[2] = 3;
    in.requests.pairs = {{1, 6}, {4, 3}};
    in.rotation = grid_rotation(2, 3);
    auto text = serialize_instance(in);
    auto back = parse_instance(text);
    CHECK(back.cg.graph == in.cg.graph);
    CHECK(back.cg.colors == in.cg.colors);
    CHECK(back.requests.pairs == in.requests.pairs);
    REQUIRE(back.rotation.has_value());
    CHECK(back.rotation->order == in.rotation->order);
    CHECK(serialize_instance(back) == text);
}

TEST_CASE("grid counts") {
    CHECK(grid(1, 1).n() == 1);
    CHECK(grid(1, 1).m() == 0);
    CHECK(grid(2, 2).m() == 4);
    auto g = grid(3, 4);
    CHECK(g.n() == 12);
    CHECK(g.m() == 17);
    for (int m = 1; m <= 5; ++m)
        for (int k = 1; k <= 5; ++k) {
            auto h = grid(m, k);
            CHECK(h.m() == m * (k - 1) + k * (m - 1));
            CHECK(h.max_degree() <= 4);
            CHECK(euler_check(h, grid_rotation(m, k)).planar);
        }
    CHECK_THROWS(grid(0, 3));
}

TEST_CASE("euler check") {
    Graph tri(3, {{1, 2}, {2, 3}, {1, 3}});
    RotationSystem rs{{{}, {2, 3}, {3, 1}, {1, 2}}};
    auto r = euler_check(tri, rs);
    CHECK(r.faces == 2);
    CHECK(r.planar);
    auto sq = euler_check(grid(2, 2), grid_rotation(2, 2));
    CHECK(sq.faces == 2);
    CHECK(sq.planar);

    std::vector<Edge> k5;
    for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 5; ++v) k5.emplace_back(u, v);
    Graph K5(5, k5);
    CHECK_FALSE(find_planar_rotation(K5).has_value());
    Graph K4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    auto rk4 = find_planar_rotation(K4);
    REQUIRE(rk4.has_value());
    CHECK(euler_check(K4, *rk4).faces == 4);

    RotationSystem bad{{{}, {2}, {1}, {}}};
    CHECK_THROWS(euler_check(tri, bad));
}

TEST_CASE("random planar samples are embedded") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto s = random_planar(3, 3, seed);
        CHECK(euler_check(s.graph, s.rotation).planar);
        auto back = parse_instance(serialize_graph(s.graph));
        CHECK(back.cg.graph == s.graph);
    }
}
