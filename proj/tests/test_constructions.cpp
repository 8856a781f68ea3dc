#include <algorithm>
#include <set>

#include "doctest.h"
#include "pursuit/constructions.hpp"
#include "pursuit/graph.hpp"

using namespace pursuit;

namespace {

// Independently tabulated adjacency of the distance-two graph of the cage;
// used to cross-check both the cage constant and square_minus_edges.
constexpr std::pair<int, int> kKnownH1Edges[] = {
{0,2}, {0,7}, {0,9}, {0,26}, {0,48}, {0,56}, {1,3}, {1,8},
{1,25}, {1,27}, {1,41}, {1,57}, {2,4}, {2,12}, {2,26}, {2,40},
{2,42}, {3,5}, {3,11}, {3,13}, {3,41}, {3,46}, {4,6}, {4,12},
{4,45}, {4,47}, {4,54}, {5,7}, {5,33}, {5,46}, {5,53}, {5,55},
{6,8}, {6,19}, {6,32}, {6,34}, {6,54}, {7,9}, {7,18}, {7,20},
{7,33}, {8,10}, {8,19}, {8,38}, {8,57}, {9,11}, {9,37}, {9,39},
{9,51}, {10,12}, {10,30}, {10,38}, {10,50}, {10,52}, {11,13}, {11,29},
{11,31}, {11,51}, {12,14}, {12,21}, {12,30}, {13,15}, {13,20}, {13,22},
{13,35}, {14,16}, {14,21}, {14,34}, {14,36}, {14,53}, {15,17}, {15,35},
{15,40}, {15,52}, {15,54}, {16,18}, {16,39}, {16,41}, {16,47}, {16,53},
{17,19}, {17,28}, {17,40}, {17,46}, {17,48}, {18,20}, {18,27}, {18,29},
{18,47}, {19,21}, {19,28}, {19,43}, {20,22}, {20,42}, {20,44}, {21,23},
{21,43}, {21,56}, {22,24}, {22,39}, {22,55}, {22,57}, {23,25}, {23,32},
{23,38}, {23,40}, {23,56}, {24,26}, {24,31}, {24,33}, {24,39}, {24,52},
{25,27}, {25,32}, {25,51}, {25,53}, {26,28}, {26,36}, {26,52}, {27,29},
{27,35}, {27,37}, {28,30}, {28,36}, {28,55}, {29,31}, {29,54}, {29,56},
{30,32}, {30,44}, {30,55}, {31,33}, {31,43}, {31,45}, {32,34}, {32,44},
{33,35}, {33,49}, {34,36}, {34,48}, {34,50}, {35,37}, {35,49}, {36,38},
{36,45}, {37,39}, {37,44}, {37,46}, {38,40}, {38,45}, {39,41}, {40,42},
{41,43}, {41,50}, {42,44}, {42,49}, {42,51}, {43,45}, {43,50}, {44,46},
{45,47}, {46,48}, {47,49}, {47,57}, {48,50}, {48,56}, {49,51}, {49,57},
{50,52}, {51,53}, {52,54}, {53,55}, {54,56}, {55,57},
};

bool regular(const Graph& g, int d) {
    auto [lo, hi] = degree_stats(g);
    return lo == d && hi == d;
}

}  // namespace

TEST_CASE("paths cycles stars") {
    CHECK(path(1).edge_count() == 0);
    CHECK(path(4).edge_count() == 3);
    CHECK(cycle(7).vertex_count() == 7);
    CHECK(cycle(7).edge_count() == 7);
    CHECK(girth(cycle(7)) == 7);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK(star(6).edge_count() == 5);
    CHECK(star(6).degree(0) == 5);
    CHECK_THROWS_AS(path(0), std::invalid_argument);
}

TEST_CASE("petersen") {
    Graph g = petersen();
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 15);
    CHECK(regular(g, 3));
    CHECK(girth(g) == 5);
    auto gamma = domination_number(g);
    REQUIRE(gamma);
    CHECK(gamma->size() == 3);
}

TEST_CASE("dodecahedron") {
    Graph g = dodecahedron();
    CHECK(g.vertex_count() == 20);
    CHECK(g.edge_count() == 30);
    CHECK(regular(g, 3));
    CHECK(girth(g) == 5);
    CHECK(is_connected(g));
    // distance profile from any vertex: 1,3,6,6,3,1 (vertex-transitive)
    for (int v = 0; v < 20; ++v) {
        auto dist = bfs_distances(g, v);
        std::vector<int> profile(6, 0);
        for (int d : dist) {
            REQUIRE(d <= 5);
            ++profile[d];
        }
        CHECK(profile == std::vector<int>{1, 3, 6, 6, 3, 1});
    }
}

TEST_CASE("line graphs") {
    Graph lp4 = line_graph(path(4));
    CHECK(lp4.vertex_count() == 3);
    CHECK(lp4.edge_count() == 2);  // P3

    Graph lc7 = line_graph(cycle(7));
    CHECK(lc7.vertex_count() == 7);
    CHECK(regular(lc7, 2));
    CHECK(is_connected(lc7));
    CHECK(girth(lc7) == 7);  // C7 again

    Graph lp = line_graph(petersen());
    CHECK(lp.vertex_count() == 15);
    CHECK(regular(lp, 4));

    CHECK_THROWS_AS(line_graph(Graph(3, {})), std::invalid_argument);
}

TEST_CASE("line graph degree identity") {
    Graph g = builtin_graph("fig2").value();
    Graph lg = line_graph(g);
    auto edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i)
        CHECK(lg.degree(static_cast<int>(i)) ==
              g.degree(edges[i].first) + g.degree(edges[i].second) - 2);
}

TEST_CASE("subdivision") {
    Graph c10 = subdivide_all_edges(cycle(5));
    CHECK(c10.vertex_count() == 10);
    CHECK(c10.edge_count() == 10);
    CHECK(girth(c10) == 10);

    Graph p3 = subdivide_all_edges(Graph(2, {{0, 1}}));
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.degree(2) == 2);  // the subdivision vertex sits in the middle

    Graph sd = subdivide_all_edges(dodecahedron());
    CHECK(sd.vertex_count() == 50);
    CHECK(sd.edge_count() == 60);
    CHECK(is_bipartite(sd));
    CHECK(girth(sd) == 10);

    // deterministic ids: subdivision vertex of the i-th lexicographic edge is n+i
    Graph g(3, {{0, 1}, {0, 2}});
    Graph s = subdivide_all_edges(g);
    CHECK(s.adjacent(0, 3));
    CHECK(s.adjacent(3, 1));
    CHECK(s.adjacent(0, 4));
    CHECK(s.adjacent(4, 2));
}

TEST_CASE("subdivision output is bipartite with original vertices on one side") {
    for (const Graph& g : {petersen(), cycle(5), builtin_graph("fig2").value()}) {
        Graph s = subdivide_all_edges(g);
        CHECK(is_bipartite(s));
        // no edge joins two originals or two subdivision vertices
        for (auto [u, v] : s.edges())
            CHECK(((u < g.vertex_count()) ^ (v < g.vertex_count())));
    }
}

TEST_CASE("square minus edges small cases") {
    Graph sp3 = square_minus_edges(path(3));
    CHECK(sp3.edge_count() == 1);
    CHECK(sp3.adjacent(0, 2));
    CHECK(sp3.degree(1) == 0);  // middle vertex isolated

    Graph sc5 = square_minus_edges(cycle(5));
    CHECK(sc5.vertex_count() == 5);
    CHECK(regular(sc5, 2));
    CHECK(is_connected(sc5));
    CHECK(girth(sc5) == 5);  // a relabeled C5
}

TEST_CASE("square minus edges degree formula at girth >= 5") {
    for (const Graph& g : {petersen(), dodecahedron(), cage_g1()}) {
        REQUIRE(girth(g) >= 5);
        Graph h = square_minus_edges(g);
        for (int v = 0; v < g.vertex_count(); ++v) {
            int expect = 0;
            for (int u : g.neighbors(v)) expect += g.degree(u) - 1;
            CHECK(h.degree(v) == expect);
        }
    }
}

TEST_CASE("cage g1") {
    Graph g = cage_g1();
    CHECK(g.vertex_count() == 58);
    CHECK(g.edge_count() == 87);
    CHECK(regular(g, 3));
    CHECK(girth(g) == 9);
    CHECK(is_connected(g));
    // spot edges, 1-based labels (1,2), (1,58), (1,9)
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 57));
    CHECK(g.adjacent(0, 8));
}

TEST_CASE("h1 matches the independently tabulated adjacency") {
    Graph h1 = square_minus_edges(cage_g1());
    CHECK(h1.vertex_count() == 58);
    CHECK(regular(h1, 6));
    std::set<std::pair<int, int>> expect(std::begin(kKnownH1Edges), std::end(kKnownH1Edges));
    auto edges = h1.edges();
    std::set<std::pair<int, int>> got(edges.begin(), edges.end());
    CHECK(got == expect);
}

TEST_CASE("neighbour cliques of the square are disjoint at girth >= 9") {
    Graph g = cage_g1();
    Graph h = square_minus_edges(g);
    for (int u = 0; u < g.vertex_count(); ++u) {
        std::set<int> seen;
        for (int w : g.neighbors(u)) {
            // K_w: the other neighbours of w form a clique in h
            std::vector<int> members;
            for (int x : g.neighbors(w))
                if (x != u) members.push_back(x);
            for (size_t a = 0; a < members.size(); ++a) {
                CHECK_FALSE(seen.count(members[a]));
                seen.insert(members[a]);
                for (size_t b = a + 1; b < members.size(); ++b)
                    CHECK(h.adjacent(members[a], members[b]));
            }
        }
    }
}

TEST_CASE("builtin registry") {
    CHECK(builtin_graph("p4"));
    CHECK(builtin_graph("c7"));
    CHECK(builtin_graph("star6"));
    CHECK(builtin_graph("petersen"));
    CHECK(builtin_graph("linepetersen")->vertex_count() == 15);
    CHECK(builtin_graph("subdodecahedron")->vertex_count() == 50);
    CHECK(builtin_graph("h1")->vertex_count() == 58);
    CHECK(builtin_graph("fig1right")->vertex_count() == 5);
    CHECK(builtin_graph("fig2")->vertex_count() == 10);
    CHECK_FALSE(builtin_graph("c2"));
    CHECK_FALSE(builtin_graph("nope"));
    CHECK_FALSE(builtin_graph("p"));

    // fig2 premises: a triangle, no dominated vertex, gamma 3
    Graph fig2 = builtin_graph("fig2").value();
    CHECK_FALSE(is_triangle_free(fig2));
    CHECK_FALSE(find_dominated_vertex(fig2));
    CHECK(domination_number(fig2)->size() == 3);
}
