#include "doctest.h"
#include "pursuit/certify.hpp"
#include "pursuit/constructions.hpp"
#include "pursuit/enumerate.hpp"
#include "pursuit/solver.hpp"

using namespace pursuit;

namespace {

int attacking_value(const Graph& g, int k_max) {
    auto result = attacking_cop_number(g, k_max);
    REQUIRE(result.value);
    return *result.value;
}

}  // namespace

TEST_CASE("one cop characterization") {
    CHECK(cc_equals_one(star(6)));
    CHECK(cc_equals_one(*builtin_graph("fig1right")));
    CHECK_FALSE(cc_equals_one(path(4)));
    CHECK_THROWS_AS(cc_equals_one(Graph(3, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("triangle-free characterization on named graphs") {
    auto [c7, c7_record] = triangle_free_cc_at_most_2(cycle(7));
    CHECK_FALSE(c7);
    CHECK(c7_record.order.empty());  // C7 has no dominated vertex
    CHECK(c7_record.final_n == 7);

    auto [c4, c4_record] = triangle_free_cc_at_most_2(cycle(4));
    CHECK(c4);
    CHECK(c4_record.gamma2_after == 0);  // gamma(C4) = 2 already

    // K_{1,3} with each edge subdivided twice and the leaves merged: gamma 2
    Graph spider(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}, {5, 7}, {6, 7}});
    auto [spider_ok, spider_record] = triangle_free_cc_at_most_2(spider);
    CHECK(spider_ok);
    CHECK(spider_record.gamma2_after == 0);

    // a path needs no elimination either
    auto [p6, p6_record] = triangle_free_cc_at_most_2(path(6));
    CHECK(p6);

    CHECK_THROWS_AS(triangle_free_cc_at_most_2(*builtin_graph("fig2")), std::invalid_argument);
    CHECK_THROWS_AS(triangle_free_cc_at_most_2(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("elimination record witnesses are dominations in the remaining graph") {
    // subdivided star: leaves get eliminated step by step
    Graph g = subdivide_all_edges(star(5));
    auto [ok, record] = triangle_free_cc_at_most_2(g);
    CHECK(ok);
    CHECK(record.order.size() == record.dominators.size());
    // replay the removals, checking each witness before applying it
    Graph current = g;
    std::vector<int> alive(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) alive[v] = v;
    for (size_t step = 0; step < record.order.size(); ++step) {
        int u_orig = record.order[step], v_orig = record.dominators[step];
        int u = -1, v = -1;
        for (size_t i = 0; i < alive.size(); ++i) {
            if (alive[i] == u_orig) u = static_cast<int>(i);
            if (alive[i] == v_orig) v = static_cast<int>(i);
        }
        REQUIRE(u >= 0);
        REQUIRE(v >= 0);
        CHECK(current.neighbor_set(u).subset_of(current.closed_neighbor_set(v)));
        alive.erase(alive.begin() + u);
        current = remove_vertex(current, u);
    }
}

TEST_CASE("outerplanar face test") {
    EmbeddingFaces c5_faces{{{0, 1, 2, 3, 4}}};
    CHECK(outerplanar_cc2_check(cycle(5), c5_faces));
    CHECK(attacking_value(cycle(5), 3) == 2);

    EmbeddingFaces c7_faces{{{0, 1, 2, 3, 4, 5, 6}}};
    CHECK_FALSE(outerplanar_cc2_check(cycle(7), c7_faces));
    CHECK(attacking_value(cycle(7), 3) == 3);

    EmbeddingFaces c4_faces{{{0, 1, 2, 3}}};
    CHECK(outerplanar_cc2_check(cycle(4), c4_faces));
    CHECK(attacking_value(cycle(4), 3) == 2);

    // two pentagons glued on an edge: two internal 5-faces, so three cops
    Graph glued(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                    {4, 5}, {5, 6}, {6, 7}, {7, 0}});
    EmbeddingFaces glued_faces{{{0, 1, 2, 3, 4}, {0, 4, 5, 6, 7}}};
    CHECK_FALSE(outerplanar_cc2_check(glued, glued_faces));
    CHECK(attacking_value(glued, 3) == 3);

    // validation errors
    CHECK_THROWS_AS(outerplanar_cc2_check(star(5), EmbeddingFaces{}), std::invalid_argument);
    EmbeddingFaces not_a_cycle{{{0, 2, 4}}};
    CHECK_THROWS_AS(outerplanar_cc2_check(cycle(5), not_a_cycle), std::invalid_argument);
    EmbeddingFaces repeated{{{0, 1, 0}}};
    CHECK_THROWS_AS(outerplanar_cc2_check(cycle(5), repeated), std::invalid_argument);
}

TEST_CASE("girth-5 lower bound certificates") {
    auto dodeca = girth5_lower_bound(dodecahedron());
    REQUIRE(dodeca);
    CHECK(dodeca->bound == 4);
    CHECK(dodeca->girth_value == 5);
    CHECK(dodeca->min_degree == 3);
    CHECK(validate_certificate(*dodeca, dodecahedron()));

    auto c7 = girth5_lower_bound(cycle(7));
    REQUIRE(c7);
    CHECK(c7->bound == 3);
    CHECK(attacking_value(cycle(7), 3) == c7->bound);  // tight
    CHECK(validate_certificate(*c7, cycle(7)));

    CHECK_FALSE(girth5_lower_bound(petersen()));  // gamma = delta = 3
    CHECK_FALSE(girth5_lower_bound(cycle(4)));    // girth below 5
}

TEST_CASE("subdivision lower bound certificates") {
    auto dodeca = subdivision_lower_bound(dodecahedron());
    REQUIRE(dodeca);
    CHECK(dodeca->bound == 4);
    CHECK(dodeca->target == "subdivide(dodecahedron)");
    CHECK(validate_certificate(*dodeca, dodecahedron()));

    CHECK_FALSE(subdivision_lower_bound(petersen()));
    CHECK_FALSE(subdivision_lower_bound(cycle(5)));  // gamma(C5) = 2 = delta
}

TEST_CASE("square lower bound certificates") {
    auto g1 = square_lower_bound(cage_g1());
    REQUIRE(g1);
    CHECK(g1->bound == 6);
    CHECK(g1->gamma.kind == GammaEvidenceKind::CeilingBound);
    CHECK(g1->gamma.value == 9);  // ceil(58/7)
    CHECK(validate_certificate(*g1, cage_g1()));

    CHECK_FALSE(square_lower_bound(cycle(9)));   // delta 2
    CHECK_FALSE(square_lower_bound(petersen())); // girth 5
}

TEST_CASE("certificate bounds never exceed solved values") {
    // girth certificate vs. the solver on solvable-size graphs
    for (const Graph& g : {cycle(7), cycle(8), cycle(9)}) {
        auto cert = girth5_lower_bound(g);
        REQUIRE(cert);
        CHECK(cert->bound <= attacking_value(g, 4));
    }
}

TEST_CASE("needed lower bound: no dominated vertex and gamma >= 3 forces cc > 2") {
    int hits = 0;
    for (int n = 4; n <= 8; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            if (!is_triangle_free(g)) continue;
            if (find_dominated_vertex(g)) continue;
            auto gamma = domination_number(g);
            if (gamma->size() < 3) continue;
            SolveTable two = solve_attacking(g, 2);
            CHECK_FALSE(two.best_placement());
            ++hits;
        }
    }
    CHECK(hits >= 1);  // C7 qualifies at least
}

TEST_CASE("figure-2 guard graph: triangles break the lemma") {
    Graph g = *builtin_graph("fig2");
    CHECK_FALSE(is_triangle_free(g));
    CHECK_FALSE(find_dominated_vertex(g));
    CHECK(domination_number(g)->size() == 3);
    CHECK(attacking_value(g, 3) == 2);
}

TEST_CASE("bound audit") {
    auto report = bound_audit(cycle(7), 3);
    CHECK(report.c == 2);
    CHECK(report.cc == 3);
    CHECK(report.gamma == 3);
    CHECK(report.sandwich_ok);
    CHECK(report.cc1_iff_gamma1);
    REQUIRE(report.girth5);
    CHECK(report.girth5_tight);

    auto lp = bound_audit(line_graph(petersen()), 4);
    CHECK(lp.c == 2);
    CHECK(lp.cc == 4);
    CHECK(lp.cc - lp.c == 2);
    CHECK(lp.sandwich_ok);

    CHECK_THROWS_AS(bound_audit(cycle(7), 2), std::runtime_error);  // cc = 3 > k_max
}
