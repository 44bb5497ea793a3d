/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <doctest.h>

#include "oracles.hh"

#include <locdom/canonical.hh>
#include <locdom/errors.hh>
#include <locdom/families.hh>
#include <locdom/graph.hh>

#include <array>
#include <random>

using namespace locdom;

namespace
{
    auto edges_of(std::initializer_list<Edge> e) -> std::vector<Edge>
    {
        return e;
    }
}

TEST_CASE("from_edge_list builds exactly the given adjacencies")
{
    auto p2 = Graph::from_edge_list(2, edges_of({ { 0, 1 } }));
    CHECK(p2.order() == 2);
    CHECK(p2.size() == 1);
    CHECK(p2.adjacent(0, 1));
    CHECK(p2.adjacent(1, 0));

    auto p6 = Graph::from_edge_list(6, edges_of({ { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 5 } }));
    CHECK(diameter(p6) == 5);

    auto dup = Graph::from_edge_list(3, edges_of({ { 0, 1 }, { 1, 0 }, { 0, 1 } }));
    CHECK(dup.size() == 1);
}

TEST_CASE("from_edge_list rejects bad input")
{
    CHECK_THROWS_AS(Graph::from_edge_list(3, edges_of({ { 0, 0 } })), PreconditionError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, edges_of({ { 0, 3 } })), PreconditionError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, edges_of({ { -1, 2 } })), PreconditionError);
    CHECK_THROWS_AS(Graph::from_edge_list(0, edges_of({})), PreconditionError);
}

TEST_CASE("distances on small examples")
{
    auto c7 = cycle_graph(7);
    CHECK(c7.distances()(0, 4) == 3);
    CHECK(diameter(c7) == 3);
    CHECK(path_graph(6).distances()(0, 5) == 5);
    CHECK(diameter(complete_graph(5)) == 1);

    auto two = disjoint_union(path_graph(2), path_graph(2));
    CHECK(two.distances()(0, 2) == DistanceMatrix::unreachable);
    CHECK_FALSE(two.is_connected());
    CHECK_FALSE(two.distances().all_finite());
    CHECK_THROWS_AS(diameter(two), PreconditionError);
}

TEST_CASE("distance matrix agrees with Floyd-Warshall and is a metric on random connected graphs")
{
    std::mt19937 rng(20240611);
    for (int trial = 0 ; trial < 200 ; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 12)(rng);
        double p = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
        auto a = oracle::random_connected(n, p, rng);
        auto g = oracle::from_matrix(a);
        auto fw = oracle::floyd_warshall(a);
        auto & d = g.distances();
        REQUIRE(g.is_connected());
        int max_entry = 0;
        for (int u = 0 ; u < n ; ++u)
            for (int v = 0 ; v < n ; ++v) {
                REQUIRE(d(u, v) == fw[u][v]);
                CHECK(d(u, v) == d(v, u));
                CHECK((d(u, v) == 1) == g.adjacent(u, v));
                max_entry = std::max(max_entry, fw[u][v]);
                for (int w = 0 ; w < n ; ++w)
                    CHECK(d(u, w) <= d(u, v) + d(v, w));
            }
        for (int v = 0 ; v < n ; ++v)
            CHECK(d(v, v) == 0);
        CHECK(diameter(g) == max_entry);
    }
}

TEST_CASE("copies share the distance cache safely")
{
    auto g = cycle_graph(9);
    Graph h = g;
    CHECK(&g.distances() == &h.distances());
    CHECK(h.distances()(0, 4) == 4);
}

TEST_CASE("adjacency is symmetric and irreflexive on generated graphs")
{
    std::array dims{ 3, 4 };
    for (auto & g : { path_graph(7), cycle_graph(5), wheel_graph(8), strong_grid(dims), complement(cycle_graph(6)) })
        for (int u = 0 ; u < g.order() ; ++u) {
            CHECK_FALSE(g.adjacent(u, u));
            for (int v = 0 ; v < g.order() ; ++v)
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        }
}

TEST_CASE("strong product")
{
    auto p2 = path_graph(2);
    CHECK(are_isomorphic(strong_product(p2, p2), complete_graph(4)));

    auto king = strong_product(path_graph(5), path_graph(5));
    CHECK(king.order() == 25);
    CHECK(king.degree(0) == 3);
    CHECK(king.degree(12) == 8);
    CHECK(strong_product(path_graph(3), path_graph(3)).degree(4) == 8);

    // Row-major numbering: king distance is the Chebyshev distance.
    for (int u = 0 ; u < 25 ; ++u)
        for (int v = 0 ; v < 25 ; ++v)
            CHECK(king.distances()(u, v) == std::max(std::abs(u / 5 - v / 5), std::abs(u % 5 - v % 5)));

    std::array dims{ 5, 5, 5 };
    auto cube = strong_grid(dims);
    CHECK(cube.order() == 125);
    CHECK(cube.degree(62) == 26);
}

TEST_CASE("strong product is associative up to isomorphism")
{
    auto a = path_graph(2), b = cycle_graph(3), c = path_graph(3);
    CHECK(canonical_form(strong_product(strong_product(a, b), c)) == canonical_form(strong_product(a, strong_product(b, c))));
    // With row-major numbering the labelled graphs coincide too.
    CHECK(strong_product(strong_product(a, b), c) == strong_product(a, strong_product(b, c)));
}

TEST_CASE("join, union and complement")
{
    CHECK(are_isomorphic(join(complete_graph(1), complement(complete_graph(4))), star_graph(5)));
    auto g = join(complete_graph(2), complement(complete_graph(2)));
    CHECK(g.order() == 4);
    CHECK(g.size() == 5);

    std::mt19937 rng(7);
    for (int trial = 0 ; trial < 20 ; ++trial) {
        auto h = oracle::from_matrix(oracle::random_connected(8, 0.3, rng));
        CHECK(complement(complement(h)) == h);
        CHECK(complement(h).size() + h.size() == 28);
    }

    auto u = disjoint_union(path_graph(3), cycle_graph(4));
    CHECK(u.order() == 7);
    CHECK(u.size() == 6);
    CHECK(u.adjacent(3, 6));
    CHECK_FALSE(u.adjacent(2, 3));
}

TEST_CASE("induced subgraphs, deletion and relabelling")
{
    auto c5 = cycle_graph(5);
    std::vector<Vertex> keep{ 4, 0, 1 };
    auto p3 = induced_subgraph(c5, keep);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK_FALSE(p3.adjacent(0, 2));

    auto d = remove_vertex(c5, 2);
    CHECK(d.order() == 4);
    CHECK(are_isomorphic(d, path_graph(4)));

    std::vector<Vertex> image{ 2, 0, 1 };
    auto r = relabel(path_graph(3), image);
    CHECK(r.adjacent(2, 0));
    CHECK(r.adjacent(0, 1));
    CHECK(are_isomorphic(r, path_graph(3)));
}

TEST_CASE("cut vertices match brute-force deletion")
{
    std::mt19937 rng(99);
    for (int trial = 0 ; trial < 100 ; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 10)(rng);
        auto g = oracle::from_matrix(oracle::random_connected(n, 0.15, rng));
        auto cuts = cut_vertices(g);
        for (Vertex v = 0 ; v < n ; ++v) {
            bool expected = n > 2 && ! oracle::connected(oracle::adjacency(remove_vertex(g, v)));
            CHECK(cuts.contains(v) == expected);
        }
    }
}

TEST_CASE("tree profiles")
{
    auto p6 = tree_profile(path_graph(6));
    CHECK(p6.leaves == 2);
    CHECK(p6.supports == 2);
    CHECK(p6.strong_support_vertices.empty());

    auto star = tree_profile(star_graph(5));
    CHECK(star.leaves == 4);
    CHECK(star.supports == 1);
    CHECK(star.strong_support_vertices.members() == std::vector<Vertex>{ 0 });

    std::array legs{ 3, 3 };
    auto s23 = tree_profile(spider(legs));
    CHECK(s23.leaves == 2);
    CHECK(s23.supports == 2);
    CHECK(s23.strong_support_vertices.empty());

    CHECK_THROWS_AS(tree_profile(cycle_graph(4)), PreconditionError);
    CHECK(path_graph(5).is_tree());
    CHECK_FALSE(cycle_graph(5).is_tree());
}

TEST_CASE("vertex sets")
{
    std::vector<Vertex> m{ 1, 64, 70 };
    auto s = VertexSet::from_members(80, m);
    CHECK(s.count() == 3);
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(63));
    CHECK(s.members() == m);
    s.erase(64);
    CHECK(s.count() == 2);
    std::vector<Vertex> bad{ 80 };
    CHECK_THROWS_AS(VertexSet::from_members(80, bad), PreconditionError);
    CHECK_FALSE(VertexSet(3) == VertexSet(4));
}

TEST_CASE("graphs wider than one word")
{
    auto c100 = cycle_graph(100);
    CHECK(c100.words_per_row() == 2);
    CHECK(c100.adjacent(99, 0));
    CHECK(c100.adjacent(63, 64));
    CHECK(diameter(c100) == 50);
    CHECK(c100.distances()(10, 70) == 40);
}
