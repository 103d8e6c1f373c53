#include "lamprime/graph.hpp"
#include "lamprime/rational.hpp"

#include <doctest.h>

#include <numeric>

using namespace lamprime;

namespace {

int degree_sum(const Graph& g) {
    int s = 0;
    for (int v = 0; v < g.num_nodes(); ++v) s += g.degree(v);
    return s;
}

}  // namespace

TEST_CASE("ring generator") {
    Graph r3 = gen_ring(3);
    CHECK(r3.num_nodes() == 8);
    CHECK(r3.num_edges() == 8);
    for (int v = 0; v < 8; ++v) {
        CHECK(r3.degree(v) == 2);
        CHECK(r3.has_edge(v, (v + 1) % 8));
    }
    Graph r2 = gen_ring(2);
    CHECK(r2.num_nodes() == 4);
    CHECK(r2.num_edges() == 4);
    CHECK(gen_ring(4).num_edges() == 16);
    CHECK_THROWS_AS(gen_ring(1), PreconditionError);
}

TEST_CASE("star generator") {
    Graph s5 = gen_star(5);
    CHECK(s5.degree(0) == 4);
    for (int v = 1; v < 5; ++v) CHECK(s5.degree(v) == 1);
    Graph s3 = gen_star(3);
    CHECK(s3.num_edges() == 2);
    CHECK(s3 == Graph(3, {{1, 0}, {0, 2}}));
    CHECK(gen_star(8).num_edges() == 7);
    CHECK_THROWS_AS(gen_star(2), PreconditionError);
}

TEST_CASE("other generators") {
    CHECK(gen_path(5).num_edges() == 4);
    CHECK(gen_complete(5).num_edges() == 10);
    Graph a = gen_gnp(9, 0.5, 42);
    Graph b = gen_gnp(9, 0.5, 42);
    CHECK(a == b);
    CHECK(gen_gnp(9, 0.0, 1).num_edges() == 0);
    CHECK(gen_gnp(9, 1.0, 1).num_edges() == 36);
}

TEST_CASE("load_graph") {
    Graph p = load_graph("0 1\n1 2");
    CHECK(p.num_nodes() == 3);
    CHECK(p.num_edges() == 2);
    Graph h = load_graph("# c\nn 4\n0 1");
    CHECK(h.num_nodes() == 4);
    CHECK(h.num_edges() == 1);
    CHECK(h.degree(2) == 0);
    CHECK_THROWS_AS(load_graph("0 0"), ParseError);
    CHECK_THROWS_AS(load_graph("0 1\n1 0"), ParseError);
    CHECK_THROWS_AS(load_graph("n 2\n0 5"), ParseError);
    CHECK_THROWS_AS(load_graph("0 x"), ParseError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), PreconditionError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), PreconditionError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);
}

TEST_CASE("save/load round trip and degree sums") {
    for (int k = 2; k <= 5; ++k) {
        Graph g = gen_ring(k);
        std::string text = save_graph(g);
        CHECK(save_graph(load_graph(text)) == text);
        CHECK(load_graph(text) == g);
    }
    for (const Graph& g : {gen_star(7), gen_path(6), gen_gnp(8, 0.4, 9), load_graph("n 5\n3 1\n0 4")})
        CHECK(degree_sum(g) == 2 * g.num_edges());
    CHECK(save_graph(Graph(3, {{2, 1}, {1, 0}})) == "n 3\n0 1\n1 2\n");
}

TEST_CASE("pair index is lexicographic") {
    PairIndex idx(5);
    CHECK(idx.size() == 10);
    int expect = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            CHECK(idx(i, j) == expect);
            CHECK(idx(j, i) == expect);
            CHECK(idx.pair(expect) == Edge{i, j});
            ++expect;
        }
}

TEST_CASE("connectivity") {
    CHECK(gen_ring(3).is_connected());
    CHECK_FALSE(load_graph("n 4\n0 1\n2 3").is_connected());
}
