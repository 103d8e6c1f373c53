#include "lamprime/objectives.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace lamprime;

TEST_CASE("lamprime_score examples") {
    Graph r = gen_ring(3);
    Rational l = make_rational(1, 8);
    CHECK(lamprime_score(Clustering::one_cluster(8), r, l) == make_rational(7, 2));
    CHECK(lamprime_score(Clustering({0, 0, 0, 0, 1, 1, 1, 1}), r, l) == make_rational(7, 2));
    for (const Graph& g : oracle::small_corpus())
        CHECK(lamprime_score(Clustering::singletons(g.num_nodes()), g, make_rational(2, 7)) == g.num_edges());
    CHECK_THROWS_AS(lamprime_score(Clustering::one_cluster(8), r, Rational(0)), PreconditionError);
    CHECK_THROWS_AS(lamprime_score(Clustering::one_cluster(8), r, Rational(1)), PreconditionError);
    CHECK_THROWS_AS(lamprime_score(Clustering::one_cluster(5), r, l), PreconditionError);
}

TEST_CASE("lamcc_score examples") {
    Graph g = gen_gnp(7, 0.5, 3);
    Rational l = make_rational(3, 10);
    CHECK(lamcc_score(Clustering::singletons(7), g, l) == (1 - l) * g.num_edges());
    CHECK(lamcc_score(Clustering::one_cluster(7), g, l) == l * (21 - g.num_edges()));
}

TEST_CASE("scores agree with a pair-by-pair count and with the objective identity") {
    std::mt19937_64 rng(17);
    for (const Graph& g : oracle::small_corpus()) {
        const int n = g.num_nodes();
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<int> label(static_cast<std::size_t>(n));
            for (auto& v : label) v = static_cast<int>(rng() % 3);
            Clustering c(label);
            Rational l = make_rational(static_cast<std::int64_t>(rng() % 999) + 1, 1000);
            Rational score = lamprime_score(c, g, l);
            CHECK(score == oracle::lamprime_by_pairs(label, g, l));
            CHECK(score == lamcc_score(c, g, l) + l * g.num_edges());
            CHECK(score == line_of(c, g).value_at(l));
            CHECK(score == weighted_lamprime_score(c, g, NodeWeights::uniform(n), l));
        }
    }
}

TEST_CASE("weighted score with degree weights") {
    Graph s = gen_star(5);
    CHECK(weighted_lamprime_score(Clustering::one_cluster(5), s, NodeWeights::degrees(s), make_rational(1, 10)) ==
          make_rational(22, 10));
    CHECK(weighted_lamprime_score(Clustering::singletons(5), s, NodeWeights::degrees(s), make_rational(1, 10)) == 4);
    CHECK_THROWS_AS(NodeWeights({Rational(1), Rational(0)}), PreconditionError);
    CHECK_THROWS_AS(weighted_lamprime_score(Clustering::one_cluster(5), s, NodeWeights::uniform(4), make_rational(1, 2)),
                    PreconditionError);
}

TEST_CASE("line_of") {
    Graph s = gen_star(5);
    CHECK(line_of(Clustering::one_cluster(5), s) == CostLine{0, 10});
    CHECK(line_of(Clustering::singletons(5), s) == CostLine{4, 0});
    PairVector x(10, Rational(1));
    PairIndex idx(5);
    for (int i = 1; i < 5; ++i) x[static_cast<std::size_t>(idx(0, i))] = make_rational(1, 2);
    CHECK(line_of(x, s) == CostLine{2, 2});
    x[0] = make_rational(3, 2);
    CHECK_THROWS_AS(line_of(x, s), PreconditionError);
}

TEST_CASE("clustering normalises labels") {
    Clustering a({5, 5, 2, 7});
    CHECK(a.assignment() == std::vector<int>{0, 0, 1, 2});
    CHECK(a.num_clusters() == 3);
    CHECK(a == Clustering({1, 1, 0, 3}));
    CHECK(distances_of(a) == PairVector{0, 1, 1, 1, 1, 1});
}

TEST_CASE("score is increasing in lambda exactly when N > 0") {
    Graph g = gen_path(5);
    Clustering c({0, 0, 1, 1, 1});
    CHECK(lamprime_score(c, g, make_rational(1, 3)) < lamprime_score(c, g, make_rational(1, 2)));
    Clustering s = Clustering::singletons(5);
    CHECK(lamprime_score(s, g, make_rational(1, 3)) == lamprime_score(s, g, make_rational(1, 2)));
}
