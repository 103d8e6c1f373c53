#include "lamprime/exact_oracle.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace lamprime;

TEST_CASE("partition enumeration counts Bell numbers") {
    for (int n = 1; n <= 10; ++n) {
        std::uint64_t count = 0;
        for_each_partition(n, 12, [&](const std::vector<int>&) { ++count; });
        CHECK(count == oracle::bell(n));
    }
    CHECK(oracle::bell(3) == 5);
    CHECK(oracle::bell(4) == 15);
    CHECK(oracle::bell(10) == 115975);
    CHECK_THROWS_AS(PartitionEnumerator(13), PreconditionError);
}

TEST_CASE("partitions are distinct restricted-growth strings") {
    std::set<std::vector<int>> seen;
    std::vector<int> prev;
    for_each_partition(6, 12, [&](const std::vector<int>& d) {
        CHECK(d[0] == 0);
        int mx = 0;
        for (std::size_t i = 1; i < d.size(); ++i) {
            CHECK(d[i] <= mx + 1);
            mx = std::max(mx, d[i]);
        }
        if (!prev.empty()) CHECK(prev < d);
        prev = d;
        CHECK(seen.insert(d).second);
    });
}

TEST_CASE("star n=5 optimal family") {
    ExactCurve e = exact_opt_curve(gen_star(5));
    CHECK(e.family.size() == 4);
    // Merged leaves decrease piece by piece: 3, 2, 1, 0.
    for (std::size_t i = 0; i < e.family.size(); ++i) {
        int with_center = 0;
        for (int v = 1; v < 5; ++v)
            if (e.family[i].cluster_of(v) == e.family[i].cluster_of(0)) ++with_center;
        CHECK(with_center == 4 - static_cast<int>(i));
    }
    CHECK(e.curve.value_at(make_rational(3, 10)) == make_rational(14, 5));
}

TEST_CASE("ring k=3 at 1/8") {
    ExactCurve e = exact_opt_curve(gen_ring(3));
    CHECK(e.curve.value_at(make_rational(1, 8)) == make_rational(7, 2));
}

TEST_CASE("exact curve matches brute force and its structural invariants") {
    for (const Graph& g : oracle::small_corpus()) {
        ExactCurve e = exact_opt_curve(g);
        e.curve.check_invariants();
        CHECK(e.curve.lo() == 0);
        CHECK(e.curve.hi() == 1);
        CHECK(e.curve.breakpoints().size() <= static_cast<std::size_t>(g.num_edges()));
        CHECK(e.family.size() == e.curve.size());
        for (std::size_t i = 0; i < e.family.size(); ++i) CHECK(line_of(e.family[i], g) == e.curve.pieces()[i].line);
        // The family size is bounded by one more than the last piece's cut count.
        CHECK(Rational(static_cast<long>(e.family.size())) <= e.curve.pieces().back().line.P + 1);
        for (int s = 1; s < 20; ++s) {
            Rational l = make_rational(s, 20);
            CHECK(e.curve.value_at(l) == oracle::brute_opt(g, l));
        }
        auto cut = scaled_sparsest_cut(g);
        if (sgn(cut.lambda_star) > 0 && cut.lambda_star < 1) {
            REQUIRE_FALSE(e.curve.breakpoints().empty());
            CHECK(e.curve.breakpoints().front() == cut.lambda_star);
            CHECK(e.family.front() == Clustering::one_cluster(g.num_nodes()));
        }
        // Near 1 every cluster of the last piece is a clique.
        for (const auto& cluster : e.family.back().clusters())
            for (std::size_t a = 0; a < cluster.size(); ++a)
                for (std::size_t b = a + 1; b < cluster.size(); ++b) CHECK(g.has_edge(cluster[a], cluster[b]));
    }
}

TEST_CASE("scaled sparsest cut") {
    CHECK(scaled_sparsest_cut(gen_ring(3)).lambda_star == make_rational(1, 8));
    for (int n = 3; n <= 8; ++n) CHECK(scaled_sparsest_cut(gen_star(n)).lambda_star == make_rational(1, n - 1));
    CHECK(scaled_sparsest_cut(gen_complete(4)).lambda_star == 1);
    CHECK(scaled_sparsest_cut(load_graph("n 4\n0 1\n2 3")).lambda_star == 0);
    auto c = scaled_sparsest_cut(gen_ring(3));
    CHECK(c.bipartition.num_clusters() == 2);
    CHECK(c.bipartition.cluster_of(0) == 0);
    CHECK_THROWS_AS(scaled_sparsest_cut(Graph(1, {})), PreconditionError);
}
