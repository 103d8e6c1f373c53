#include "lamprime/objectives.hpp"

#include <algorithm>

namespace lamprime {

Clustering::Clustering(std::vector<int> assignment) : assignment_(std::move(assignment)) {
    if (assignment_.empty()) throw PreconditionError("clustering of zero nodes");
    std::vector<int> relabel;
    for (int& id : assignment_) {
        if (id < 0) throw PreconditionError("negative cluster id");
        if (static_cast<std::size_t>(id) >= relabel.size()) relabel.resize(static_cast<std::size_t>(id) + 1, -1);
        auto& slot = relabel[static_cast<std::size_t>(id)];
        if (slot < 0) slot = num_clusters_++;
        id = slot;
    }
}

Clustering Clustering::singletons(int n) {
    std::vector<int> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = i;
    return Clustering(std::move(a));
}

Clustering Clustering::one_cluster(int n) { return Clustering(std::vector<int>(static_cast<std::size_t>(n), 0)); }

std::vector<std::vector<Node>> Clustering::clusters() const {
    std::vector<std::vector<Node>> out(static_cast<std::size_t>(num_clusters_));
    for (int v = 0; v < num_nodes(); ++v) out[static_cast<std::size_t>(cluster_of(v))].push_back(v);
    return out;
}

NodeWeights::NodeWeights(std::vector<Rational> weights) : weights_(std::move(weights)) {
    for (const auto& w : weights_) {
        if (sgn(w) <= 0) throw PreconditionError("node weights must be positive");
    }
}

NodeWeights NodeWeights::uniform(int n) { return NodeWeights(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1))); }

NodeWeights NodeWeights::degrees(const Graph& g) {
    std::vector<Rational> w;
    for (int v = 0; v < g.num_nodes(); ++v) w.emplace_back(g.degree(v));
    return NodeWeights(std::move(w));
}

void require_open_unit(const Rational& lambda, const char* what) {
    if (sgn(lambda) <= 0 || lambda >= 1) {
        throw PreconditionError(std::string(what) + ": lambda must lie in (0,1), got " + to_string(lambda));
    }
}

namespace {

void require_partition_of(const Clustering& c, const Graph& g) {
    if (c.num_nodes() != g.num_nodes()) throw PreconditionError("clustering does not cover the graph's nodes");
}

// (cut edges, co-clustered pairs, co-clustered edges)
struct Counts {
    long cut = 0;
    long inside_pairs = 0;
    long inside_edges = 0;
};

Counts count(const Clustering& c, const Graph& g) {
    Counts k;
    for (auto [u, v] : g.edges()) {
        if (c.cluster_of(u) == c.cluster_of(v)) {
            ++k.inside_edges;
        } else {
            ++k.cut;
        }
    }
    std::vector<long> sizes(static_cast<std::size_t>(c.num_clusters()), 0);
    for (int v = 0; v < c.num_nodes(); ++v) ++sizes[static_cast<std::size_t>(c.cluster_of(v))];
    for (long s : sizes) k.inside_pairs += s * (s - 1) / 2;
    return k;
}

}  // namespace

CostLine line_of(const Clustering& c, const Graph& g) {
    require_partition_of(c, g);
    Counts k = count(c, g);
    return {Rational(k.cut), Rational(k.inside_pairs)};
}

Rational lamprime_score(const Clustering& c, const Graph& g, const Rational& lambda) {
    require_open_unit(lambda, "lamprime_score");
    require_partition_of(c, g);
    Rational total = 0;
    for (const auto& cluster : c.clusters()) {
        long cut = 0;
        for (Node v : cluster)
            for (Node w : g.neighbors(v))
                if (c.cluster_of(w) != c.cluster_of(v)) ++cut;
        long s = static_cast<long>(cluster.size());
        total += make_rational(cut, 2) + lambda * Rational(s * (s - 1) / 2);
    }
    return total;
}

Rational lamcc_score(const Clustering& c, const Graph& g, const Rational& lambda) {
    require_open_unit(lambda, "lamcc_score");
    require_partition_of(c, g);
    Counts k = count(c, g);
    Rational one_minus = 1 - lambda;
    return one_minus * k.cut + lambda * (k.inside_pairs - k.inside_edges);
}

Rational weighted_lamprime_score(const Clustering& c, const Graph& g, const NodeWeights& w,
                                 const Rational& lambda) {
    require_open_unit(lambda, "weighted_lamprime_score");
    require_partition_of(c, g);
    if (w.size() != g.num_nodes()) throw PreconditionError("node weights do not cover every node");
    Rational inside = 0;
    for (const auto& cluster : c.clusters())
        for (std::size_t a = 0; a < cluster.size(); ++a)
            for (std::size_t b = a + 1; b < cluster.size(); ++b) inside += w[cluster[a]] * w[cluster[b]];
    Counts k = count(c, g);
    return Rational(k.cut) + lambda * inside;
}

CostLine line_of(const PairVector& x, const Graph& g) {
    PairIndex idx(g.num_nodes());
    if (static_cast<int>(x.size()) != idx.size()) throw PreconditionError("distance vector has the wrong length");
    CostLine line{0, 0};
    for (const auto& v : x) {
        if (sgn(v) < 0 || v > 1) throw PreconditionError("distance outside [0,1]: " + to_string(v));
        line.N += 1 - v;
    }
    for (auto [u, v] : g.edges()) line.P += x[static_cast<std::size_t>(idx(u, v))];
    return line;
}

PairVector distances_of(const Clustering& c) {
    PairIndex idx(c.num_nodes());
    PairVector x(static_cast<std::size_t>(idx.size()));
    for (int p = 0; p < idx.size(); ++p) {
        auto [i, j] = idx.pair(p);
        x[static_cast<std::size_t>(p)] = c.cluster_of(i) == c.cluster_of(j) ? 0 : 1;
    }
    return x;
}

}  // namespace lamprime
