#pragma once

#include "lamprime/graph.hpp"
#include "lamprime/rational.hpp"

#include <vector>

namespace lamprime {

/// Partition of the nodes. Cluster ids are relabelled in order of first
/// appearance, so equal partitions compare equal.
class Clustering {
public:
    explicit Clustering(std::vector<int> assignment);

    static Clustering singletons(int n);
    static Clustering one_cluster(int n);

    int num_nodes() const { return static_cast<int>(assignment_.size()); }
    int num_clusters() const { return num_clusters_; }
    int cluster_of(Node v) const { return assignment_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& assignment() const { return assignment_; }
    std::vector<std::vector<Node>> clusters() const;

    friend bool operator==(const Clustering&, const Clustering&) = default;

private:
    std::vector<int> assignment_;
    int num_clusters_ = 0;
};

/// Score of one fixed solution as the line P + lambda * N.
/// P is the positive-mistake mass, N the negative-mistake mass.
struct CostLine {
    Rational P;
    Rational N;

    Rational value_at(const Rational& lambda) const { return P + lambda * N; }

    friend bool operator==(const CostLine&, const CostLine&) = default;
};

/// Dense distances x_ij over all pairs, indexed by PairIndex.
using PairVector = std::vector<Rational>;

/// Positive node weights pi(v) for the node-weighted objective.
class NodeWeights {
public:
    explicit NodeWeights(std::vector<Rational> weights);

    static NodeWeights uniform(int n);
    static NodeWeights degrees(const Graph& g);

    int size() const { return static_cast<int>(weights_.size()); }
    const Rational& operator[](Node v) const { return weights_[static_cast<std::size_t>(v)]; }

private:
    std::vector<Rational> weights_;
};

void require_open_unit(const Rational& lambda, const char* what);

/// sum over clusters of cut(S)/2 + lambda * C(|S|,2).
Rational lamprime_score(const Clustering& c, const Graph& g, const Rational& lambda);

/// LambdaCC score: (1-lambda) per cut edge plus lambda per co-clustered non-edge.
Rational lamcc_score(const Clustering& c, const Graph& g, const Rational& lambda);

/// Cut edges plus lambda * sum of pi(i) pi(j) over co-clustered pairs.
Rational weighted_lamprime_score(const Clustering& c, const Graph& g, const NodeWeights& w,
                                 const Rational& lambda);

CostLine line_of(const Clustering& c, const Graph& g);

/// Requires every x_ij in [0,1].
CostLine line_of(const PairVector& x, const Graph& g);

/// 0/1 distance vector of a clustering.
PairVector distances_of(const Clustering& c);

}  // namespace lamprime
