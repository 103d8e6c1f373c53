#pragma once

#include "lamprime/envelope.hpp"
#include "lamprime/graph.hpp"
#include "lamprime/objectives.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace lamprime {

inline constexpr int kDefaultPartitionCap = 12;

/// Set partitions of {0..n-1} as restricted-growth strings, in lexicographic order.
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(int n, int n_max = kDefaultPartitionCap);

    /// Current restricted-growth string; valid until the next call to advance().
    const std::vector<int>& current() const { return digits_; }
    /// Moves to the next partition; returns false once all have been visited.
    bool advance();

private:
    std::vector<int> digits_;
    std::vector<int> prefix_max_;
};

void for_each_partition(int n, int n_max, const std::function<void(const std::vector<int>&)>& visit);

/// Exact OPT(lambda) with one optimal clustering per linear piece.
struct ExactCurve {
    PwlCurve curve;
    std::vector<Clustering> family;
};

/// Lower envelope of every partition's cost line over [0, 1].
ExactCurve exact_opt_curve(const Graph& g, int n_max = kDefaultPartitionCap);

struct SparsestCut {
    Rational lambda_star;
    /// Two clusters; the cluster containing node 0 has id 0.
    Clustering bipartition;
};

/// min over proper subsets S of cut(S) / (|S| |V \ S|) by exhaustive search.
SparsestCut scaled_sparsest_cut(const Graph& g, int n_max = 20);

}  // namespace lamprime
