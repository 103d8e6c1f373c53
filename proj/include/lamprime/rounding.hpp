#pragma once

#include "lamprime/sweeps.hpp"

#include <vector>

namespace lamprime {

/// Deterministic region growing. The lowest-index unclustered node is the
/// pivot; among radii r drawn from its distinct distances below 1/2 (and 0) it
/// picks the ball {j : x_pj <= r} minimising
///   cut(ball, rest) / (seed + sum_{edges inside} x_uv + sum_{edges leaving} (r - x_pu)),
/// with seed = lp_value / n and ties broken towards the smaller radius.
/// Only unclustered nodes take part at each step.
Clustering round_region_growing(const PairVector& x, const Graph& g, const Rational& lp_value);
Clustering round_region_growing(const LpSolution& s, const Graph& g);

struct RoundedMember {
    Clustering clustering;
    LambdaInterval interval;
    Rational lambda;
    /// Objective score of the clustering at lambda.
    Rational score;
    Rational lp_value;
    /// score / lp_value (1 when both are 0).
    Rational ratio;
};

/// Rounds every member of a cover at its own lambda. Members must carry distances.
std::vector<RoundedMember> build_clustering_family(const CoverFamily& cover, const Graph& g);

}  // namespace lamprime
