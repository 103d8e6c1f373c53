#pragma once

#include "lamprime/metric_lp.hpp"

namespace lamprime {

/// Certified lambda range of one fixed LP solution. `epsilon == 0` is an
/// optimal range. An endpoint that hit the edge of [0, 1] is flagged as a clamp.
struct LambdaInterval {
    Rational lo;
    Rational hi;
    Rational epsilon;
    bool lo_clamped = false;
    bool hi_clamped = false;

    bool is_optimal_range() const { return sgn(epsilon) == 0; }
    bool contains(const Rational& lambda) const { return lo <= lambda && lambda <= hi; }
};

struct OrlpResult {
    Rational theta;
    /// theta reached the distance from lambda0 to the domain edge.
    bool clamped = false;
};

/// Largest theta >= 0 such that x* stays a (1+eps)-approximation at
/// lambda0 + s*theta. Solves the perturbation LP over (y, theta): dual
/// feasibility A^T y <= c(lambda0) - s*theta plus the relaxed strong-duality row.
/// Requires x* to carry a valid dual certificate at lambda0.
OrlpResult orlp(const LpSolution& x, int s, const Rational& lambda0, const Rational& eps, const Graph& g);

/// Same LP, driven only by the solution's LambdaPrime line (x* enters the
/// perturbation LP through P and N alone). The caller vouches for optimality.
OrlpResult orlp_line(const CostLine& line, Objective o, int s, const Rational& lambda0, const Rational& eps,
                     const Graph& g);

/// [lambda0 - theta_minus, lambda0 + theta_plus].
LambdaInterval eps_range(const LpSolution& x, const Rational& lambda0, const Rational& eps, const Graph& g);
LambdaInterval eps_range(const LpSolution& x, const Rational& eps, const Graph& g);
LambdaInterval eps_range_line(const CostLine& line, Objective o, const Rational& lambda0, const Rational& eps,
                              const Graph& g);

}  // namespace lamprime
