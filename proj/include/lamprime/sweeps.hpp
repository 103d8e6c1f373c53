#pragma once

#include "lamprime/envelope.hpp"
#include "lamprime/metric_lp.hpp"
#include "lamprime/sensitivity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lamprime {

/// Schedule points that would land on or above 1 are solved here instead.
Rational domain_top();

struct CoverMember {
    /// Solve parameter.
    Rational lambda;
    CostLine line;
    Rational value;
    /// Distances; empty when a cover was loaded without vectors.
    PairVector x;
    LambdaInterval interval;
};

/// Solutions with certified lambda intervals whose union covers [domain_lo, domain_hi].
/// A domain_hi of 1 is open: intervals must reach 1 only as a clamp.
struct CoverFamily {
    std::string algorithm;
    Objective objective = Objective::lamprime;
    Rational epsilon;
    Rational domain_lo;
    Rational domain_hi;
    std::vector<CoverMember> members;
    int lp_solve_count = 0;
    int orlp_solve_count = 0;

    std::vector<CostLine> lines() const;
};

/// Default lower end: 4/n^2 for LambdaPrime (1 - 2^-20 when n = 2), the first
/// LambdaCC schedule point otherwise.
Rational default_domain_lo(int n, const Rational& eps, Objective o);
Rational default_domain_hi(int n, const Rational& eps, Objective o);

/// lambda_1 = 4/n^2, lambda_k = (1+eps)^2 lambda_{k-1} up to q, then 1/(1+eps).
/// Values are returned unclamped (a point may equal or exceed 1).
std::vector<Rational> geometric_schedule(int n, const Rational& eps);

/// LambdaPrime: the geometric schedule, each member certified on
/// [lambda/(1+eps), (1+eps) lambda]. LambdaCC: the LambdaCC schedule, member i
/// certified on [lambda_{i-1}, lambda_{i+1}].
CoverFamily sweep_geometric(const Graph& g, const Rational& eps, Objective o = Objective::lamprime);

/// Frontier extension: solve, push the frontier with forward ORLP, jump past it.
CoverFamily sweep_fe(const Graph& g, const Rational& eps, Objective o = Objective::lamprime);

/// Frontier extension followed by a minimum greedy subcover of the full
/// ORLP ranges of the FE members.
CoverFamily sweep_febe(const Graph& g, const Rational& eps, Objective o = Objective::lamprime);

/// Indices of a minimum-size subfamily of intervals covering [lo, hi]
/// (greedy by farthest reach). Empty optional if no cover exists.
std::optional<std::vector<std::size_t>> greedy_interval_cover(const std::vector<LambdaInterval>& intervals,
                                                              const Rational& lo, const Rational& hi);

struct ForwardFactor {
    std::vector<Rational> ratios;
    int p = 0;
};
/// w_i = alpha_{i+1} / beta_i, w_last = 1 / beta_last, p = max(max_i ceil(log_{1+eps} w_i), 0).
ForwardFactor forward_factor(const std::vector<LambdaInterval>& optimal_ranges, const Rational& eps);

/// Smallest integer p with base^p >= w (base > 1, w > 0).
int ceil_log(const Rational& w, const Rational& base);

struct CoverGap {
    Rational lo;
    Rational hi;
};

struct CoverReport {
    /// ORLP ranges recomputed for every member, same order as the family.
    std::vector<LambdaInterval> certified;
    std::vector<CoverGap> gaps;
    bool intervals_cover = false;
    Rational worst_ratio;
    Rational worst_lambda;
    bool ratio_ok = false;
    int grid_points = 0;

    bool ok() const { return intervals_cover && ratio_ok; }
};

/// Interval certificate plus grid audit at `grid_density` geometric points,
/// every family-envelope breakpoint, every LP breakpoint and the member lambdas.
/// Members without distance vectors are re-verified against a fresh solve.
CoverReport certify_cover(const CoverFamily& family, const Graph& g, int grid_density);

/// Envelope of the family's lines on its domain.
PwlCurve family_envelope(const CoverFamily& family);

}  // namespace lamprime
