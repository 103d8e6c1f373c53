#pragma once

#include "lamprime/metric_lp.hpp"

#include <vector>

namespace lamprime {

struct RingLp {
    Rational value;
    /// Smallest minimising cluster length.
    int t = 0;
};

/// min over t in 1..n of (n/t)(1 + lambda C(t,2)) for the ring on n = 2^k
/// nodes. Requires k >= 3 and lambda in [8/n^2, 1/2].
RingLp ring_lp(int k, const Rational& lambda);

/// Ring score of the solution with every edge at distance 1/t: (n/t)(1 + lambda C(t,2)).
Rational ring_lp_at_t(int k, const Rational& lambda, int t);

/// n (sqrt(2 lambda) - lambda/2), lambda in [0,1].
double ring_g(int k, double lambda);
/// (3n/4) sqrt(2 lambda), lambda in [0,1].
double ring_q(int k, double lambda);

/// lambda_i = 2 / 2^(2(k-i)) for i in 1..k-1.
Rational ring_special_lambda(int k, int i);
/// t_i = 2^(k-i).
int ring_special_t(int k, int i);

/// Upper envelope f built from the special solutions; lambda in [lambda_1, lambda_{k-1}].
Rational ring_f(int k, const Rational& lambda);

/// Star LP solution: centre-leaf pairs at 1/2, leaf-leaf pairs at 1.
struct StarLp {
    PairVector x;
    CostLine line;
    /// Open interval (1/(n-1), 1/2) on which the solution is optimal.
    Rational valid_lo;
    Rational valid_hi;
};
StarLp star_lp_solution(int n);

inline constexpr double kRingM = 1.8856180831641267;  // 4 sqrt(2) / 3

/// (2x^2 - 1 + 2x sqrt(x^2 - 1))^2 for x >= 1.
double gamma_factor(double x);

struct RingLowerBound {
    int B = 0;
    double gamma = 0;
    double M = kRingM;
};
/// B = ceil((2/3) log_{gamma(pM)}(n/4)); requires p > 1 and k >= 3.
RingLowerBound ring_lower_bound(int k, double p);

/// lambda_i = gamma_i / (1 + gamma_i), gamma_1 = 1/n^2, gamma_{i+1} = (1+eps) gamma_i,
/// for i = 1..q with q = ceil(log_{1+eps} n^4) + 1.
std::vector<Rational> lamcc_schedule(int n, const Rational& eps);

/// (b/a) (1-a)/(1-b) for 0 < a <= b < 1.
Rational lamcc_ratio(const Rational& a, const Rational& b);

/// Next LambdaCC sweep point: (1+eps) lambda / (1 + eps lambda).
Rational lamcc_next(const Rational& lambda, const Rational& eps);

}  // namespace lamprime

namespace lamprime {

/// One grid point of the ring bound chain q <= g <= LP <= f <= sqrt(2) g <= M q.
struct RingSandwichPoint {
    Rational lambda;
    double q = 0;
    double g = 0;
    Rational lp;
    Rational f;
    bool ok = false;
};

struct RingSandwichReport {
    std::vector<RingSandwichPoint> points;
    /// Largest relative violation seen (0 when every link holds exactly).
    double worst_violation = 0;
    bool ok() const;
};

/// Checks the chain at `grid` evenly spaced rational points of [8/n^2, 1/2].
/// Floating links use relative slack `tol`; LP <= f is checked exactly.
RingSandwichReport ring_sandwich(int k, int grid, double tol = 1e-9);

}  // namespace lamprime
