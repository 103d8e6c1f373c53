#pragma once

#include "lamprime/envelope.hpp"
#include "lamprime/graph.hpp"
#include "lamprime/objectives.hpp"
#include "lamprime/simplex.hpp"

#include <memory>
#include <vector>

namespace lamprime {

enum class Objective { lamprime, lamcc };

const char* objective_name(Objective o);
Objective parse_objective(std::string_view text);

/// Metric LP relaxation: min c^T x + constant subject to A x >= b, x >= 0.
/// Rows are the three triangle inequalities of every triple i<j<k (long side
/// x_ij, then x_ik, then x_jk) in lexicographic triple order, followed by one
/// bound row -x_p >= -1 per pair.
struct LpProblem {
    int n = 0;
    Rational lambda;
    Objective objective = Objective::lamprime;
    LinearProgram<Rational> program;
    int num_triangle_rows = 0;
    int num_bound_rows = 0;
    /// lambda * C(n,2) for LambdaPrime, lambda * (C(n,2) - m) for LambdaCC.
    Rational constant;

    int num_vars() const { return program.num_vars; }
    int num_rows() const { return static_cast<int>(program.rows.size()); }
};

/// The constraint rows only depend on n; shared by every problem on n nodes.
const std::vector<LinearProgram<Rational>::Row>& metric_rows(int n);

/// c_p = 1 - lambda on edges, -lambda on non-edges.
std::vector<Rational> metric_costs(const Graph& g, const Rational& lambda);

/// Constant term multiplier K: value = c^T x + lambda * K.
Rational objective_offset(const Graph& g, Objective o);

LpProblem build_lp(const Graph& g, const Rational& lambda, Objective o = Objective::lamprime);

struct LpSolution {
    PairVector x;
    Rational lambda;
    /// Objective value (LambdaPrime or LambdaCC per `objective`).
    Rational value;
    /// LambdaPrime line of x; the LambdaCC value is line.value_at(l) - l*m.
    CostLine line;
    Objective objective = Objective::lamprime;
    int num_edges = 0;
    /// One non-negative multiplier per row of A.
    std::vector<Rational> duals;
    /// Dual feasibility and strong duality verified exactly.
    bool certified = false;
};

/// Exact simplex solve with a dual certificate check. Throws std::logic_error
/// if the solver reports infeasible/unbounded or the certificate fails.
LpSolution solve_lp(const LpProblem& p, const Graph& g);
LpSolution solve_lp(const Graph& g, const Rational& lambda, Objective o = Objective::lamprime);

/// Checks y >= 0, A^T y <= c(lambda) and b^T y + lambda K == value.
bool verify_dual_certificate(const Graph& g, const Rational& lambda, Objective o, const std::vector<Rational>& duals,
                             const Rational& value);

/// Exact triangle and [0,1] feasibility.
bool is_metric_feasible(const PairVector& x, int n);

/// Value of a fixed solution at another lambda.
Rational lp_value_at(const LpSolution& s, const Rational& lambda);
Rational objective_value(const CostLine& line, const Rational& lambda, Objective o, int num_edges);

/// Floating-point solve (tolerance 1e-9) for instances too large for exact mode.
struct FloatLpSolution {
    std::vector<double> x;
    double lambda = 0;
    double value = 0;
};
FloatLpSolution solve_lp_float(const Graph& g, double lambda, Objective o = Objective::lamprime);

/// Exact LambdaPrime LP(lambda) on [lo, hi] by breakpoint bisection: solve at
/// both ends, solve where the two lines cross, recurse until the crossing value
/// is already optimal. Every piece carries an optimal basic solution. The
/// LambdaCC LP is this curve minus lambda * m.
class LpCurve {
public:
    LpCurve(const Graph& g, const Rational& lo, const Rational& hi);

    const PwlCurve& curve() const { return curve_; }
    /// Solution for piece i of curve().
    const PairVector& solution(std::size_t piece) const { return solutions_[curve_.pieces()[piece].source]; }
    Rational value_at(const Rational& lambda, Objective o = Objective::lamprime) const;
    int solve_count() const { return solves_; }

private:
    PwlCurve curve_;
    std::vector<PairVector> solutions_;
    int num_edges_ = 0;
    int solves_ = 0;
};

}  // namespace lamprime
