#include "lamprime/sensitivity.hpp"

#include <stdexcept>

namespace lamprime {

OrlpResult orlp(const LpSolution& x, int s, const Rational& lambda0, const Rational& eps, const Graph& g) {
    if (static_cast<int>(x.x.size()) != PairIndex(g.num_nodes()).size())
        throw PreconditionError("solution does not match the graph");
    const Rational v0 = objective_value(x.line, lambda0, x.objective, g.num_edges());
    if (!verify_dual_certificate(g, lambda0, x.objective, x.duals, v0))
        throw PreconditionError("solution is not certified optimal at lambda0");
    return orlp_line(x.line, x.objective, s, lambda0, eps, g);
}

OrlpResult orlp_line(const CostLine& line, Objective o, int s, const Rational& lambda0, const Rational& eps,
                     const Graph& g) {
    if (s != 1 && s != -1) throw PreconditionError("orlp direction must be +1 or -1");
    if (sgn(eps) < 0) throw PreconditionError("orlp needs eps >= 0");
    if (lambda0 <= 0 || lambda0 >= 1) throw PreconditionError("orlp needs lambda0 in (0,1)");
    const Rational v0 = objective_value(line, lambda0, o, g.num_edges());

    const auto& rows = metric_rows(g.num_nodes());
    const int num_rows = static_cast<int>(rows.size());
    const int num_pairs = PairIndex(g.num_nodes()).size();
    const int theta = num_rows;
    const Rational k = objective_offset(g, o);
    const Rational one_eps = 1 + eps;
    const Rational cap = s > 0 ? Rational(1 - lambda0) : lambda0;

    // sum_p x_p = C(n,2) - N.
    const Rational sum_x = binom2(g.num_nodes()) - line.N;

    LinearProgram<Rational> lp;
    lp.num_vars = num_rows + 1;
    lp.sense = ObjectiveSense::maximize;
    lp.objective.assign(static_cast<std::size_t>(lp.num_vars), Rational(0));
    lp.objective[static_cast<std::size_t>(theta)] = 1;

    // Columns of A become the rows of the dual feasibility block.
    std::vector<LinearProgram<Rational>::Row> pair_rows(static_cast<std::size_t>(num_pairs));
    const auto c0 = metric_costs(g, lambda0);
    for (int j = 0; j < num_pairs; ++j) {
        pair_rows[static_cast<std::size_t>(j)].sense = RowSense::less_equal;
        pair_rows[static_cast<std::size_t>(j)].rhs = c0[static_cast<std::size_t>(j)];
    }
    for (int r = 0; r < num_rows; ++r)
        for (const auto& [j, a] : rows[static_cast<std::size_t>(r)].coeffs)
            pair_rows[static_cast<std::size_t>(j)].coeffs.emplace_back(r, a);
    for (auto& row : pair_rows) {
        row.coeffs.emplace_back(theta, Rational(s));
        lp.rows.push_back(std::move(row));
    }

    LinearProgram<Rational>::Row ratio;
    ratio.sense = RowSense::greater_equal;
    for (int r = 0; r < num_rows; ++r) {
        const Rational& b = rows[static_cast<std::size_t>(r)].rhs;
        if (sgn(b) != 0) ratio.coeffs.emplace_back(r, one_eps * b);
    }
    ratio.coeffs.emplace_back(theta, Rational(s * (eps * k + sum_x)));
    ratio.rhs = v0 - one_eps * lambda0 * k;
    lp.rows.push_back(std::move(ratio));

    LinearProgram<Rational>::Row cap_row;
    cap_row.sense = RowSense::less_equal;
    cap_row.coeffs.emplace_back(theta, Rational(1));
    cap_row.rhs = cap;
    lp.rows.push_back(std::move(cap_row));

    auto result = solve_linear_program_guided(lp);
    if (result.status != LpStatus::optimal) throw std::logic_error("ORLP reported infeasible or unbounded");
    return {result.value, result.value == cap};
}

namespace {

LambdaInterval make_interval(const Rational& lambda0, const Rational& eps, const OrlpResult& fwd, const OrlpResult& bwd) {
    LambdaInterval out;
    out.lo = lambda0 - bwd.theta;
    out.hi = lambda0 + fwd.theta;
    out.epsilon = eps;
    out.lo_clamped = bwd.clamped;
    out.hi_clamped = fwd.clamped;
    return out;
}

}  // namespace

LambdaInterval eps_range(const LpSolution& x, const Rational& lambda0, const Rational& eps, const Graph& g) {
    return make_interval(lambda0, eps, orlp(x, 1, lambda0, eps, g), orlp(x, -1, lambda0, eps, g));
}

LambdaInterval eps_range_line(const CostLine& line, Objective o, const Rational& lambda0, const Rational& eps,
                              const Graph& g) {
    return make_interval(lambda0, eps, orlp_line(line, o, 1, lambda0, eps, g), orlp_line(line, o, -1, lambda0, eps, g));
}

LambdaInterval eps_range(const LpSolution& x, const Rational& eps, const Graph& g) {
    return eps_range(x, x.lambda, eps, g);
}

}  // namespace lamprime
