#include "lamprime/analytic.hpp"
#include "lamprime/exact_oracle.hpp"
#include "lamprime/metric_lp.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace lamprime;

TEST_CASE("problem shapes") {
    auto p3 = build_lp(gen_path(3), make_rational(1, 2));
    CHECK(p3.num_vars() == 3);
    CHECK(p3.num_triangle_rows == 3);
    CHECK(p3.num_bound_rows == 3);
    auto p8 = build_lp(gen_ring(3), make_rational(1, 2));
    CHECK(p8.num_vars() == 28);
    CHECK(p8.num_triangle_rows == 168);
    CHECK(p8.num_bound_rows == 28);
    CHECK(p8.num_rows() == 196);
    CHECK(p8.constant == 14);
    auto p2 = build_lp(Graph(2, {{0, 1}}), make_rational(1, 2));
    CHECK(p2.num_vars() == 1);
    CHECK(p2.num_triangle_rows == 0);
    CHECK_THROWS_AS(build_lp(gen_ring(3), Rational(0)), PreconditionError);
    CHECK_THROWS_AS(build_lp(gen_ring(3), Rational(1)), PreconditionError);
}

TEST_CASE("costs and offset") {
    Graph g = gen_path(3);
    auto c = metric_costs(g, make_rational(1, 4));
    CHECK(c == std::vector<Rational>{make_rational(3, 4), make_rational(-1, 4), make_rational(3, 4)});
    CHECK(objective_offset(g, Objective::lamprime) == 3);
    CHECK(objective_offset(g, Objective::lamcc) == 1);
}

TEST_CASE("ring and star examples") {
    auto r = solve_lp(gen_ring(3), make_rational(1, 8));
    CHECK(r.value == make_rational(7, 2));
    CHECK(r.certified);
    CHECK(oracle::triangle_ok(r.x, 8));
    CHECK(oracle::lp_score(r.x, gen_ring(3), make_rational(1, 8)) == r.value);
    auto s = solve_lp(gen_star(5), make_rational(3, 10));
    CHECK(s.value == make_rational(13, 5));
    CHECK(s.value == star_lp_solution(5).line.value_at(make_rational(3, 10)));
}

TEST_CASE("below the sparsest cut the single cluster is optimal") {
    for (const Graph& g : oracle::small_corpus()) {
        Rational star = scaled_sparsest_cut(g).lambda_star;
        if (sgn(star) == 0) continue;
        Rational l = star / 2;
        auto s = solve_lp(g, l);
        CHECK(s.value == l * binom2(g.num_nodes()));
    }
}

TEST_CASE("LP lower-bounds OPT and is concave on a grid") {
    for (const Graph& g : oracle::small_corpus()) {
        ExactCurve e = exact_opt_curve(g);
        std::vector<Rational> values;
        for (int s = 1; s <= 9; ++s) {
            Rational l = make_rational(s, 10);
            auto sol = solve_lp(g, l);
            CHECK(sol.certified);
            CHECK(oracle::triangle_ok(sol.x, g.num_nodes()));
            CHECK(sol.value <= e.curve.value_at(l));
            CHECK(sol.value == sol.line.value_at(l));
            values.push_back(sol.value);
        }
        for (std::size_t i = 1; i < values.size(); ++i) CHECK(values[i] >= values[i - 1]);
        for (std::size_t i = 2; i < values.size(); ++i) CHECK(values[i] - 2 * values[i - 1] + values[i - 2] <= 0);
    }
}

TEST_CASE("LambdaCC LP is the LambdaPrime LP shifted by lambda m") {
    Graph g = gen_gnp(7, 0.5, 8);
    for (auto l : {make_rational(1, 5), make_rational(1, 2), make_rational(4, 5)}) {
        auto a = solve_lp(g, l, Objective::lamprime);
        auto b = solve_lp(g, l, Objective::lamcc);
        CHECK(a.value == b.value + l * g.num_edges());
        CHECK(lp_value_at(b, l) == b.value);
    }
}

TEST_CASE("reusing a solution at another lambda") {
    Graph r = gen_ring(3);
    auto s = solve_lp(r, make_rational(1, 8));
    CHECK(lp_value_at(s, make_rational(1, 8)) == make_rational(7, 2));
    auto singles = solve_lp(gen_path(4), make_rational(9, 10));
    if (sgn(singles.line.N) == 0)
        CHECK(lp_value_at(singles, make_rational(1, 10)) == lp_value_at(singles, make_rational(1, 2)));
    // Cross evaluation stays within the ratio of the two parameters.
    Graph g = gen_gnp(7, 0.5, 4);
    Rational a = make_rational(1, 5);
    Rational b = make_rational(1, 3);
    auto sa = solve_lp(g, a);
    auto sb = solve_lp(g, b);
    CHECK(lp_value_at(sa, b) <= (b / a) * sb.value);
    CHECK(lp_value_at(sb, a) <= (b / a) * sa.value);
}

TEST_CASE("dual certificate rejects tampering") {
    Graph g = gen_star(5);
    Rational l = make_rational(3, 10);
    auto s = solve_lp(g, l);
    CHECK(verify_dual_certificate(g, l, Objective::lamprime, s.duals, s.value));
    CHECK_FALSE(verify_dual_certificate(g, l, Objective::lamprime, s.duals, s.value + 1));
    auto bad = s.duals;
    bad[0] = -1;
    CHECK_FALSE(verify_dual_certificate(g, l, Objective::lamprime, bad, s.value));
}

TEST_CASE("metric feasibility") {
    CHECK(is_metric_feasible(PairVector{0, 0, 0}, 3));
    CHECK_FALSE(is_metric_feasible(PairVector{1, 0, 0}, 3));
    CHECK_FALSE(is_metric_feasible(PairVector{0, 0}, 3));
    CHECK_FALSE(is_metric_feasible(PairVector{2, 1, 1}, 3));
}

TEST_CASE("floating mode tracks the exact solve") {
    Graph g = gen_gnp(8, 0.5, 6);
    for (int s = 1; s <= 9; s += 2) {
        Rational l = make_rational(s, 10);
        CHECK(solve_lp_float(g, to_double(l)).value == doctest::Approx(to_double(solve_lp(g, l).value)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(solve_lp_float(g, 1.0), PreconditionError);
}

TEST_CASE("LP curve agrees with direct solves") {
    Graph g = gen_gnp(7, 0.5, 12);
    LpCurve curve(g, make_rational(1, 20), make_rational(19, 20));
    curve.curve().check_invariants();
    for (int s = 1; s <= 19; ++s) {
        Rational l = make_rational(s, 20);
        CHECK(curve.value_at(l) == solve_lp(g, l).value);
        CHECK(curve.value_at(l, Objective::lamcc) == solve_lp(g, l, Objective::lamcc).value);
    }
    for (std::size_t i = 0; i < curve.curve().size(); ++i) {
        CHECK(oracle::triangle_ok(curve.solution(i), 7));
        CHECK(line_of(curve.solution(i), g) == curve.curve().pieces()[i].line);
    }
}
