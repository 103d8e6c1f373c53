#include "lamprime/simplex.hpp"

#include <doctest.h>

#include <functional>
#include <optional>
#include <random>

using namespace lamprime;

namespace {

using Lp = LinearProgram<Rational>;

Lp::Row row(std::vector<std::pair<int, Rational>> c, RowSense s, Rational rhs) { return {std::move(c), s, rhs}; }

// Solves a square system exactly; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || sgn(a[r][c]) == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
    return b;
}

// Best objective over all vertices (every choice of num_vars tight constraints).
std::optional<Rational> vertex_optimum(const Lp& lp) {
    const int n = lp.num_vars;
    std::vector<std::vector<Rational>> dense;
    std::vector<Rational> rhs;
    for (const auto& r : lp.rows) {
        std::vector<Rational> a(static_cast<std::size_t>(n));
        for (const auto& [j, v] : r.coeffs) a[static_cast<std::size_t>(j)] += v;
        dense.push_back(a);
        rhs.push_back(r.rhs);
    }
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> a(static_cast<std::size_t>(n));
        a[static_cast<std::size_t>(j)] = 1;
        dense.push_back(a);
        rhs.push_back(0);
    }
    const std::size_t m = dense.size();
    std::optional<Rational> best;
    std::vector<int> pick(static_cast<std::size_t>(n));
    std::function<void(int, std::size_t)> rec = [&](int depth, std::size_t start) {
        if (depth == n) {
            std::vector<std::vector<Rational>> a;
            std::vector<Rational> b;
            for (int i : pick) {
                a.push_back(dense[static_cast<std::size_t>(i)]);
                b.push_back(rhs[static_cast<std::size_t>(i)]);
            }
            auto x = solve_square(a, b);
            if (!x) return;
            for (const auto& v : *x)
                if (sgn(v) < 0) return;
            for (std::size_t r = 0; r < lp.rows.size(); ++r) {
                Rational lhs = 0;
                for (int j = 0; j < n; ++j) lhs += dense[r][static_cast<std::size_t>(j)] * (*x)[static_cast<std::size_t>(j)];
                if (lp.rows[r].sense == RowSense::less_equal ? lhs > rhs[r] : lhs < rhs[r]) return;
            }
            Rational v = 0;
            for (int j = 0; j < n; ++j) v += lp.objective[static_cast<std::size_t>(j)] * (*x)[static_cast<std::size_t>(j)];
            bool better = !best || (lp.sense == ObjectiveSense::minimize ? v < *best : v > *best);
            if (better) best = v;
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            pick[static_cast<std::size_t>(depth)] = static_cast<int>(i);
            rec(depth + 1, i + 1);
        }
    };
    rec(0, 0);
    return best;
}

// Sign conditions, dual feasibility and strong duality.
bool duals_certify(const Lp& lp, const LpResult<Rational>& r) {
    if (r.duals.size() != lp.rows.size()) return false;
    const bool minimize = lp.sense == ObjectiveSense::minimize;
    std::vector<Rational> aty(static_cast<std::size_t>(lp.num_vars));
    Rational by = 0;
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        const Rational& y = r.duals[i];
        bool ge = lp.rows[i].sense == RowSense::greater_equal;
        // Minimisation: >= rows take y >= 0, <= rows y <= 0. Maximisation flips both.
        int want = (ge == minimize) ? 1 : -1;
        if (sgn(y) * want < 0) return false;
        by += y * lp.rows[i].rhs;
        for (const auto& [j, a] : lp.rows[i].coeffs) aty[static_cast<std::size_t>(j)] += a * y;
    }
    for (int j = 0; j < lp.num_vars; ++j) {
        const Rational& c = lp.objective[static_cast<std::size_t>(j)];
        if (minimize ? aty[static_cast<std::size_t>(j)] > c : aty[static_cast<std::size_t>(j)] < c) return false;
    }
    return by == r.value;
}

}  // namespace

TEST_CASE("textbook maximisation") {
    Lp lp;
    lp.num_vars = 2;
    lp.sense = ObjectiveSense::maximize;
    lp.objective = {3, 2};
    lp.rows = {row({{0, 1}, {1, 1}}, RowSense::less_equal, 4), row({{0, 1}, {1, 3}}, RowSense::less_equal, 6),
               row({{0, 1}}, RowSense::less_equal, 3)};
    auto r = solve_linear_program(lp);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == 11);
    CHECK(r.x == std::vector<Rational>{3, 1});
    CHECK(duals_certify(lp, r));
}

TEST_CASE("phase one with >= rows") {
    Lp lp;
    lp.num_vars = 2;
    lp.objective = {2, 3};
    lp.rows = {row({{0, 1}, {1, 1}}, RowSense::greater_equal, 4), row({{0, 1}, {1, -1}}, RowSense::greater_equal, -2),
               row({{0, 1}}, RowSense::less_equal, 3)};
    auto r = solve_linear_program(lp);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == 9);
    CHECK(duals_certify(lp, r));
}

TEST_CASE("infeasible and unbounded") {
    Lp inf;
    inf.num_vars = 1;
    inf.objective = {1};
    inf.rows = {row({{0, 1}}, RowSense::greater_equal, 2), row({{0, 1}}, RowSense::less_equal, 1)};
    CHECK(solve_linear_program(inf).status == LpStatus::infeasible);
    Lp unb;
    unb.num_vars = 2;
    unb.sense = ObjectiveSense::maximize;
    unb.objective = {1, 0};
    unb.rows = {row({{0, 1}, {1, -1}}, RowSense::greater_equal, 0)};
    CHECK(solve_linear_program(unb).status == LpStatus::unbounded);
}

TEST_CASE("random bounded programs match vertex enumeration") {
    std::mt19937_64 rng(2024);
    auto small = [&](int lo, int hi) { return Rational(lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1))); };
    int optimal = 0;
    for (int trial = 0; trial < 150; ++trial) {
        Lp lp;
        lp.num_vars = 3;
        lp.sense = trial % 2 ? ObjectiveSense::maximize : ObjectiveSense::minimize;
        for (int j = 0; j < 3; ++j) lp.objective.push_back(small(-4, 4));
        for (int i = 0; i < 4; ++i) {
            Lp::Row r;
            for (int j = 0; j < 3; ++j) r.coeffs.emplace_back(j, small(-3, 3));
            r.sense = rng() % 2 ? RowSense::less_equal : RowSense::greater_equal;
            r.rhs = small(-4, 6);
            lp.rows.push_back(r);
        }
        for (int j = 0; j < 3; ++j) lp.rows.push_back(row({{j, 1}}, RowSense::less_equal, 5));
        auto expect = vertex_optimum(lp);
        auto r = solve_linear_program(lp);
        auto guided = solve_linear_program_guided(lp);
        if (!expect) {
            CHECK(r.status == LpStatus::infeasible);
            CHECK(guided.status == LpStatus::infeasible);
            continue;
        }
        ++optimal;
        REQUIRE(r.status == LpStatus::optimal);
        CHECK(r.value == *expect);
        CHECK(duals_certify(lp, r));
        REQUIRE(guided.status == LpStatus::optimal);
        CHECK(guided.value == *expect);
        CHECK(duals_certify(lp, guided));
        auto fl = solve_linear_program(to_double_program(lp));
        REQUIRE(fl.status == LpStatus::optimal);
        CHECK(fl.value == doctest::Approx(expect->get_d()).epsilon(1e-9));
    }
    CHECK(optimal > 40);
}

TEST_CASE("warm start after changing the objective") {
    Lp lp;
    lp.num_vars = 2;
    lp.sense = ObjectiveSense::maximize;
    lp.objective = {1, 1};
    lp.rows = {row({{0, 1}, {1, 2}}, RowSense::less_equal, 4), row({{0, 3}, {1, 1}}, RowSense::less_equal, 6)};
    SimplexTableau<Rational> t(lp);
    auto first = t.solve();
    REQUIRE(first.status == LpStatus::optimal);
    CHECK(first.value == make_rational(14, 5));
    t.set_objective(ObjectiveSense::maximize, {Rational(1), Rational(0)});
    auto second = t.solve();
    REQUIRE(second.status == LpStatus::optimal);
    CHECK(second.value == 2);
}
