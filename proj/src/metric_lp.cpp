#include "lamprime/metric_lp.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace lamprime {

const char* objective_name(Objective o) { return o == Objective::lamprime ? "lamprime" : "lamcc"; }

Objective parse_objective(std::string_view text) {
    if (text == "lamprime") return Objective::lamprime;
    if (text == "lamcc") return Objective::lamcc;
    throw ParseError("unknown objective '" + std::string(text) + "'");
}

namespace {

using Row = LinearProgram<Rational>::Row;

std::vector<Row> make_metric_rows(int n) {
    PairIndex idx(n);
    std::vector<Row> rows;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                int ij = idx(i, j);
                int ik = idx(i, k);
                int jk = idx(j, k);
                const int triple[3][3] = {{ij, ik, jk}, {ik, ij, jk}, {jk, ij, ik}};
                for (const auto& t : triple) {
                    Row r;
                    r.sense = RowSense::greater_equal;
                    r.rhs = 0;
                    r.coeffs = {{t[0], Rational(-1)}, {t[1], Rational(1)}, {t[2], Rational(1)}};
                    rows.push_back(std::move(r));
                }
            }
        }
    }
    for (int p = 0; p < idx.size(); ++p) {
        Row r;
        r.sense = RowSense::greater_equal;
        r.rhs = -1;
        r.coeffs = {{p, Rational(-1)}};
        rows.push_back(std::move(r));
    }
    return rows;
}

int triangle_row_count(int n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 2; }

}  // namespace

const std::vector<Row>& metric_rows(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<Row>>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<std::vector<Row>>(make_metric_rows(n));
    return *slot;
}

std::vector<Rational> metric_costs(const Graph& g, const Rational& lambda) {
    PairIndex idx(g.num_nodes());
    std::vector<Rational> c(static_cast<std::size_t>(idx.size()), Rational(-lambda));
    Rational on_edge = 1 - lambda;
    for (auto [u, v] : g.edges()) c[static_cast<std::size_t>(idx(u, v))] = on_edge;
    return c;
}

Rational objective_offset(const Graph& g, Objective o) {
    Rational k = binom2(g.num_nodes());
    if (o == Objective::lamcc) k -= g.num_edges();
    return k;
}

LpProblem build_lp(const Graph& g, const Rational& lambda, Objective o) {
    require_open_unit(lambda, "lambda");
    LpProblem p;
    p.n = g.num_nodes();
    p.lambda = lambda;
    p.objective = o;
    p.program.num_vars = PairIndex(p.n).size();
    p.program.sense = ObjectiveSense::minimize;
    p.program.objective = metric_costs(g, lambda);
    p.program.rows = metric_rows(p.n);
    p.num_triangle_rows = triangle_row_count(p.n);
    p.num_bound_rows = p.program.num_vars;
    p.constant = lambda * objective_offset(g, o);
    return p;
}

bool verify_dual_certificate(const Graph& g, const Rational& lambda, Objective o, const std::vector<Rational>& duals,
                             const Rational& value) {
    const auto& rows = metric_rows(g.num_nodes());
    if (duals.size() != rows.size()) return false;
    std::vector<Rational> aty(static_cast<std::size_t>(PairIndex(g.num_nodes()).size()));
    Rational by = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Rational& y = duals[r];
        if (sgn(y) < 0) return false;
        if (sgn(y) == 0) continue;
        by += y * rows[r].rhs;
        for (const auto& [j, a] : rows[r].coeffs) aty[static_cast<std::size_t>(j)] += a * y;
    }
    auto c = metric_costs(g, lambda);
    for (std::size_t j = 0; j < c.size(); ++j)
        if (aty[j] > c[j]) return false;
    return by + lambda * objective_offset(g, o) == value;
}

bool is_metric_feasible(const PairVector& x, int n) {
    PairIndex idx(n);
    if (static_cast<int>(x.size()) != idx.size()) return false;
    for (const auto& v : x)
        if (sgn(v) < 0 || v > 1) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const Rational& a = x[static_cast<std::size_t>(idx(i, j))];
                const Rational& b = x[static_cast<std::size_t>(idx(i, k))];
                const Rational& c = x[static_cast<std::size_t>(idx(j, k))];
                if (a > b + c || b > a + c || c > a + b) return false;
            }
    return true;
}

Rational objective_value(const CostLine& line, const Rational& lambda, Objective o, int num_edges) {
    Rational v = line.value_at(lambda);
    if (o == Objective::lamcc) v -= lambda * num_edges;
    return v;
}

Rational lp_value_at(const LpSolution& s, const Rational& lambda) {
    return objective_value(s.line, lambda, s.objective, s.num_edges);
}

namespace {

LpSolution finish_solution(const Graph& g, const Rational& lambda, Objective o, LpResult<Rational>&& r) {
    if (r.status != LpStatus::optimal) throw std::logic_error("metric LP reported infeasible or unbounded");
    LpSolution s;
    s.x = std::move(r.x);
    s.lambda = lambda;
    s.objective = o;
    s.num_edges = g.num_edges();
    s.line = line_of(s.x, g);
    s.value = objective_value(s.line, lambda, o, g.num_edges());
    if (s.value != r.value + lambda * objective_offset(g, o)) throw std::logic_error("LP value disagrees with its line");
    s.duals = std::move(r.duals);
    s.certified = verify_dual_certificate(g, lambda, o, s.duals, s.value);
    if (!s.certified) throw std::logic_error("LP dual certificate failed");
    return s;
}

}  // namespace

LpSolution solve_lp(const LpProblem& p, const Graph& g) {
    if (p.n != g.num_nodes()) throw PreconditionError("LP problem built for a different graph");
    return finish_solution(g, p.lambda, p.objective, solve_linear_program_guided(p.program));
}

LpSolution solve_lp(const Graph& g, const Rational& lambda, Objective o) { return solve_lp(build_lp(g, lambda, o), g); }

FloatLpSolution solve_lp_float(const Graph& g, double lambda, Objective o) {
    if (!(lambda > 0.0 && lambda < 1.0)) throw PreconditionError("lambda must lie in (0,1)");
    const int n = g.num_nodes();
    PairIndex idx(n);
    LinearProgram<double> lp;
    lp.num_vars = idx.size();
    lp.sense = ObjectiveSense::minimize;
    lp.objective.assign(static_cast<std::size_t>(idx.size()), -lambda);
    for (auto [u, v] : g.edges()) lp.objective[static_cast<std::size_t>(idx(u, v))] = 1.0 - lambda;
    for (const auto& row : metric_rows(n)) {
        LinearProgram<double>::Row r;
        r.sense = row.sense;
        r.rhs = row.rhs.get_d();
        for (const auto& [j, a] : row.coeffs) r.coeffs.emplace_back(j, a.get_d());
        lp.rows.push_back(std::move(r));
    }
    // A perturbed pass finds a basis; the unperturbed pass only polishes it.
    SimplexTableau<double> perturbed(lp);
    perturbed.perturb_rhs(1e-7);
    auto hint = perturbed.solve();
    SimplexTableau<double> tableau(lp);
    if (hint.status == LpStatus::optimal) tableau.move_to_basis(perturbed.basis());
    auto r = tableau.solve();
    if (r.status != LpStatus::optimal) throw std::logic_error("floating LP reported infeasible or unbounded");
    FloatLpSolution s;
    s.x = std::move(r.x);
    s.lambda = lambda;
    s.value = r.value + lambda * objective_offset(g, o).get_d();
    return s;
}

LpCurve::LpCurve(const Graph& g, const Rational& lo, const Rational& hi) : num_edges_(g.num_edges()) {
    if (lo > hi) throw PreconditionError("LP curve with lo > hi");
    std::vector<CostLine> lines;

    auto solve_at = [&](const Rational& lambda) {
        auto r = solve_linear_program_guided(build_lp(g, lambda).program);
        ++solves_;
        if (r.status != LpStatus::optimal) throw std::logic_error("metric LP reported infeasible or unbounded");
        lines.push_back(line_of(r.x, g));
        solutions_.push_back(std::move(r.x));
        return lines.size() - 1;
    };

    struct Segment {
        std::size_t a, b;
    };
    std::vector<Segment> stack;
    std::size_t first = solve_at(lo);
    if (lo != hi) stack.push_back({first, solve_at(hi)});
    while (!stack.empty()) {
        Segment s = stack.back();
        stack.pop_back();
        const CostLine la = lines[s.a];
        const CostLine lb = lines[s.b];
        if (la.N == lb.N) continue;  // optimality at both ends forces equal lines
        Rational cross = (lb.P - la.P) / (la.N - lb.N);
        std::size_t c = solve_at(cross);
        if (lines[c].value_at(cross) == la.value_at(cross)) continue;
        stack.push_back({c, s.b});
        stack.push_back({s.a, c});
    }
    curve_ = envelope_of(lines, lo, hi);
}

Rational LpCurve::value_at(const Rational& lambda, Objective o) const {
    return objective_value(curve_.piece_at(lambda).line, lambda, o, num_edges_);
}

}  // namespace lamprime
