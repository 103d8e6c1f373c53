#include "lamprime/sweeps.hpp"

#include "lamprime/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <stdexcept>

namespace lamprime {

namespace {

constexpr int kMaxMembers = 100000;

void require_positive_eps(const Rational& eps) {
    if (sgn(eps) <= 0) throw PreconditionError("epsilon must be positive, got " + to_string(eps));
}

Rational clamp_to_top(const Rational& lambda) { return lambda >= domain_top() ? domain_top() : lambda; }

CoverMember make_member(LpSolution&& s, LambdaInterval interval) {
    CoverMember m;
    m.lambda = s.lambda;
    m.line = s.line;
    m.value = s.value;
    m.x = std::move(s.x);
    m.interval = std::move(interval);
    return m;
}

// A solution optimal at lambda stays within 1+eps of the LP on [lambda/(1+eps), (1+eps) lambda].
LambdaInterval transfer_interval(const Rational& lo, const Rational& hi, const Rational& eps, const Rational& domain_lo) {
    LambdaInterval out;
    out.epsilon = eps;
    out.lo = std::max(lo, domain_lo);
    out.hi = hi;
    if (out.hi >= 1) {
        out.hi = 1;
        out.hi_clamped = true;
    }
    return out;
}

void sort_members(CoverFamily& f) {
    std::stable_sort(f.members.begin(), f.members.end(),
                     [](const CoverMember& a, const CoverMember& b) { return a.interval.lo < b.interval.lo; });
}

}  // namespace

Rational domain_top() { return 1 - pow2_neg(20); }

std::vector<CostLine> CoverFamily::lines() const {
    std::vector<CostLine> out;
    out.reserve(members.size());
    for (const auto& m : members) out.push_back(m.line);
    return out;
}

Rational default_domain_lo(int n, const Rational& eps, Objective o) {
    if (n < 2) throw PreconditionError("covers need at least two nodes");
    if (o == Objective::lamcc) return lamcc_schedule(n, eps).front();
    return clamp_to_top(make_rational(4, static_cast<std::int64_t>(n) * n));
}

Rational default_domain_hi(int n, const Rational& eps, Objective o) {
    if (o == Objective::lamcc) return lamcc_schedule(n, eps).back();
    return Rational(1);
}

std::vector<Rational> geometric_schedule(int n, const Rational& eps) {
    require_positive_eps(eps);
    if (n < 2) throw PreconditionError("schedule needs n >= 2");
    const Rational step = (1 + eps) * (1 + eps);
    const Rational target = make_rational(static_cast<std::int64_t>(n) * n, 4);
    // q - 1 = floor(log_step(target)).
    int j = 0;
    for (Rational acc = step; acc <= target; acc *= step) ++j;
    std::vector<Rational> out;
    Rational lambda = make_rational(4, static_cast<std::int64_t>(n) * n);
    for (int k = 0; k <= j; ++k) {
        out.push_back(lambda);
        lambda *= step;
    }
    out.push_back(1 / (1 + eps));
    return out;
}

namespace {

// Independent solves run concurrently; results come back in input order.
std::vector<LpSolution> solve_all(const Graph& g, const std::vector<Rational>& lambdas, Objective o) {
    std::vector<std::future<LpSolution>> jobs;
    jobs.reserve(lambdas.size());
    for (const auto& l : lambdas) jobs.push_back(std::async(std::launch::async, [&g, l, o] { return solve_lp(g, l, o); }));
    std::vector<LpSolution> out;
    out.reserve(jobs.size());
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

}  // namespace

CoverFamily sweep_geometric(const Graph& g, const Rational& eps, Objective o) {
    require_positive_eps(eps);
    const int n = g.num_nodes();
    CoverFamily f;
    f.algorithm = "geometric";
    f.objective = o;
    f.epsilon = eps;
    f.domain_lo = default_domain_lo(n, eps, o);
    f.domain_hi = default_domain_hi(n, eps, o);

    if (o == Objective::lamprime) {
        std::vector<Rational> lambdas;
        for (const Rational& point : geometric_schedule(n, eps)) lambdas.push_back(clamp_to_top(point));
        auto solutions = solve_all(g, lambdas, o);
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            ++f.lp_solve_count;
            auto interval = transfer_interval(lambdas[i] / (1 + eps), (1 + eps) * lambdas[i], eps, f.domain_lo);
            f.members.push_back(make_member(std::move(solutions[i]), interval));
        }
    } else {
        auto schedule = lamcc_schedule(n, eps);
        auto solutions = solve_all(g, schedule, o);
        for (std::size_t i = 0; i < schedule.size(); ++i) {
            auto& s = solutions[i];
            ++f.lp_solve_count;
            LambdaInterval interval;
            interval.epsilon = eps;
            interval.lo = schedule[i == 0 ? 0 : i - 1];
            interval.hi = schedule[std::min(i + 1, schedule.size() - 1)];
            f.members.push_back(make_member(std::move(s), interval));
        }
    }
    sort_members(f);
    return f;
}

CoverFamily sweep_fe(const Graph& g, const Rational& eps, Objective o) {
    require_positive_eps(eps);
    const int n = g.num_nodes();
    CoverFamily f;
    f.algorithm = "fe";
    f.objective = o;
    f.epsilon = eps;
    f.domain_lo = default_domain_lo(n, eps, o);
    f.domain_hi = default_domain_hi(n, eps, o);

    Rational lambda0 = f.domain_lo;
    Rational frontier = f.domain_lo;
    for (;;) {
        if (static_cast<int>(f.members.size()) > kMaxMembers) throw std::logic_error("frontier extension did not terminate");
        auto s = solve_lp(g, lambda0, o);
        ++f.lp_solve_count;
        OrlpResult fwd = orlp(s, 1, lambda0, eps, g);
        ++f.orlp_solve_count;
        Rational plus = lambda0 + fwd.theta;

        LambdaInterval interval;
        interval.epsilon = eps;
        interval.lo = frontier;
        interval.hi = plus;
        interval.hi_clamped = fwd.clamped;
        f.members.push_back(make_member(std::move(s), interval));
        if (fwd.clamped || plus >= f.domain_hi) break;

        Rational next = o == Objective::lamprime ? Rational((1 + eps) * plus) : lamcc_next(plus, eps);
        if (next >= 1) {
            // The loop stops short of 1; one more solve at the frontier covers [plus, 1).
            auto last = solve_lp(g, plus, o);
            ++f.lp_solve_count;
            f.members.push_back(make_member(std::move(last), transfer_interval(plus, (1 + eps) * plus, eps, f.domain_lo)));
            break;
        }
        frontier = plus;
        lambda0 = next;
    }
    sort_members(f);
    return f;
}

std::optional<std::vector<std::size_t>> greedy_interval_cover(const std::vector<LambdaInterval>& intervals,
                                                              const Rational& lo, const Rational& hi) {
    std::vector<std::size_t> chosen;
    Rational cur = lo;
    bool first = true;
    while (first || cur < hi) {
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < intervals.size(); ++i) {
            const auto& iv = intervals[i];
            if (iv.lo > cur || iv.hi < cur) continue;
            if (!best || iv.hi > intervals[*best].hi) best = i;
        }
        if (!best) return std::nullopt;
        if (!first && intervals[*best].hi <= cur) return std::nullopt;
        chosen.push_back(*best);
        cur = intervals[*best].hi;
        first = false;
    }
    return chosen;
}

CoverFamily sweep_febe(const Graph& g, const Rational& eps, Objective o) {
    CoverFamily fe = sweep_fe(g, eps, o);
    std::vector<LambdaInterval> ranges;
    ranges.reserve(fe.members.size());
    for (const auto& m : fe.members) {
        ranges.push_back(eps_range_line(m.line, o, m.lambda, eps, g));
        fe.orlp_solve_count += 2;
    }
    auto chosen = greedy_interval_cover(ranges, fe.domain_lo, fe.domain_hi);
    if (!chosen) throw std::logic_error("FE members do not cover the domain");

    CoverFamily out;
    out.algorithm = "febe";
    out.objective = o;
    out.epsilon = eps;
    out.domain_lo = fe.domain_lo;
    out.domain_hi = fe.domain_hi;
    out.lp_solve_count = fe.lp_solve_count;
    out.orlp_solve_count = fe.orlp_solve_count;
    std::sort(chosen->begin(), chosen->end());
    for (std::size_t i : *chosen) {
        CoverMember m = fe.members[i];
        m.interval = ranges[i];
        out.members.push_back(std::move(m));
    }
    sort_members(out);
    return out;
}

int ceil_log(const Rational& w, const Rational& base) {
    if (sgn(w) <= 0 || base <= 1) throw PreconditionError("ceil_log needs w > 0 and base > 1");
    int p = 0;
    Rational acc = 1;
    if (acc >= w) {
        while (acc / base >= w) {
            acc /= base;
            --p;
        }
        return p;
    }
    while (acc < w) {
        acc *= base;
        ++p;
    }
    return p;
}

ForwardFactor forward_factor(const std::vector<LambdaInterval>& optimal_ranges, const Rational& eps) {
    require_positive_eps(eps);
    if (optimal_ranges.empty()) throw PreconditionError("forward factor of an empty family");
    ForwardFactor out;
    for (std::size_t i = 0; i < optimal_ranges.size(); ++i) {
        const Rational& beta = optimal_ranges[i].hi;
        if (sgn(beta) <= 0) throw PreconditionError("optimal range ends at or below 0");
        Rational w = i + 1 < optimal_ranges.size() ? Rational(optimal_ranges[i + 1].lo / beta) : Rational(1 / beta);
        out.p = std::max(out.p, sgn(w) > 0 ? ceil_log(w, 1 + eps) : 0);
        out.ratios.push_back(std::move(w));
    }
    return out;
}

PwlCurve family_envelope(const CoverFamily& family) {
    return envelope_of(family.lines(), family.domain_lo, family.domain_hi);
}

CoverReport certify_cover(const CoverFamily& family, const Graph& g, int grid_density) {
    if (family.members.empty()) throw PreconditionError("cannot certify an empty cover");
    if (grid_density < 2) throw PreconditionError("grid density must be at least 2");
    const Objective o = family.objective;
    const int m = g.num_edges();
    const Rational top = family.domain_hi >= 1 ? domain_top() : family.domain_hi;

    Rational curve_lo = family.domain_lo;
    Rational curve_hi = top;
    for (const auto& mem : family.members) {
        curve_lo = std::min(curve_lo, mem.lambda);
        curve_hi = std::max(curve_hi, mem.lambda);
    }
    LpCurve lp(g, curve_lo, curve_hi);

    CoverReport report;
    for (const auto& mem : family.members) {
        if (!mem.x.empty() && (!is_metric_feasible(mem.x, g.num_nodes()) || line_of(mem.x, g) != mem.line)) {
            throw PreconditionError("cover member at lambda " + to_string(mem.lambda) + " has inconsistent distances");
        }
        if (objective_value(mem.line, mem.lambda, o, m) != lp.value_at(mem.lambda, o)) {
            throw PreconditionError("cover member at lambda " + to_string(mem.lambda) + " is not LP-optimal there");
        }
        report.certified.push_back(eps_range_line(mem.line, o, mem.lambda, family.epsilon, g));
    }

    // (a) union of certified intervals.
    std::vector<LambdaInterval> sorted = report.certified;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    Rational reach = family.domain_lo;
    for (const auto& iv : sorted) {
        if (reach >= family.domain_hi) break;
        if (iv.hi < reach) continue;
        if (iv.lo > reach) report.gaps.push_back({reach, std::min(iv.lo, family.domain_hi)});
        reach = std::max(reach, iv.hi);
    }
    if (reach < family.domain_hi) report.gaps.push_back({reach, family.domain_hi});
    report.intervals_cover = report.gaps.empty();

    // (b) grid audit.
    std::vector<Rational> points{family.domain_lo, top};
    const double lo_d = family.domain_lo.get_d();
    const double span = std::log(top.get_d() / lo_d);
    for (int j = 0; j < grid_density; ++j) {
        Rational p(lo_d * std::exp(span * j / (grid_density - 1)));
        points.push_back(std::clamp(p, family.domain_lo, top));
    }
    for (const auto& b : family_envelope(family).breakpoints()) points.push_back(b);
    for (const auto& b : lp.curve().breakpoints()) points.push_back(b);
    for (const auto& mem : family.members) points.push_back(mem.lambda);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    report.ratio_ok = true;
    report.worst_ratio = 0;
    bool have = false;
    for (const auto& lambda : points) {
        if (lambda < family.domain_lo || lambda > top) continue;
        ++report.grid_points;
        Rational best;
        bool first = true;
        for (const auto& mem : family.members) {
            Rational v = objective_value(mem.line, lambda, o, m);
            if (first || v < best) best = v;
            first = false;
        }
        Rational opt = lp.value_at(lambda, o);
        if (sgn(opt) == 0) {
            if (sgn(best) == 0) continue;
            // Unbounded ratio; reported as -1.
            report.ratio_ok = false;
            report.worst_ratio = -1;
            report.worst_lambda = lambda;
            break;
        }
        Rational ratio = best / opt;
        if (!have || ratio > report.worst_ratio) {
            report.worst_ratio = ratio;
            report.worst_lambda = lambda;
            have = true;
        }
    }
    if (report.ratio_ok) {
        if (!have) report.worst_ratio = 1;
        report.ratio_ok = report.worst_ratio <= 1 + family.epsilon;
    }
    return report;
}

}  // namespace lamprime
