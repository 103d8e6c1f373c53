#include "lamprime/analytic.hpp"

#include <algorithm>
#include <cmath>

namespace lamprime {

namespace {

int ring_size(int k) {
    if (k < 3) throw PreconditionError("ring oracles need k >= 3");
    if (k > 30) throw PreconditionError("ring oracles capped at k = 30");
    return 1 << k;
}

void require_ring_range(int k, const Rational& lambda) {
    int n = ring_size(k);
    Rational lo = make_rational(8, static_cast<std::int64_t>(n) * n);
    if (lambda < lo || lambda > make_rational(1, 2)) {
        throw PreconditionError("ring LP formula needs lambda in [8/n^2, 1/2], got " + to_string(lambda));
    }
}

}  // namespace

Rational ring_lp_at_t(int k, const Rational& lambda, int t) {
    int n = ring_size(k);
    if (t < 1 || t > n) throw PreconditionError("cluster length out of range");
    return make_rational(n, t) * (1 + lambda * binom2(t));
}

RingLp ring_lp(int k, const Rational& lambda) {
    require_ring_range(k, lambda);
    int n = ring_size(k);
    RingLp best{ring_lp_at_t(k, lambda, 1), 1};
    for (int t = 2; t <= n; ++t) {
        Rational v = ring_lp_at_t(k, lambda, t);
        if (v < best.value) best = {v, t};
    }
    return best;
}

double ring_g(int k, double lambda) {
    if (lambda < 0.0 || lambda > 1.0) throw PreconditionError("g needs lambda in [0,1]");
    double n = ring_size(k);
    return n * (std::sqrt(2.0 * lambda) - lambda / 2.0);
}

double ring_q(int k, double lambda) {
    if (lambda < 0.0 || lambda > 1.0) throw PreconditionError("q needs lambda in [0,1]");
    double n = ring_size(k);
    return 0.75 * n * std::sqrt(2.0 * lambda);
}

Rational ring_special_lambda(int k, int i) {
    ring_size(k);
    if (i < 1 || i > k - 1) throw PreconditionError("special lambda index must lie in 1..k-1");
    return 2 * pow2_neg(static_cast<unsigned>(2 * (k - i)));
}

int ring_special_t(int k, int i) {
    ring_size(k);
    if (i < 1 || i > k - 1) throw PreconditionError("special lambda index must lie in 1..k-1");
    return 1 << (k - i);
}

Rational ring_f(int k, const Rational& lambda) {
    if (lambda < ring_special_lambda(k, 1) || lambda > ring_special_lambda(k, k - 1)) {
        throw PreconditionError("f needs lambda in [lambda_1, lambda_{k-1}]");
    }
    if (lambda == ring_special_lambda(k, k - 1)) return ring_lp_at_t(k, lambda, ring_special_t(k, k - 1));
    for (int i = 1; i <= k - 2; ++i) {
        Rational li = ring_special_lambda(k, i);
        if (lambda >= ring_special_lambda(k, i + 1)) continue;
        int t = lambda < 2 * li ? ring_special_t(k, i) : ring_special_t(k, i + 1);
        return ring_lp_at_t(k, lambda, t);
    }
    throw std::logic_error("ring_f bracket search fell through");
}

StarLp star_lp_solution(int n) {
    if (n < 3) throw PreconditionError("star needs n >= 3");
    PairIndex idx(n);
    StarLp out;
    out.x.assign(static_cast<std::size_t>(idx.size()), Rational(1));
    for (int v = 1; v < n; ++v) out.x[static_cast<std::size_t>(idx(0, v))] = make_rational(1, 2);
    out.line = line_of(out.x, gen_star(n));
    out.valid_lo = make_rational(1, n - 1);
    out.valid_hi = make_rational(1, 2);
    return out;
}

double gamma_factor(double x) {
    if (x < 1.0) throw PreconditionError("gamma needs x >= 1");
    double inner = 2.0 * x * x - 1.0 + 2.0 * x * std::sqrt(x * x - 1.0);
    return inner * inner;
}

RingLowerBound ring_lower_bound(int k, double p) {
    if (!(p > 1.0)) throw PreconditionError("lower bound needs p > 1");
    double n = ring_size(k);
    RingLowerBound out;
    out.gamma = gamma_factor(p * out.M);
    out.B = static_cast<int>(std::ceil((2.0 / 3.0) * std::log(n / 4.0) / std::log(out.gamma)));
    return out;
}

std::vector<Rational> lamcc_schedule(int n, const Rational& eps) {
    if (sgn(eps) <= 0) throw PreconditionError("epsilon must be positive");
    if (n < 2) throw PreconditionError("schedule needs n >= 2");
    // q - 1 = ceil(log_{1+eps} n^4): smallest j with (1+eps)^j >= n^4.
    const Rational n4 = Rational(n) * n * n * n;
    const Rational base = 1 + eps;
    int j = 0;
    for (Rational acc = 1; acc < n4; acc *= base) ++j;
    std::vector<Rational> out;
    Rational gamma = make_rational(1, static_cast<std::int64_t>(n) * n);
    for (int i = 0; i <= j; ++i) {
        out.push_back(gamma / (1 + gamma));
        gamma *= base;
    }
    return out;
}

Rational lamcc_ratio(const Rational& a, const Rational& b) {
    if (sgn(a) <= 0 || b >= 1 || a > b) throw PreconditionError("ratio needs 0 < a <= b < 1");
    return (b / a) * ((1 - a) / (1 - b));
}

Rational lamcc_next(const Rational& lambda, const Rational& eps) { return (1 + eps) * lambda / (1 + eps * lambda); }

}  // namespace lamprime

namespace lamprime {

bool RingSandwichReport::ok() const {
    return std::all_of(points.begin(), points.end(), [](const RingSandwichPoint& p) { return p.ok; });
}

RingSandwichReport ring_sandwich(int k, int grid, double tol) {
    if (k < 3) throw PreconditionError("ring sandwich needs k >= 3");
    if (grid < 2) throw PreconditionError("ring sandwich needs at least two grid points");
    const Rational lo = ring_special_lambda(k, 1);
    const Rational hi = make_rational(1, 2);
    RingSandwichReport report;
    // Relative excess of a over b; positive means a <= b fails.
    auto excess = [](double a, double b) { return (a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); };
    for (int i = 0; i < grid; ++i) {
        RingSandwichPoint p;
        p.lambda = lo + (hi - lo) * make_rational(i, grid - 1);
        const double l = to_double(p.lambda);
        p.q = ring_q(k, l);
        p.g = ring_g(k, l);
        p.lp = ring_lp(k, p.lambda).value;
        p.f = ring_f(k, p.lambda);
        const double lp = to_double(p.lp);
        const double f = to_double(p.f);
        const double root2g = std::sqrt(2.0) * p.g;
        double worst = std::max({excess(p.q, p.g), excess(p.g, lp), excess(f, root2g), excess(root2g, kRingM * p.q)});
        p.ok = worst <= tol && p.lp <= p.f;
        report.worst_violation = std::max(report.worst_violation, std::max(worst, 0.0));
        report.points.push_back(std::move(p));
    }
    return report;
}

}  // namespace lamprime
