#include "lamprime/rounding.hpp"

#include <algorithm>

namespace lamprime {

Clustering round_region_growing(const PairVector& x, const Graph& g, const Rational& lp_value) {
    const int n = g.num_nodes();
    if (!is_metric_feasible(x, n)) throw PreconditionError("rounding needs a triangle-feasible distance vector");
    PairIndex idx(n);
    auto dist = [&](Node u, Node v) -> const Rational& {
        static const Rational zero = 0;
        if (u == v) return zero;
        return x[static_cast<std::size_t>(idx(u, v))];
    };
    const Rational seed = n > 0 ? Rational(lp_value / n) : Rational(0);
    const Rational half = make_rational(1, 2);

    std::vector<int> assignment(static_cast<std::size_t>(n), -1);
    int next_id = 0;
    for (Node pivot = 0; pivot < n; ++pivot) {
        if (assignment[static_cast<std::size_t>(pivot)] >= 0) continue;

        std::vector<Rational> radii{Rational(0)};
        for (Node j = 0; j < n; ++j)
            if (j != pivot && assignment[static_cast<std::size_t>(j)] < 0 && dist(pivot, j) < half)
                radii.push_back(dist(pivot, j));
        std::sort(radii.begin(), radii.end());
        radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

        // Ratio key: (infinite, value). A zero volume gives 0 without a cut, infinity with one.
        Rational best_r;
        Rational best_ratio;
        bool best_inf = true;
        bool have = false;
        std::vector<char> in_ball(static_cast<std::size_t>(n));
        for (const Rational& r : radii) {
            for (Node j = 0; j < n; ++j)
                in_ball[static_cast<std::size_t>(j)] =
                    assignment[static_cast<std::size_t>(j)] < 0 && (j == pivot || dist(pivot, j) <= r);
            Rational cut = 0;
            Rational vol = seed;
            for (auto [u, v] : g.edges()) {
                bool iu = in_ball[static_cast<std::size_t>(u)];
                bool iv = in_ball[static_cast<std::size_t>(v)];
                if (iu && iv) {
                    vol += dist(u, v);
                } else if (iu != iv) {
                    Node inner = iu ? u : v;
                    Node outer = iu ? v : u;
                    if (assignment[static_cast<std::size_t>(outer)] >= 0) continue;
                    cut += 1;
                    vol += r - dist(pivot, inner);
                }
            }
            bool inf = sgn(vol) == 0 && sgn(cut) != 0;
            Rational ratio = sgn(vol) == 0 ? Rational(0) : Rational(cut / vol);
            bool better = !have || (!inf && (best_inf || ratio < best_ratio));
            if (better) {
                best_r = r;
                best_ratio = ratio;
                best_inf = inf;
                have = true;
            }
        }
        for (Node j = 0; j < n; ++j)
            if (assignment[static_cast<std::size_t>(j)] < 0 && (j == pivot || dist(pivot, j) <= best_r))
                assignment[static_cast<std::size_t>(j)] = next_id;
        ++next_id;
    }
    return Clustering(std::move(assignment));
}

Clustering round_region_growing(const LpSolution& s, const Graph& g) {
    return round_region_growing(s.x, g, s.line.value_at(s.lambda));
}

std::vector<RoundedMember> build_clustering_family(const CoverFamily& cover, const Graph& g) {
    std::vector<RoundedMember> out;
    for (const auto& m : cover.members) {
        if (m.x.empty()) throw PreconditionError("cover members need distance vectors to be rounded");
        RoundedMember r{round_region_growing(m.x, g, m.line.value_at(m.lambda)), m.interval, m.lambda, 0, m.value, 0};
        r.score = cover.objective == Objective::lamprime ? lamprime_score(r.clustering, g, m.lambda)
                                                         : lamcc_score(r.clustering, g, m.lambda);
        if (sgn(r.lp_value) == 0) {
            r.ratio = sgn(r.score) == 0 ? Rational(1) : Rational(-1);
        } else {
            r.ratio = r.score / r.lp_value;
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace lamprime
