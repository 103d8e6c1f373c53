#include "lamprime/envelope.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lamprime {

PwlCurve::PwlCurve(std::vector<PwlPiece> pieces) : pieces_(std::move(pieces)) {}

std::vector<Rational> PwlCurve::breakpoints() const {
    std::vector<Rational> out;
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) out.push_back(pieces_[i].hi);
    return out;
}

const PwlPiece& PwlCurve::piece_at(const Rational& lambda) const {
    if (pieces_.empty()) throw std::logic_error("empty curve");
    if (lambda < lo() || lambda > hi()) {
        throw PreconditionError("lambda " + to_string(lambda) + " outside curve domain");
    }
    auto it = std::lower_bound(pieces_.begin(), pieces_.end(), lambda,
                               [](const PwlPiece& p, const Rational& l) { return p.hi < l; });
    return *it;
}

Rational PwlCurve::value_at(const Rational& lambda) const { return piece_at(lambda).line.value_at(lambda); }

void PwlCurve::check_invariants() const {
    if (pieces_.empty()) throw std::logic_error("curve has no pieces");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const auto& p = pieces_[i];
        if (p.lo > p.hi) throw std::logic_error("piece with lo > hi");
        if (i == 0) continue;
        const auto& q = pieces_[i - 1];
        if (q.hi != p.lo) throw std::logic_error("gap or overlap between pieces");
        if (!(p.line.N < q.line.N)) throw std::logic_error("slopes not strictly decreasing");
        if (!(p.line.P > q.line.P)) throw std::logic_error("intercepts not strictly increasing");
        if (q.line.value_at(p.lo) != p.line.value_at(p.lo)) throw std::logic_error("discontinuity at breakpoint");
    }
}

PwlCurve envelope_of(const std::vector<CostLine>& lines, const Rational& lo, const Rational& hi) {
    if (lines.empty()) throw PreconditionError("envelope of an empty line set");
    if (lo > hi) throw PreconditionError("envelope domain with lo > hi");

    // Steepest first; equal slopes keep the lowest intercept, earliest input on ties.
    std::vector<std::size_t> order(lines.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (lines[a].N != lines[b].N) return lines[a].N > lines[b].N;
        return lines[a].P < lines[b].P;
    });

    auto cross = [&](std::size_t a, std::size_t b) {
        // lambda where line a (steeper) meets line b.
        return Rational((lines[b].P - lines[a].P) / (lines[a].N - lines[b].N));
    };

    std::vector<std::size_t> hull;
    for (std::size_t k = 0; k < order.size(); ++k) {
        std::size_t cur = order[k];
        if (!hull.empty() && lines[hull.back()].N == lines[cur].N) continue;
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], cur) <= cross(hull[hull.size() - 2], hull.back())) {
            hull.pop_back();
        }
        hull.push_back(cur);
    }

    std::vector<PwlPiece> pieces;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        Rational start = i == 0 ? lo : std::max(lo, cross(hull[i - 1], hull[i]));
        Rational end = i + 1 == hull.size() ? hi : std::min(hi, cross(hull[i], hull[i + 1]));
        if (start > end) continue;
        if (start == end && !(lo == hi && pieces.empty())) continue;
        pieces.push_back({lines[hull[i]], start, end, hull[i]});
    }
    return PwlCurve(std::move(pieces));
}

}  // namespace lamprime
