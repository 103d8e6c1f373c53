#include "lamprime/exact_oracle.hpp"

#include <cstdint>
#include <limits>

namespace lamprime {

PartitionEnumerator::PartitionEnumerator(int n, int n_max) {
    if (n < 1) throw PreconditionError("partition enumeration needs n >= 1");
    if (n > n_max) {
        throw PreconditionError("partition enumeration capped at n = " + std::to_string(n_max) + ", got " +
                                std::to_string(n));
    }
    digits_.assign(static_cast<std::size_t>(n), 0);
    prefix_max_.assign(static_cast<std::size_t>(n), 0);
}

bool PartitionEnumerator::advance() {
    // prefix_max_[i] = max(digits_[0..i]); digit i may grow up to prefix_max_[i-1] + 1.
    int n = static_cast<int>(digits_.size());
    for (int i = n - 1; i >= 1; --i) {
        auto ui = static_cast<std::size_t>(i);
        if (digits_[ui] <= prefix_max_[ui - 1]) {
            ++digits_[ui];
            prefix_max_[ui] = std::max(prefix_max_[ui - 1], digits_[ui]);
            for (std::size_t j = ui + 1; j < digits_.size(); ++j) {
                digits_[j] = 0;
                prefix_max_[j] = prefix_max_[ui];
            }
            return true;
        }
    }
    return false;
}

void for_each_partition(int n, int n_max, const std::function<void(const std::vector<int>&)>& visit) {
    PartitionEnumerator e(n, n_max);
    do {
        visit(e.current());
    } while (e.advance());
}

ExactCurve exact_opt_curve(const Graph& g, int n_max) {
    const int n = g.num_nodes();
    const long max_pairs = static_cast<long>(n) * (n - 1) / 2;

    // For a fixed N only the smallest P can reach the envelope on lambda > 0.
    constexpr long kUnset = std::numeric_limits<long>::max();
    std::vector<long> best_p(static_cast<std::size_t>(max_pairs + 1), kUnset);
    std::vector<std::vector<int>> best_rgs(static_cast<std::size_t>(max_pairs + 1));
    std::vector<long> sizes(static_cast<std::size_t>(n));

    for_each_partition(n, n_max, [&](const std::vector<int>& rgs) {
        long cut = 0;
        for (auto [u, v] : g.edges())
            if (rgs[static_cast<std::size_t>(u)] != rgs[static_cast<std::size_t>(v)]) ++cut;
        std::fill(sizes.begin(), sizes.end(), 0);
        for (int id : rgs) ++sizes[static_cast<std::size_t>(id)];
        long inside = 0;
        for (long s : sizes) inside += s * (s - 1) / 2;
        auto slot = static_cast<std::size_t>(inside);
        if (cut < best_p[slot]) {
            best_p[slot] = cut;
            best_rgs[slot] = rgs;
        }
    });

    std::vector<CostLine> lines;
    std::vector<std::size_t> slot_of_line;
    // One line per N; its representative is the first partition enumerated with that (P, N).
    for (std::size_t s = 0; s < best_p.size(); ++s) {
        if (best_p[s] == kUnset) continue;
        lines.push_back({Rational(best_p[s]), Rational(static_cast<long>(s))});
        slot_of_line.push_back(s);
    }

    ExactCurve out;
    out.curve = envelope_of(lines, Rational(0), Rational(1));
    for (const auto& piece : out.curve.pieces()) {
        out.family.emplace_back(best_rgs[slot_of_line[piece.source]]);
    }
    return out;
}

SparsestCut scaled_sparsest_cut(const Graph& g, int n_max) {
    const int n = g.num_nodes();
    if (n < 2) throw PreconditionError("scaled sparsest cut needs at least two nodes");
    if (n > n_max) throw PreconditionError("exhaustive sparsest cut capped at n = " + std::to_string(n_max));

    // S ranges over non-empty subsets of {1..n-1}; node 0 always stays outside S.
    const std::uint32_t limit = std::uint32_t{1} << (n - 1);
    Rational best;
    std::uint32_t best_mask = 0;
    bool have = false;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        auto in_s = [&](Node v) { return v > 0 && ((mask >> (v - 1)) & 1U); };
        long cut = 0;
        for (auto [u, v] : g.edges())
            if (in_s(u) != in_s(v)) ++cut;
        long s = __builtin_popcount(mask);
        Rational ratio(cut, s * (n - s));
        ratio.canonicalize();
        if (!have || ratio < best) {
            best = ratio;
            best_mask = mask;
            have = true;
        }
    }
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    for (Node v = 1; v < n; ++v)
        if ((best_mask >> (v - 1)) & 1U) assignment[static_cast<std::size_t>(v)] = 1;
    return {best, Clustering(std::move(assignment))};
}

}  // namespace lamprime
