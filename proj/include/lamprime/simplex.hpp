#pragma once

#include "lamprime/rational.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lamprime {

template <class Num>
struct NumTraits;

template <>
struct NumTraits<Rational> {
    static int sign(const Rational& x) { return sgn(x); }
    static void snap(Rational&) {}
    /// out -= a * b
    static void sub_mul(Rational& out, const Rational& a, const Rational& b, Rational& scratch) {
        mpq_mul(scratch.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
        mpq_sub(out.get_mpq_t(), out.get_mpq_t(), scratch.get_mpq_t());
    }
};

/// Floating mode compares against a fixed 1e-9 tolerance.
template <>
struct NumTraits<double> {
    static constexpr double kTolerance = 1e-9;
    static int sign(double x) { return x > kTolerance ? 1 : (x < -kTolerance ? -1 : 0); }
    static void snap(double& x) {
        if (std::fabs(x) < 1e-13) x = 0.0;
    }
    static void sub_mul(double& out, double a, double b, double&) { out -= a * b; }
};

enum class RowSense { less_equal, greater_equal };
enum class ObjectiveSense { minimize, maximize };
enum class LpStatus { optimal, infeasible, unbounded };

/// Dense-objective LP over non-negative variables with sparse rows.
template <class Num>
struct LinearProgram {
    struct Row {
        std::vector<std::pair<int, Num>> coeffs;
        RowSense sense = RowSense::less_equal;
        Num rhs{};
    };

    int num_vars = 0;
    ObjectiveSense sense = ObjectiveSense::minimize;
    std::vector<Num> objective;
    std::vector<Row> rows;
};

template <class Num>
struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Num value{};
    std::vector<Num> x;
    /// Row multipliers with value == sum_r y_r * rhs_r. For minimisation
    /// sum_r y_r * A_r <= c holds componentwise; for maximisation >= c.
    std::vector<Num> duals;
    long pivots = 0;
};

/// Primal simplex on a dictionary tableau (basic variables in terms of the
/// nonbasic ones). Phase one uses a single auxiliary variable. Entering
/// variables follow the largest reduced cost until a run of degenerate pivots,
/// after which Bland's smallest-index rule takes over until progress resumes.
/// The tableau survives solve(), so set_objective() + solve() warm-starts from
/// the last basis.
template <class Num>
class SimplexTableau {
public:
    explicit SimplexTableau(const LinearProgram<Num>& lp, int degenerate_limit = 50)
        : m_(static_cast<int>(lp.rows.size())),
          n_(lp.num_vars),
          degenerate_limit_(degenerate_limit) {
        cols_ = n_;
        tab_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(cols_ + 1), Num{});
        row_flip_.assign(static_cast<std::size_t>(m_), 1);
        basis_.resize(static_cast<std::size_t>(m_));
        nonbasic_.resize(static_cast<std::size_t>(n_));
        for (int j = 0; j < n_; ++j) nonbasic_[static_cast<std::size_t>(j)] = j;
        for (int i = 0; i < m_; ++i) {
            const auto& row = lp.rows[static_cast<std::size_t>(i)];
            int flip = row.sense == RowSense::less_equal ? 1 : -1;
            row_flip_[static_cast<std::size_t>(i)] = flip;
            for (const auto& [j, a] : row.coeffs) {
                if (j < 0 || j >= n_) throw std::out_of_range("LP row references an unknown variable");
                Num v = a;
                if (flip < 0) v = -v;
                at(i, j) += v;
            }
            rhs(i) = flip < 0 ? Num(-row.rhs) : row.rhs;
            basis_[static_cast<std::size_t>(i)] = n_ + i;
        }
        set_objective(lp.sense, lp.objective);
    }

    /// Replaces the objective, keeping the current (feasible) basis.
    void set_objective(ObjectiveSense sense, const std::vector<Num>& c) {
        if (static_cast<int>(c.size()) != n_) throw std::invalid_argument("objective length mismatch");
        sense_ = sense;
        cost_.assign(static_cast<std::size_t>(n_), Num{});
        for (int j = 0; j < n_; ++j) cost_[static_cast<std::size_t>(j)] = sense == ObjectiveSense::maximize ? c[static_cast<std::size_t>(j)] : Num(-c[static_cast<std::size_t>(j)]);
        rebuild_objective_row();
    }

    /// Basic variable ids (structural j < num_vars, slack of row i is num_vars + i).
    const std::vector<int>& basis() const { return basis_; }

    /// Adds a small deterministic positive perturbation to every right-hand
    /// side (internal <= form). Breaks the degeneracy that stalls floating pivots.
    void perturb_rhs(Num scale) {
        for (int i = 0; i < m_; ++i) rhs(i) += scale * Num(1000 + (i * 7919) % 1000) / Num(1000);
        feasible_ = false;
    }

    /// Pivots the given variables into the basis without ratio tests. Returns
    /// false (tableau unchanged in meaning, still valid) if some variable could
    /// not enter. Feasibility is re-established by the next solve().
    bool move_to_basis(const std::vector<int>& target) {
        std::vector<char> wanted(static_cast<std::size_t>(n_ + m_ + 1), 0);
        for (int v : target) {
            if (v < 0 || v >= n_ + m_) return false;
            wanted[static_cast<std::size_t>(v)] = 1;
        }
        for (int v : target) {
            int col = -1;
            for (int j = 0; j < cols_; ++j)
                if (nonbasic_[static_cast<std::size_t>(j)] == v) col = j;
            if (col < 0) continue;  // already basic
            int row = -1;
            for (int i = 0; i < m_; ++i) {
                if (wanted[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])]) continue;
                if (Traits::sign(at(i, col)) != 0) {
                    row = i;
                    break;
                }
            }
            if (row < 0) return false;
            pivot(row, col);
        }
        feasible_ = false;
        rebuild_objective_row();
        return true;
    }

    LpResult<Num> solve() {
        if (!feasible_) {
            bool ok = true;
            for (int i = 0; i < m_ && ok; ++i)
                if (Traits::sign(rhs(i)) < 0) ok = false;
            if (ok) feasible_ = true;
        }
        LpResult<Num> out;
        if (!feasible_) {
            if (!phase_one()) {
                out.status = LpStatus::infeasible;
                out.pivots = pivots_;
                return out;
            }
            feasible_ = true;
            rebuild_objective_row();
        }
        if (!optimize()) {
            out.status = LpStatus::unbounded;
            out.pivots = pivots_;
            return out;
        }
        out.status = LpStatus::optimal;
        out.value = sense_ == ObjectiveSense::maximize ? z0_ : Num(-z0_);
        out.x.assign(static_cast<std::size_t>(n_), Num{});
        for (int i = 0; i < m_; ++i) {
            int var = basis_[static_cast<std::size_t>(i)];
            if (var < n_) out.x[static_cast<std::size_t>(var)] = rhs(i);
        }
        out.duals.assign(static_cast<std::size_t>(m_), Num{});
        for (int j = 0; j < cols_; ++j) {
            int var = nonbasic_[static_cast<std::size_t>(j)];
            if (var < n_ || var >= n_ + m_) continue;
            int r = var - n_;
            Num u = -obj_[static_cast<std::size_t>(j)];
            int sigma = sense_ == ObjectiveSense::maximize ? 1 : -1;
            if (sigma * row_flip_[static_cast<std::size_t>(r)] < 0) u = -u;
            out.duals[static_cast<std::size_t>(r)] = u;
        }
        out.pivots = pivots_;
        return out;
    }

private:
    using Traits = NumTraits<Num>;

    Num& at(int i, int j) { return tab_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_ + 1) + static_cast<std::size_t>(j)]; }
    const Num& at(int i, int j) const { return tab_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_ + 1) + static_cast<std::size_t>(j)]; }
    Num& rhs(int i) { return at(i, cols_); }
    const Num& rhs(int i) const { return at(i, cols_); }

    /// Objective row from cost_ for the current basis (ignores the auxiliary variable).
    void rebuild_objective_row() {
        obj_.assign(static_cast<std::size_t>(cols_), Num{});
        z0_ = Num{};
        Num scratch{};
        for (int j = 0; j < cols_; ++j) {
            int var = nonbasic_[static_cast<std::size_t>(j)];
            if (var < n_) obj_[static_cast<std::size_t>(j)] = cost_[static_cast<std::size_t>(var)];
        }
        for (int i = 0; i < m_; ++i) {
            int var = basis_[static_cast<std::size_t>(i)];
            if (var >= n_) continue;
            const Num& ck = cost_[static_cast<std::size_t>(var)];
            if (Traits::sign(ck) == 0) continue;
            z0_ += ck * rhs(i);
            for (int j = 0; j < cols_; ++j) {
                if (Traits::sign(at(i, j)) != 0) Traits::sub_mul(obj_[static_cast<std::size_t>(j)], ck, at(i, j), scratch);
            }
        }
    }

    void pivot(int r, int s) {
        ++pivots_;
        Num inv = Num(1) / at(r, s);
        // Row r: divide through, the entering column becomes the leaving variable.
        for (int j = 0; j <= cols_; ++j) {
            if (j == s) continue;
            if (Traits::sign(at(r, j)) != 0) {
                at(r, j) *= inv;
                Traits::snap(at(r, j));
            }
        }
        at(r, s) = inv;

        nz_.clear();
        for (int j = 0; j <= cols_; ++j)
            if (j != s && Traits::sign(at(r, j)) != 0) nz_.push_back(j);

        Num scratch{};
        for (int i = 0; i < m_; ++i) {
            if (i == r) continue;
            Num f = at(i, s);
            if (Traits::sign(f) == 0) continue;
            for (int j : nz_) {
                Traits::sub_mul(at(i, j), f, at(r, j), scratch);
                Traits::snap(at(i, j));
            }
            at(i, s) = -f * inv;
            Traits::snap(at(i, s));
        }
        Num d = obj_[static_cast<std::size_t>(s)];
        if (Traits::sign(d) != 0) {
            for (int j : nz_) {
                if (j == cols_) {
                    z0_ += d * rhs(r);
                } else {
                    Traits::sub_mul(obj_[static_cast<std::size_t>(j)], d, at(r, j), scratch);
                    Traits::snap(obj_[static_cast<std::size_t>(j)]);
                }
            }
        }
        obj_[static_cast<std::size_t>(s)] = -d * inv;
        Traits::snap(obj_[static_cast<std::size_t>(s)]);
        std::swap(basis_[static_cast<std::size_t>(r)], nonbasic_[static_cast<std::size_t>(s)]);
    }

    int choose_entering(bool bland) const {
        int best = -1;
        for (int j = 0; j < cols_; ++j) {
            if (Traits::sign(obj_[static_cast<std::size_t>(j)]) <= 0) continue;
            if (best < 0) {
                best = j;
                continue;
            }
            const auto& dj = obj_[static_cast<std::size_t>(j)];
            const auto& db = obj_[static_cast<std::size_t>(best)];
            int vj = nonbasic_[static_cast<std::size_t>(j)];
            int vb = nonbasic_[static_cast<std::size_t>(best)];
            if (bland) {
                if (vj < vb) best = j;
            } else if (dj > db || (!(db > dj) && vj < vb)) {
                best = j;
            }
        }
        return best;
    }

    int choose_leaving(int s) const {
        int best = -1;
        Num best_ratio{};
        for (int i = 0; i < m_; ++i) {
            if (Traits::sign(at(i, s)) <= 0) continue;
            Num ratio = rhs(i) / at(i, s);
            if (best < 0 || ratio < best_ratio ||
                (!(best_ratio < ratio) && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(best)])) {
                if (best >= 0 && Traits::sign(Num(ratio - best_ratio)) == 0 && !(ratio < best_ratio) &&
                    basis_[static_cast<std::size_t>(i)] > basis_[static_cast<std::size_t>(best)]) {
                    continue;
                }
                best = i;
                best_ratio = ratio;
            }
        }
        return best;
    }

    /// Returns false when unbounded.
    bool optimize() {
        int degenerate_run = 0;
        for (;;) {
            bool bland = degenerate_run >= degenerate_limit_;
            int s = choose_entering(bland);
            if (s < 0) return true;
            int r = choose_leaving(s);
            if (r < 0) return false;
            if (Traits::sign(rhs(r)) == 0) {
                ++degenerate_run;
            } else {
                degenerate_run = 0;
            }
            pivot(r, s);
        }
    }

    /// Chvatal's auxiliary problem: maximise -x0 with x0 subtracted from every row.
    bool phase_one() {
        int worst = -1;
        for (int i = 0; i < m_; ++i)
            if (Traits::sign(rhs(i)) < 0 && (worst < 0 || rhs(i) < rhs(worst))) worst = i;
        if (worst < 0) return true;

        const int aux = n_ + m_;
        widen_for_auxiliary();
        for (int i = 0; i < m_; ++i) at(i, cols_ - 1) = Num(-1);
        nonbasic_.push_back(aux);
        obj_.assign(static_cast<std::size_t>(cols_), Num{});
        obj_[static_cast<std::size_t>(cols_ - 1)] = Num(-1);
        z0_ = Num{};

        pivot(worst, cols_ - 1);
        optimize();
        if (Traits::sign(z0_) < 0) return false;

        // Drive a degenerate auxiliary variable out of the basis.
        for (int i = 0; i < m_; ++i) {
            if (basis_[static_cast<std::size_t>(i)] != aux) continue;
            int pick = -1;
            for (int j = 0; j < cols_; ++j) {
                if (Traits::sign(at(i, j)) == 0) continue;
                if (pick < 0 || nonbasic_[static_cast<std::size_t>(j)] < nonbasic_[static_cast<std::size_t>(pick)]) pick = j;
            }
            if (pick >= 0) pivot(i, pick);
        }
        // Remove the auxiliary column.
        int col = -1;
        for (int j = 0; j < cols_; ++j)
            if (nonbasic_[static_cast<std::size_t>(j)] == aux) col = j;
        if (col < 0) throw std::logic_error("auxiliary variable stuck in the basis");
        drop_column(col);
        return true;
    }

    void widen_for_auxiliary() {
        std::vector<Num> wide(static_cast<std::size_t>(m_) * static_cast<std::size_t>(cols_ + 2));
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < cols_; ++j)
                wide[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_ + 2) + static_cast<std::size_t>(j)] = std::move(at(i, j));
            wide[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_ + 2) + static_cast<std::size_t>(cols_ + 1)] = std::move(rhs(i));
        }
        tab_ = std::move(wide);
        ++cols_;
    }

    void drop_column(int col) {
        std::vector<Num> narrow(static_cast<std::size_t>(m_) * static_cast<std::size_t>(cols_));
        for (int i = 0; i < m_; ++i) {
            int k = 0;
            for (int j = 0; j <= cols_; ++j) {
                if (j == col) continue;
                narrow[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(k++)] = std::move(at(i, j));
            }
        }
        tab_ = std::move(narrow);
        nonbasic_.erase(nonbasic_.begin() + col);
        --cols_;
    }

    int m_;
    int n_;
    int cols_;
    int degenerate_limit_;
    bool feasible_ = false;
    long pivots_ = 0;
    ObjectiveSense sense_ = ObjectiveSense::maximize;
    std::vector<Num> tab_;
    std::vector<Num> obj_;
    std::vector<Num> cost_;
    Num z0_{};
    std::vector<int> basis_;
    std::vector<int> nonbasic_;
    std::vector<int> row_flip_;
    std::vector<int> nz_;
};

template <class Num>
LpResult<Num> solve_linear_program(const LinearProgram<Num>& lp) {
    SimplexTableau<Num> tableau(lp);
    return tableau.solve();
}

/// Converts an exact program to doubles.
inline LinearProgram<double> to_double_program(const LinearProgram<Rational>& lp) {
    LinearProgram<double> out;
    out.num_vars = lp.num_vars;
    out.sense = lp.sense;
    out.objective.reserve(lp.objective.size());
    for (const auto& c : lp.objective) out.objective.push_back(c.get_d());
    out.rows.reserve(lp.rows.size());
    for (const auto& row : lp.rows) {
        LinearProgram<double>::Row r;
        r.sense = row.sense;
        r.rhs = row.rhs.get_d();
        r.coeffs.reserve(row.coeffs.size());
        for (const auto& [j, a] : row.coeffs) r.coeffs.emplace_back(j, a.get_d());
        out.rows.push_back(std::move(r));
    }
    return out;
}

/// Basis of a perturbed floating solve, or empty if that solve failed.
inline std::vector<int> floating_basis_hint(const LinearProgram<Rational>& lp) {
    SimplexTableau<double> fl(to_double_program(lp));
    fl.perturb_rhs(1e-7);
    auto r = fl.solve();
    if (r.status != LpStatus::optimal) return {};
    return fl.basis();
}

/// Exact solve that starts from the basis found by a floating solve. The
/// exact pivots then only repair whatever the floating basis got wrong.
inline LpResult<Rational> solve_linear_program_guided(const LinearProgram<Rational>& lp) {
    SimplexTableau<Rational> tableau(lp);
    auto hint = floating_basis_hint(lp);
    if (!hint.empty() && !tableau.move_to_basis(hint)) return solve_linear_program(lp);
    return tableau.solve();
}

}  // namespace lamprime
