#pragma once

#include "lamprime/objectives.hpp"

#include <cstddef>
#include <vector>

namespace lamprime {

/// One linear piece of a concave piecewise-linear curve in lambda.
struct PwlPiece {
    CostLine line;
    Rational lo;
    Rational hi;
    /// Index of the input line (or family member) that produced this piece.
    std::size_t source = 0;
};

/// Concave, increasing piecewise-linear function of lambda on [lo, hi].
/// Pieces tile the domain left to right; slopes N strictly decrease and
/// intercepts P strictly increase.
class PwlCurve {
public:
    PwlCurve() = default;
    explicit PwlCurve(std::vector<PwlPiece> pieces);

    const std::vector<PwlPiece>& pieces() const { return pieces_; }
    std::size_t size() const { return pieces_.size(); }
    bool empty() const { return pieces_.empty(); }
    const Rational& lo() const { return pieces_.front().lo; }
    const Rational& hi() const { return pieces_.back().hi; }

    /// Interior breakpoints (piece boundaries strictly inside the domain).
    std::vector<Rational> breakpoints() const;

    /// Piece containing lambda; at a breakpoint the left piece is returned.
    const PwlPiece& piece_at(const Rational& lambda) const;
    Rational value_at(const Rational& lambda) const;

    /// Throws std::logic_error if tiling, continuity or concavity fails.
    void check_invariants() const;

private:
    std::vector<PwlPiece> pieces_;
};

/// Lower envelope of the lines on the closed domain [lo, hi]. Among identical
/// lines the earliest input wins; lines optimal at a single point only are dropped.
PwlCurve envelope_of(const std::vector<CostLine>& lines, const Rational& lo, const Rational& hi);

}  // namespace lamprime
