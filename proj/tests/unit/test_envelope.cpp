#include "lamprime/envelope.hpp"

#include <doctest.h>

#include <random>

using namespace lamprime;

TEST_CASE("one line gives one piece") {
    PwlCurve c = envelope_of({CostLine{1, 2}}, 0, 1);
    REQUIRE(c.size() == 1);
    CHECK(c.lo() == 0);
    CHECK(c.hi() == 1);
    CHECK(c.breakpoints().empty());
}

TEST_CASE("two crossing lines") {
    PwlCurve c = envelope_of({CostLine{0, 28}, CostLine{4, 0}}, 0, 1);
    REQUIRE(c.size() == 2);
    CHECK(c.breakpoints() == std::vector<Rational>{make_rational(1, 7)});
    CHECK(c.value_at(make_rational(1, 7)) == 4);
    CHECK(c.piece_at(make_rational(1, 7)).source == 0);
    CHECK(c.piece_at(make_rational(1, 2)).source == 1);
}

TEST_CASE("parallel and duplicate lines") {
    PwlCurve c = envelope_of({CostLine{2, 1}, CostLine{1, 1}, CostLine{1, 1}}, 0, 1);
    REQUIRE(c.size() == 1);
    CHECK(c.pieces()[0].source == 1);
    CHECK_THROWS(envelope_of({}, 0, 1));
}

TEST_CASE("envelope equals the pointwise minimum") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<CostLine> lines;
        for (int i = 0; i < 8; ++i)
            lines.push_back({Rational(static_cast<long>(rng() % 20)), Rational(static_cast<long>(rng() % 30))});
        PwlCurve c = envelope_of(lines, 0, 1);
        c.check_invariants();
        for (int s = 0; s <= 64; ++s) {
            Rational l = make_rational(s, 64);
            Rational best = lines[0].value_at(l);
            for (const auto& ln : lines) best = std::min(best, ln.value_at(l));
            CHECK(c.value_at(l) == best);
        }
        for (std::size_t i = 1; i < c.size(); ++i) {
            CHECK(c.pieces()[i].line.P > c.pieces()[i - 1].line.P);
            CHECK(c.pieces()[i].line.N < c.pieces()[i - 1].line.N);
        }
    }
}

TEST_CASE("lines touching at a single point are dropped") {
    // (1, 1) meets the envelope of the other two only at 1/2.
    PwlCurve c = envelope_of({CostLine{0, 4}, CostLine{2, 0}, CostLine{1, 2}}, 0, 1);
    CHECK(c.size() == 2);
}

TEST_CASE("sub-domain") {
    PwlCurve c = envelope_of({CostLine{0, 28}, CostLine{4, 0}}, make_rational(1, 4), make_rational(3, 4));
    REQUIRE(c.size() == 1);
    CHECK(c.pieces()[0].line == CostLine{4, 0});
}
