#include <doctest.h>

#include "padcell/decompose.hpp"
#include "padcell/json_io.hpp"
#include "padcell/parser.hpp"

using namespace padcell;

namespace {
const DecomposeConfig cfg; // prime 3, cap 12
}

TEST_CASE("one class atom gives one cell") {
    auto d = decompose(parse_formula("Pn[2](t)"), cfg);
    REQUIRE(d.cells.size() == 1);
    const Cell& c = d.cells[0];
    CHECK(cell_center_value(c) == Rat(0));
    CHECK(!c.lower);
    CHECK(!c.upper);
    CHECK(c.coset.lambda == Rat(1));
    CHECK(c.coset.spec == CosetSpec::qnm(2, 1));
    CHECK(d.variable == "t");
}

TEST_CASE("a solution ball splits into punctured ball plus point") {
    auto d = decompose(parse_formula("div(1, t)"), cfg);
    REQUIRE(d.cells.size() == 2);
    CHECK(cell_center_value(d.cells[0]) == Rat(0));
    CHECK(cell_lower_ord(d.cells[0], 3) == 0);
    CHECK(!d.cells[0].upper);
    CHECK(d.cells[0].coset.spec.kind == CosetKind::Trivial);
    CHECK(rat_is_zero(d.cells[1].coset.lambda));
    CHECK(cell_center_value(d.cells[1]) == Rat(0));
}

TEST_CASE("quadratic atom recenters at both roots") {
    // solutions of ord(t^2 - 4) >= 2 on units: the balls around 2 and -2
    auto d = decompose(parse_formula("ord(star(t, t) - 4) >= ord(9)"), cfg);
    REQUIRE(d.cells.size() == 4);
    int balls = 0, points = 0;
    for (const auto& c : d.cells) {
        Rat cv = cell_center_value(c);
        CHECK((cv == Rat(2) || cv == Rat(-2)));
        if (rat_is_zero(c.coset.lambda)) {
            ++points;
            continue;
        }
        ++balls;
        CHECK(c.coset.spec.kind == CosetKind::Trivial);
        CHECK(cell_lower_ord(c, 3) == 1);
        CHECK(!c.upper);
    }
    CHECK(balls == 2);
    CHECK(points == 2);
}

TEST_CASE("equality pins a point cell") {
    auto d = decompose(parse_formula("t - 5 = 0"), cfg);
    REQUIRE(d.cells.size() == 1);
    CHECK(cell_center_value(d.cells[0]) == Rat(5));
    CHECK(rat_is_zero(d.cells[0].coset.lambda));
}

TEST_CASE("negation covers the complement including the origin") {
    auto d = decompose(parse_formula("not Pn[2](t)"), cfg);
    REQUIRE(!d.cells.empty());
    PrecisionContext ctx(3, 12);
    auto member_any = [&](const Rat& x) {
        TriBool acc = TriBool::False;
        for (const auto& c : d.cells)
            acc = tri_or(acc, cell_member(c, PAdic::from_rational(x, ctx)));
        return acc;
    };
    CHECK(member_any(Rat(2)) == TriBool::True);
    CHECK(member_any(Rat(4)) == TriBool::False);
    CHECK(member_any(Rat(0)) == TriBool::True); // 0 lies outside every class
    CHECK(member_any(Rat(9)) == TriBool::False);
    CHECK(member_any(Rat(18)) == TriBool::True);
}

TEST_CASE("cells partition the solution set on a rational grid") {
    auto f = parse_formula("ord(t - 1) < ord(t) or Pn[2](t)");
    auto d = decompose(f, cfg);
    PrecisionContext ctx(3, 12);
    auto count_member = [&](const Rat& x) {
        int k = 0;
        for (const auto& c : d.cells)
            if (cell_member(c, PAdic::from_rational(x, ctx)) == TriBool::True) ++k;
        return k;
    };
    // independent truth: ord(x - 1) < ord x or x a nonzero square
    auto expect = [&](const Rat& x) {
        bool lhs;
        if (rat_is_zero(x)) lhs = true;
        else if (rat_is_zero(x - Rat(1))) lhs = false;
        else lhs = ord_rat(x - Rat(1), 3) < ord_rat(x, 3);
        bool rhs = !rat_is_zero(x) && is_pn(x, 2, 3);
        return lhs || rhs;
    };
    for (long num = -40; num <= 40; ++num)
        for (long den : {1L, 3L, 9L}) {
            Rat x(num, den);
            CAPTURE(num);
            CAPTURE(den);
            CHECK(count_member(x) == (expect(x) ? 1 : 0));
        }
}

TEST_CASE("existential decisions") {
    CHECK(eliminate_exists(
              parse_formula("exists t. ord(9) < ord(t) and ord(t) < ord(2187) and Pn[3](t)"),
              cfg) == true);
    CHECK(eliminate_exists(parse_formula("exists t. t - 5 = 0"), cfg) == true);
    CHECK(eliminate_exists(
              parse_formula("exists t. ord(9) < ord(t) and ord(t) < ord(27) and Pn[3](t)"),
              cfg) == false);
    CHECK(eliminate_exists(parse_formula("exists t. Qnm[2,1](2, t - 5)"), cfg) == true);
    CHECK(eliminate_exists(parse_formula("exists t. not (t = t)"), cfg) == false);
}

TEST_CASE("output order is deterministic") {
    auto f = parse_formula("ord(star(t, t) - 4) >= ord(9) or div(1, t)");
    auto d1 = decompose(f, cfg);
    auto d2 = decompose(f, cfg);
    CHECK(decomposition_to_json(d1) == decomposition_to_json(d2));
}

TEST_CASE("refinement statistics are reported") {
    auto d = decompose(parse_formula("ord(star(t, t) - 4) >= ord(9)"), cfg);
    CHECK(d.ball_splits > 0);
    CHECK(d.undecided_budget == cfg.depth_cap);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(decompose(parse_formula("exists t. Pn[2](t)"), cfg), UnsupportedTerm);
    CHECK_THROWS_AS(decompose(parse_formula("ord(x) < ord(y)"), cfg), ScopeError);
    CHECK_THROWS_AS(eliminate_exists(parse_formula("Pn[2](t)"), cfg), UnsupportedTerm);
    CHECK_THROWS_AS(eliminate_exists(parse_formula("exists t. ord(x) < ord(t)"), cfg),
                    ScopeError);
}

TEST_CASE("depth cap stops divergence loudly") {
    DecomposeConfig tight{3, 1};
    CHECK_THROWS_AS(decompose(parse_formula("t - 5 = 0 and Pn[2](t - 2)"), tight),
                    DepthExceeded);
}
