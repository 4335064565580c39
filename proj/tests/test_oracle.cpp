#include <doctest.h>

#include "padcell/decompose.hpp"
#include "padcell/oracle.hpp"
#include "padcell/parser.hpp"

using namespace padcell;

TEST_CASE("grid enumeration") {
    // zero point + (2V+1) valuations x units coprime to p mod p^D
    SampleGrid g = sample_grid(3, 1, 1);
    CHECK(g.points.size() == 1 + 3 * 2);
    CHECK(g.points[0].is_zero());

    SampleGrid g2 = sample_grid(3, 1, 2);
    CHECK(g2.points.size() == 1 + 3 * 6);

    SampleGrid g5 = sample_grid(5, 2, 1);
    CHECK(g5.points.size() == 1 + 5 * 4);

    // deterministic order: valuations ascend, units ascend
    CHECK(g.points[1].valuation == -1);
    CHECK(g.points[1].unit == 1);
    CHECK(g.points[2].unit == 2);

    GridPoint gp = g2.points[1];
    CHECK(gp.ball(3).precision() == gp.depth);
    CHECK(gp.value(3) == Rat(gp.unit) * Rat(Int(1), Int(3)));
}

TEST_CASE("default grids shrink for larger primes") {
    CHECK(default_grid(3).val_window == 8);
    CHECK(default_grid(3).unit_depth == 6);
    CHECK(default_grid(7).points.size() < default_grid(3).points.size());
}

TEST_CASE("equivalence is reflexive on decided points") {
    PrecisionContext ctx(3, 8);
    Formula f = parse_formula("Pn[2](t)");
    auto rep = equiv_check(f, f, sample_grid(3, 3, 3), ctx);
    CHECK(rep.equivalent());
    CHECK(rep.disagreements.empty());
    CHECK(rep.undecided.empty());
}

TEST_CASE("a genuine difference is found and reported") {
    // 4 = 2^2 has ord 0 and ac 2, so it is a square but not in 1 Q_{2,1}
    PrecisionContext ctx(5, 8);
    auto rep = equiv_check(parse_formula("Pn[2](t)"), parse_formula("Qnm[2,1](1, t)"),
                           sample_grid(5, 3, 2), ctx);
    CHECK(!rep.equivalent());
    REQUIRE(!rep.disagreements.empty());
    bool at4 = false;
    for (const auto& d : rep.disagreements)
        if (d.point.value(5) == Rat(4)) {
            at4 = true;
            CHECK(d.lhs == TriBool::True);
            CHECK(d.rhs == TriBool::False);
        }
    CHECK(at4);
}

TEST_CASE("precision edges refine until the cap decides them") {
    // 2188 = 1 + 3^7: balls at depth <= 7 cannot separate t from 2188
    PrecisionContext ctx(3, 8);
    Formula f = parse_formula("ord(t - 2188) >= ord(2187)");
    Formula none = parse_formula("ord(t) < ord(t)"); // empty reference

    auto shallow = equiv_check(f, none, sample_grid(3, 1, 2), ctx, 4);
    CHECK(!shallow.undecided.empty());

    auto deep = equiv_check(f, none, sample_grid(3, 1, 2), ctx, 9);
    CHECK(deep.undecided.empty());
    CHECK(!deep.equivalent()); // 2188 itself satisfies f
}

TEST_CASE("existence search finds exact witnesses") {
    PrecisionContext c5(5, 8);
    CHECK(brute_exists(parse_formula("t = 5"), "t", sample_grid(5, 2, 2), c5));

    PrecisionContext c3(3, 8);
    CHECK(brute_exists(parse_formula("Pn[2](t)"), "t", sample_grid(3, 2, 2), c3));
    CHECK(!brute_exists(parse_formula("ord(9) < ord(t) and ord(t) < ord(27) and Pn[3](t)"), "t",
                        default_grid(3), c3));
}

TEST_CASE("decompositions cover their formulas") {
    PrecisionContext ctx(3, 8);
    SampleGrid grid = sample_grid(3, 4, 4);
    for (const char* s : {"Pn[2](t)", "div(1, t)", "ord(t + 3) = ord(t)"}) {
        CAPTURE(s);
        Formula f = parse_formula(s);
        auto dec = decompose(f, {3, 12});
        auto rep = cover_check(f, dec.cells, grid, ctx);
        CHECK(rep.disagreements.empty());
        CHECK(rep.overlaps.empty());
        CHECK(rep.undecided.size() * 100 < grid.points.size());
    }
}
