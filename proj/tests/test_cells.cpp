#include <doctest.h>

#include "padcell/cells.hpp"
#include "padcell/json_io.hpp"

using namespace padcell;

namespace {

const long p = 3;

Rat pw(long k) { return k >= 0 ? Rat(pow_int(p, k)) : Rat(Int(1), pow_int(p, -k)); }

Cell mk_cell(Rat center, std::optional<long> lo_ord, std::optional<long> hi_ord, Rat lambda,
             CosetSpec spec) {
    Cell c;
    c.variable = "t";
    c.center = t_const(center);
    if (lo_ord) c.lower = CellBound{t_const(pw(*lo_ord)), true};
    if (hi_ord) c.upper = CellBound{t_const(pw(*hi_ord)), true};
    c.coset = {lambda, spec};
    return c;
}

} // namespace

TEST_CASE("precell with one coset atom keeps one cell") {
    Region r;
    r.coset_atoms.push_back(CosetAtom{{Rat(-5), Rat(1)}, Rat(2), CosetSpec::qnm(2, 1)});
    auto cells = precell_to_cells(r, "t", p);
    REQUIRE(cells.size() == 1);
    CHECK(cell_center_value(cells[0]) == Rat(5));
    CHECK(!cells[0].lower);
    CHECK(!cells[0].upper);
    CHECK(cells[0].coset.lambda == Rat(2));
    CHECK(cells[0].coset.spec == CosetSpec::qnm(2, 1));
}

TEST_CASE("precell splits a bare window by coset class") {
    Region r;
    r.ord_atoms.push_back(OrdAtom{{Rat(0), Rat(1)}, OrdRel::Lt, poly_const(Rat(9))});
    auto cells = precell_to_cells(r, "t", p);
    REQUIRE(cells.size() == 2);
    for (const auto& c : cells) {
        CHECK(cell_center_value(c) == Rat(0));
        CHECK(!c.lower);
        CHECK(cell_upper_ord(c, p) == 2);
        CHECK(c.coset.spec == CosetSpec::qnm(1, 1));
    }
    CHECK(cells[0].coset.lambda == Rat(1));
    CHECK(cells[1].coset.lambda == Rat(2));
}

TEST_CASE("precell recenters a shifted atom") {
    Region r;
    r.ord_atoms.push_back(OrdAtom{{Rat(-1), Rat(1)}, OrdRel::Lt, {Rat(0), Rat(1)}});
    auto cells = precell_to_cells(r, "t", p);
    REQUIRE(!cells.empty());
    bool saw_point = false;
    for (const auto& c : cells) {
        CHECK(cell_center_value(c) == Rat(0));
        if (rat_is_zero(c.coset.lambda)) {
            saw_point = true;
            continue;
        }
        CHECK(cell_lower_ord(c, p) == 0);
        CHECK(!c.upper);
    }
    CHECK(saw_point);
}

TEST_CASE("precell rejects nonlinear atoms") {
    Region r;
    r.ord_atoms.push_back(OrdAtom{{Rat(0), Rat(0), Rat(1)}, OrdRel::Lt, poly_const(Rat(9))});
    CHECK_THROWS_AS(precell_to_cells(r, "t", p), UnsupportedTerm);
}

TEST_CASE("intersection narrows windows") {
    Cell a = mk_cell(Rat(0), std::nullopt, 2, Rat(1), CosetSpec::qnm(1, 1));
    Cell b = mk_cell(Rat(0), std::nullopt, 3, Rat(1), CosetSpec::qnm(1, 1));
    auto cells = intersect_cells(a, b, p);
    REQUIRE(cells.size() == 1);
    CHECK(!cells[0].lower);
    CHECK(cell_upper_ord(cells[0], p) == 2);
    CHECK(cells[0].coset.lambda == Rat(1));
}

TEST_CASE("disjoint cosets intersect to nothing") {
    Cell a = mk_cell(Rat(0), std::nullopt, std::nullopt, Rat(1), CosetSpec::qnm(2, 1));
    Cell b = mk_cell(Rat(0), std::nullopt, std::nullopt, Rat(2), CosetSpec::qnm(2, 1));
    CHECK(intersect_cells(a, b, p).empty());
}

TEST_CASE("intersection across centers stays a finite union") {
    Cell a = mk_cell(Rat(0), std::nullopt, std::nullopt, Rat(1), CosetSpec::trivial());
    Cell b = mk_cell(Rat(1), std::nullopt, std::nullopt, Rat(1), CosetSpec::trivial());
    auto cells = intersect_cells(a, b, p);
    REQUIRE(!cells.empty());
    CHECK(cells.size() <= 8);
    PrecisionContext ctx(p, 8);
    auto member_any = [&](const PAdic& x) {
        TriBool acc = TriBool::False;
        for (const auto& c : cells) acc = tri_or(acc, cell_member(c, x));
        return acc;
    };
    // both punctures are excluded, everything else stays
    CHECK(member_any(PAdic::from_rational(Rat(2), ctx)) == TriBool::True);
    CHECK(member_any(PAdic::from_rational(Rat(0), ctx)) == TriBool::False);
    CHECK(member_any(PAdic::from_rational(Rat(1), ctx)) == TriBool::False);
}

TEST_CASE("membership") {
    PrecisionContext ctx(p, 8);
    Cell pn2 = mk_cell(Rat(0), std::nullopt, std::nullopt, Rat(1), CosetSpec::pn(2));
    CHECK(cell_member(pn2, PAdic::from_rational(Rat(4), ctx)) == TriBool::True);
    CHECK(cell_member(pn2, PAdic::from_rational(Rat(2), ctx)) == TriBool::False);

    Cell point = mk_cell(Rat(5), std::nullopt, std::nullopt, Rat(0), CosetSpec::zero());
    CHECK(cell_member(point, PAdic::from_rational(Rat(5), ctx)) == TriBool::True);
    CHECK(cell_member(point, PAdic::from_rational(Rat(6), ctx)) == TriBool::False);
    // a shallow ball around 5 cannot be confirmed equal to 5
    CHECK(cell_member(point, PAdic::from_parts(p, 0, 5, 2)) == TriBool::Undecided);
    CHECK(cell_member(point, PAdic::from_parts(p, 1, 4, 3)) == TriBool::False);

    Cell lowb = mk_cell(Rat(0), 2, std::nullopt, Rat(1), CosetSpec::trivial());
    CHECK(cell_member(lowb, PAdic::from_rational(Rat(27), ctx)) == TriBool::True);
    CHECK(cell_member(lowb, PAdic::from_rational(Rat(9), ctx)) == TriBool::False);
}

TEST_CASE("existence decision") {
    CHECK(*cell_qe(mk_cell(Rat(0), 2, 7, Rat(1), CosetSpec::qnm(3, 1)), p).value == true);
    CHECK(*cell_qe(mk_cell(Rat(0), 2, 3, Rat(1), CosetSpec::qnm(3, 1)), p).value == false);
    CHECK(*cell_qe(mk_cell(Rat(5), std::nullopt, std::nullopt, Rat(0), CosetSpec::zero()), p)
               .value == true);
    CHECK(*cell_qe(mk_cell(Rat(0), 2, std::nullopt, Rat(1), CosetSpec::qnm(3, 1)), p).value ==
          true);
}

TEST_CASE("existence decision agrees with direct search on a slice") {
    for (long o1 = -2; o1 <= 3; ++o1)
        for (long o2 = -2; o2 <= 5; ++o2)
            for (long n = 1; n <= 4; ++n)
                for (long omu = -1; omu <= 1; ++omu) {
                    Cell c = mk_cell(Rat(0), o1, o2, pw(omu), CosetSpec::qnm(n, 1));
                    bool brute = false;
                    for (long g = o1 + 1; g < o2; ++g)
                        if (((g - omu) % n + n) % n == 0) brute = true;
                    auto q = cell_qe(c, p);
                    REQUIRE(q.value.has_value());
                    CHECK(*q.value == brute);
                }
}

TEST_CASE("symbolic bounds fall back to residue cases") {
    Cell c = mk_cell(Rat(0), std::nullopt, std::nullopt, Rat(1), CosetSpec::qnm(2, 1));
    c.lower = CellBound{t_var("a"), true};
    c.upper = CellBound{t_var("b"), true};
    auto q = cell_qe(c, p);
    CHECK(!q.value);
    CHECK(!q.residue_cases.empty());
}

TEST_CASE("raw window conversion") {
    RawCell raw;
    raw.center = Rat(0);
    raw.lo = 1;
    raw.hi = 4;
    raw.lambda = Rat(1);
    raw.spec = CosetSpec::trivial();
    Cell c = cell_from_raw("t", raw, p);
    CHECK(cell_lower_ord(c, p) == 0);
    CHECK(cell_upper_ord(c, p) == 5);
}

TEST_CASE("cells survive a json round trip") {
    std::vector<Cell> cases = {
        mk_cell(Rat(5), std::nullopt, std::nullopt, Rat(0), CosetSpec::zero()),
        mk_cell(Rat(0), 0, 4, Rat(2), CosetSpec::qnm(2, 1)),
        mk_cell(Rat(1, 3), std::nullopt, 2, Rat(1), CosetSpec::pn(3)),
        mk_cell(Rat(0), 1, std::nullopt, Rat(1), CosetSpec::trivial()),
    };
    for (const Cell& c : cases) {
        auto j = cell_to_json(c);
        Cell back = cell_from_json(j);
        CHECK(cell_to_json(back) == j);
    }
}

TEST_CASE("cell ordering is total on distinct cells") {
    Cell a = mk_cell(Rat(0), std::nullopt, 2, Rat(1), CosetSpec::qnm(1, 1));
    Cell b = mk_cell(Rat(0), std::nullopt, 2, Rat(2), CosetSpec::qnm(1, 1));
    Cell c = mk_cell(Rat(1), std::nullopt, std::nullopt, Rat(1), CosetSpec::trivial());
    CHECK(cell_less(a, b, p));
    CHECK(!cell_less(b, a, p));
    CHECK(cell_less(a, c, p) != cell_less(c, a, p));
}
