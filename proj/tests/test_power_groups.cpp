#include <doctest.h>

#include <algorithm>

#include "padcell/power_groups.hpp"

using namespace padcell;

namespace {
const PrecisionContext c3(3, 8);
PAdic r3(long n, long d = 1) { return PAdic::from_rational(n, d, c3); }
} // namespace

TEST_CASE("coset representatives") {
    auto reps = coset_reps(2, 1, 3);
    CHECK(reps == std::vector<Int>{1, 2, 3, 6});

    for (long p : {3L, 5L})
        for (long n = 1; n <= 4; ++n)
            for (int m = 1; m <= 2; ++m) {
                auto rs = coset_reps(n, m, p);
                CHECK(Int(rs.size()) == Int(n) * (p - 1) * pow_int(p, m - 1));
                CHECK(std::is_sorted(rs.begin(), rs.end()));
            }
}

TEST_CASE("canonical representative") {
    CHECK(rho(r3(3), 2, 1) == 3);
    CHECK(rho(r3(18), 2, 1) == 2);   // ord 2 is 0 mod 2, ac 2
    CHECK(rho(r3(6), 2, 1) == 6);    // ord 1, ac 2
    CHECK(rho(r3(1, 3), 2, 1) == 3); // ord -1 is 1 mod 2
    CHECK_THROWS_AS(rho(PAdic::zero(3), 2, 1), ZeroArgument);
}

TEST_CASE("power group membership") {
    CHECK(is_pn(r3(4), 2));
    CHECK(!is_pn(r3(2), 2));
    CHECK(is_pn(r3(9), 2));
    CHECK(!is_pn(r3(3), 2));
    CHECK(is_pn(Rat(2), 2, 7));  // 3^2 = 2 mod 7
    CHECK(is_pn(Rat(17), 2, 2)); // 1 mod 8
    CHECK(!is_pn(Rat(3), 2, 2));
    CHECK_THROWS_AS(is_pn(PAdic::zero(3), 2), ZeroArgument);
    // one digit is not enough to settle a square at p = 3 (needs ord parity
    // plus the unit residue)
    CHECK_THROWS_AS(is_pn(PAdic::below_precision(3, 0), 2), InsufficientPrecision);
}

TEST_CASE("Qnm membership") {
    CHECK(is_qnm(r3(9), 2, 1));
    CHECK(!is_qnm(r3(18), 2, 1));
    CHECK(!is_qnm(r3(3), 2, 1));
    CHECK(is_qnm(Rat(10), 1, 2, 3)); // ac_2 = 1
    CHECK(!is_qnm(Rat(4), 1, 2, 3));

    // group closure on a small exhaustive sample
    for (long va = 0; va < 4; ++va)
        for (long ua : {1L, 10L})
            for (long vb = 0; vb < 4; ++vb)
                for (long ub : {1L, 10L}) {
                    Rat a = Rat(pow_int(3, va) * ua), b = Rat(pow_int(3, vb) * ub);
                    if (is_qnm(a, 2, 2, 3) && is_qnm(b, 2, 2, 3)) {
                        CHECK(is_qnm(a * b, 2, 2, 3));
                        CHECK(is_qnm(a / b, 2, 2, 3));
                    }
                }
}

TEST_CASE("power group as coset union") {
    const PnUnion& u2 = pn_as_qnm_union(2, 3);
    CHECK(u2.m == 1);
    CHECK(u2.lambdas == std::vector<Int>{1});

    const PnUnion& u3 = pn_as_qnm_union(3, 7);
    CHECK(u3.m == 1);
    CHECK(u3.lambdas == std::vector<Int>{1, 6});

    const PnUnion& u22 = pn_as_qnm_union(2, 2); // e = 1, decisive depth 3
    CHECK(u22.m == 3);
    CHECK(u22.lambdas == std::vector<Int>{1});
}

TEST_CASE("coset table") {
    CosetTable tab = CosetTable::build(2, 1, 3);
    CHECK(tab.size() == 4);
    CHECK(tab.index_of(6) == 3);
    CHECK_THROWS_AS(tab.index_of(5), std::invalid_argument);
    CHECK(tab.rep_of(r3(18)) == 2);
    CHECK(tab.rep_of(r3(6)) == 6);
    CHECK(tab.decision_precision >= 1);
}

TEST_CASE("coset membership with scaling") {
    CHECK(in_coset(r3(4), Rat(1), CosetSpec::pn(2)));
    CHECK(!in_coset(r3(2), Rat(1), CosetSpec::pn(2)));
    CHECK(in_coset(r3(2), Rat(2), CosetSpec::pn(2)));
    CHECK(in_coset(r3(18), Rat(2), CosetSpec::qnm(2, 1)));
    CHECK(in_coset(r3(7), Rat(1), CosetSpec::trivial()));
    CHECK(!in_coset(PAdic::zero(3), Rat(1), CosetSpec::trivial()));
    CHECK(in_coset(PAdic::zero(3), Rat(1), CosetSpec::zero()));
    CHECK(!in_coset(r3(1), Rat(1), CosetSpec::zero()));
    CHECK_THROWS_AS(in_coset(r3(1), Rat(0), CosetSpec::pn(2)), std::invalid_argument);
    CHECK_THROWS_AS(in_coset(PAdic::below_precision(3, 0), Rat(1), CosetSpec::pn(2)),
                    InsufficientPrecision);
}

TEST_CASE("valuation comparison witness") {
    // p odd: w = a^2 + p b^2 with n = 2
    auto [w, n] = ord_leq_witness(r3(1), r3(1));
    CHECK(n == 2);
    CHECK(w.exact_value().value() == Rat(4));
    CHECK(is_pn(w, n));

    // p = 2: cubes, w = a^3 + 2 b^3
    PrecisionContext c2(2, 8);
    auto [w2, n2] = ord_leq_witness(PAdic::from_rational(1, 1, c2), PAdic::from_rational(1, 1, c2));
    CHECK(n2 == 3);
    CHECK(w2.exact_value().value() == Rat(3));
    CHECK(is_pn(w2, n2));

    CHECK_THROWS_AS(ord_leq_witness(PAdic::zero(3), PAdic::zero(3)), BothZero);

    // small exhaustive equivalence battery at p = 3
    for (long va = 0; va < 3; ++va)
        for (long ua : {1L, 2L, 5L})
            for (long vb = 0; vb < 3; ++vb)
                for (long ub : {1L, 2L, 5L}) {
                    PAdic a = PAdic::from_rational(Rat(pow_int(3, va) * ua), c3);
                    PAdic b = PAdic::from_rational(Rat(pow_int(3, vb) * ub), c3);
                    auto [ww, nn] = ord_leq_witness(a, b);
                    CHECK(is_pn(ww, nn) == (va <= vb));
                }
}

TEST_CASE("decision level covers the coset depth") {
    CHECK(decision_level(CosetSpec::qnm(2, 3), 3) >= 3);
    CHECK(decision_level(CosetSpec::pn(2), 3) >= 1);
    CHECK(decision_level(CosetSpec::pn(2), 2) >= 3);
}
