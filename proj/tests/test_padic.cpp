#include <doctest.h>

#include "padcell/padic.hpp"
#include "support.hpp"

using namespace padcell;
using padcell::testing::random_rat;

namespace {
const PrecisionContext c3(3, 8);
PAdic r3(long n, long d = 1) { return PAdic::from_rational(n, d, c3); }
} // namespace

TEST_CASE("construction and valuation") {
    PrecisionContext c(3, 4);
    PAdic a = PAdic::from_rational(9, 2, c);
    CHECK(a.ord() == ExtInt(2));
    CHECK(a.unit(4) == 41); // 1/2 is 41 mod 81
    CHECK(a.to_string() == "9/2");

    PAdic z = PAdic::zero(3);
    CHECK(z.is_zero());
    CHECK(z.ord().is_pos_inf());
    CHECK(z.to_string() == "0");

    PAdic ball = PAdic::from_parts(3, 2, 5, 3);
    CHECK(ball.ord() == ExtInt(2));
    CHECK(ball.precision() == 3);
    CHECK(!ball.exact_value());
    CHECK(ball.to_string() == "3^2*5");

    CHECK_THROWS_AS(PAdic::from_rational(1, 0, c), DivisionByZero);
}

TEST_CASE("exact values cancel exactly") {
    PAdic x = PAdic::from_rational(7, 9, c3);
    PAdic y = PAdic::from_rational(7, 9, c3);
    CHECK((x - y).is_zero());
    CHECK((r3(1) + r3(-1)).is_zero());
    CHECK((r3(1, 3) + r3(2, 3)).exact_value().value() == Rat(1));
}

TEST_CASE("pure balls degrade instead of inventing digits") {
    PAdic one = r3(1);
    PAdic ball = PAdic::from_parts(3, 0, 242, 4); // -1 + O(3^4) as digits
    PAdic s = one + ball;
    CHECK(s.is_imprecise());
    CHECK(s.ord_lower_bound() == ExtInt(4));
    CHECK_THROWS_AS(s.ord(), InsufficientPrecision);

    PAdic lb = PAdic::below_precision(3, 2);
    CHECK(lb.is_imprecise());
    CHECK(lb.ord_lower_bound() == ExtInt(2));
}

TEST_CASE("angular component is normalized and multiplicative") {
    CHECK(r3(3).ac(1) == 1);
    CHECK(r3(3).ac(3) == 1);
    CHECK(r3(18).ac(1) == 2);
    CHECK(r3(5).ac(2) == 5);
    CHECK_THROWS_AS(PAdic::zero(3).ac(1), ZeroArgument);
    CHECK_THROWS_AS(PAdic::from_parts(3, 0, 2, 1).ac(3), InsufficientPrecision);

    Int m = pow_int(3, 3);
    PAdic x = r3(14), y = r3(10, 7);
    CHECK((x * y).ac(3) == mod_floor(x.ac(3) * y.ac(3), m));
}

TEST_CASE("scaled and truncated") {
    PAdic x = r3(5);
    CHECK(x.scaled(Rat(1, 3)).ord() == ExtInt(-1));
    CHECK(x.scaled(Rat(0)).is_zero());

    PAdic t = x.truncated();
    CHECK(!t.exact_value());
    CHECK(t.ord() == ExtInt(0));
    CHECK(t.same_ball(PAdic::from_parts(3, 0, x.unit(8), 8)));
}

TEST_CASE("ball identity and digit comparison") {
    CHECK(r3(4).same_ball(r3(4)));
    CHECK(r3(4).equal_to_precision(r3(4), 8));
    CHECK(!r3(4).equal_to_precision(r3(5), 1));
    // 4 and 13 agree mod 9 but not mod 27
    CHECK(r3(4).equal_to_precision(r3(13), 2));
    CHECK(!r3(4).equal_to_precision(r3(13), 3));
}

TEST_CASE("division") {
    CHECK((r3(6) / r3(2)).exact_value().value() == Rat(3));
    CHECK((r3(1) / r3(9)).ord() == ExtInt(-2));
    CHECK_THROWS_AS(r3(1) / PAdic::zero(3), DivisionByZero);
}

TEST_CASE("k-th roots") {
    PAdic h9 = hensel_kth_root(r3(9), 2, c3);
    CHECK(h9.exact_value().value() == Rat(3));

    PAdic h2 = hensel_kth_root(r3(2), 2, c3); // theta_1 = 1 after removing ac
    CHECK(h2.exact_value().value() == Rat(1));

    PAdic h4 = hensel_kth_root(r3(4), 2, c3); // the square root with ac = 1
    CHECK(h4.ac(1) == 1);
    CHECK((h4 * h4).equal_to_precision(r3(4), 8));
    CHECK(h4.equal_to_precision(r3(-2), 8));

    CHECK_THROWS_AS(hensel_kth_root(r3(3), 2, c3), OrderNotDivisible);
    CHECK_THROWS_AS(hensel_kth_root(PAdic::zero(3), 2, c3), ZeroArgument);
}

TEST_CASE("literal parsing round trips") {
    for (const char* s : {"0", "5", "-7/9", "3^2*5", "3^-1*2"}) {
        PAdic v = padic_from_string(s, c3);
        PAdic again = padic_from_string(v.to_string(), c3);
        CHECK(v.same_ball(again));
    }
    CHECK(padic_from_string("3^2*5", c3).ord() == ExtInt(2));
    CHECK_THROWS_AS(padic_from_string("junk", c3), SyntaxError);
}

TEST_CASE("random arithmetic laws hold") {
    for (long p : {2L, 3L, 5L, 7L}) {
        PrecisionContext ctx(p, 8);
        for (int i = 0; i < 500; ++i) {
            Rat a = random_rat(p, -6, 6), b = random_rat(p, -6, 6);
            PAdic x = PAdic::from_rational(a, ctx), y = PAdic::from_rational(b, ctx);
            ExtInt ox = x.ord(), oy = y.ord();
            ExtInt os = (x + y).ord();
            CHECK(os >= ext_min(ox, oy));
            if (ox != oy) CHECK(os == ext_min(ox, oy));
            CHECK((x * y).ord() == ox + oy);
            CHECK((PAdic::from_rational(1, 1, ctx) / x).ord() == -ox);
            CHECK((x + y).exact_value().value() == a + b);
            CHECK((x * y).exact_value().value() == a * b);
        }
    }
}
