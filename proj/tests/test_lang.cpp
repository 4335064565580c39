#include <doctest.h>

#include "padcell/parser.hpp"
#include "padcell/printer.hpp"

using namespace padcell;

namespace {

// print then reparse and compare structurally
void roundtrip(const std::string& s) {
    CAPTURE(s);
    auto v = parse_any(s);
    std::string printed =
        std::holds_alternative<Term>(v) ? print(std::get<Term>(v)) : print(std::get<Formula>(v));
    auto v2 = parse_any(printed);
    REQUIRE(v.index() == v2.index());
    if (std::holds_alternative<Term>(v))
        CHECK(equal(std::get<Term>(v), std::get<Term>(v2)));
    else
        CHECK(equal(std::get<Formula>(v), std::get<Formula>(v2)));
}

} // namespace

TEST_CASE("printer pins") {
    CHECK(print(f_ord(t_var("t"), CmpOp::Lt, t_const(Rat(9)))) == "ord(t) < ord(9)");
    CHECK(print(t_star(t_var("t"), t_var("t"))) == "star(t, t)");
    CHECK(print(t_scalar(Rat(1, 3), t_var("x"))) == "(1/3)*x");
}

TEST_CASE("atom parsing") {
    Formula q = parse_formula("Qnm[2,1](2, t - 5)");
    const auto& qc = std::get<FInCoset>(q->node);
    CHECK(qc.lambda == Rat(2));
    CHECK(qc.spec == CosetSpec::qnm(2, 1));
    CHECK(std::holds_alternative<TSub>(qc.arg->node));

    Formula p = parse_formula("Pn[2](t)");
    CHECK(std::get<FInCoset>(p->node).spec == CosetSpec::pn(2));
    CHECK(std::get<FInCoset>(p->node).lambda == Rat(1)); // default scale

    // div(x, y) is strict valuation comparison
    Formula d = parse_formula("div(1, t)");
    CHECK(std::get<FOrdCmp>(d->node).op == CmpOp::Lt);
    CHECK(print(d) == "ord(1) < ord(t)");
}

TEST_CASE("round trips") {
    for (const char* s : {
             "star(2, t) + t",
             "star(t, t)",
             "(1/3)*x + 2",
             "-t + -1/3",
             "divg[-1](t - 3, 3)",
             "divg[0](t, t + 1) = 3",
             "ord(star(t, t) - 4) >= ord(9)",
             "Pn[2](t)",
             "Pn[3](2, t + 1)",
             "Qnm[2,1](2, t - 5)",
             "not (t = 5) and Pn[2](t) or ord(t) <= ord(27)",
             "exists t. Pn[2](t) and ord(9) < ord(t)",
             "(exists t. t = 5) or 1 = 1",
             "t - 5 = 0",
             "2*t + 1/2",
             "(2/3)*(t + 1) - star(t, 1 - t)",
             "not (not (Qnm[3,2](1/9, t)))",
         })
        roundtrip(s);
}

TEST_CASE("precedence") {
    // and binds tighter than or
    Formula f = parse_formula("ord(t) < ord(1) or ord(t) < ord(3) and ord(t) < ord(9)");
    REQUIRE(std::holds_alternative<FOr>(f->node));
    CHECK(std::holds_alternative<FAnd>(std::get<FOr>(f->node).rhs->node));

    CHECK(std::holds_alternative<TScalar>(parse_term("(1/3)*star(t, t)")->node));
}

TEST_CASE("parse_any distinguishes sorts") {
    CHECK(std::holds_alternative<Term>(parse_any("star(t, t) + 1")));
    CHECK(std::holds_alternative<Formula>(parse_any("star(t, t) = 1")));
}

TEST_CASE("free variables and substitution") {
    Formula ex = parse_formula("exists u. ord(u) < ord(v)");
    CHECK(free_vars(ex) == std::set<std::string>{"v"});

    // substituting a term that mentions the bound name must rename the binder
    Formula sub = substitute(ex, "v", parse_term("u + 1"));
    CHECK(free_vars(sub) == std::set<std::string>{"u"});
    roundtrip(print(sub));

    CHECK(free_vars(parse_term("star(x, y) + z")) == std::set<std::string>{"x", "y", "z"});
}

TEST_CASE("structural equality") {
    CHECK(equal(parse_term("t + 1"), parse_term("t + 1")));
    CHECK(!equal(parse_term("t + 1"), parse_term("1 + t")));
    CHECK(equal(parse_formula("Pn[2](t)"), parse_formula("Pn[2](t)")));
    CHECK(!equal(parse_formula("Pn[2](t)"), parse_formula("Pn[3](t)")));
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_formula("ord(t <");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 7);
    }
    CHECK_THROWS_AS(parse_formula("Pn[0](t)"), SyntaxError);   // n >= 1
    CHECK_THROWS_AS(parse_term("t + (x and y)"), SyntaxError); // formula in term slot
    CHECK_THROWS_AS(parse_term("(t + 1)*2"), SyntaxError);     // scalars are left factors
    try {
        parse_formula("ord(t) < ord(9)\nand ord(t) <");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 2);
    }
}
