// Committed corpus for the decomposition and linearization checks. All
// formulas are quantifier-free in the single variable t and written for
// p = 3. The mix covers power and coset atoms, valuation comparisons,
// restricted products, and guarded division.
#pragma once

#include <string>
#include <vector>

namespace padcell::testing {

inline const std::vector<std::string>& corpus_formulas() {
    static const std::vector<std::string> fs = {
        "Pn[2](t)",
        "Pn[3](t)",
        "not Pn[2](t)",
        "Qnm[2,1](1, t)",
        "Qnm[2,1](2, t - 5)",
        "Qnm[3,2](1, t + 1)",
        "ord(t) < ord(9)",
        "ord(9) < ord(t) and ord(t) < ord(2187)",
        "ord(t - 1) < ord(t)",
        "div(1, t)",
        "div(t, 27) or Pn[2](t)",
        "t - 5 = 0",
        "Pn[1](t)",
        "ord(t) < ord(t)",
        "ord(star(t, t)) <= ord(9)",
        "Pn[2](star(t, t))",
        "star(t, t) - t = 0",
        "ord(divg[1](t, 9)) < ord(81)",
        "Qnm[2,1](1, t) or Qnm[2,1](2, t)",
        "Pn[2](t) and not Qnm[2,1](1, t)",
        "ord(t + 3) = ord(t)",
        "ord(star(t + 1, t + 1)) < ord(9) and ord(t) <= ord(1)",
        "divg[1](star(t, t), t) - t = 0",
        "ord(3) <= ord(star(t, t) - 1)",
    };
    return fs;
}

// Terms for the linear-plus-tail checks; same variable and prime.
inline const std::vector<std::string>& corpus_terms() {
    static const std::vector<std::string> ts = {
        "3*t + 1/2",
        "t - 5",
        "star(t, t)",
        "star(t, t) - t",
        "t + star(9*t, 9*t)",
        "divg[1](t, 3) + t",
        "star(t + 1, t - 1)",
        "divg[2](star(t, t), 9)",
        "2*t + star(t, t + 3)",
        "star(3*t, divg[0](t, 1))",
    };
    return ts;
}

} // namespace padcell::testing
