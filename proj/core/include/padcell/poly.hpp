#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padcell/rational.hpp"

namespace padcell {

// Dense rational polynomial, index i holding the coefficient of t^i. The
// zero polynomial is the empty vector and helpers return trimmed results.
using Poly = std::vector<Rat>;

Poly poly_trim(Poly p);
bool poly_is_zero(const Poly& p);
long poly_deg(const Poly& p); // -1 for the zero polynomial
Poly poly_const(const Rat& c);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_scale(const Rat& c, const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);

// Quotient when den divides num exactly over Q, otherwise nothing.
std::optional<Poly> poly_div_exact(const Poly& num, const Poly& den);

Rat poly_eval(const Poly& p, const Rat& x);

// Recentering: returns q with q(s) = p(c + s).
Poly poly_shift(const Poly& p, const Rat& c);

// ord_p of p(x), +inf when p(x) = 0.
ExtInt poly_ord_at(const Poly& p, const Rat& x, long prime);

// if p = a (t - c)^k with k >= 1, report (a, c, k)
struct PowerForm {
    Rat scale;
    Rat center;
    long k = 0;
};
std::optional<PowerForm> poly_power_form(const Poly& p);

// Total order used for canonical keys: degree, then coefficients.
bool poly_less(const Poly& a, const Poly& b);

} // namespace padcell
