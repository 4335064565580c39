#include "padcell/poly.hpp"

#include <algorithm>

namespace padcell {

Poly poly_trim(Poly p) {
    while (!p.empty() && rat_is_zero(p.back())) p.pop_back();
    return p;
}

bool poly_is_zero(const Poly& p) {
    for (const Rat& c : p)
        if (!rat_is_zero(c)) return false;
    return true;
}

long poly_deg(const Poly& p) {
    for (std::size_t i = p.size(); i > 0; --i)
        if (!rat_is_zero(p[i - 1])) return static_cast<long>(i - 1);
    return -1;
}

Poly poly_const(const Rat& c) {
    if (rat_is_zero(c)) return {};
    return {c};
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return poly_trim(std::move(out));
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

Poly poly_neg(const Poly& a) {
    Poly out = a;
    for (Rat& c : out) c = -c;
    return out;
}

Poly poly_scale(const Rat& c, const Poly& a) {
    if (rat_is_zero(c)) return {};
    Poly out = a;
    for (Rat& x : out) x *= c;
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (poly_is_zero(a) || poly_is_zero(b)) return {};
    Poly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (rat_is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return poly_trim(std::move(out));
}

std::optional<Poly> poly_div_exact(const Poly& num, const Poly& den) {
    Poly n = poly_trim(num), d = poly_trim(den);
    if (d.empty()) return std::nullopt;
    if (n.empty()) return Poly{};
    if (n.size() < d.size()) return std::nullopt;
    Poly q(n.size() - d.size() + 1, Rat(0));
    for (std::size_t i = q.size(); i > 0; --i) {
        std::size_t k = i - 1;
        Rat c = n[k + d.size() - 1] / d.back();
        q[k] = c;
        if (rat_is_zero(c)) continue;
        for (std::size_t j = 0; j < d.size(); ++j) n[k + j] -= c * d[j];
    }
    if (!poly_is_zero(n)) return std::nullopt;
    return poly_trim(std::move(q));
}

Rat poly_eval(const Poly& p, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = p.size(); i > 0; --i) acc = acc * x + p[i - 1];
    return acc;
}

Poly poly_shift(const Poly& p, const Rat& c) {
    Poly a = p;
    if (a.size() < 2 || rat_is_zero(c)) return poly_trim(std::move(a));
    std::size_t n = a.size() - 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = n; i-- > k;) a[i] += c * a[i + 1];
    return poly_trim(std::move(a));
}

ExtInt poly_ord_at(const Poly& p, const Rat& x, long prime) {
    Rat v = poly_eval(p, x);
    if (rat_is_zero(v)) return ExtInt::pos_inf();
    return ExtInt(ord_rat(v, prime));
}

std::optional<PowerForm> poly_power_form(const Poly& p) {
    long d = poly_deg(p);
    if (d < 1) return std::nullopt;
    Rat a = p[static_cast<std::size_t>(d)];
    // a (t - c)^d has second coefficient -a d c.
    Rat c = d == 0 ? Rat(0) : -p[static_cast<std::size_t>(d - 1)] / (a * Rat(d));
    Poly probe = poly_const(a);
    Poly lin{-c, Rat(1)};
    for (long i = 0; i < d; ++i) probe = poly_mul(probe, lin);
    if (poly_trim(p) == probe) return PowerForm{a, c, d};
    return std::nullopt;
}

bool poly_less(const Poly& a, const Poly& b) {
    Poly x = poly_trim(a), y = poly_trim(b);
    if (x.size() != y.size()) return x.size() < y.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) return x[i] < y[i];
    }
    return false;
}

} // namespace padcell
