#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include "padcell/errors.hpp"

namespace padcell {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

// ---- exact integer helpers -------------------------------------------------

inline Int pow_int(long base, long exp) {
    if (exp < 0) throw std::invalid_argument("pow_int: negative exponent");
    Int r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// p-adic valuation of a nonzero integer.
inline long ord_int(Int n, long p) {
    if (n == 0) throw ZeroArgument("ord_int: zero");
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// boost::rational's mixed-type comparisons recurse on cpp_int; always test
// zero through the numerator.
inline bool rat_is_zero(const Rat& r) { return r.numerator() == 0; }

// p-adic valuation of a nonzero rational.
inline long ord_rat(const Rat& r, long p) {
    if (r.numerator() == 0) throw ZeroArgument("ord_rat: zero");
    return ord_int(r.numerator(), p) - ord_int(r.denominator(), p);
}

inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// Modular inverse via extended gcd; m must be > 1 and gcd(a, m) = 1.
inline Int mod_inverse(const Int& a, const Int& m) {
    Int r0 = m, r1 = mod_floor(a, m);
    Int s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        Int s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: not invertible");
    return mod_floor(s0, m);
}

inline Int mod_pow(Int base, Int exp, const Int& m) {
    Int r = 1;
    base = mod_floor(base, m);
    while (exp > 0) {
        if ((exp & 1) != 0) r = (r * base) % m;
        base = (base * base) % m;
        exp >>= 1;
    }
    return r;
}

// Largest integer r with r^k <= n (n >= 0, k >= 1).
Int int_kth_root(const Int& n, long k);

// Exact k-th root of an integer if it exists.
bool exact_kth_root(const Int& n, long k, Int& out);

std::string to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

// ---- integers extended with both infinities (valuation arithmetic) ---------

class ExtInt {
public:
    constexpr ExtInt() : v_(0), kind_(Kind::Fin) {}
    constexpr ExtInt(long v) : v_(v), kind_(Kind::Fin) {}
    static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }
    static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }

    constexpr bool is_finite() const { return kind_ == Kind::Fin; }
    constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    constexpr long value() const {
        if (!is_finite()) throw std::logic_error("ExtInt: not finite");
        return v_;
    }

    friend constexpr bool operator==(const ExtInt& a, const ExtInt& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Fin || a.v_ == b.v_);
    }
    friend constexpr bool operator<(const ExtInt& a, const ExtInt& b) {
        if (a.kind_ == Kind::NegInf) return b.kind_ != Kind::NegInf;
        if (a.kind_ == Kind::PosInf) return false;
        if (b.kind_ == Kind::PosInf) return true;
        if (b.kind_ == Kind::NegInf) return false;
        return a.v_ < b.v_;
    }
    friend constexpr bool operator!=(const ExtInt& a, const ExtInt& b) { return !(a == b); }
    friend constexpr bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
    friend constexpr bool operator<=(const ExtInt& a, const ExtInt& b) { return !(b < a); }
    friend constexpr bool operator>=(const ExtInt& a, const ExtInt& b) { return !(a < b); }

    // Addition of valuations; +inf absorbs (used for ord of products).
    // +inf + -inf is a caller error.
    friend constexpr ExtInt operator+(const ExtInt& a, const ExtInt& b) {
        if (a.is_pos_inf() || b.is_pos_inf()) {
            if (a.is_neg_inf() || b.is_neg_inf())
                throw std::logic_error("ExtInt: inf + -inf");
            return pos_inf();
        }
        if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
        return ExtInt(a.v_ + b.v_);
    }
    friend constexpr ExtInt operator-(const ExtInt& a) {
        if (a.is_pos_inf()) return neg_inf();
        if (a.is_neg_inf()) return pos_inf();
        return ExtInt(-a.v_);
    }
    friend constexpr ExtInt operator-(const ExtInt& a, const ExtInt& b) { return a + (-b); }

    std::string str() const {
        if (is_pos_inf()) return "inf";
        if (is_neg_inf()) return "-inf";
        return std::to_string(v_);
    }

private:
    enum class Kind { NegInf, Fin, PosInf };
    constexpr explicit ExtInt(Kind k) : v_(0), kind_(k) {}
    long v_;
    Kind kind_;
};

inline ExtInt ext_min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }
inline ExtInt ext_max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

} // namespace padcell
