#include "padcell/padic.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>

namespace padcell {

// ---- integer root helpers ---------------------------------------------------

Int int_kth_root(const Int& n, long k) {
    if (k < 1) throw std::invalid_argument("int_kth_root: k < 1");
    if (n < 0) throw std::invalid_argument("int_kth_root: negative argument");
    if (n == 0 || n == 1 || k == 1) return n;
    unsigned long bits = boost::multiprecision::msb(n) + 1;
    Int x = Int(1) << static_cast<unsigned>((bits + k - 1) / k);
    // Newton from above converges monotonically to the floor root.
    while (true) {
        Int xk1 = boost::multiprecision::pow(x, static_cast<unsigned>(k - 1));
        Int next = ((k - 1) * x + n / xk1) / k;
        if (next >= x) break;
        x = next;
    }
    while (boost::multiprecision::pow(x, static_cast<unsigned>(k)) > n) --x;
    while (boost::multiprecision::pow(x + 1, static_cast<unsigned>(k)) <= n) ++x;
    return x;
}

bool exact_kth_root(const Int& n, long k, Int& out) {
    if (k < 1) throw std::invalid_argument("exact_kth_root: k < 1");
    if (n < 0) {
        if (k % 2 == 0) return false;
        Int r;
        if (!exact_kth_root(-n, k, r)) return false;
        out = -r;
        return true;
    }
    Int r = int_kth_root(n, k);
    if (boost::multiprecision::pow(r, static_cast<unsigned>(k)) != n) return false;
    out = r;
    return true;
}

std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return r.numerator().str();
    return r.numerator().str() + "/" + r.denominator().str();
}

Rat rat_from_string(const std::string& s) {
    std::size_t i = 0, n = s.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    auto digits = [&](const char* what) {
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw SyntaxError(std::string("expected ") + what, 1, static_cast<int>(start + 1));
        return Int(s.substr(start, i - start));
    };
    skip_ws();
    bool neg = false;
    if (i < n && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
    Int num = digits("digit");
    if (neg) num = -num;
    Int den = 1;
    if (i < n && s[i] == '/') {
        ++i;
        den = digits("denominator digit");
        if (den == 0) throw SyntaxError("zero denominator", 1, static_cast<int>(i));
    }
    skip_ws();
    if (i != n) throw SyntaxError("unexpected character", 1, static_cast<int>(i + 1));
    return Rat(num, den);
}

// ---- representation helpers -------------------------------------------------

namespace {

// Unit residue of a nonzero rational mod p^digits (its p-power part removed).
Int rat_unit_mod(const Rat& q, long p, int digits) {
    Int m = pow_int(p, digits);
    Int a = q.numerator();
    Int b = q.denominator();
    long va = ord_int(a, p);
    if (va > 0) a /= pow_int(p, va);
    long vb = ord_int(b, p);
    if (vb > 0) b /= pow_int(p, vb);
    return mod_floor(mod_floor(a, m) * mod_inverse(mod_floor(b, m), m), m);
}

} // namespace

PAdic PAdic::zero(long prime) {
    if (prime < 2) throw std::invalid_argument("PAdic: prime < 2");
    PAdic r(prime, State::Zero);
    r.exact_ = Rat(0);
    return r;
}

PAdic PAdic::from_rational(const Rat& value, const PrecisionContext& ctx) {
    if (rat_is_zero(value)) return zero(ctx.prime);
    if (ctx.target_precision < 1) throw std::invalid_argument("PAdic: precision < 1");
    PAdic r(ctx.prime, State::Finite);
    r.val_ = ord_rat(value, ctx.prime);
    r.prec_ = ctx.target_precision;
    r.unit_ = rat_unit_mod(value, ctx.prime, r.prec_);
    r.exact_ = value;
    return r;
}

PAdic PAdic::from_rational(long num, long den, const PrecisionContext& ctx) {
    if (den == 0) throw DivisionByZero();
    return from_rational(Rat(Int(num), Int(den)), ctx);
}

PAdic PAdic::from_parts(long prime, long valuation, const Int& unit, int precision) {
    if (prime < 2) throw std::invalid_argument("PAdic: prime < 2");
    if (precision < 1) throw std::invalid_argument("PAdic: precision < 1");
    Int u = mod_floor(unit, pow_int(prime, precision));
    if (u % prime == 0) throw std::invalid_argument("PAdic: unit not coprime to prime");
    PAdic r(prime, State::Finite);
    r.val_ = valuation;
    r.prec_ = precision;
    r.unit_ = u;
    return r;
}

PAdic PAdic::below_precision(long prime, long bound) {
    if (prime < 2) throw std::invalid_argument("PAdic: prime < 2");
    PAdic r(prime, State::Imprecise);
    r.val_ = bound;
    return r;
}

ExtInt PAdic::ord() const {
    switch (state_) {
        case State::Zero: return ExtInt::pos_inf();
        case State::Finite: return ExtInt(val_);
        default: throw InsufficientPrecision("ord: valuation not determined");
    }
}

ExtInt PAdic::ord_lower_bound() const {
    return state_ == State::Zero ? ExtInt::pos_inf() : ExtInt(val_);
}

Int PAdic::materialize(int digits) const {
    if (digits <= prec_) return mod_floor(unit_, pow_int(prime_, digits));
    if (!exact_) throw InsufficientPrecision("fewer digits determined than requested");
    return rat_unit_mod(*exact_, prime_, digits);
}

Int PAdic::ac(int m) const {
    if (m < 1) throw std::invalid_argument("ac: m < 1");
    if (state_ == State::Zero) throw ZeroArgument("ac: zero");
    if (state_ == State::Imprecise) throw InsufficientPrecision("ac: valuation not determined");
    return materialize(m);
}

int PAdic::precision() const {
    switch (state_) {
        case State::Zero: return std::numeric_limits<int>::max();
        case State::Finite: return prec_;
        default: return 0;
    }
}

Int PAdic::unit(int digits) const {
    if (digits < 1) throw std::invalid_argument("unit: digits < 1");
    if (state_ == State::Zero) throw ZeroArgument("unit: zero");
    if (state_ == State::Imprecise) throw InsufficientPrecision("unit: valuation not determined");
    return materialize(digits);
}

PAdic PAdic::operator-() const {
    switch (state_) {
        case State::Zero: return *this;
        case State::Imprecise: return *this;
        default: break;
    }
    if (exact_) {
        PrecisionContext ctx(prime_, prec_);
        return from_rational(-*exact_, ctx);
    }
    PAdic r(prime_, State::Finite);
    r.val_ = val_;
    r.prec_ = prec_;
    r.unit_ = pow_int(prime_, prec_) - unit_;
    return r;
}

namespace {

void check_same_prime(const PAdic& x, const PAdic& y) {
    if (x.prime() != y.prime()) throw std::invalid_argument("PAdic: mixed primes");
}

// Absolute precision contributed by one operand of an addition: exact values
// do not constrain the result, a ball is known through val + prec, an
// imprecise value only through its valuation bound.
ExtInt abs_precision(const PAdic& x) {
    if (x.exact_value()) return ExtInt::pos_inf();
    if (x.is_imprecise()) return x.ord_lower_bound();
    return ExtInt(x.ord().value() + x.precision());
}

} // namespace

PAdic operator+(const PAdic& x, const PAdic& y) {
    check_same_prime(x, y);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const long p = x.prime();
    if (x.exact_value() && y.exact_value()) {
        Rat r = *x.exact_value() + *y.exact_value();
        PrecisionContext ctx(p, std::min(x.precision(), y.precision()));
        return PAdic::from_rational(r, ctx);
    }
    long m = ext_min(x.ord_lower_bound(), y.ord_lower_bound()).value();
    ExtInt a = ext_min(abs_precision(x), abs_precision(y));
    long d = a.value() - m; // finite: at least one operand is inexact
    if (d <= 0) return PAdic::below_precision(p, a.value());
    Int modulus = pow_int(p, static_cast<int>(d));
    Int s = 0;
    for (const PAdic* t : {&x, &y}) {
        if (t->is_imprecise()) continue; // its valuation bound is >= a
        long shift = t->ord().value() - m;
        if (shift >= d) continue;
        s += t->unit(static_cast<int>(d - shift)) * pow_int(p, shift);
    }
    s = mod_floor(s, modulus);
    if (s == 0) return PAdic::below_precision(p, a.value());
    long vs = ord_int(s, p);
    return PAdic::from_parts(p, m + vs, s / pow_int(p, vs), static_cast<int>(d - vs));
}

PAdic operator-(const PAdic& x, const PAdic& y) { return x + (-y); }

PAdic operator*(const PAdic& x, const PAdic& y) {
    check_same_prime(x, y);
    if (x.is_zero() || y.is_zero()) return PAdic::zero(x.prime());
    const long p = x.prime();
    if (x.exact_value() && y.exact_value()) {
        Rat r = *x.exact_value() * *y.exact_value();
        PrecisionContext ctx(p, std::min(x.precision(), y.precision()));
        return PAdic::from_rational(r, ctx);
    }
    if (x.is_imprecise() || y.is_imprecise()) {
        long bound = x.ord_lower_bound().value() + y.ord_lower_bound().value();
        return PAdic::below_precision(p, bound);
    }
    int r = std::min(x.exact_value() ? std::numeric_limits<int>::max() : x.precision(),
                     y.exact_value() ? std::numeric_limits<int>::max() : y.precision());
    Int u = mod_floor(x.unit(r) * y.unit(r), pow_int(p, r));
    return PAdic::from_parts(p, x.ord().value() + y.ord().value(), u, r);
}

PAdic operator/(const PAdic& x, const PAdic& y) {
    check_same_prime(x, y);
    if (y.is_zero()) throw DivisionByZero();
    if (y.is_imprecise()) throw InsufficientPrecision("division by a value indistinguishable from zero");
    const long p = x.prime();
    if (x.is_zero()) return PAdic::zero(p);
    if (x.exact_value() && y.exact_value()) {
        Rat r = *x.exact_value() / *y.exact_value();
        PrecisionContext ctx(p, std::min(x.precision(), y.precision()));
        return PAdic::from_rational(r, ctx);
    }
    if (x.is_imprecise())
        return PAdic::below_precision(p, x.ord_lower_bound().value() - y.ord().value());
    int r = std::min(x.exact_value() ? std::numeric_limits<int>::max() : x.precision(),
                     y.exact_value() ? std::numeric_limits<int>::max() : y.precision());
    Int m = pow_int(p, r);
    Int u = mod_floor(x.unit(r) * mod_inverse(y.unit(r), m), m);
    return PAdic::from_parts(p, x.ord().value() - y.ord().value(), u, r);
}

PAdic PAdic::scaled(const Rat& q) const {
    if (rat_is_zero(q)) return zero(prime_);
    if (state_ == State::Zero) return *this;
    long vq = ord_rat(q, prime_);
    if (state_ == State::Imprecise) return below_precision(prime_, val_ + vq);
    if (exact_) {
        PrecisionContext ctx(prime_, prec_);
        return from_rational(*exact_ * q, ctx);
    }
    Int u = mod_floor(unit_ * rat_unit_mod(q, prime_, prec_), pow_int(prime_, prec_));
    return from_parts(prime_, val_ + vq, u, prec_);
}

PAdic PAdic::truncated() const {
    if (state_ != State::Finite || !exact_) return *this;
    PAdic r = *this;
    r.exact_.reset();
    return r;
}

PAdic PAdic::truncated(int digits) const {
    if (digits < 1) throw std::invalid_argument("truncated: digits < 1");
    if (state_ != State::Finite) return *this;
    int d = exact_ ? digits : std::min(prec_, digits);
    return from_parts(prime_, val_, materialize(d), d);
}

bool PAdic::same_ball(const PAdic& other) const {
    if (prime_ != other.prime_ || state_ != other.state_) return false;
    switch (state_) {
        case State::Zero: return true;
        case State::Imprecise: return val_ == other.val_;
        default: break;
    }
    if (val_ != other.val_) return false;
    int w = std::min(prec_, other.prec_);
    return materialize(w) == other.materialize(w);
}

bool PAdic::equal_to_precision(const PAdic& other, int digits) const {
    if (digits < 1) throw std::invalid_argument("equal_to_precision: digits < 1");
    if (prime_ != other.prime_ || state_ != other.state_) return false;
    switch (state_) {
        case State::Zero: return true;
        case State::Imprecise: return false; // neither value is decided
        default: break;
    }
    if (val_ != other.val_) return false;
    auto decided = [digits](const PAdic& v) { return v.exact_.has_value() || digits <= v.prec_; };
    if (!decided(*this) || !decided(other)) return false;
    return materialize(digits) == other.materialize(digits);
}

std::string PAdic::to_string() const {
    switch (state_) {
        case State::Zero: return "0";
        case State::Imprecise:
            return "O(" + std::to_string(prime_) + "^" + std::to_string(val_) + ")";
        default: break;
    }
    if (exact_) return padcell::to_string(*exact_);
    return std::to_string(prime_) + "^" + std::to_string(val_) + "*" + unit_.str();
}

// ---- k-th roots -------------------------------------------------------------

namespace {

// Root of y^k = w with y = 1 mod p^(e+1), given w = 1 mod p^(2e+1), e = ord_p(k).
// Requires w correct mod p^(out + e); returns the root mod p^out.
Int unit_kth_root(const Int& w_in, long p, long k, int e, int out) {
    Int kp = Int(k) / pow_int(p, e);
    Int pe = pow_int(p, e);
    Int y = 1;
    long j = e + 1; // y agrees with the true root mod p^j
    while (j < out) {
        long j2 = std::min<long>(2 * j - e, out);
        Int m_hi = pow_int(p, static_cast<int>(j2 + e));
        Int m_lo = pow_int(p, static_cast<int>(j2));
        Int num = mod_floor(boost::multiprecision::pow(y, static_cast<unsigned>(k)) - w_in, m_hi);
        Int t = num / pe; // exact: ord(y^k - w) >= j + e
        Int dunit = mod_floor(kp * boost::multiprecision::pow(y, static_cast<unsigned>(k - 1)), m_lo);
        y = mod_floor(y - t * mod_inverse(dunit, m_lo), m_lo);
        j = j2;
    }
    Int m_out = pow_int(p, out);
    y = mod_floor(y, m_out);
    if (mod_floor(boost::multiprecision::pow(y, static_cast<unsigned>(k)) - w_in,
                  pow_int(p, static_cast<int>(out + e))) != 0)
        throw std::logic_error("unit_kth_root: lift failed");
    return y;
}

} // namespace

PAdic hensel_kth_root(const PAdic& theta, long k, const PrecisionContext& ctx) {
    if (k < 1) throw std::invalid_argument("hensel_kth_root: k < 1");
    if (ctx.prime != theta.prime()) throw std::invalid_argument("hensel_kth_root: mixed primes");
    if (theta.is_zero()) throw ZeroArgument("hensel_kth_root: zero");
    if (theta.is_imprecise()) throw InsufficientPrecision("hensel_kth_root: valuation not determined");
    const long p = theta.prime();
    const int e = static_cast<int>(ord_int(Int(k), p));
    const long v = theta.ord().value();
    if (mod_floor(Int(v), Int(k)) != 0) throw OrderNotDivisible();
    const long vr = v / k;
    const Int a = theta.ac(2 * e + 1); // may require digits the ball lacks

    if (theta.exact_value()) {
        int out = std::max(ctx.target_precision, e + 2);
        // theta / lift(a) is exact; try a rational root first.
        Rat q1 = *theta.exact_value() / Rat(a);
        Int rnum, rden;
        if (exact_kth_root(q1.numerator(), k, rnum) && exact_kth_root(q1.denominator(), k, rden)) {
            PrecisionContext cc(p, out);
            for (const Rat& cand : {Rat(rnum, rden), Rat(-rnum, rden)}) {
                PAdic c = PAdic::from_rational(cand, cc);
                if (c.ac(e + 1) == 1) return c;
                if (k % 2 != 0) break; // only even k has a second rational root
            }
            // No rational candidate is normalized; fall through to the lift.
        }
        Int w = rat_unit_mod(q1, p, out + e);
        return PAdic::from_parts(p, vr, unit_kth_root(w, p, k, e, out), out);
    }

    int out = std::min(ctx.target_precision, theta.precision() - e);
    if (out < 1) throw InsufficientPrecision("hensel_kth_root: too few digits");
    Int m = pow_int(p, out + e);
    Int w = mod_floor(theta.unit(out + e) * mod_inverse(mod_floor(a, m), m), m);
    return PAdic::from_parts(p, vr, unit_kth_root(w, p, k, e, out), out);
}

// ---- literals ---------------------------------------------------------------

PAdic padic_from_string(const std::string& s, const PrecisionContext& ctx) {
    std::size_t i = 0, n = s.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    auto digits = [&](const char* what) {
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw SyntaxError(std::string("expected ") + what, 1, static_cast<int>(start + 1));
        return Int(s.substr(start, i - start));
    };
    auto signed_long = [&]() {
        bool neg = false;
        if (i < n && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
        Int d = digits("digit");
        return neg ? -d : d;
    };
    skip_ws();
    Int first = signed_long();
    skip_ws();
    if (i < n && s[i] == '/') {
        ++i;
        Int den = digits("denominator digit");
        if (den == 0) throw SyntaxError("zero denominator", 1, static_cast<int>(i));
        skip_ws();
        if (i != n) throw SyntaxError("unexpected character", 1, static_cast<int>(i + 1));
        return PAdic::from_rational(Rat(first, den), ctx);
    }
    if (i < n && s[i] == '^') {
        if (first != ctx.prime)
            throw SyntaxError("base must be the working prime", 1, 1);
        ++i;
        Int k = signed_long();
        if (i >= n || s[i] != '*') throw SyntaxError("expected '*'", 1, static_cast<int>(i + 1));
        ++i;
        Int u = digits("unit digit");
        skip_ws();
        if (i != n) throw SyntaxError("unexpected character", 1, static_cast<int>(i + 1));
        if (u == 0) throw SyntaxError("unit must be nonzero", 1, static_cast<int>(i));
        long shift = ord_int(u, ctx.prime);
        if (shift > 0) u /= pow_int(ctx.prime, shift);
        int prec = ctx.target_precision;
        while (pow_int(ctx.prime, prec) <= u) ++prec;
        return PAdic::from_parts(ctx.prime, static_cast<long>(k) + shift, u, prec);
    }
    skip_ws();
    if (i != n) throw SyntaxError("unexpected character", 1, static_cast<int>(i + 1));
    return PAdic::from_rational(Rat(first), ctx);
}

} // namespace padcell
