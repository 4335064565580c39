#pragma once

#include <optional>
#include <string>

#include "padcell/rational.hpp"

namespace padcell {

struct PrecisionContext {
    long prime = 3;
    int target_precision = 8; // significant digits carried by new values
    int guard_digits = 2;     // extra digits used by evaluation drivers

    PrecisionContext() = default;
    PrecisionContext(long p, int n = 8, int guard = 2)
        : prime(p), target_precision(n), guard_digits(guard) {}
};

/**
 * Finite-precision p-adic number.
 *
 * A value is in exactly one of three states:
 *  - zero: exactly 0 (valuation +inf);
 *  - finite: valuation v and a unit residue u mod p^N coprime to p, denoting
 *    the ball p^v (u + p^N Z_p); the valuation is exact, the digits beyond N
 *    are unknown unless the value also carries an exact rational;
 *  - imprecise: only a lower bound on the valuation is known (cancellation
 *    consumed every known digit).
 *
 * Values created from rationals keep the rational alongside the digit window,
 * so arithmetic among them stays exact: subtracting equal values gives exact
 * zero, and angular components can be materialized to any depth. Values built
 * from raw digits (from_parts) are pure balls; cancellation past their window
 * degrades the result to the imprecise state instead of inventing digits.
 *
 * Precision accounting is pessimistic: add/sub lose exactly the cancellation
 * depth, mul/div keep the minimum relative precision of the operands. A wrong
 * digit is never produced.
 */
class PAdic {
public:
    enum class State { Zero, Finite, Imprecise };

    PAdic() : PAdic(zero(3)) {}

    static PAdic zero(long prime);
    static PAdic from_rational(const Rat& value, const PrecisionContext& ctx);
    static PAdic from_rational(long num, long den, const PrecisionContext& ctx);
    // Ball with no exact shadow: p^valuation (unit + p^precision Z_p).
    static PAdic from_parts(long prime, long valuation, const Int& unit, int precision);
    // Imprecise value: ord >= bound, nothing else known.
    static PAdic below_precision(long prime, long bound);

    long prime() const { return prime_; }
    State state() const { return state_; }
    bool is_zero() const { return state_ == State::Zero; }
    bool is_imprecise() const { return state_ == State::Imprecise; }

    // Valuation; +inf for zero. Throws InsufficientPrecision when imprecise.
    ExtInt ord() const;
    // Lower bound on the valuation, valid in every state.
    ExtInt ord_lower_bound() const;

    // Angular component mod p^m (unit residue in [1, p^m), coprime to p).
    // Normalized so that ac(p) = 1. Throws ZeroArgument on zero and
    // InsufficientPrecision when fewer than m digits are determined.
    Int ac(int m) const;

    // Significant digits guaranteed by the representation (finite state).
    int precision() const;
    // Unit residue mod p^digits; digits <= precision() unless exact.
    Int unit(int digits) const;
    const std::optional<Rat>& exact_value() const { return exact_; }

    PAdic operator-() const;
    friend PAdic operator+(const PAdic& x, const PAdic& y);
    friend PAdic operator-(const PAdic& x, const PAdic& y);
    friend PAdic operator*(const PAdic& x, const PAdic& y);
    friend PAdic operator/(const PAdic& x, const PAdic& y); // DivisionByZero

    // Multiplication by an exact rational scalar (exactness preserving).
    PAdic scaled(const Rat& q) const;

    // Drop the exact shadow, keeping only the digit window. Used by the
    // finite-precision oracle to evaluate honestly at truncated points.
    PAdic truncated() const;
    PAdic truncated(int digits) const;

    // Same state, valuation and unit digits on the common window.
    bool same_ball(const PAdic& other) const;
    // Both values decided and equal through `digits` significant digits.
    bool equal_to_precision(const PAdic& other, int digits) const;

    // Literal form: "0", "a/b" for exact rationals, "p^k*u" otherwise.
    std::string to_string() const;

private:
    PAdic(long prime, State st) : prime_(prime), state_(st) {}

    Int materialize(int digits) const; // unit residue mod p^digits

    long prime_ = 3;
    State state_ = State::Zero;
    long val_ = 0;          // finite: exact ord; imprecise: lower bound
    int prec_ = 1;          // finite: significant digits >= 1
    Int unit_ = 0;          // finite: in [1, p^prec), coprime to p
    std::optional<Rat> exact_;
};

// k-th root via Hensel lifting. Requires theta != 0 and k | ord(theta).
// Divides out the angular component at level 2e+1 (e = ord_p(k)) to form
// theta_1 with ac(theta_1) = 1, then Newton-iterates t^k - theta_1 from the
// residue 1 mod p^(e+1). The result eta satisfies eta^k = theta_1 through
// ctx.target_precision digits (capped by the digits theta itself carries),
// ord(eta) = ord(theta)/k and ac_(e+1)(eta) = 1.
PAdic hensel_kth_root(const PAdic& theta, long k, const PrecisionContext& ctx);

// Parse a point literal: "0", "a", "a/b", or "p^k*u" (p matching ctx.prime).
PAdic padic_from_string(const std::string& s, const PrecisionContext& ctx);

} // namespace padcell
