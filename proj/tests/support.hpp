// Shared helpers for the test suites: seeded randomness, value generators,
// and exact region membership used by the linearization checks.
#pragma once

#include <cstdlib>
#include <random>
#include <string>

#include "padcell/rewrite.hpp"
#include "padcell/semantics.hpp"

namespace padcell::testing {

// One generator per process, seeded from PADCELL_TEST_SEED for reproducible
// logs. The default seed is arbitrary but fixed.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen = [] {
        unsigned long long seed = 0x9e3779b97f4a7c15ull;
        if (const char* s = std::getenv("PADCELL_TEST_SEED")) seed = std::strtoull(s, nullptr, 10);
        return std::mt19937_64(seed);
    }();
    return gen;
}

inline long rand_long(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng());
}

// Nonzero rational u/v * p^k with u, v coprime to p: valuation is exactly k.
inline Rat random_rat(long prime, long val_lo, long val_hi, long unit_bound = 500) {
    long k = rand_long(val_lo, val_hi);
    long u = 0, v = 0;
    do u = rand_long(1, unit_bound); while (u % prime == 0);
    do v = rand_long(1, unit_bound); while (v % prime == 0);
    if (rand_long(0, 1)) u = -u;
    Rat r{Int(u), Int(v)};
    long e = k;
    Int pk = pow_int(prime, e < 0 ? -e : e);
    return e >= 0 ? r * Rat(pk) : r / Rat(pk);
}

// Exact membership of a rational point in a precell-shaped region.
inline bool region_member(const Region& r, const Rat& t0, long prime) {
    for (const OrdAtom& a : r.ord_atoms) {
        ExtInt l = poly_ord_at(a.lhs, t0, prime);
        ExtInt rr = poly_ord_at(a.rhs, t0, prime);
        bool ok = false;
        switch (a.rel) {
            case OrdRel::Lt: ok = l < rr; break;
            case OrdRel::Le: ok = l <= rr; break;
            case OrdRel::Eq: ok = l == rr; break;
            case OrdRel::Ne: ok = l != rr; break;
            case OrdRel::Ge: ok = l >= rr; break;
            case OrdRel::Gt: ok = l > rr; break;
        }
        if (!ok) return false;
    }
    PrecisionContext ctx(prime, 16);
    for (const CosetAtom& a : r.coset_atoms) {
        Rat v = poly_eval(a.arg, t0);
        if (a.spec.kind == CosetKind::Zero) {
            if (!rat_is_zero(v)) return false;
            continue;
        }
        if (rat_is_zero(v)) return false;
        if (a.spec.kind == CosetKind::Trivial) continue;
        if (!in_coset(PAdic::from_rational(v, ctx), a.lambda, a.spec)) return false;
    }
    return true;
}

// Exact evaluation of a one-variable term at a rational point.
inline PAdic eval_at(const Term& t, const std::string& var, const Rat& t0,
                     const PrecisionContext& ctx) {
    Assignment asg;
    asg[var] = PAdic::from_rational(t0, ctx);
    return eval_term(t, asg, ctx);
}

} // namespace padcell::testing
