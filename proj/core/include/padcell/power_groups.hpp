#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "padcell/padic.hpp"

namespace padcell {

// x is an n-th power in K^x iff n | ord x and the unit is an n-th power
// residue mod p^(2e+1), e = ord_p(n); the residue test at that depth is
// decisive (Hensel). Exact on exact inputs. Throws ZeroArgument on zero and
// InsufficientPrecision when the ball carries fewer digits than the test needs.
bool is_pn(const PAdic& x, long n);
bool is_pn(const Rat& x, long n, long prime);

// x lies in Q_{n,m} iff ord x = 0 (mod n) and ac_m(x) = 1.
bool is_qnm(const PAdic& x, long n, int m);
bool is_qnm(const Rat& x, long n, int m, long prime);

// Sorted coset representatives p^i u of K^x / Q_{n,m}: 0 <= i < n and u a
// unit lift in [1, p^m). There are n (p-1) p^(m-1) of them.
std::vector<Int> coset_reps(long n, int m, long prime);

// Canonical representative of the coset x Q_{n,m}: p^(ord x mod n) lift(ac_m(x)).
Int rho(const PAdic& x, long n, int m);

// P_n expressed as a finite union of Q_{n,m} cosets at the decisive depth
// m = 2 ord_p(n) + 1: x in P_n iff rho(x; n, m) is one of the lambdas.
struct PnUnion {
    long n;
    int m;
    std::vector<Int> lambdas; // sorted unit lifts in [1, p^m)
};
const PnUnion& pn_as_qnm_union(long n, long prime); // memoized per (prime, n)

// Decision data for one quotient K^x / Q_{n,m}.
struct CosetTable {
    long prime;
    long n;
    int m;
    std::vector<Int> reps;  // sorted
    int decision_precision; // unit digits sufficient to classify any point

    static CosetTable build(long n, int m, long prime);
    std::size_t size() const { return reps.size(); }
    std::size_t index_of(const Int& rep) const; // invalid_argument if absent
    Int rep_of(const PAdic& x) const { return rho(x, n, m); }
};

// The coset sorts a cell or membership atom can refer to. Pn ignores m,
// Trivial (all of K^x) and Zero ({0}) ignore both parameters.
enum class CosetKind { Pn, Qnm, Trivial, Zero };

struct CosetSpec {
    CosetKind kind = CosetKind::Trivial;
    long n = 1;
    int m = 1;

    static CosetSpec pn(long n) { return {CosetKind::Pn, n, 0}; }
    static CosetSpec qnm(long n, int m) { return {CosetKind::Qnm, n, m}; }
    static CosetSpec trivial() { return {CosetKind::Trivial, 1, 1}; }
    static CosetSpec zero() { return {CosetKind::Zero, 1, 1}; }

    friend bool operator==(const CosetSpec& a, const CosetSpec& b) {
        if (a.kind != b.kind) return false;
        switch (a.kind) {
            case CosetKind::Pn: return a.n == b.n;
            case CosetKind::Qnm: return a.n == b.n && a.m == b.m;
            default: return true;
        }
    }
};

// Unit digits needed to decide membership in a coset of this sort, with one
// guard digit. Used to size sample points and working precision.
int decision_level(const CosetSpec& spec, long prime);

// Membership of x in lambda * G for the group G named by spec. lambda must be
// nonzero for the group kinds; zero belongs only to the Zero sort. Throws
// InsufficientPrecision when x is too shallow to decide.
bool in_coset(const PAdic& x, const Rat& lambda, const CosetSpec& spec);

// Witness pair (w, n) with: ord x <= ord y iff w in P_n. The two valuation
// contributions are forced into distinct residues mod n, so w never vanishes
// unless x = y = 0, which throws BothZero.
// p odd: w = x^2 + p y^2, n = 2. p = 2: w = x^3 + 2 y^3, n = 3.
std::pair<PAdic, long> ord_leq_witness(const PAdic& x, const PAdic& y);

} // namespace padcell
