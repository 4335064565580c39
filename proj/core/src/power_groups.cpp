#include "padcell/power_groups.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace padcell {

namespace {

long mod_pos(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

void check_group_params(long n, int m, long prime) {
    if (n < 1) throw std::invalid_argument("coset group: n < 1");
    if (m < 1) throw std::invalid_argument("coset group: m < 1");
    if (prime < 2) throw std::invalid_argument("coset group: prime < 2");
}

} // namespace

const PnUnion& pn_as_qnm_union(long n, long prime) {
    if (n < 1) throw std::invalid_argument("pn_as_qnm_union: n < 1");
    if (prime < 2) throw std::invalid_argument("pn_as_qnm_union: prime < 2");
    thread_local std::map<std::pair<long, long>, PnUnion> cache;
    auto key = std::make_pair(prime, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    int e = static_cast<int>(ord_int(Int(n), prime));
    int m = 2 * e + 1;
    Int modulus = pow_int(prime, m);
    std::vector<Int> lambdas;
    for (Int u = 1; u < modulus; ++u) {
        if (u % prime == 0) continue;
        lambdas.push_back(mod_pow(u, Int(n), modulus));
    }
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
    return cache.emplace(key, PnUnion{n, m, std::move(lambdas)}).first->second;
}

bool is_pn(const PAdic& x, long n) {
    if (n < 1) throw std::invalid_argument("is_pn: n < 1");
    if (x.is_zero()) throw ZeroArgument("is_pn: zero");
    const PnUnion& u = pn_as_qnm_union(n, x.prime());
    long v = x.ord().value(); // throws when the valuation is not determined
    if (mod_pos(v, n) != 0) return false;
    Int a = x.ac(u.m);
    return std::binary_search(u.lambdas.begin(), u.lambdas.end(), a);
}

bool is_pn(const Rat& x, long n, long prime) {
    return is_pn(PAdic::from_rational(x, PrecisionContext(prime)), n);
}

bool is_qnm(const PAdic& x, long n, int m) {
    check_group_params(n, m, x.prime());
    if (x.is_zero()) throw ZeroArgument("is_qnm: zero");
    long v = x.ord().value();
    if (mod_pos(v, n) != 0) return false;
    return x.ac(m) == 1;
}

bool is_qnm(const Rat& x, long n, int m, long prime) {
    return is_qnm(PAdic::from_rational(x, PrecisionContext(prime)), n, m);
}

std::vector<Int> coset_reps(long n, int m, long prime) {
    check_group_params(n, m, prime);
    Int modulus = pow_int(prime, m);
    std::vector<Int> reps;
    Int power = 1;
    for (long i = 0; i < n; ++i) {
        for (Int u = 1; u < modulus; ++u) {
            if (u % prime == 0) continue;
            reps.push_back(power * u);
        }
        power *= prime;
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

Int rho(const PAdic& x, long n, int m) {
    check_group_params(n, m, x.prime());
    if (x.is_zero()) throw ZeroArgument("rho: zero");
    long v = x.ord().value();
    return pow_int(x.prime(), mod_pos(v, n)) * x.ac(m);
}

CosetTable CosetTable::build(long n, int m, long prime) {
    check_group_params(n, m, prime);
    int e = static_cast<int>(ord_int(Int(n), prime));
    CosetTable t;
    t.prime = prime;
    t.n = n;
    t.m = m;
    t.reps = coset_reps(n, m, prime);
    t.decision_precision = std::max(m, 2 * e + 1) + 1;
    return t;
}

std::size_t CosetTable::index_of(const Int& rep) const {
    auto it = std::lower_bound(reps.begin(), reps.end(), rep);
    if (it == reps.end() || *it != rep) throw std::invalid_argument("CosetTable: unknown representative");
    return static_cast<std::size_t>(it - reps.begin());
}

int decision_level(const CosetSpec& spec, long prime) {
    switch (spec.kind) {
        case CosetKind::Pn:
            return 2 * static_cast<int>(ord_int(Int(spec.n), prime)) + 2;
        case CosetKind::Qnm:
            return spec.m + 1;
        default:
            return 1;
    }
}

bool in_coset(const PAdic& x, const Rat& lambda, const CosetSpec& spec) {
    if (x.is_imprecise()) throw InsufficientPrecision("in_coset: valuation not determined");
    if (spec.kind == CosetKind::Zero) return x.is_zero();
    if (x.is_zero()) return false;
    if (spec.kind == CosetKind::Trivial) return true;
    if (rat_is_zero(lambda)) throw std::invalid_argument("in_coset: zero coset scale");
    PAdic scaled = x.scaled(Rat(1) / lambda);
    if (spec.kind == CosetKind::Pn) return is_pn(scaled, spec.n);
    return is_qnm(scaled, spec.n, spec.m);
}

std::pair<PAdic, long> ord_leq_witness(const PAdic& x, const PAdic& y) {
    if (x.prime() != y.prime()) throw std::invalid_argument("ord_leq_witness: mixed primes");
    if (x.is_zero() && y.is_zero()) throw BothZero();
    const long p = x.prime();
    if (p == 2) {
        PAdic w = x * x * x + (y * y * y).scaled(Rat(2));
        return {w, 3};
    }
    PAdic w = x * x + (y * y).scaled(Rat(p));
    return {w, 2};
}

} // namespace padcell
