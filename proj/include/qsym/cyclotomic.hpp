#pragma once

#include <map>

#include "qsym/ratfunc.hpp"

namespace qsym::detail {

/// d-th cyclotomic polynomial (monic, integer coefficients), memoized.
const Poly& cyclotomic(unsigned d);

/// A monic product of cyclotomic polynomials, kept in factored form.  This is
/// the shape of every denominator produced by the q-Euler closed forms, and
/// factored tracking turns their canonicalization into exact trial divisions
/// instead of large polynomial gcds.
struct CycloProduct {
    std::map<unsigned, unsigned> factors;  // cyclotomic index -> multiplicity

    static CycloProduct one() { return {}; }
    /// q^k - 1 = prod_{d | k} Phi_d.
    static CycloProduct q_pow_minus_one(unsigned k);
    /// q^k + 1 = prod_{d | 2k, d not| k} Phi_d.
    static CycloProduct q_pow_plus_one(unsigned k);

    bool is_one() const { return factors.empty(); }
    unsigned degree() const;

    CycloProduct& mul(const CycloProduct& o, unsigned times = 1);
    CycloProduct& mul_factor(unsigned d, unsigned times = 1);

    /// Componentwise max of multiplicities.
    static CycloProduct lcm(const CycloProduct& a, const CycloProduct& b);

    /// this / d, assuming d divides this.
    CycloProduct quotient(const CycloProduct& d) const;

    /// Factored form of prod Phi_d(q^w)^e, w >= 1.
    CycloProduct subst_power(unsigned w) const;

    /// Expanded polynomial (memoized globally; products here recur heavily).
    const Poly& expand() const;

    friend bool operator==(const CycloProduct& a, const CycloProduct& b) {
        return a.factors == b.factors;
    }
};

/// num / den with a factored denominator; the workhorse for sums of q-Euler
/// terms sharing structured denominators.
struct CycloFrac {
    Poly num;          // arbitrary rational coefficients
    CycloProduct den;  // monic by construction

    CycloFrac() = default;
    CycloFrac(Poly n, CycloProduct d) : num(std::move(n)), den(std::move(d)) {}

    CycloFrac& add(const CycloFrac& o);
    CycloFrac& mul_poly(const Poly& p) { num *= p; return *this; }

    /// Fully reduced RatFunc (trial-divides num by each remaining factor).
    RatFunc finalize() const;

    /// As finalize(), also reporting the factored canonical denominator.
    std::pair<RatFunc, CycloProduct> finalize_with_factors() const;
};

/// Factors a monic divisor of a product of cyclotomics back into factored
/// form; throws std::domain_error if a non-cyclotomic part remains.
CycloProduct factor_cyclotomic_support(const Poly& p);

}  // namespace qsym::detail
