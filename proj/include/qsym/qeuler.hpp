#pragma once

#include <vector>

#include "qsym/cyclotomic.hpp"
#include "qsym/ratfunc.hpp"

namespace qsym {

/// [m]_q = 1 + q + ... + q^{m-1}; [0]_q = 0.
Poly q_int(unsigned m);

/// [a/w]_{q^w} as a rational function of q, i.e. (1-q^a)/(1-q^w) in canonical
/// form.  a >= 0, w >= 1.
RatFunc q_frac(unsigned a, unsigned w);

/// Euler numbers of order r: E_0^(r), ..., E_nmax^(r), from the truncated
/// power-series expansion of (2/(e^t+1))^r.
std::vector<Rat> classical_euler_numbers(unsigned n_max, unsigned r);

/// E_n^(r)(x) = sum_l C(n,l) E_l^(r) x^{n-l}, as a polynomial in x.
Poly classical_euler_poly(unsigned n, unsigned r);

/// Evaluation point of a higher-order q-Euler polynomial: E_{n,Q}^(r)(a/w)
/// with Q = q^w.  w = 1 recovers the plain E_{n,q}^(r)(a).
struct QEulerKey {
    unsigned n = 0;  // degree
    unsigned r = 1;  // order, >= 1
    unsigned a = 0;  // argument numerator
    unsigned w = 1;  // argument denominator / base exponent, >= 1

    friend auto operator<=>(const QEulerKey&, const QEulerKey&) = default;
};

/// q-Euler number of order r:
///   E_{n,q}^(r) = (1-q)^{-n} sum_{l=0}^{n} C(n,l) (-1)^l (2/(1+q^l))^r,
/// canonical, with no pole at q = 1.  Memoized.
RatFunc q_euler_number(unsigned n, unsigned r);

/// E_{n,Q}^(r)(a/w) with Q = q^w, computed through the addition formula
///   sum_{l=0}^{n} C(n,l) q^{la} E_{l,Q}^(r) [a/w]_Q^{n-l}   (0^0 = 1).
/// Memoized.
RatFunc q_euler_poly(const QEulerKey& key);
inline RatFunc q_euler_poly(unsigned n, unsigned r, unsigned a, unsigned w) {
    return q_euler_poly(QEulerKey{n, r, a, w});
}

/// Independent route for integer arguments: the moment-style closed form
///   (1-q)^{-n} sum_{l=0}^{n} C(n,l) (-1)^l q^{la} (2/(1+q^l))^r.
RatFunc q_euler_poly_closed(unsigned n, unsigned r, unsigned a);

namespace detail {
/// Canonical value together with the factored form of its denominator.
struct FactoredRF {
    RatFunc value;
    CycloProduct den_factors;
};
const FactoredRF& q_euler_number_factored(unsigned n, unsigned r);
const FactoredRF& q_euler_poly_factored(const QEulerKey& key);
}  // namespace detail

}  // namespace qsym
