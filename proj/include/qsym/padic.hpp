#pragma once

#include <functional>
#include <vector>

#include "qsym/poly.hpp"

namespace qsym {

/// Reduction of a rational whose denominator is divisible by p.
struct not_p_adic_integer : std::domain_error {
    explicit not_p_adic_integer(const Rat& x, unsigned long p)
        : std::domain_error("not a p-adic integer: " + x.str() + " at p = " +
                            std::to_string(p)) {}
};

bool is_odd_prime(unsigned long p);

/// Residue mod p^N with explicit odd prime p and precision N >= 1.
/// Arithmetic requires matching (p, N).
class PadicInt {
public:
    PadicInt(unsigned long p, unsigned N, const mpz_class& value);

    unsigned long p() const { return p_; }
    unsigned precision() const { return n_; }
    const mpz_class& residue() const { return residue_; }
    const mpz_class& modulus() const { return modulus_; }

    friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
    friend PadicInt operator*(const PadicInt& a, const PadicInt& b);
    friend bool operator==(const PadicInt& a, const PadicInt& b);
    friend bool operator!=(const PadicInt& a, const PadicInt& b) { return !(a == b); }

    std::string str() const;

private:
    unsigned long p_;
    unsigned n_;
    mpz_class modulus_, residue_;
    static void require_same(const PadicInt& a, const PadicInt& b);
};

/// numerator * denominator^{-1} mod p^N; the denominator must be coprime
/// to p (otherwise not_p_adic_integer).
PadicInt padic_reduce(const Rat& x, unsigned long p, unsigned N);

/// Parameters of a truncated fermionic integral: odd prime p, maximal
/// precision, and a p-adic q with |1 - q0|_p < 1 and p-unit denominator.
struct IntegralConfig {
    unsigned long p;
    unsigned N_max;
    Rat q0;

    IntegralConfig(unsigned long p_, unsigned N_max_, const Rat& q0_);
    static IntegralConfig with_default_q(unsigned long p, unsigned N_max);
};

/// Level-N truncation of the fermionic integral of f:
/// sum_{x=0}^{p^N-1} f(x) (-1)^x, reduced mod p^N.
PadicInt fermionic_riemann_sum(const std::function<Rat(unsigned long)>& f,
                               unsigned long p, unsigned N);

/// The same alternating sum kept exact.
Rat fermionic_riemann_sum_exact(const std::function<Rat(unsigned long)>& f,
                                unsigned long p, unsigned N);

/// Defect of the integral shift identity at level N for an
/// integer-coefficient polynomial f and shift n >= 1:
///   D = S_N[f(.+n)] + (-1)^{n-1} S_N[f] - 2 sum_{l=0}^{n-1} (-1)^{n-1-l} f(l),
/// returned as v_p(D) (empty = D is exactly zero).
Valuation shift_defect(const Poly& f, unsigned n, unsigned long p, unsigned N);

/// c(s) = #{(y_1,...,y_r) in [0,M)^r : sum y_i = s}, s = 0..r(M-1); the
/// coefficients of ((1-z^M)/(1-z))^r by iterated convolution.
std::vector<mpz_class> tuple_count_by_sum(unsigned r, unsigned long M);

/// Exact level-N collapsed Riemann sum of the r-fold fermionic moment:
///   sum_{s=0}^{r(p^N-1)} (-1)^s c(s) [a+s]_{q0}^n.
Rat moment_sum(unsigned n, unsigned r, unsigned a, const Rat& q0,
               unsigned long p, unsigned N);

/// moment_sum reduced mod p^N; N must not exceed cfg.N_max.
PadicInt multivariate_moment(unsigned n, unsigned r, unsigned a,
                             const IntegralConfig& cfg, unsigned N);

/// [m]_{q0} for integer m >= 0, exact.
Rat q_number_value(unsigned long m, const Rat& q0);

}  // namespace qsym
