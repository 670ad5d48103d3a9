#pragma once

#include <string>

#include "qsym/poly.hpp"

namespace qsym {

/// Evaluation at a zero of the denominator.
struct pole_error : std::domain_error {
    Rat point;
    explicit pole_error(const Rat& q0)
        : std::domain_error("pole at q = " + q0.str()), point(q0) {}
};

/// Rational function of q in canonical form: gcd(num, den) = 1, den monic,
/// zero is 0/1.  Equality is structural.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFunc(int c) : num_(Rat(c)), den_(Rat(1)) {}
    RatFunc(Poly p) : num_(std::move(p)), den_(Rat(1)) {}

    /// Canonicalizing constructor; throws std::domain_error on a zero
    /// denominator.  Idempotent on canonical inputs.
    RatFunc(Poly num, Poly den);

    /// Builds from an already-canonical pair (den monic, gcd 1).
    static RatFunc from_canonical(Poly num, Poly den);

    /// Parses "(num)/(den)" or a bare polynomial.
    static RatFunc parse(const std::string& s, const std::string& var = "q");

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc pow(unsigned e) const;

    /// q -> q^k, k >= 1; the canonical form is preserved by the substitution.
    RatFunc subst_power(unsigned k) const;

    /// Exact value at q0; throws pole_error when den(q0) = 0.
    Rat eval(const Rat& q0) const;

    /// Value of the canonical form at q = 1 (removable singularities of any
    /// non-canonical source pair were already cancelled on construction).
    Rat eval_at_one() const { return eval(Rat(1)); }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// "num" when the denominator is 1, "(num)/(den)" otherwise.
    std::string str(const std::string& var = "q") const;

private:
    Poly num_, den_;
};

}  // namespace qsym
