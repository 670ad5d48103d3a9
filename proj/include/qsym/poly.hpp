#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsym/rat.hpp"

namespace qsym {

/// Dense univariate polynomial over Rat.  The zero polynomial is the empty
/// coefficient vector; otherwise the leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c) { if (!c.is_zero()) c_.push_back(c); }
    Poly(int c) : Poly(Rat(c)) {}
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(const Rat& c, std::size_t k);
    static Poly variable() { return monomial(Rat(1), 1); }

    /// Parses the canonical rendering, e.g. "1-q+3/2*q^2".  Whitespace is
    /// ignored; the variable name defaults to "q".
    static Poly parse(const std::string& s, const std::string& var = "q");

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Coefficient of q^k (zero beyond the degree).
    const Rat& coeff(std::size_t k) const {
        static const Rat zero;
        return k < c_.size() ? c_[k] : zero;
    }
    const Rat& lc() const { return c_.back(); }  // nonzero polynomials only
    const std::vector<Rat>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& scale(const Rat& c);
    friend Poly operator*(const Rat& c, Poly p) { return p.scale(c); }

    Poly pow(unsigned e) const;

    /// Multiplication by q^k.
    Poly shifted(std::size_t k) const;

    Rat eval(const Rat& x) const;

    /// q -> q^k substitution, k >= 1.
    Poly subst_power(unsigned k) const;

    /// Quotient and remainder over the rationals; d must be nonzero.
    std::pair<Poly, Poly> divrem(const Poly& d) const;

    /// Exact quotient; throws std::domain_error when the division leaves a
    /// remainder.
    Poly exact_div(const Poly& d) const;

    /// Quotient when the division is exact, std::nullopt otherwise.
    std::optional<Poly> try_exact_div(const Poly& d) const;

    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    Poly monic() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return a.c_ != b.c_; }

    std::string str(const std::string& var = "q") const;

private:
    std::vector<Rat> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

/// Monic gcd over the rationals (primitive-PRS Euclidean algorithm on the
/// integer primitive parts).  gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

inline Poly q_pow(unsigned k) { return Poly::monomial(Rat(1), k); }

}  // namespace qsym
