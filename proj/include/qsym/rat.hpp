#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace qsym {

/// Exact rational scalar, always reduced: gcd(|num|, den) = 1, den >= 1,
/// zero is 0/1.  Thin value wrapper around GMP's mpq_class.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(n) {}
    Rat(const mpz_class& n) : v_(n) {}
    Rat(long num, long den) : v_(mpq_class(num, den)) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }
    Rat(const mpz_class& num, const mpz_class& den) : v_(mpq_class(num, den)) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Accepts "a" or "a/b", optionally signed.
    static Rat parse(const std::string& s) {
        auto pos = s.find('/');
        if (pos == std::string::npos) return Rat(mpz_class(s));
        return Rat(mpz_class(s.substr(0, pos)), mpz_class(s.substr(pos + 1)));
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(tag{}, mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat pow(unsigned long e) const {
        mpq_class r;
        mpz_pow_ui(r.get_num().get_mpz_t(), v_.get_num().get_mpz_t(), e);
        mpz_pow_ui(r.get_den().get_mpz_t(), v_.get_den().get_mpz_t(), e);
        return Rat(tag{}, r);  // power of a canonical form is canonical
    }

    Rat inverse() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(tag{}, mpq_class(1) / v_);
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    /// "a" when integral, "a/b" otherwise.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    struct tag {};
    Rat(tag, mpq_class v) : v_(std::move(v)) {}  // already canonical
    mpq_class v_;
};

/// p-adic valuation of an exact quantity; empty optional encodes +infinity
/// (the valuation of zero).
using Valuation = std::optional<long>;

/// v_p(x): nullopt for x = 0, otherwise the exponent of p in x (negative
/// when p divides the denominator).
inline Valuation valuation(const Rat& x, unsigned long p) {
    if (x.is_zero()) return std::nullopt;
    mpz_class pz(static_cast<unsigned long>(p)), tmp;
    long v = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), x.num().get_mpz_t(), pz.get_mpz_t()));
    if (v == 0)
        v = -static_cast<long>(
            mpz_remove(tmp.get_mpz_t(), x.den().get_mpz_t(), pz.get_mpz_t()));
    return v;
}

/// True when a (possibly infinite) valuation is at least `floor`.
inline bool valuation_at_least(const Valuation& v, long floor) {
    return !v.has_value() || *v >= floor;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace qsym
