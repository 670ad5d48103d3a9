#include "qsym/ratfunc.hpp"

#include <cctype>

namespace qsym {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    if (!den_.is_monic()) {
        Rat lc_inv = den_.lc().inverse();
        num_.scale(lc_inv);
        den_.scale(lc_inv);
    }
}

RatFunc RatFunc::from_canonical(Poly num, Poly den) {
    RatFunc f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    return f;
}

RatFunc RatFunc::operator-() const { return from_canonical(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Reduce by the denominator gcd before cross-multiplying.
    Poly g = poly_gcd(a.den_, b.den_);
    if (g.degree() > 0) {
        Poly da = a.den_.exact_div(g), db = b.den_.exact_div(g);
        return RatFunc(a.num_ * db + b.num_ * da, a.den_ * db);
    }
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // Cross-cancel so the final gcd is only a scalar adjustment.
    Poly g1 = poly_gcd(a.num_, b.den_);
    Poly g2 = poly_gcd(b.num_, a.den_);
    Poly n1 = g1.degree() > 0 ? a.num_.exact_div(g1) : a.num_;
    Poly d2 = g1.degree() > 0 ? b.den_.exact_div(g1) : b.den_;
    Poly n2 = g2.degree() > 0 ? b.num_.exact_div(g2) : b.num_;
    Poly d1 = g2.degree() > 0 ? a.den_.exact_div(g2) : a.den_;
    return RatFunc(n1 * n2, d1 * d2);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return a * RatFunc(b.den_, b.num_);
}

RatFunc RatFunc::pow(unsigned e) const {
    if (e == 0) return RatFunc(Rat(1));
    if (is_zero()) return RatFunc();
    // num and den stay coprime under powering, and den stays monic.
    return from_canonical(num_.pow(e), den_.pow(e));
}

RatFunc RatFunc::subst_power(unsigned k) const {
    if (k == 0) throw std::invalid_argument("RatFunc::subst_power: k must be >= 1");
    if (k == 1) return *this;
    // Coprimality survives q -> q^k (a common root of the images would give a
    // common root of the originals), and the denominator stays monic.
    return from_canonical(num_.subst_power(k), den_.subst_power(k));
}

Rat RatFunc::eval(const Rat& q0) const {
    Rat d = den_.eval(q0);
    if (d.is_zero()) throw pole_error(q0);
    return num_.eval(q0) / d;
}

std::string RatFunc::str(const std::string& var) const {
    if (den_.is_one()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RatFunc RatFunc::parse(const std::string& s, const std::string& var) {
    // Split "(num)/(den)" at the top-level '/' between two parenthesized
    // groups; otherwise parse as a bare polynomial.
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == '(') {
        int depth = 0;
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] == '(') ++depth;
            else if (s[j] == ')') {
                if (--depth == 0) {
                    std::size_t k = j + 1;
                    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
                    if (k < s.size() && s[k] == '/') {
                        std::string num = s.substr(i + 1, j - i - 1);
                        std::size_t l = k + 1;
                        while (l < s.size() && std::isspace(static_cast<unsigned char>(s[l]))) ++l;
                        if (l >= s.size() || s[l] != '(' || s.back() != ')')
                            throw std::invalid_argument("RatFunc::parse: malformed \"" + s + "\"");
                        std::string den = s.substr(l + 1, s.size() - l - 2);
                        return RatFunc(Poly::parse(num, var), Poly::parse(den, var));
                    }
                    break;
                }
            }
        }
    }
    return RatFunc(Poly::parse(s, var));
}

}  // namespace qsym
