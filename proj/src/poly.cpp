#include "qsym/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qsym {

Poly Poly::monomial(const Rat& c, std::size_t k) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(k + 1, Rat());
    p.c_[k] = c;
    return p;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

Poly& Poly::scale(const Rat& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

Poly Poly::pow(unsigned e) const {
    Poly r(Rat(1));
    Poly base(*this);
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.c_.assign(c_.size() + k, Rat());
    std::copy(c_.begin(), c_.end(), r.c_.begin() + static_cast<long>(k));
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::subst_power(unsigned k) const {
    if (k == 0) throw std::invalid_argument("Poly::subst_power: k must be >= 1");
    if (k == 1 || is_zero()) return *this;
    Poly r;
    r.c_.assign((c_.size() - 1) * k + 1, Rat());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly::divrem: zero divisor");
    Poly q, r(*this);
    if (r.degree() < d.degree()) return {q, r};
    q.c_.assign(static_cast<std::size_t>(r.degree() - d.degree()) + 1, Rat());
    const Rat lc_inv = d.lc().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
        Rat c = r.lc() * lc_inv;
        q.c_[shift] = c;
        // r -= c * q^shift * d, dropping the leading term exactly
        for (std::size_t i = 0; i < d.c_.size(); ++i) {
            if (d.c_[i].is_zero()) continue;
            r.c_[shift + i] -= c * d.c_[i];
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::exact_div(const Poly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw std::domain_error("Poly::exact_div: remainder is nonzero");
    return q;
}

std::optional<Poly> Poly::try_exact_div(const Poly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

Poly Poly::monic() const {
    if (is_zero() || is_monic()) return *this;
    Poly r(*this);
    r.scale(lc().inverse());
    return r;
}

namespace {

// Primitive integer part: multiply by the lcm of coefficient denominators,
// divide by the gcd of numerators, force a positive leading coefficient.
std::vector<mpz_class> primitive_part(const Poly& p) {
    mpz_class den_lcm(1);
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> v(p.coeffs().size());
    mpz_class g(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = p.coeffs()[i].num() * (den_lcm / p.coeffs()[i].den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    }
    if (g != 0)
        for (auto& c : v) c /= g;
    if (!v.empty() && sgn(v.back()) < 0)
        for (auto& c : v) c = -c;
    return v;
}

void trim_z(std::vector<mpz_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Pseudo-remainder of a by b (b nonzero), followed by content removal.
std::vector<mpz_class> prem_primitive(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const mpz_class& lb = b.back();
    while (a.size() >= b.size()) {
        mpz_class la = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
        trim_z(a);
        if (a.empty()) break;
    }
    mpz_class g(0);
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : a) c /= g;
    if (!a.empty() && sgn(a.back()) < 0)
        for (auto& c : a) c = -c;
    return a;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<mpz_class> u = primitive_part(a), v = primitive_part(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        auto r = prem_primitive(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rat> coeffs;
    coeffs.reserve(u.size());
    for (auto& c : u) coeffs.emplace_back(c);
    return Poly(std::move(coeffs)).monic();
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rat& c = c_[k];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? "-" : "+");
        }
        Rat a = c.abs();
        if (k == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    const std::string& var;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("Poly::parse: " + what + " at position " +
                                    std::to_string(i) + " in \"" + s + "\"");
    }
    mpz_class integer() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return mpz_class(s.substr(start, i - start));
    }
    bool at_var() {
        skip_ws();
        return s.compare(i, var.size(), var) == 0;
    }

    // term := [coef] [['*'] var ['^' exp]]
    void term(Poly& acc, bool negative) {
        Rat coef(1);
        bool have_coef = false;
        skip_ws();
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            mpz_class num = integer();
            mpz_class den(1);
            if (eat('/')) den = integer();
            coef = Rat(num, den);
            have_coef = true;
        }
        std::size_t k = 0;
        if (have_coef ? (eat('*') || at_var()) : true) {
            if (!at_var()) {
                if (have_coef) fail("expected variable");
                fail("expected term");
            }
            i += var.size();
            k = 1;
            if (eat('^')) k = integer().get_ui();
        }
        if (negative) coef = -coef;
        acc += Poly::monomial(coef, k);
    }

    Poly run() {
        Poly acc;
        bool negative = eat('-');
        term(acc, negative);
        while (true) {
            skip_ws();
            if (i >= s.size()) break;
            if (eat('+')) negative = false;
            else if (eat('-')) negative = true;
            else fail("expected '+' or '-'");
            term(acc, negative);
        }
        return acc;
    }
};

}  // namespace

Poly Poly::parse(const std::string& s, const std::string& var) {
    Parser p{s, var};
    return p.run();
}

}  // namespace qsym
