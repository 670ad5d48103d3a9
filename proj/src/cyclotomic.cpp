#include "qsym/cyclotomic.hpp"

#include <mutex>
#include <vector>

namespace qsym::detail {

namespace {

std::mutex cyclo_mutex;
std::map<unsigned, Poly> cyclo_cache;  // d -> Phi_d; node-stable for references

// Phi_d = (q^d - 1) / prod_{e | d, e < d} Phi_e, computed bottom-up.
const Poly& cyclotomic_locked(unsigned d) {
    auto it = cyclo_cache.find(d);
    if (it != cyclo_cache.end()) return it->second;
    Poly p = Poly::monomial(Rat(1), d) - Poly(Rat(1));
    for (unsigned e = 1; e < d; ++e)
        if (d % e == 0) p = p.exact_div(cyclotomic_locked(e));
    return cyclo_cache.emplace(d, std::move(p)).first->second;
}

}  // namespace

const Poly& cyclotomic(unsigned d) {
    if (d == 0) throw std::invalid_argument("cyclotomic: index must be >= 1");
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    return cyclotomic_locked(d);
}

CycloProduct CycloProduct::q_pow_minus_one(unsigned k) {
    if (k == 0) throw std::invalid_argument("q_pow_minus_one: k must be >= 1");
    CycloProduct p;
    for (unsigned d = 1; d <= k; ++d)
        if (k % d == 0) p.factors[d] = 1;
    return p;
}

CycloProduct CycloProduct::q_pow_plus_one(unsigned k) {
    if (k == 0) throw std::invalid_argument("q_pow_plus_one: k must be >= 1");
    CycloProduct p;
    for (unsigned d = 1; d <= 2 * k; ++d)
        if ((2 * k) % d == 0 && k % d != 0) p.factors[d] = 1;
    return p;
}

unsigned CycloProduct::degree() const {
    unsigned deg = 0;
    for (const auto& [d, e] : factors)
        deg += static_cast<unsigned>(cyclotomic(d).degree()) * e;
    return deg;
}

CycloProduct& CycloProduct::mul(const CycloProduct& o, unsigned times) {
    for (const auto& [d, e] : o.factors) factors[d] += e * times;
    return *this;
}

CycloProduct& CycloProduct::mul_factor(unsigned d, unsigned times) {
    if (times > 0) factors[d] += times;
    return *this;
}

CycloProduct CycloProduct::lcm(const CycloProduct& a, const CycloProduct& b) {
    CycloProduct r = a;
    for (const auto& [d, e] : b.factors) {
        unsigned& cur = r.factors[d];
        cur = std::max(cur, e);
    }
    return r;
}

CycloProduct CycloProduct::quotient(const CycloProduct& d) const {
    CycloProduct r = *this;
    for (const auto& [idx, e] : d.factors) {
        auto it = r.factors.find(idx);
        if (it == r.factors.end() || it->second < e)
            throw std::domain_error("CycloProduct::quotient: divisor does not divide");
        it->second -= e;
        if (it->second == 0) r.factors.erase(it);
    }
    return r;
}

namespace {

std::mutex subst_mutex;
// (d, w) -> factored form of Phi_d(q^w)
std::map<std::pair<unsigned, unsigned>, CycloProduct> subst_cache;

// Roots of Phi_d(x^w) are roots of unity, each simple, so the polynomial is a
// squarefree product of cyclotomics; peel them off by trial division.
CycloProduct factor_cyclo_subst(unsigned d, unsigned w) {
    Poly p = cyclotomic(d).subst_power(w);
    CycloProduct out;
    for (unsigned m = 1; p.degree() > 0; ++m) {
        if (m > 2 * d * w)
            throw std::domain_error("factor_cyclo_subst: runaway factorization");
        const Poly& phi = cyclotomic(m);
        if (phi.degree() > p.degree()) continue;
        if (auto q = p.try_exact_div(phi)) {
            out.factors[m] += 1;
            p = std::move(*q);
        }
    }
    return out;
}

}  // namespace

CycloProduct CycloProduct::subst_power(unsigned w) const {
    if (w == 0) throw std::invalid_argument("CycloProduct::subst_power: w must be >= 1");
    if (w == 1) return *this;
    CycloProduct out;
    for (const auto& [d, e] : factors) {
        CycloProduct piece;
        {
            std::lock_guard<std::mutex> lock(subst_mutex);
            auto it = subst_cache.find({d, w});
            if (it == subst_cache.end())
                it = subst_cache.emplace(std::pair{d, w}, factor_cyclo_subst(d, w)).first;
            piece = it->second;
        }
        out.mul(piece, e);
    }
    return out;
}

namespace {

std::mutex expand_mutex;
std::map<std::map<unsigned, unsigned>, Poly> expand_cache;

}  // namespace

const Poly& CycloProduct::expand() const {
    std::lock_guard<std::mutex> lock(expand_mutex);
    auto it = expand_cache.find(factors);
    if (it != expand_cache.end()) return it->second;
    Poly p(Rat(1));
    for (const auto& [d, e] : factors)
        for (unsigned i = 0; i < e; ++i) p *= cyclotomic(d);
    return expand_cache.emplace(factors, std::move(p)).first->second;
}

CycloFrac& CycloFrac::add(const CycloFrac& o) {
    if (o.num.is_zero()) return *this;
    if (num.is_zero()) {
        *this = o;
        return *this;
    }
    CycloProduct common = CycloProduct::lcm(den, o.den);
    Poly lhs = num * common.quotient(den).expand();
    Poly rhs = o.num * common.quotient(o.den).expand();
    num = lhs + rhs;
    den = std::move(common);
    return *this;
}

std::pair<RatFunc, CycloProduct> CycloFrac::finalize_with_factors() const {
    if (num.is_zero()) return {RatFunc(), CycloProduct::one()};
    Poly n = num;
    CycloProduct d = den;
    for (auto it = d.factors.begin(); it != d.factors.end();) {
        const Poly& phi = cyclotomic(it->first);
        while (it->second > 0) {
            auto q = n.try_exact_div(phi);
            if (!q) break;
            n = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? d.factors.erase(it) : std::next(it);
    }
    // Cyclotomics are irreducible, so nothing else can cancel: the pair is
    // already canonical (denominator monic, gcd 1).
    RatFunc value = RatFunc::from_canonical(std::move(n), d.expand());
    return {std::move(value), std::move(d)};
}

RatFunc CycloFrac::finalize() const { return finalize_with_factors().first; }

CycloProduct factor_cyclotomic_support(const Poly& p) {
    if (p.is_zero() || !p.is_monic())
        throw std::domain_error("factor_cyclotomic_support: input must be monic");
    Poly rest = p;
    CycloProduct out;
    // phi(m) >= sqrt(m/2), so indices beyond 2*deg^2 cannot divide.
    const unsigned d0 = static_cast<unsigned>(rest.degree());
    const unsigned m_max = 2 * d0 * d0 + 2;
    for (unsigned m = 1; m <= m_max && rest.degree() > 0; ++m) {
        const Poly& phi = cyclotomic(m);
        if (phi.degree() > rest.degree()) continue;
        while (auto q = rest.try_exact_div(phi)) {
            out.factors[m] += 1;
            rest = std::move(*q);
            if (rest.degree() == 0) break;
        }
    }
    if (rest.degree() > 0)
        throw std::domain_error("factor_cyclotomic_support: non-cyclotomic factor");
    return out;
}

}  // namespace qsym::detail
