#include "qsym/qeuler.hpp"

#include <map>
#include <mutex>

namespace qsym {

Poly q_int(unsigned m) {
    std::vector<Rat> c(m, Rat(1));
    return Poly(std::move(c));
}

RatFunc q_frac(unsigned a, unsigned w) {
    if (w == 0) throw std::invalid_argument("q_frac: w must be >= 1");
    if (a == 0) return RatFunc();
    // (1-q^a)/(1-q^w) = (q^a-1)/(q^w-1)
    using detail::CycloProduct;
    detail::CycloFrac f(CycloProduct::q_pow_minus_one(a).expand(),
                        CycloProduct::q_pow_minus_one(w));
    return f.finalize();
}

namespace {

// Truncated power series: coefficient of t^k at index k.
using Series = std::vector<Rat>;

Series series_mul(const Series& a, const Series& b, std::size_t n_max) {
    Series r(n_max + 1, Rat());
    for (std::size_t i = 0; i <= n_max && i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n_max && j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

// 1/a with a[0] != 0: b[0] = 1/a[0], b[k] = -(sum_{j>=1} a[j] b[k-j]) / a[0].
Series series_recip(const Series& a, std::size_t n_max) {
    Series b(n_max + 1, Rat());
    Rat inv0 = a[0].inverse();
    b[0] = inv0;
    for (std::size_t k = 1; k <= n_max; ++k) {
        Rat s;
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) s += a[j] * b[k - j];
        b[k] = -s * inv0;
    }
    return b;
}

}  // namespace

std::vector<Rat> classical_euler_numbers(unsigned n_max, unsigned r) {
    if (r == 0) throw std::invalid_argument("classical_euler_numbers: r must be >= 1");
    // (e^t+1)/2 has coefficients 1, then 1/(2 k!).
    Series half(n_max + 1, Rat());
    Rat fact(1);
    half[0] = Rat(1);
    for (unsigned k = 1; k <= n_max; ++k) {
        fact *= Rat(static_cast<long>(k));
        half[k] = (Rat(1) / fact) / Rat(2);
    }
    Series base = series_recip(half, n_max);  // 2/(e^t+1)
    Series p(n_max + 1, Rat());
    p[0] = Rat(1);
    for (unsigned i = 0; i < r; ++i) p = series_mul(p, base, n_max);
    std::vector<Rat> out(n_max + 1);
    Rat nfact(1);
    for (unsigned n = 0; n <= n_max; ++n) {
        if (n > 0) nfact *= Rat(static_cast<long>(n));
        out[n] = p[n] * nfact;
    }
    return out;
}

Poly classical_euler_poly(unsigned n, unsigned r) {
    std::vector<Rat> numbers = classical_euler_numbers(n, r);
    std::vector<Rat> c(n + 1, Rat());
    for (unsigned l = 0; l <= n; ++l)
        c[n - l] = Rat(binomial(n, l)) * numbers[l];
    return Poly(std::move(c));
}

namespace detail {

namespace {

std::mutex number_mutex;
std::map<std::pair<unsigned, unsigned>, FactoredRF> number_cache;

// (q^a - 1)^m expanded binomially (m+1 terms).
Poly two_term_pow(unsigned a, unsigned m) {
    std::vector<Rat> c(a * m + 1, Rat());
    for (unsigned j = 0; j <= m; ++j) {
        Rat coef(binomial(m, j));
        if ((m - j) % 2 == 1) coef = -coef;
        c[static_cast<std::size_t>(a) * j] = coef;
    }
    return Poly(std::move(c));
}

FactoredRF compute_number(unsigned n, unsigned r) {
    // (1-q)^{-n} sum_l C(n,l) (-1)^l (2/(1+q^l))^r over the common
    // denominator (q-1)^n prod_{l=1}^{n} (q^l+1)^r; the l = 0 term is 1.
    CycloProduct plus_all = CycloProduct::one();
    for (unsigned l = 1; l <= n; ++l)
        plus_all.mul(CycloProduct::q_pow_plus_one(l), r);

    Rat two_r = Rat(2).pow(r);
    Poly acc;
    for (unsigned l = 0; l <= n; ++l) {
        CycloProduct complement = plus_all;
        if (l >= 1)
            complement = complement.quotient(
                CycloProduct{}.mul(CycloProduct::q_pow_plus_one(l), r));
        Rat coef = l == 0 ? Rat(1) : Rat(binomial(n, l)) * two_r;
        if (l % 2 == 1) coef = -coef;
        acc += coef * complement.expand();
    }
    if (n % 2 == 1) acc = -acc;  // 1/(1-q)^n = (-1)^n / (q-1)^n

    CycloFrac f(std::move(acc), plus_all.mul_factor(1, n));
    auto [value, factors] = f.finalize_with_factors();
    return FactoredRF{std::move(value), std::move(factors)};
}

std::mutex poly_mutex;
std::map<QEulerKey, FactoredRF> poly_cache;

FactoredRF compute_poly(const QEulerKey& key) {
    const auto [n, r, a, w] = key;
    if (a == 0) {
        const FactoredRF& base = q_euler_number_factored(n, r);
        if (w == 1) return base;
        return FactoredRF{base.value.subst_power(w), base.den_factors.subst_power(w)};
    }

    // Gather the l-indexed terms C(n,l) q^{la} E_{l,Q} ((q^a-1)/(q^w-1))^{n-l}
    // over one common denominator.
    std::vector<const FactoredRF*> numbers(n + 1);
    std::vector<CycloProduct> dens(n + 1);
    CycloProduct common = CycloProduct::one();
    CycloProduct minus_w = CycloProduct::q_pow_minus_one(w);
    for (unsigned l = 0; l <= n; ++l) {
        numbers[l] = &q_euler_number_factored(l, r);
        dens[l] = numbers[l]->den_factors.subst_power(w);
        dens[l].mul(minus_w, n - l);
        common = CycloProduct::lcm(common, dens[l]);
    }

    Poly acc;
    for (unsigned l = 0; l <= n; ++l) {
        Poly term = numbers[l]->value.num().subst_power(w) *
                    common.quotient(dens[l]).expand();
        if (l < n) term *= two_term_pow(a, n - l);
        term = term.shifted(static_cast<std::size_t>(l) * a);
        acc += Rat(binomial(n, l)) * term;
    }

    CycloFrac f(std::move(acc), std::move(common));
    auto [value, factors] = f.finalize_with_factors();
    return FactoredRF{std::move(value), std::move(factors)};
}

}  // namespace

const FactoredRF& q_euler_number_factored(unsigned n, unsigned r) {
    if (r == 0) throw std::invalid_argument("q_euler_number: r must be >= 1");
    std::lock_guard<std::mutex> lock(number_mutex);
    auto it = number_cache.find({n, r});
    if (it == number_cache.end())
        it = number_cache.emplace(std::pair{n, r}, compute_number(n, r)).first;
    return it->second;
}

const FactoredRF& q_euler_poly_factored(const QEulerKey& key) {
    if (key.r == 0 || key.w == 0)
        throw std::invalid_argument("q_euler_poly: r and w must be >= 1");
    {
        std::lock_guard<std::mutex> lock(poly_mutex);
        auto it = poly_cache.find(key);
        if (it != poly_cache.end()) return it->second;
    }
    FactoredRF value = compute_poly(key);
    std::lock_guard<std::mutex> lock(poly_mutex);
    return poly_cache.emplace(key, std::move(value)).first->second;
}

}  // namespace detail

RatFunc q_euler_number(unsigned n, unsigned r) {
    return detail::q_euler_number_factored(n, r).value;
}

RatFunc q_euler_poly(const QEulerKey& key) {
    return detail::q_euler_poly_factored(key).value;
}

RatFunc q_euler_poly_closed(unsigned n, unsigned r, unsigned a) {
    if (r == 0) throw std::invalid_argument("q_euler_poly_closed: r must be >= 1");
    using detail::CycloFrac;
    using detail::CycloProduct;

    CycloProduct plus_all = CycloProduct::one();
    for (unsigned l = 1; l <= n; ++l)
        plus_all.mul(CycloProduct::q_pow_plus_one(l), r);

    Rat two_r = Rat(2).pow(r);
    Poly acc;
    for (unsigned l = 0; l <= n; ++l) {
        CycloProduct complement = plus_all;
        if (l >= 1)
            complement = complement.quotient(
                CycloProduct{}.mul(CycloProduct::q_pow_plus_one(l), r));
        Rat coef = l == 0 ? Rat(1) : Rat(binomial(n, l)) * two_r;
        if (l % 2 == 1) coef = -coef;
        acc += (coef * complement.expand()).shifted(static_cast<std::size_t>(l) * a);
    }
    if (n % 2 == 1) acc = -acc;

    CycloFrac f(std::move(acc), plus_all.mul_factor(1, n));
    return f.finalize();
}

}  // namespace qsym
