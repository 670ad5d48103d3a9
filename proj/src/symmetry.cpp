#include "qsym/symmetry.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace qsym {

namespace {

void require_odd(unsigned w, const char* name) {
    if (w == 0 || w % 2 == 0)
        throw std::invalid_argument(std::string(name) + " must be an odd positive integer");
}

// T_{n,i,q}^(r)(w) as a polynomial: sum_s (-1)^s c(s) q^{(n-i)s} [s]_q^i.
Poly t_sum_poly(unsigned n, unsigned i, unsigned r, unsigned w) {
    if (i > n) throw std::invalid_argument("t_sum: need 0 <= i <= n");
    if (r == 0) throw std::invalid_argument("t_sum: r must be >= 1");
    require_odd(w, "t_sum: w");
    std::vector<mpz_class> counts = tuple_count_by_sum(r, w);
    Poly acc;
    for (std::size_t s = 0; s < counts.size(); ++s) {
        Poly term = q_int(static_cast<unsigned>(s)).pow(i);  // 0^0 = 1
        if (term.is_zero()) continue;
        term = term.shifted(static_cast<std::size_t>(n - i) * s);
        term.scale(Rat(counts[s]));
        if (s % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

}  // namespace

RatFunc t_sum(unsigned n, unsigned i, unsigned r, unsigned w) {
    return RatFunc(t_sum_poly(n, i, r, w));
}

RatFunc t_sum_direct(unsigned n, unsigned i, unsigned r, unsigned w) {
    if (i > n) throw std::invalid_argument("t_sum_direct: need 0 <= i <= n");
    if (r == 0) throw std::invalid_argument("t_sum_direct: r must be >= 1");
    require_odd(w, "t_sum_direct: w");
    double tuples = std::pow(static_cast<double>(w), static_cast<double>(r));
    if (tuples > 1e5)
        throw std::invalid_argument("t_sum_direct: w^r exceeds the size guard");
    std::vector<unsigned> j(r, 0);
    Poly acc;
    while (true) {
        unsigned s = 0;
        for (unsigned v : j) s += v;
        Poly term = q_int(s).pow(i);
        if (!term.is_zero()) {
            term = term.shifted(static_cast<std::size_t>(n - i) * s);
            if (s % 2 == 0) acc += term;
            else acc -= term;
        }
        unsigned pos = 0;
        while (pos < r && ++j[pos] == w) j[pos++] = 0;
        if (pos == r) break;
    }
    return RatFunc(std::move(acc));
}

namespace {

using SideKey = std::tuple<unsigned, unsigned, unsigned, unsigned, unsigned>;

std::mutex side3_mutex;
std::map<SideKey, RatFunc> side3_cache;

RatFunc compute_theorem3_side(unsigned n, unsigned r, unsigned w_self,
                              unsigned w_other, unsigned x) {
    using detail::CycloFrac;
    using detail::CycloProduct;
    using detail::FactoredRF;

    std::vector<mpz_class> counts = tuple_count_by_sum(r, w_self);
    std::vector<const FactoredRF*> terms(counts.size());
    CycloProduct common = CycloProduct::one();
    for (std::size_t s = 0; s < counts.size(); ++s) {
        QEulerKey key{n, r,
                      w_self * w_other * x + w_other * static_cast<unsigned>(s),
                      w_self};
        terms[s] = &detail::q_euler_poly_factored(key);
        common = CycloProduct::lcm(common, terms[s]->den_factors);
    }

    Poly acc;
    for (std::size_t s = 0; s < counts.size(); ++s) {
        if (terms[s]->value.is_zero()) continue;
        Poly t = terms[s]->value.num() * common.quotient(terms[s]->den_factors).expand();
        t.scale(s % 2 == 0 ? Rat(counts[s]) : -Rat(counts[s]));
        acc += t;
    }
    acc *= q_int(w_self).pow(n);

    return CycloFrac(std::move(acc), std::move(common)).finalize();
}

std::mutex side4_mutex;
std::map<SideKey, RatFunc> side4_cache;

RatFunc compute_theorem4_side(unsigned n, unsigned r, unsigned w_a,
                              unsigned w_b, unsigned x) {
    using detail::CycloFrac;
    using detail::CycloProduct;
    using detail::FactoredRF;

    std::vector<const FactoredRF*> euler(n + 1);
    CycloProduct common = CycloProduct::one();
    for (unsigned i = 0; i <= n; ++i) {
        QEulerKey key{n - i, r, w_a * w_b * x, w_a};
        euler[i] = &detail::q_euler_poly_factored(key);
        common = CycloProduct::lcm(common, euler[i]->den_factors);
    }

    const Poly wa_poly = q_int(w_a);
    const Poly wb_poly = q_int(w_b);
    Poly acc;
    for (unsigned i = 0; i <= n; ++i) {
        if (euler[i]->value.is_zero()) continue;
        Poly t = t_sum_poly(n, i, r, w_a).subst_power(w_b);
        if (t.is_zero()) continue;
        t *= euler[i]->value.num();
        t *= common.quotient(euler[i]->den_factors).expand();
        t *= wa_poly.pow(n - i) * wb_poly.pow(i);
        t.scale(Rat(binomial(n, i)));
        acc += t;
    }

    return CycloFrac(std::move(acc), std::move(common)).finalize();
}

RatFunc cached_side(std::mutex& mutex, std::map<SideKey, RatFunc>& cache,
                    RatFunc (*compute)(unsigned, unsigned, unsigned, unsigned, unsigned),
                    unsigned n, unsigned r, unsigned w_self, unsigned w_other,
                    unsigned x) {
    SideKey key{n, r, w_self, w_other, x};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    RatFunc value = compute(n, r, w_self, w_other, x);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace

RatFunc theorem3_side(unsigned n, unsigned r, unsigned w_self, unsigned w_other,
                      unsigned x) {
    if (r == 0) throw std::invalid_argument("theorem3_side: r must be >= 1");
    require_odd(w_self, "theorem3_side: w_self");
    require_odd(w_other, "theorem3_side: w_other");
    return cached_side(side3_mutex, side3_cache, compute_theorem3_side, n, r,
                       w_self, w_other, x);
}

RatFunc theorem4_side(unsigned n, unsigned r, unsigned w_a, unsigned w_b,
                      unsigned x) {
    if (r == 0) throw std::invalid_argument("theorem4_side: r must be >= 1");
    require_odd(w_a, "theorem4_side: w_a");
    require_odd(w_b, "theorem4_side: w_b");
    return cached_side(side4_mutex, side4_cache, compute_theorem4_side, n, r,
                       w_a, w_b, x);
}

void SymmetryCase::validate() const {
    if (r == 0) throw std::invalid_argument("SymmetryCase: r must be >= 1");
    require_odd(w1, "SymmetryCase: w1");
    require_odd(w2, "SymmetryCase: w2");
    if (mode == CheckMode::rational && !q0.has_value())
        throw std::invalid_argument("SymmetryCase: rational mode needs q0");
    if (mode == CheckMode::padic && !cfg.has_value())
        throw std::invalid_argument("SymmetryCase: padic mode needs an IntegralConfig");
}

namespace {

SymmetryReport check_sides(const SymmetryCase& c, const RatFunc& lhs,
                           const RatFunc& rhs) {
    SymmetryReport rep;
    rep.c = c;
    switch (c.mode) {
        case CheckMode::symbolic:
            rep.lhs = lhs.str();
            rep.rhs = rhs.str();
            rep.equal = lhs == rhs;
            break;
        case CheckMode::rational: {
            Rat lv = lhs.eval(*c.q0);
            Rat rv = rhs.eval(*c.q0);
            rep.lhs = lv.str();
            rep.rhs = rv.str();
            rep.equal = lv == rv;
            break;
        }
        case CheckMode::padic:
            throw std::invalid_argument(
                "theorem checks support symbolic and rational modes only");
    }
    return rep;
}

}  // namespace

SymmetryReport theorem3_check(const SymmetryCase& c) {
    c.validate();
    return check_sides(c, theorem3_side(c.n, c.r, c.w1, c.w2, c.x),
                       theorem3_side(c.n, c.r, c.w2, c.w1, c.x));
}

SymmetryReport theorem4_check(const SymmetryCase& c) {
    c.validate();
    return check_sides(c, theorem4_side(c.n, c.r, c.w1, c.w2, c.x),
                       theorem4_side(c.n, c.r, c.w2, c.w1, c.x));
}

Rat corollary2_side_sum(unsigned n, unsigned r, unsigned w_self,
                        unsigned w_other, unsigned x, const Rat& q0,
                        unsigned long p, unsigned N) {
    require_odd(w_self, "corollary2_side_sum: w_self");
    require_odd(w_other, "corollary2_side_sum: w_other");
    if (r == 0) throw std::invalid_argument("corollary2_side_sum: r must be >= 1");
    // [w1]_q^n [w2 x + (w2/w1) s + t]_{q^{w1}}^n = [w1 w2 x + w2 s + w1 t]_q^n,
    // so both the j-sum and the Riemann sum collapse onto integer q-numbers.
    mpz_class range;
    mpz_ui_pow_ui(range.get_mpz_t(), p, N);
    if (!range.fits_ulong_p())
        throw std::invalid_argument("corollary2_side_sum: p^N too large to enumerate");
    unsigned long M = range.get_ui();

    std::vector<mpz_class> outer = tuple_count_by_sum(r, w_self);
    std::vector<mpz_class> inner = tuple_count_by_sum(r, M);
    const Rat q_self = q0.pow(w_self);
    const Rat w_self_qnum = q_number_value(w_self, q0);

    Rat acc;
    for (std::size_t s = 0; s < outer.size(); ++s) {
        unsigned long base = static_cast<unsigned long>(w_self) * w_other * x +
                             w_other * static_cast<unsigned long>(s);
        Rat qnum = q_number_value(base, q0);   // [base + w_self * t]_{q0}
        Rat qpow = q0.pow(base);               // q0^{base + w_self * t}
        Rat inner_acc;
        for (std::size_t t = 0; t < inner.size(); ++t) {
            Rat term = qnum.pow(n) * Rat(inner[t]);
            if (t % 2 == 0) inner_acc += term;
            else inner_acc -= term;
            // [m + w]_q = [m]_q + q^m [w]_q
            qnum += qpow * w_self_qnum;
            qpow *= q_self;
        }
        inner_acc *= Rat(outer[s]);
        if (s % 2 == 0) acc += inner_acc;
        else acc -= inner_acc;
    }
    return acc;
}

SymmetryReport corollary2_padic_check(const SymmetryCase& c, unsigned N) {
    c.validate();
    if (c.mode != CheckMode::padic)
        throw std::invalid_argument("corollary2_padic_check: mode must be padic");
    const IntegralConfig& cfg = *c.cfg;
    if (N == 0 || N > cfg.N_max)
        throw std::invalid_argument("corollary2_padic_check: need 1 <= N <= N_max");

    Rat lhs = corollary2_side_sum(c.n, c.r, c.w1, c.w2, c.x, cfg.q0, cfg.p, N);
    Rat rhs = corollary2_side_sum(c.n, c.r, c.w2, c.w1, c.x, cfg.q0, cfg.p, N);

    SymmetryReport rep;
    rep.c = c;
    rep.lhs = padic_reduce(lhs, cfg.p, N).residue().get_str();
    rep.rhs = padic_reduce(rhs, cfg.p, N).residue().get_str();
    Valuation v = valuation(lhs - rhs, cfg.p);
    rep.defect_valuation = v;
    rep.equal = valuation_at_least(v, static_cast<long>(N) - 2);
    return rep;
}

std::vector<SymmetryReport> theorem1_series_check(unsigned n_max, unsigned r,
                                                  unsigned w1, unsigned w2,
                                                  unsigned x) {
    std::vector<SymmetryReport> out;
    out.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        SymmetryCase c;
        c.n = n;
        c.r = r;
        c.w1 = w1;
        c.w2 = w2;
        c.x = x;
        c.mode = CheckMode::symbolic;
        out.push_back(theorem3_check(c));
    }
    return out;
}

}  // namespace qsym
