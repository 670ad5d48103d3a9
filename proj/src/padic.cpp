#include "qsym/padic.hpp"

namespace qsym {

bool is_odd_prime(unsigned long p) {
    if (p < 3 || p % 2 == 0) return false;
    mpz_class z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

namespace {

mpz_class pow_ui(unsigned long base, unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

void check_level(unsigned long p, unsigned N) {
    if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (N == 0) throw std::invalid_argument("precision N must be >= 1");
}

}  // namespace

PadicInt::PadicInt(unsigned long p, unsigned N, const mpz_class& value)
    : p_(p), n_(N), modulus_(pow_ui(p, N)) {
    check_level(p, N);
    mpz_mod(residue_.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
}

void PadicInt::require_same(const PadicInt& a, const PadicInt& b) {
    if (a.p_ != b.p_ || a.n_ != b.n_)
        throw std::invalid_argument("PadicInt: mismatched (p, N)");
}

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
    PadicInt::require_same(a, b);
    return PadicInt(a.p_, a.n_, a.residue_ + b.residue_);
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
    PadicInt::require_same(a, b);
    return PadicInt(a.p_, a.n_, a.residue_ - b.residue_);
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
    PadicInt::require_same(a, b);
    return PadicInt(a.p_, a.n_, a.residue_ * b.residue_);
}

bool operator==(const PadicInt& a, const PadicInt& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.residue_ == b.residue_;
}

std::string PadicInt::str() const {
    return residue_.get_str() + " (mod " + std::to_string(p_) + "^" +
           std::to_string(n_) + ")";
}

PadicInt padic_reduce(const Rat& x, unsigned long p, unsigned N) {
    check_level(p, N);
    mpz_class modulus = pow_ui(p, N);
    if (mpz_divisible_ui_p(x.den().get_mpz_t(), p))
        throw not_p_adic_integer(x, p);
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), x.den().get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw not_p_adic_integer(x, p);  // unreachable for p-unit denominators
    return PadicInt(p, N, x.num() * inv);
}

IntegralConfig::IntegralConfig(unsigned long p_, unsigned N_max_, const Rat& q0_)
    : p(p_), N_max(N_max_), q0(q0_) {
    check_level(p, N_max);
    if (mpz_divisible_ui_p(q0.den().get_mpz_t(), p))
        throw std::invalid_argument("IntegralConfig: q0 denominator not a p-unit");
    if (!valuation_at_least(valuation(q0 - Rat(1), p), 1))
        throw std::invalid_argument("IntegralConfig: q0 must satisfy q0 = 1 (mod p)");
}

IntegralConfig IntegralConfig::with_default_q(unsigned long p, unsigned N_max) {
    return IntegralConfig(p, N_max, Rat(1 + static_cast<long>(p)));
}

Rat fermionic_riemann_sum_exact(const std::function<Rat(unsigned long)>& f,
                                unsigned long p, unsigned N) {
    check_level(p, N);
    mpz_class count = pow_ui(p, N);
    if (!count.fits_ulong_p())
        throw std::invalid_argument("fermionic_riemann_sum: p^N too large to enumerate");
    unsigned long limit = count.get_ui();
    Rat acc;
    for (unsigned long x = 0; x < limit; ++x) {
        Rat v = f(x);
        if (x % 2 == 0) acc += v;
        else acc -= v;
    }
    return acc;
}

PadicInt fermionic_riemann_sum(const std::function<Rat(unsigned long)>& f,
                               unsigned long p, unsigned N) {
    return padic_reduce(fermionic_riemann_sum_exact(f, p, N), p, N);
}

Valuation shift_defect(const Poly& f, unsigned n, unsigned long p, unsigned N) {
    if (n == 0) throw std::invalid_argument("shift_defect: n must be >= 1");
    for (const auto& c : f.coeffs())
        if (!c.is_integer())
            throw std::invalid_argument("shift_defect: f must have integer coefficients");
    auto eval = [&f](unsigned long x) { return f.eval(Rat(static_cast<long>(x))); };
    Rat shifted = fermionic_riemann_sum_exact(
        [&](unsigned long x) { return f.eval(Rat(static_cast<long>(x + n))); }, p, N);
    Rat plain = fermionic_riemann_sum_exact(eval, p, N);
    Rat boundary;
    for (unsigned l = 0; l < n; ++l) {
        Rat v = eval(l);
        if ((n - 1 - l) % 2 == 0) boundary += v;
        else boundary -= v;
    }
    Rat defect = shifted + (n % 2 == 1 ? plain : -plain) - Rat(2) * boundary;
    return valuation(defect, p);
}

std::vector<mpz_class> tuple_count_by_sum(unsigned r, unsigned long M) {
    if (r == 0 || M == 0)
        throw std::invalid_argument("tuple_count_by_sum: r and M must be >= 1");
    // Each step convolves with (1, ..., 1) of length M; a sliding window
    // keeps the convolution exact and linear per step.
    std::vector<mpz_class> c{1};
    for (unsigned step = 0; step < r; ++step) {
        std::vector<mpz_class> next(c.size() + M - 1, mpz_class(0));
        mpz_class window(0);
        for (std::size_t k = 0; k < next.size(); ++k) {
            if (k < c.size()) window += c[k];
            if (k >= M) window -= c[k - M];
            next[k] = window;
        }
        c = std::move(next);
    }
    return c;
}

Rat q_number_value(unsigned long m, const Rat& q0) {
    if (q0.is_one()) return Rat(static_cast<long>(m));
    // (q0^m - 1)/(q0 - 1)
    return (q0.pow(m) - Rat(1)) / (q0 - Rat(1));
}

Rat moment_sum(unsigned n, unsigned r, unsigned a, const Rat& q0,
               unsigned long p, unsigned N) {
    check_level(p, N);
    if (r == 0) throw std::invalid_argument("moment_sum: r must be >= 1");
    mpz_class range = pow_ui(p, N);
    if (!range.fits_ulong_p())
        throw std::invalid_argument("moment_sum: p^N too large to enumerate");
    unsigned long M = range.get_ui();
    std::vector<mpz_class> counts = tuple_count_by_sum(r, M);
    Rat acc;
    Rat qnum = q_number_value(a, q0);       // [a+s]_{q0}, updated incrementally
    for (std::size_t s = 0; s < counts.size(); ++s) {
        Rat term = qnum.pow(n) * Rat(counts[s]);
        if (s % 2 == 0) acc += term;
        else acc -= term;
        qnum = qnum * q0 + Rat(1);          // [m+1]_q = q [m]_q + 1
    }
    return acc;
}

PadicInt multivariate_moment(unsigned n, unsigned r, unsigned a,
                             const IntegralConfig& cfg, unsigned N) {
    if (N == 0 || N > cfg.N_max)
        throw std::invalid_argument("multivariate_moment: need 1 <= N <= N_max");
    return padic_reduce(moment_sum(n, r, a, cfg.q0, cfg.p, N), cfg.p, N);
}

}  // namespace qsym
