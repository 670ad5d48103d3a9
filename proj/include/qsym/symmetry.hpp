#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsym/padic.hpp"
#include "qsym/qeuler.hpp"

namespace qsym {

enum class CheckMode { symbolic, rational, padic };

/// One instance of a two-variable symmetry identity.  w1 and w2 must be odd.
struct SymmetryCase {
    unsigned n = 0;
    unsigned r = 1;
    unsigned w1 = 1;
    unsigned w2 = 1;
    unsigned x = 0;
    CheckMode mode = CheckMode::symbolic;
    std::optional<Rat> q0;                  // rational mode
    std::optional<IntegralConfig> cfg;      // padic mode

    void validate() const;
};

/// Outcome of one identity check.  lhs/rhs are canonical renderings
/// (rational-function strings, exact values, or residues depending on mode);
/// defect_valuation is only present in p-adic mode, where an empty inner
/// value means the defect is exactly zero (infinite valuation).
struct SymmetryReport {
    SymmetryCase c;
    std::string lhs, rhs;
    bool equal = false;
    std::optional<Valuation> defect_valuation;
};

/// Alternating power sum
///   T_{n,i,q}^(r)(w) = sum_{j_1..j_r=0}^{w-1} (-1)^{sum j}
///                      q^{(n-i) sum j} [sum j]_q^i          (0^0 = 1),
/// computed over the collapsed tuple-sum s with signed counts.
RatFunc t_sum(unsigned n, unsigned i, unsigned r, unsigned w);

/// Reference route: the direct r-fold nested loop, guarded by w^r <= 10^5.
RatFunc t_sum_direct(unsigned n, unsigned i, unsigned r, unsigned w);

/// One side of the two-variable identity in E-form:
///   [w_self]_q^n sum_{j_1..j_r=0}^{w_self-1} (-1)^{sum j}
///       E_{n,q^{w_self}}^(r)(w_other x + (w_other/w_self) sum j).
RatFunc theorem3_side(unsigned n, unsigned r, unsigned w_self, unsigned w_other,
                      unsigned x);

/// The same side decomposed through alternating power sums:
///   sum_{i=0}^{n} C(n,i) [w_a]_q^{n-i} [w_b]_q^i
///       T_{n,i,q^{w_b}}^(r)(w_a) E_{n-i,q^{w_a}}^(r)(w_b x).
RatFunc theorem4_side(unsigned n, unsigned r, unsigned w_a, unsigned w_b,
                      unsigned x);

SymmetryReport theorem3_check(const SymmetryCase& c);
SymmetryReport theorem4_check(const SymmetryCase& c);

/// Both sides of the integral symmetry identity with level-N Riemann sums in
/// place of the integrals; reports the p-adic valuation of the defect.
/// Passes when the valuation reaches N - 2 (or the defect vanishes).
SymmetryReport corollary2_padic_check(const SymmetryCase& c, unsigned N);

/// theorem3_check for every degree up to n_max: coefficientwise content of
/// the generating-function identity.
std::vector<SymmetryReport> theorem1_series_check(unsigned n_max, unsigned r,
                                                  unsigned w1, unsigned w2,
                                                  unsigned x);

/// Exact level-N Riemann value of one side of the integral identity
/// (exposed for the p-adic checks and their tests).
Rat corollary2_side_sum(unsigned n, unsigned r, unsigned w_self,
                        unsigned w_other, unsigned x, const Rat& q0,
                        unsigned long p, unsigned N);

}  // namespace qsym
