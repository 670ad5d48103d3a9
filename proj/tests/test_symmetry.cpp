#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <atomic>
#include <thread>

#include "qsym/symmetry.hpp"

using namespace qsym;

namespace {

Poly P(const std::string& s) { return Poly::parse(s); }

SymmetryCase symbolic_case(unsigned n, unsigned r, unsigned w1, unsigned w2,
                           unsigned x) {
    SymmetryCase c;
    c.n = n;
    c.r = r;
    c.w1 = w1;
    c.w2 = w2;
    c.x = x;
    c.mode = CheckMode::symbolic;
    return c;
}

}  // namespace

TEST_CASE("t_sum base cases") {
    CHECK(t_sum(0, 0, 1, 1) == RatFunc(Rat(1)));
    CHECK(t_sum(3, 0, 2, 1) == RatFunc(Rat(1)));
    for (unsigned i = 1; i <= 3; ++i) CHECK(t_sum(3, i, 2, 1).is_zero());

    // r = 1, w = 3, i = 0: 1 - q^n + q^{2n}
    for (unsigned n = 1; n <= 4; ++n) {
        Poly expect = Poly(Rat(1)) - q_pow(n) + q_pow(2 * n);
        CHECK(t_sum(n, 0, 1, 3) == RatFunc(expect));
    }
    CHECK(t_sum(1, 1, 1, 3) == RatFunc(P("q")));

    CHECK_THROWS_AS(t_sum(1, 2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(t_sum(1, 1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(t_sum(1, 1, 0, 3), std::invalid_argument);
}

TEST_CASE("t_sum matches the nested-loop oracle") {
    for (unsigned w : {1u, 3u, 5u})
        for (unsigned r = 1; r <= 3; ++r)
            for (unsigned n = 0; n <= 4; ++n)
                for (unsigned i = 0; i <= n; ++i)
                    CHECK(t_sum(n, i, r, w) == t_sum_direct(n, i, r, w));
}

TEST_CASE("t_sum_direct size guard") {
    CHECK_THROWS_AS(t_sum_direct(1, 0, 9, 5), std::invalid_argument);
}

TEST_CASE("theorem3 side examples") {
    for (unsigned w : {1u, 3u, 5u})
        for (unsigned x = 0; x <= 2; ++x)
            CHECK(theorem3_side(0, 1, w, 3, x) == RatFunc(Rat(1)));
    CHECK(theorem3_side(0, 3, 5, 3, 1) == RatFunc(Rat(1)));

    CHECK(theorem3_side(1, 1, 1, 3, 0).str() == "(-1)/(1+q)");
    CHECK(theorem3_side(1, 1, 3, 1, 0).str() == "(-1)/(1+q)");

    CHECK_THROWS_AS(theorem3_side(1, 1, 2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(theorem3_side(1, 0, 1, 3, 0), std::invalid_argument);
}

TEST_CASE("theorem4 side examples") {
    for (unsigned w : {1u, 3u, 5u}) CHECK(theorem4_side(0, 2, w, 5, 1) == RatFunc(Rat(1)));
    // swapping the roles with equal moduli is trivially symmetric
    CHECK(theorem4_side(2, 1, 3, 3, 1) == theorem4_side(2, 1, 3, 3, 1));
    CHECK(theorem4_side(2, 2, 3, 5, 1) == theorem4_side(2, 2, 5, 3, 1));
}

TEST_CASE("theorem3 checks on a small grid") {
    for (unsigned n = 0; n <= 3; ++n)
        for (unsigned r = 1; r <= 2; ++r)
            for (unsigned w1 : {1u, 3u})
                for (unsigned w2 : {1u, 3u, 5u})
                    for (unsigned x = 0; x <= 1; ++x) {
                        SymmetryReport rep =
                            theorem3_check(symbolic_case(n, r, w1, w2, x));
                        CHECK(rep.equal);
                        CHECK(rep.lhs == rep.rhs);
                        CHECK(!rep.defect_valuation.has_value());
                    }
}

TEST_CASE("theorem3 check frozen example") {
    SymmetryReport rep = theorem3_check(symbolic_case(1, 1, 1, 3, 0));
    CHECK(rep.equal);
    CHECK(rep.lhs == "(-1)/(1+q)");
    CHECK(rep.rhs == "(-1)/(1+q)");
}

TEST_CASE("theorem4 checks on a small grid") {
    for (unsigned n = 0; n <= 3; ++n)
        for (unsigned r = 1; r <= 2; ++r)
            for (unsigned w1 : {1u, 3u})
                for (unsigned w2 : {3u, 5u})
                    for (unsigned x = 0; x <= 1; ++x) {
                        SymmetryReport rep =
                            theorem4_check(symbolic_case(n, r, w1, w2, x));
                        CHECK(rep.equal);
                    }
}

TEST_CASE("route equivalence between the two decompositions") {
    // the T/E convolution equals the direct E-sum side, term for term
    for (unsigned n = 0; n <= 3; ++n)
        for (unsigned r = 1; r <= 2; ++r)
            for (unsigned w1 : {1u, 3u, 5u})
                for (unsigned w2 : {1u, 3u})
                    for (unsigned x = 0; x <= 1; ++x)
                        CHECK(theorem3_side(n, r, w1, w2, x) ==
                              theorem4_side(n, r, w1, w2, x));
}

TEST_CASE("swap antisymmetry of reports") {
    SymmetryReport a = theorem3_check(symbolic_case(3, 2, 3, 5, 1));
    SymmetryReport b = theorem3_check(symbolic_case(3, 2, 5, 3, 1));
    CHECK(a.equal == b.equal);
    CHECK(a.lhs == b.rhs);
    CHECK(a.rhs == b.lhs);
}

TEST_CASE("rational mode evaluates both sides exactly") {
    SymmetryCase c = symbolic_case(2, 2, 3, 5, 1);
    c.mode = CheckMode::rational;
    c.q0 = Rat(4);
    SymmetryReport rep = theorem3_check(c);
    CHECK(rep.equal);
    CHECK(rep.lhs == rep.rhs);
    CHECK(rep.lhs == theorem3_side(2, 2, 3, 5, 1).eval(Rat(4)).str());
}

TEST_CASE("rational mode propagates poles") {
    SymmetryCase c = symbolic_case(1, 1, 1, 3, 0);
    c.mode = CheckMode::rational;
    c.q0 = Rat(-1);  // both sides are -1/(1+q)
    CHECK_THROWS_AS(theorem3_check(c), pole_error);
}

TEST_CASE("case validation") {
    SymmetryCase c = symbolic_case(1, 1, 2, 3, 0);
    CHECK_THROWS_AS(theorem3_check(c), std::invalid_argument);
    SymmetryCase missing_q = symbolic_case(1, 1, 1, 3, 0);
    missing_q.mode = CheckMode::rational;
    CHECK_THROWS_AS(theorem3_check(missing_q), std::invalid_argument);
    SymmetryCase padic_mode = symbolic_case(1, 1, 1, 3, 0);
    padic_mode.mode = CheckMode::padic;
    padic_mode.cfg = IntegralConfig(3, 3, Rat(4));
    CHECK_THROWS_AS(theorem3_check(padic_mode), std::invalid_argument);
}

TEST_CASE("corollary2 padic checks") {
    SymmetryCase c = symbolic_case(2, 1, 1, 3, 0);
    c.mode = CheckMode::padic;
    c.cfg = IntegralConfig(3, 4, Rat(4));

    long prev = -100;
    for (unsigned N = 1; N <= 4; ++N) {
        SymmetryReport rep = corollary2_padic_check(c, N);
        CHECK(rep.equal);
        REQUIRE(rep.defect_valuation.has_value());
        const Valuation& v = *rep.defect_valuation;
        CHECK(valuation_at_least(v, static_cast<long>(N) - 2));
        if (v.has_value()) {
            CHECK(*v >= prev);
            prev = *v;
        }
    }
}

TEST_CASE("corollary2 trivial cases") {
    // n = 0: defect identically zero
    SymmetryCase c = symbolic_case(0, 2, 3, 5, 1);
    c.mode = CheckMode::padic;
    c.cfg = IntegralConfig(3, 3, Rat(4));
    SymmetryReport rep = corollary2_padic_check(c, 2);
    CHECK(rep.equal);
    REQUIRE(rep.defect_valuation.has_value());
    CHECK(!rep.defect_valuation->has_value());  // infinite valuation

    // w1 = w2: identical finite sums at every N
    SymmetryCase same = symbolic_case(3, 2, 3, 3, 1);
    same.mode = CheckMode::padic;
    same.cfg = IntegralConfig(3, 3, Rat(4));
    for (unsigned N = 1; N <= 3; ++N) {
        SymmetryReport r2 = corollary2_padic_check(same, N);
        CHECK(r2.equal);
        CHECK(!r2.defect_valuation->has_value());
        CHECK(r2.lhs == r2.rhs);
    }
}

TEST_CASE("theorem1 series check") {
    auto reports = theorem1_series_check(0, 1, 1, 3, 0);
    CHECK(reports.size() == 1);
    CHECK(reports[0].equal);

    auto longer = theorem1_series_check(4, 1, 1, 3, 0);
    CHECK(longer.size() == 5);
    for (const auto& rep : longer) CHECK(rep.equal);

    auto wide = theorem1_series_check(4, 2, 3, 5, 1);
    CHECK(wide.size() == 5);
    for (const auto& rep : wide) CHECK(rep.equal);
}

TEST_CASE("concurrent evaluation returns one canonical form per case") {
    RatFunc reference = theorem3_side(4, 2, 3, 5, 1);
    std::vector<std::thread> workers;
    std::array<std::atomic<bool>, 8> ok{};
    for (auto& flag : ok) flag = true;
    for (unsigned t = 0; t < 8; ++t)
        workers.emplace_back([t, &reference, &ok] {
            for (unsigned n = 0; n <= 4; ++n) {
                SymmetryCase c;
                c.n = n;
                c.r = 2;
                c.w1 = 3;
                c.w2 = 5;
                c.x = 1;
                if (!theorem3_check(c).equal) ok[t] = false;
            }
            if (theorem3_side(4, 2, 3, 5, 1) != reference) ok[t] = false;
        });
    for (auto& w : workers) w.join();
    for (const auto& flag : ok) CHECK(flag.load());
}
