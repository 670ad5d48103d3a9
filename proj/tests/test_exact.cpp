#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsym/cyclotomic.hpp"
#include "qsym/ratfunc.hpp"

using namespace qsym;

namespace {

Poly P(const std::string& s) { return Poly::parse(s); }

std::mt19937 rng(20240517);

Rat random_rat() {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 4);
    return Rat(num(rng), den(rng));
}

Poly random_poly(int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    std::vector<Rat> c;
    c.reserve(d + 1);
    for (int i = 0; i <= d; ++i) c.push_back(random_rat());
    return Poly(std::move(c));
}

Poly random_nonzero_poly(int max_deg) {
    for (;;) {
        Poly p = random_poly(max_deg);
        if (!p.is_zero()) return p;
    }
}

}  // namespace

TEST_CASE("rat basics") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4).str() == "-1/2");
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat(3).pow(4) == Rat(81));
    CHECK(Rat(-1, 2).pow(2) == Rat(1, 4));
    CHECK(Rat::parse("-7/3") == Rat(-7, 3));
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("rat valuation") {
    CHECK(valuation(Rat(9), 3) == 2);
    CHECK(valuation(Rat(1, 9), 3) == -2);
    CHECK(valuation(Rat(10, 3), 5) == 1);
    CHECK(!valuation(Rat(0), 3).has_value());
    CHECK(valuation_at_least(valuation(Rat(0), 3), 1000));
}

TEST_CASE("poly arithmetic and rendering") {
    Poly p = P("1+q");
    CHECK(p.degree() == 1);
    CHECK(p.str() == "1+q");
    CHECK((p * p).str() == "1+2*q+q^2");
    CHECK(P("1-q+3/2*q^2").str() == "1-q+3/2*q^2");
    CHECK(P("0").is_zero());
    CHECK(Poly().str() == "0");
    CHECK(P("q^3-1").eval(Rat(2)) == Rat(7));
    CHECK(P("1+q").subst_power(3).str() == "1+q^3");
    CHECK((-P("1-q")).str() == "-1+q");
    CHECK(P("q") * P("q^2") == P("q^3"));
}

TEST_CASE("poly division and gcd") {
    auto [quot, rem] = P("q^3-1").divrem(P("q-1"));
    CHECK(quot == P("1+q+q^2"));
    CHECK(rem.is_zero());
    auto [q2, r2] = P("q^2+1").divrem(P("q+1"));
    CHECK(q2 == P("q-1"));
    CHECK(r2 == P("2"));
    CHECK_THROWS_AS(P("q").divrem(Poly()), std::domain_error);
    CHECK_THROWS_AS(P("q^2+1").exact_div(P("q+1")), std::domain_error);

    CHECK(poly_gcd(P("q^2-1"), P("q-1")) == P("q-1"));
    CHECK(poly_gcd(P("q^2-1"), P("q^2+2*q+1")) == P("1+q"));
    CHECK(poly_gcd(P("2+2*q"), P("4")) == P("1"));
    CHECK(poly_gcd(Poly(), Poly()).is_zero());
    CHECK(poly_gcd(Poly(), P("3*q")) == P("q"));
}

TEST_CASE("ratfunc canonicalize examples") {
    // (q^2-1)/(q-1) -> q+1
    RatFunc a(P("q^2-1"), P("q-1"));
    CHECK(a.str() == "1+q");
    CHECK(a.is_poly());

    // (0, 5) -> 0/1
    RatFunc z(Poly(), P("5"));
    CHECK(z.is_zero());
    CHECK(z.num().is_zero());
    CHECK(z.den().is_one());

    // (1-q)^2 / ((1-q)(1+q)) -> (1-q)/(1+q), monic denominator
    RatFunc c(P("1-q") * P("1-q"), P("1-q") * P("1+q"));
    CHECK(c.str() == "(1-q)/(1+q)");
    CHECK(c.den().is_monic());

    CHECK_THROWS_AS(RatFunc(P("1"), Poly()), std::domain_error);
}

TEST_CASE("ratfunc canonicalize is idempotent") {
    for (int trial = 0; trial < 200; ++trial) {
        Poly num = random_poly(4);
        Poly den = random_nonzero_poly(4);
        RatFunc f(num, den);
        RatFunc again(f.num(), f.den());
        CHECK(f == again);
        CHECK(f.den().is_monic());
    }
}

TEST_CASE("ratfunc eval") {
    CHECK(RatFunc(P("q+1")).eval(Rat(1)) == Rat(2));
    CHECK(RatFunc(P("1"), P("1+q")).eval(Rat(1)) == Rat(1, 2));
    CHECK_THROWS_AS(RatFunc(P("1"), P("q-1")).eval(Rat(1)), pole_error);
    try {
        RatFunc(P("1"), P("q-1")).eval(Rat(1));
    } catch (const pole_error& e) {
        CHECK(e.point == Rat(1));
    }
}

TEST_CASE("ratfunc eval at one") {
    // (1-q^3)/(1-q) = [3]_q -> 3
    CHECK(RatFunc(P("1-q^3"), P("1-q")).eval_at_one() == Rat(3));
    RatFunc f(P("-1"), P("1+q"));
    CHECK(f.eval_at_one() == Rat(-1, 2));
    CHECK_THROWS_AS(RatFunc(P("1"), P("1-q")).eval_at_one(), pole_error);
}

TEST_CASE("ratfunc subst power") {
    CHECK(RatFunc(P("q+1")).subst_power(3).str() == "1+q^3");
    CHECK(RatFunc(P("1"), P("1+q")).subst_power(2).str() == "(1)/(1+q^2)");
    RatFunc f(P("1-q-q^2"), P("1+q^3"));
    CHECK(f.subst_power(1) == f);
    CHECK_THROWS_AS(f.subst_power(0), std::invalid_argument);
}

TEST_CASE("ratfunc field laws on random inputs") {
    for (int trial = 0; trial < 60; ++trial) {
        RatFunc f(random_poly(4), random_nonzero_poly(4));
        RatFunc g(random_poly(4), random_nonzero_poly(4));
        RatFunc h(random_poly(4), random_nonzero_poly(4));
        CHECK((f + g) * h == f * h + g * h);
        if (!f.is_zero()) {
            CHECK(f * (RatFunc(Rat(1)) / f) == RatFunc(Rat(1)));
        }
        CHECK(f - f == RatFunc());
    }
}

TEST_CASE("subst power is a ring homomorphism") {
    for (int trial = 0; trial < 40; ++trial) {
        RatFunc f(random_poly(3), random_nonzero_poly(3));
        RatFunc g(random_poly(3), random_nonzero_poly(3));
        for (unsigned k : {1u, 2u, 3u}) {
            CHECK((f * g).subst_power(k) == f.subst_power(k) * g.subst_power(k));
            CHECK((f + g).subst_power(k) == f.subst_power(k) + g.subst_power(k));
        }
    }
}

TEST_CASE("evaluation commutes with arithmetic away from poles") {
    std::vector<Rat> points{Rat(0), Rat(1), Rat(2), Rat(-2), Rat(1, 2)};
    for (int trial = 0; trial < 60; ++trial) {
        RatFunc f(random_poly(4), random_nonzero_poly(4));
        RatFunc g(random_poly(4), random_nonzero_poly(4));
        for (const Rat& q0 : points) {
            if (f.den().eval(q0).is_zero() || g.den().eval(q0).is_zero()) continue;
            RatFunc prod = f * g;
            RatFunc sum = f + g;
            if (!prod.den().eval(q0).is_zero())
                CHECK(prod.eval(q0) == f.eval(q0) * g.eval(q0));
            if (!sum.den().eval(q0).is_zero())
                CHECK(sum.eval(q0) == f.eval(q0) + g.eval(q0));
        }
    }
}

TEST_CASE("ratfunc parse round trip") {
    for (const char* s : {"0", "1+q", "(-1)/(1+q)", "(1-q)/(1+q)",
                          "(1-q-q^2)/(1+q+q^2+q^3+q^4+q^5)", "-1/2+3/2*q^4"}) {
        RatFunc f = RatFunc::parse(s);
        CHECK(f.str() == s);
    }
}

TEST_CASE("cyclotomic expansion basics") {
    using detail::cyclotomic;
    using detail::CycloProduct;
    CHECK(cyclotomic(1) == P("q-1"));
    CHECK(cyclotomic(2) == P("1+q"));
    CHECK(cyclotomic(3) == P("1+q+q^2"));
    CHECK(cyclotomic(6) == P("1-q+q^2"));
    CHECK(CycloProduct::q_pow_minus_one(6).expand() == P("q^6-1"));
    CHECK(CycloProduct::q_pow_plus_one(5).expand() == P("q^5+1"));
    CHECK(CycloProduct::q_pow_plus_one(4).expand() == P("q^4+1"));
}

TEST_CASE("cyclotomic finalize agrees with generic canonicalization") {
    using detail::CycloFrac;
    using detail::CycloProduct;
    std::uniform_int_distribution<unsigned> pick(1, 8);
    for (int trial = 0; trial < 40; ++trial) {
        CycloProduct den;
        for (int i = 0; i < 3; ++i) den.mul_factor(pick(rng));
        Poly num = random_poly(3);
        // Seed common factors so the reduction has real work to do.
        if (trial % 2 == 0) num *= detail::cyclotomic(pick(rng));
        RatFunc fast = CycloFrac(num, den).finalize();
        RatFunc generic(num, den.expand());
        CHECK(fast == generic);
    }
}

TEST_CASE("cyclotomic substitution factorization") {
    using detail::CycloProduct;
    std::uniform_int_distribution<unsigned> pick(1, 8);
    for (unsigned d = 1; d <= 8; ++d) {
        for (unsigned w = 1; w <= 5; ++w) {
            CycloProduct base;
            base.mul_factor(d);
            CHECK(base.subst_power(w).expand() ==
                  detail::cyclotomic(d).subst_power(w));
        }
    }
}
