// Acceptance suite: runs every top-level contract of the library end to end
// and prints one PASS/FAIL line per criterion.  Exits nonzero if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "qsym/symmetry.hpp"

using namespace qsym;
using json = nlohmann::json;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, double seconds) {
    std::printf("%s  criterion %d: %s (%.2f s)\n", pass ? "PASS" : "FAIL", index,
                name.c_str(), seconds);
    if (!pass) ++failures;
}

template <typename F>
void run(int index, const std::string& name, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        pass = body();
    } catch (const std::exception& e) {
        std::printf("      exception: %s\n", e.what());
        pass = false;
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(index, name, pass, dt);
}

constexpr std::array<unsigned, 3> kOddW{1, 3, 5};

// --- criterion 1: Theorem 3 exact symbolic equality on the full grid -------

bool theorem3_suite(double* elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (unsigned n = 0; n <= 6; ++n)
        for (unsigned r = 1; r <= 3; ++r)
            for (unsigned w1 : kOddW)
                for (unsigned w2 : kOddW)
                    for (unsigned x = 0; x <= 2; ++x) {
                        SymmetryCase c{n, r, w1, w2, x, CheckMode::symbolic, {}, {}};
                        if (!theorem3_check(c).equal) {
                            std::printf("      thm3 fails at n=%u r=%u w1=%u w2=%u x=%u\n",
                                        n, r, w1, w2, x);
                            ok = false;
                        }
                    }
    *elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return ok && *elapsed < 60.0;
}

// --- criterion 2: Theorem 4 equality plus route equivalence ----------------

bool theorem4_suite() {
    for (unsigned n = 0; n <= 6; ++n)
        for (unsigned r = 1; r <= 3; ++r)
            for (unsigned w1 : kOddW)
                for (unsigned w2 : kOddW)
                    for (unsigned x = 0; x <= 2; ++x) {
                        SymmetryCase c{n, r, w1, w2, x, CheckMode::symbolic, {}, {}};
                        if (!theorem4_check(c).equal) {
                            std::printf("      thm4 fails at n=%u r=%u w1=%u w2=%u x=%u\n",
                                        n, r, w1, w2, x);
                            return false;
                        }
                        if (theorem3_side(n, r, w1, w2, x) !=
                            theorem4_side(n, r, w1, w2, x)) {
                            std::printf("      route equivalence fails at n=%u r=%u "
                                        "w1=%u w2=%u x=%u\n", n, r, w1, w2, x);
                            return false;
                        }
                    }
    return true;
}

// --- criterion 3: degeneration to the classical polynomials ----------------

bool degeneration() {
    auto e1 = classical_euler_numbers(3, 1);
    if (e1[1] != Rat(-1, 2) || e1[3] != Rat(1, 4)) return false;
    for (unsigned r = 1; r <= 3; ++r)
        for (unsigned n = 0; n <= 6; ++n) {
            Poly classical = classical_euler_poly(n, r);
            for (unsigned x = 0; x <= 4; ++x)
                if (q_euler_poly(n, r, x, 1).eval_at_one() !=
                    classical.eval(Rat(static_cast<long>(x))))
                    return false;
        }
    return true;
}

// --- criterion 4: addition formula vs moment closed form -------------------

bool closed_form_vs_recurrence() {
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned r = 1; r <= 3; ++r)
            for (unsigned x = 0; x <= 5; ++x)
                if (q_euler_poly(n, r, x, 1) != q_euler_poly_closed(n, r, x))
                    return false;
    return true;
}

// --- criterion 5: p-adic convergence of the truncated moments --------------

bool moment_convergence() {
    for (unsigned long p : {3ul, 5ul}) {
        Rat q0(1 + static_cast<long>(p));
        for (unsigned r = 1; r <= 2; ++r)
            for (unsigned n = 0; n <= 3; ++n)
                for (unsigned x = 0; x <= 1; ++x) {
                    Rat exact = q_euler_poly(n, r, x, 1).eval(q0);
                    bool prev_infinite = false;
                    long prev = 0;
                    bool first = true;
                    for (unsigned N = 1; N <= 5; ++N) {
                        Valuation v = valuation(moment_sum(n, r, x, q0, p, N) - exact, p);
                        if (!valuation_at_least(v, static_cast<long>(N) - 2)) {
                            std::printf("      floor fails at p=%lu r=%u n=%u x=%u N=%u\n",
                                        p, r, n, x, N);
                            return false;
                        }
                        if (!first) {
                            bool nondecreasing =
                                !v.has_value() || (!prev_infinite && *v >= prev);
                            if (!nondecreasing) {
                                std::printf("      monotonicity fails at p=%lu r=%u "
                                            "n=%u x=%u N=%u\n", p, r, n, x, N);
                                return false;
                            }
                        }
                        prev_infinite = !v.has_value();
                        if (v.has_value()) prev = *v;
                        first = false;
                    }
                }
    }
    return true;
}

// --- criterion 6: shift identity defects ------------------------------------

bool shift_identity() {
    std::vector<Poly> fs{Poly::parse("q"), Poly::parse("q^2"),
                         Poly::parse("q^3+2*q")};
    for (const Poly& f : fs)
        for (unsigned n = 1; n <= 3; ++n)
            for (unsigned long p : {3ul, 5ul})
                for (unsigned N = 1; N <= 5; ++N)
                    if (!valuation_at_least(shift_defect(f, n, p, N),
                                            static_cast<long>(N)))
                        return false;
    // f = 1, n = 2: the defect vanishes identically
    for (unsigned long p : {3ul, 5ul})
        for (unsigned N = 1; N <= 3; ++N)
            if (shift_defect(Poly::parse("1"), 2, p, N).has_value()) return false;
    return true;
}

// --- criterion 7: collapsed sums vs brute-force nested loops ---------------

Rat moment_brute(unsigned n, unsigned r, unsigned a, const Rat& q0,
                 unsigned long M) {
    std::vector<unsigned long> y(r, 0);
    Rat acc;
    while (true) {
        unsigned long s = 0;
        for (unsigned long v : y) s += v;
        Rat term = q_number_value(a + s, q0).pow(n);
        if (s % 2 == 0) acc += term;
        else acc -= term;
        unsigned pos = 0;
        while (pos < r && ++y[pos] == M) y[pos++] = 0;
        if (pos == r) break;
    }
    return acc;
}

bool oracle_equivalence() {
    for (unsigned w : kOddW)
        for (unsigned r = 1; r <= 3; ++r)
            for (unsigned n = 0; n <= 4; ++n)
                for (unsigned i = 0; i <= n; ++i)
                    if (t_sum(n, i, r, w) != t_sum_direct(n, i, r, w)) return false;

    for (unsigned r = 1; r <= 3; ++r)
        for (unsigned n = 0; n <= 3; ++n)
            for (unsigned a = 0; a <= 1; ++a)
                for (const Rat& q0 : {Rat(1), Rat(4), Rat(7, 4)})
                    if (moment_sum(n, r, a, q0, 3, 1) != moment_brute(n, r, a, q0, 3))
                        return false;
    return true;
}

// --- criterion 8: CLI contract ----------------------------------------------

int run_cli(const std::string& args, std::string* output) {
    std::string cmd = std::string(QSYM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    char buf[4096];
    output->clear();
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
        output->append(buf, got);
    int status = pclose(pipe);
    return WEXITSTATUS(status);
}

bool cli_contract() {
    std::string out;
    int rc = run_cli("verify thm3 --n 1 --r 1 --w1 1 --w2 3 --x 0", &out);
    if (rc != 0) {
        std::printf("      expected exit 0, got %d\n", rc);
        return false;
    }
    json doc = json::parse(out);
    const auto& result = doc.at("results").at(0);
    if (result.at("lhs") != "(-1)/(1+q)" || result.at("rhs") != "(-1)/(1+q)" ||
        result.at("equal") != true) {
        std::printf("      unexpected verify payload: %s\n", result.dump().c_str());
        return false;
    }

    rc = run_cli("verify thm3 --n 1 --r 1 --w1 2 --w2 3 --x 0", &out);
    if (rc != 2) {
        std::printf("      even w1 should exit 2, got %d\n", rc);
        return false;
    }
    rc = run_cli("verify thm3 --bogus-flag", &out);
    if (rc != 2) {
        std::printf("      unknown flag should exit 2, got %d\n", rc);
        return false;
    }
    rc = run_cli("integral moment --p 4 --N 2", &out);
    if (rc != 2) {
        std::printf("      p = 4 should exit 2, got %d\n", rc);
        return false;
    }
    return true;
}

}  // namespace

int main() {
    double thm3_elapsed = 0.0;
    {
        auto t0 = std::chrono::steady_clock::now();
        bool pass = false;
        try {
            pass = theorem3_suite(&thm3_elapsed);
        } catch (const std::exception& e) {
            std::printf("      exception: %s\n", e.what());
        }
        double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report(1, "theorem 3 symbolic suite, full grid, under 60 s", pass, dt);
    }
    run(2, "theorem 4 symbolic suite and route equivalence", theorem4_suite);
    run(3, "q -> 1 degeneration onto classical Euler polynomials", degeneration);
    run(4, "addition formula matches the moment closed form", closed_form_vs_recurrence);
    run(5, "p-adic moment convergence, valuation floor N-2", moment_convergence);
    run(6, "integral shift identity, defect valuation >= N", shift_identity);
    run(7, "collapsed sums match brute-force nested loops", oracle_equivalence);
    run(8, "CLI contract: canonical output and exit codes", cli_contract);

    if (failures > 0) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
