// qsym: exact verification of two-variable symmetry identities for
// higher-order q-Euler polynomials, with q-Euler / alternating-power-sum
// tables and truncated fermionic p-adic integral experiments.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

#include "qsym/symmetry.hpp"

using json = nlohmann::ordered_json;
using namespace qsym;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::string format = "json";
    std::string out_path;

    // One row per result: ordered (column, text) pairs for csv/latex plus the
    // typed JSON object.
    std::vector<std::vector<std::pair<std::string, std::string>>> rows;
    json results = json::array();

    void add(std::vector<std::pair<std::string, std::string>> row, json obj) {
        rows.push_back(std::move(row));
        results.push_back(std::move(obj));
    }

    int write(const std::string& command, const json& params) const {
        std::ostringstream os;
        if (format == "json") {
            json doc;
            doc["command"] = command;
            doc["params"] = params;
            doc["results"] = results;
            os << doc.dump(2) << "\n";
        } else if (format == "csv") {
            if (!rows.empty()) {
                for (std::size_t i = 0; i < rows[0].size(); ++i)
                    os << (i ? "," : "") << rows[0][i].first;
                os << "\n";
                for (const auto& row : rows) {
                    for (std::size_t i = 0; i < row.size(); ++i) {
                        std::string cell = row[i].second;
                        if (cell.find(',') != std::string::npos ||
                            cell.find('"') != std::string::npos) {
                            std::string quoted = "\"";
                            for (char ch : cell) {
                                if (ch == '"') quoted += "\"\"";
                                else quoted += ch;
                            }
                            quoted += "\"";
                            cell = quoted;
                        }
                        os << (i ? "," : "") << cell;
                    }
                    os << "\n";
                }
            }
        } else {  // latex
            if (!rows.empty()) {
                os << "\\begin{tabular}{" << std::string(rows[0].size(), 'l') << "}\n";
                for (std::size_t i = 0; i < rows[0].size(); ++i)
                    os << (i ? " & " : "") << rows[0][i].first;
                os << " \\\\\n\\hline\n";
                for (const auto& row : rows) {
                    for (std::size_t i = 0; i < row.size(); ++i)
                        os << (i ? " & " : "") << row[i].second;
                    os << " \\\\\n";
                }
                os << "\\end{tabular}\n";
            }
        }
        if (out_path.empty()) {
            std::cout << os.str();
        } else {
            std::ofstream f(out_path);
            if (!f) {
                std::cerr << "error: cannot open output file " << out_path << "\n";
                return kExitFailure;
            }
            f << os.str();
        }
        return kExitOk;
    }
};

std::string valuation_str(const Valuation& v) {
    return v.has_value() ? std::to_string(*v) : "inf";
}

json valuation_json(const Valuation& v) {
    if (!v.has_value()) return json("inf");
    return json(*v);
}

const char* mode_name(CheckMode m) {
    switch (m) {
        case CheckMode::symbolic: return "symbolic";
        case CheckMode::rational: return "rational";
        case CheckMode::padic: return "padic";
    }
    return "?";
}

json case_json(const char* theorem, const SymmetryReport& rep) {
    json c;
    c["theorem"] = theorem;
    c["n"] = rep.c.n;
    c["r"] = rep.c.r;
    c["w1"] = rep.c.w1;
    c["w2"] = rep.c.w2;
    c["x"] = rep.c.x;
    c["mode"] = mode_name(rep.c.mode);
    if (rep.c.mode == CheckMode::rational) c["q0"] = rep.c.q0->str();
    if (rep.c.mode == CheckMode::padic) {
        c["p"] = rep.c.cfg->p;
        c["q0"] = rep.c.cfg->q0.str();
    }
    return c;
}

void add_report(Output& out, const char* theorem, const SymmetryReport& rep,
                std::optional<unsigned> level = std::nullopt) {
    json obj;
    json c = case_json(theorem, rep);
    if (level) c["N"] = *level;
    obj["case"] = std::move(c);
    obj["lhs"] = rep.lhs;
    obj["rhs"] = rep.rhs;
    obj["equal"] = rep.equal;
    obj["defect_valuation"] =
        rep.defect_valuation ? valuation_json(*rep.defect_valuation) : json(nullptr);

    std::vector<std::pair<std::string, std::string>> row{
        {"theorem", theorem},
        {"n", std::to_string(rep.c.n)},
        {"r", std::to_string(rep.c.r)},
        {"w1", std::to_string(rep.c.w1)},
        {"w2", std::to_string(rep.c.w2)},
        {"x", std::to_string(rep.c.x)},
        {"mode", mode_name(rep.c.mode)},
    };
    if (level) row.emplace_back("N", std::to_string(*level));
    row.emplace_back("lhs", rep.lhs);
    row.emplace_back("rhs", rep.rhs);
    row.emplace_back("equal", rep.equal ? "true" : "false");
    row.emplace_back("defect_valuation",
                     rep.defect_valuation ? valuation_str(*rep.defect_valuation) : "");
    out.add(std::move(row), std::move(obj));
}

struct VerifyOptions {
    unsigned n = 0, r = 1, w1 = 1, w2 = 1, x = 0;
    unsigned n_max = 0, r_max = 1, N_max = 1;
    unsigned long p = 3;
    bool grid = false;
    std::string q_str;
    std::vector<unsigned> w_set{1, 3, 5};
    std::vector<unsigned> x_set{0};
};

SymmetryCase make_case(unsigned n, unsigned r, unsigned w1, unsigned w2,
                       unsigned x, const std::string& q_str) {
    SymmetryCase c;
    c.n = n;
    c.r = r;
    c.w1 = w1;
    c.w2 = w2;
    c.x = x;
    if (q_str.empty()) {
        c.mode = CheckMode::symbolic;
    } else {
        c.mode = CheckMode::rational;
        c.q0 = Rat::parse(q_str);
    }
    return c;
}

int run_verify_theorem(const char* name, const VerifyOptions& opt, Output& out,
                       json& params) {
    auto check = name == std::string("thm4") ? theorem4_check : theorem3_check;
    std::vector<SymmetryReport> reports;
    if (opt.grid) {
        params["grid"] = true;
        params["n_max"] = opt.n_max;
        params["r_max"] = opt.r_max;
        params["w_set"] = opt.w_set;
        params["x_set"] = opt.x_set;
        for (unsigned n = 0; n <= opt.n_max; ++n)
            for (unsigned r = 1; r <= opt.r_max; ++r)
                for (unsigned w1 : opt.w_set)
                    for (unsigned w2 : opt.w_set)
                        for (unsigned x : opt.x_set)
                            reports.push_back(
                                check(make_case(n, r, w1, w2, x, opt.q_str)));
    } else {
        params["n"] = opt.n;
        params["r"] = opt.r;
        params["w1"] = opt.w1;
        params["w2"] = opt.w2;
        params["x"] = opt.x;
        reports.push_back(check(make_case(opt.n, opt.r, opt.w1, opt.w2, opt.x,
                                          opt.q_str)));
    }
    if (!opt.q_str.empty()) params["q0"] = opt.q_str;

    // canonical report order regardless of how the grid was evaluated
    std::stable_sort(reports.begin(), reports.end(),
                     [](const SymmetryReport& a, const SymmetryReport& b) {
                         auto key = [](const SymmetryCase& c) {
                             return std::tuple(c.n, c.r, c.w1, c.w2, c.x);
                         };
                         return key(a.c) < key(b.c);
                     });

    bool all_equal = true;
    for (const auto& rep : reports) {
        all_equal = all_equal && rep.equal;
        add_report(out, name, rep);
    }
    return all_equal ? kExitOk : kExitFailure;
}

int run_verify_thm1(const VerifyOptions& opt, Output& out, json& params) {
    params["n_max"] = opt.n_max;
    params["r"] = opt.r;
    params["w1"] = opt.w1;
    params["w2"] = opt.w2;
    params["x"] = opt.x;
    auto reports = theorem1_series_check(opt.n_max, opt.r, opt.w1, opt.w2, opt.x);
    bool all_equal = true;
    for (const auto& rep : reports) {
        all_equal = all_equal && rep.equal;
        add_report(out, "thm1", rep);
    }
    return all_equal ? kExitOk : kExitFailure;
}

int run_verify_cor2(const VerifyOptions& opt, Output& out, json& params) {
    Rat q0 = opt.q_str.empty() ? Rat(1 + static_cast<long>(opt.p))
                               : Rat::parse(opt.q_str);
    if (mpz_divisible_ui_p(q0.den().get_mpz_t(), opt.p)) {
        std::cerr << "error: q0 = " << q0.str()
                  << " has a denominator divisible by p\n";
        return kExitFailure;
    }
    SymmetryCase c;
    c.n = opt.n;
    c.r = opt.r;
    c.w1 = opt.w1;
    c.w2 = opt.w2;
    c.x = opt.x;
    c.mode = CheckMode::padic;
    c.cfg = IntegralConfig(opt.p, opt.N_max, q0);

    params["n"] = opt.n;
    params["r"] = opt.r;
    params["w1"] = opt.w1;
    params["w2"] = opt.w2;
    params["x"] = opt.x;
    params["p"] = opt.p;
    params["q0"] = q0.str();
    params["N_max"] = opt.N_max;

    bool all_equal = true;
    for (unsigned N = 1; N <= opt.N_max; ++N) {
        SymmetryReport rep = corollary2_padic_check(c, N);
        all_equal = all_equal && rep.equal;
        add_report(out, "cor2", rep, N);
    }
    return all_equal ? kExitOk : kExitFailure;
}

int run_table_qeuler(unsigned n_max, unsigned r, unsigned x, Output& out,
                     json& params) {
    params["n_max"] = n_max;
    params["r"] = r;
    params["x"] = x;
    for (unsigned n = 0; n <= n_max; ++n) {
        std::string value = q_euler_poly(n, r, x, 1).str();
        json obj;
        obj["case"] = {{"n", n}, {"r", r}, {"x", x}};
        obj["value"] = value;
        out.add({{"n", std::to_string(n)},
                 {"r", std::to_string(r)},
                 {"x", std::to_string(x)},
                 {"value", value}},
                std::move(obj));
    }
    return kExitOk;
}

int run_table_tsum(unsigned n, unsigned r, unsigned w, std::optional<unsigned> i_only,
                   Output& out, json& params) {
    params["n"] = n;
    params["r"] = r;
    params["w"] = w;
    if (i_only) params["i"] = *i_only;
    for (unsigned i = i_only.value_or(0); i <= (i_only ? *i_only : n); ++i) {
        std::string value = t_sum(n, i, r, w).str();
        json obj;
        obj["case"] = {{"n", n}, {"i", i}, {"r", r}, {"w", w}};
        obj["value"] = value;
        out.add({{"n", std::to_string(n)},
                 {"i", std::to_string(i)},
                 {"r", std::to_string(r)},
                 {"w", std::to_string(w)},
                 {"value", value}},
                std::move(obj));
    }
    return kExitOk;
}

Poly poly_from_coeffs(const std::vector<std::string>& coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(Rat::parse(s));
    return Poly(std::move(c));
}

std::string coeff_list_str(const std::vector<std::string>& coeffs) {
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        s += (i ? "," : "") + coeffs[i];
    return s;
}

int run_integral_moment(unsigned long p, unsigned N_max, unsigned n, unsigned r,
                        unsigned x, const std::string& q_str, Output& out,
                        json& params) {
    Rat q0 = q_str.empty() ? Rat(1 + static_cast<long>(p)) : Rat::parse(q_str);
    if (mpz_divisible_ui_p(q0.den().get_mpz_t(), p)) {
        std::cerr << "error: q0 = " << q0.str()
                  << " has a denominator divisible by p\n";
        return kExitFailure;
    }
    IntegralConfig cfg(p, N_max, q0);
    Rat exact = q_euler_poly(n, r, x, 1).eval(q0);

    params["p"] = p;
    params["N_max"] = N_max;
    params["n"] = n;
    params["r"] = r;
    params["x"] = x;
    params["q0"] = q0.str();
    params["target"] = exact.str();

    for (unsigned N = 1; N <= N_max; ++N) {
        Rat sum = moment_sum(n, r, x, q0, p, N);
        PadicInt residue = padic_reduce(sum, p, N);
        PadicInt target = padic_reduce(exact, p, N);
        Valuation defect = valuation(sum - exact, p);
        json obj;
        obj["case"] = {{"p", p}, {"q0", q0.str()}, {"n", n},
                       {"r", r}, {"x", x}, {"N", N}};
        obj["residue"] = residue.residue().get_str();
        obj["target"] = target.residue().get_str();
        obj["defect_valuation"] = valuation_json(defect);
        out.add({{"p", std::to_string(p)},
                 {"q0", q0.str()},
                 {"n", std::to_string(n)},
                 {"r", std::to_string(r)},
                 {"x", std::to_string(x)},
                 {"N", std::to_string(N)},
                 {"residue", residue.residue().get_str()},
                 {"target", target.residue().get_str()},
                 {"defect_valuation", valuation_str(defect)}},
                std::move(obj));
    }
    return kExitOk;
}

int run_integral_shift(unsigned long p, unsigned N_max, unsigned n,
                       const std::vector<std::string>& coeffs, Output& out,
                       json& params) {
    Poly f = poly_from_coeffs(coeffs);
    params["p"] = p;
    params["N_max"] = N_max;
    params["n"] = n;
    params["f"] = coeff_list_str(coeffs);
    for (unsigned N = 1; N <= N_max; ++N) {
        Valuation defect = shift_defect(f, n, p, N);
        json obj;
        obj["case"] = {{"p", p}, {"N", N}, {"n", n}, {"f", coeff_list_str(coeffs)}};
        obj["defect_valuation"] = valuation_json(defect);
        out.add({{"p", std::to_string(p)},
                 {"N", std::to_string(N)},
                 {"n", std::to_string(n)},
                 {"f", coeff_list_str(coeffs)},
                 {"defect_valuation", valuation_str(defect)}},
                std::move(obj));
    }
    return kExitOk;
}

int run_integral_riemann(unsigned long p, unsigned N_max,
                         const std::vector<std::string>& coeffs, Output& out,
                         json& params) {
    Poly f = poly_from_coeffs(coeffs);
    params["p"] = p;
    params["N_max"] = N_max;
    params["f"] = coeff_list_str(coeffs);
    for (unsigned N = 1; N <= N_max; ++N) {
        PadicInt r = fermionic_riemann_sum(
            [&f](unsigned long v) { return f.eval(Rat(static_cast<long>(v))); }, p, N);
        json obj;
        obj["case"] = {{"p", p}, {"N", N}, {"f", coeff_list_str(coeffs)}};
        obj["residue"] = r.residue().get_str();
        out.add({{"p", std::to_string(p)},
                 {"N", std::to_string(N)},
                 {"f", coeff_list_str(coeffs)},
                 {"residue", r.residue().get_str()}},
                std::move(obj));
    }
    return kExitOk;
}

void require_odd_prime_flag(unsigned long p) {
    if (!is_odd_prime(p))
        throw CLI::ValidationError("--p", "p must be an odd prime");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-Euler symmetry identities, tables and p-adic integrals"};
    app.require_subcommand(1);

    Output out;
    VerifyOptions vopt;

    auto add_output_flags = [&out](CLI::App* cmd) {
        cmd->add_option("--format", out.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "latex"}))
            ->capture_default_str();
        cmd->add_option("--out", out.out_path, "write output to a file");
    };

    // verify
    CLI::App* verify = app.add_subcommand("verify", "check a symmetry identity");
    verify->require_subcommand(1);

    CLI::App* thm3 = verify->add_subcommand("thm3", "E-form two-variable identity");
    CLI::App* thm4 = verify->add_subcommand("thm4", "T/E convolution identity");
    for (CLI::App* cmd : {thm3, thm4}) {
        cmd->add_option("--n", vopt.n, "degree");
        cmd->add_option("--r", vopt.r, "order");
        cmd->add_option("--w1", vopt.w1, "first odd modulus");
        cmd->add_option("--w2", vopt.w2, "second odd modulus");
        cmd->add_option("--x", vopt.x, "argument shift");
        cmd->add_option("--q", vopt.q_str, "evaluate both sides at q0 (rational mode)");
        cmd->add_flag("--grid", vopt.grid, "run a full parameter grid");
        cmd->add_option("--n-max", vopt.n_max, "grid: maximal degree");
        cmd->add_option("--r-max", vopt.r_max, "grid: maximal order");
        cmd->add_option("--w-set", vopt.w_set, "grid: odd moduli set")->delimiter(',');
        cmd->add_option("--x-set", vopt.x_set, "grid: argument set")->delimiter(',');
        add_output_flags(cmd);
    }

    CLI::App* thm1 = verify->add_subcommand(
        "thm1", "generating-function identity, coefficientwise to n-max");
    thm1->add_option("--n-max", vopt.n_max, "maximal degree")->required();
    thm1->add_option("--r", vopt.r, "order");
    thm1->add_option("--w1", vopt.w1, "first odd modulus");
    thm1->add_option("--w2", vopt.w2, "second odd modulus");
    thm1->add_option("--x", vopt.x, "argument shift");
    add_output_flags(thm1);

    CLI::App* cor2 = verify->add_subcommand(
        "cor2", "integral symmetry via truncated Riemann sums");
    cor2->add_option("--n", vopt.n, "degree");
    cor2->add_option("--r", vopt.r, "order");
    cor2->add_option("--w1", vopt.w1, "first odd modulus");
    cor2->add_option("--w2", vopt.w2, "second odd modulus");
    cor2->add_option("--x", vopt.x, "argument shift");
    cor2->add_option("--p", vopt.p, "odd prime")->required();
    cor2->add_option("--N-max", vopt.N_max, "deepest truncation level");
    cor2->add_option("--q", vopt.q_str, "p-adic q0 (default 1+p)");
    add_output_flags(cor2);

    // table
    CLI::App* table = app.add_subcommand("table", "emit value tables");
    table->require_subcommand(1);

    unsigned t_nmax = 0, t_r = 1, t_x = 0, t_n = 0, t_w = 1;
    std::optional<unsigned> t_i;
    CLI::App* tq = table->add_subcommand("qeuler", "q-Euler polynomial values");
    tq->add_option("--n-max", t_nmax, "maximal degree")->required();
    tq->add_option("--r", t_r, "order");
    tq->add_option("--x", t_x, "integer argument");
    add_output_flags(tq);

    CLI::App* tt = table->add_subcommand("tsum", "alternating power sums");
    tt->add_option("--n", t_n, "degree")->required();
    tt->add_option("--r", t_r, "order");
    tt->add_option("--w", t_w, "odd modulus")->required();
    tt->add_option("--i", [&t_i](const CLI::results_t& res) {
        unsigned v{};
        bool ok = CLI::detail::lexical_cast(res[0], v);
        if (ok) t_i = v;
        return ok;
    }, "single inner index (default: all of 0..n)");
    add_output_flags(tt);

    // integral
    CLI::App* integral = app.add_subcommand("integral", "p-adic integral experiments");
    integral->require_subcommand(1);

    unsigned long i_p = 3;
    unsigned i_N = 1, i_n = 0, i_r = 1, i_x = 0;
    std::string i_q;
    std::vector<std::string> i_f;
    CLI::App* moment = integral->add_subcommand("moment", "truncated q-Euler moments");
    moment->add_option("--p", i_p, "odd prime")->required();
    moment->add_option("--N", i_N, "deepest truncation level")->required();
    moment->add_option("--n", i_n, "degree");
    moment->add_option("--r", i_r, "order");
    moment->add_option("--x", i_x, "integer argument");
    moment->add_option("--q", i_q, "p-adic q0 (default 1+p)");
    add_output_flags(moment);

    CLI::App* shift = integral->add_subcommand("shift-defect", "integral shift identity defect");
    shift->add_option("--p", i_p, "odd prime")->required();
    shift->add_option("--N", i_N, "deepest truncation level")->required();
    shift->add_option("--n", i_n, "shift amount")->required();
    shift->add_option("--f", i_f, "integer coefficients, ascending")
        ->required()
        ->delimiter(',');
    add_output_flags(shift);

    CLI::App* riemann = integral->add_subcommand("riemann", "alternating Riemann sums");
    riemann->add_option("--p", i_p, "odd prime")->required();
    riemann->add_option("--N", i_N, "deepest truncation level")->required();
    riemann->add_option("--f", i_f, "integer coefficients, ascending")
        ->required()
        ->delimiter(',');
    add_output_flags(riemann);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        json params;
        int rc = kExitUsage;
        std::string command;
        if (thm3->parsed() || thm4->parsed()) {
            command = "verify";
            const char* name = thm3->parsed() ? "thm3" : "thm4";
            params["theorem"] = name;
            rc = run_verify_theorem(name, vopt, out, params);
        } else if (thm1->parsed()) {
            command = "verify";
            params["theorem"] = "thm1";
            rc = run_verify_thm1(vopt, out, params);
        } else if (cor2->parsed()) {
            command = "verify";
            params["theorem"] = "cor2";
            require_odd_prime_flag(vopt.p);
            rc = run_verify_cor2(vopt, out, params);
        } else if (tq->parsed()) {
            command = "table";
            params["table"] = "qeuler";
            rc = run_table_qeuler(t_nmax, t_r, t_x, out, params);
        } else if (tt->parsed()) {
            command = "table";
            params["table"] = "tsum";
            rc = run_table_tsum(t_n, t_r, t_w, t_i, out, params);
        } else if (moment->parsed()) {
            command = "integral";
            params["integral"] = "moment";
            require_odd_prime_flag(i_p);
            rc = run_integral_moment(i_p, i_N, i_n, i_r, i_x, i_q, out, params);
        } else if (shift->parsed()) {
            command = "integral";
            params["integral"] = "shift-defect";
            require_odd_prime_flag(i_p);
            rc = run_integral_shift(i_p, i_N, i_n, i_f, out, params);
        } else if (riemann->parsed()) {
            command = "integral";
            params["integral"] = "riemann";
            require_odd_prime_flag(i_p);
            rc = run_integral_riemann(i_p, i_N, i_f, out, params);
        }
        if (rc == kExitUsage) {
            std::cerr << "error: no command selected\n";
            return kExitUsage;
        }
        int write_rc = out.write(command, params);
        return write_rc == kExitOk ? rc : write_rc;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const not_p_adic_integer& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const pole_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
