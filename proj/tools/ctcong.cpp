// ctcong: discover, state, and verify congruence theorems for partial sums
// of constant-term sequences sum_{k=0}^{rp-1} CT(P^k Q) modulo a prime p.

#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "ctcong/expr.hpp"
#include "ctcong/json_io.hpp"
#include "ctcong/verify.hpp"

using namespace ctcong;

namespace {

constexpr int EXIT_OK = 0;
constexpr int EXIT_USAGE = 1;
constexpr int EXIT_INAPPLICABLE = 2; // NotSimple, no-fit, degree caps, ...
constexpr int EXIT_MISMATCH = 3;

struct Options {
    std::string pexpr = "x";
    std::string qexpr = "1";
    long r = 1;
    int d = 0;
    long lmax = 60;
    std::string primes = "5..200";
    std::string format = "text";
    int cap = 8;
    unsigned long seed = 0;
    long kmax = 10;
    std::string verify_range_opt; // for theorem subcommands: optional sweep
    std::string load_path;
    std::string kind = "theo-g";
};

std::pair<Int, Int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos)
        throw Error("usage", "prime range must look like LO..HI");
    try {
        Int lo(s.substr(0, dots));
        Int hi(s.substr(dots + 2));
        if (lo > hi) throw Error("usage", "empty prime range");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw Error("usage", "prime range must look like LO..HI with integer bounds");
    }
}

int error_exit(const Error& e, bool json_mode) {
    if (json_mode) {
        Json j{{"schema", 1}, {"error", Json{{"kind", e.kind()}, {"message", e.what()}}}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
    }
    const std::string& k = e.kind();
    if (k == "usage" || k == "syntax") return EXIT_USAGE;
    return EXIT_INAPPLICABLE;
}

int emit(const TheoremVariant& T, const Options& opt, bool did_verify,
         const VerificationReport* rep) {
    bool json_mode = opt.format == "json";
    if (json_mode) {
        Json j = to_json(T);
        if (rep) attach_verification(j, *rep);
        std::cout << j.dump(2) << "\n";
    } else {
        std::visit([](const auto& t) { std::cout << describe(t); }, T);
        if (rep) std::cout << "\n" << describe(*rep, /*rows=*/false);
    }
    if (const auto* rs = std::get_if<ResidueSetReport>(&T); rs && rs->not_simple)
        return EXIT_INAPPLICABLE;
    if (did_verify && rep && !rep->all_match()) return EXIT_MISMATCH;
    return EXIT_OK;
}

int run_theorem_command(const Options& opt, const std::string& kind) {
    bool json_mode = opt.format == "json";
    try {
        LaurentPoly P = parse_laurent(opt.pexpr);
        LaurentPoly Q = parse_laurent(opt.qexpr);
        TheoremVariant T;
        if (kind == "theo-g")
            T = theo_g(P, Q, opt.r);
        else if (kind == "theo-qp")
            T = theo_qp(P, Q, opt.r, opt.d, opt.lmax, opt.cap);
        else if (kind == "quad")
            T = quadratic_theorem(P, Q, opt.r);
        else
            T = residue_set(P, Q, opt.r, RootsConfig{opt.cap, 200000});

        if (!opt.verify_range_opt.empty()) {
            auto [lo, hi] = parse_range(opt.verify_range_opt);
            VerificationReport rep = verify_range(T, lo, hi);
            return emit(T, opt, true, &rep);
        }
        return emit(T, opt, false, nullptr);
    } catch (const Error& e) {
        return error_exit(e, json_mode);
    }
}

int run_verify(const Options& opt) {
    bool json_mode = opt.format == "json";
    try {
        TheoremVariant T;
        if (!opt.load_path.empty()) {
            std::ifstream in(opt.load_path);
            if (!in) throw Error("usage", "cannot open " + opt.load_path);
            Json j = Json::parse(in, nullptr, true, true);
            T = theorem_from_json(j);
        } else {
            LaurentPoly P = parse_laurent(opt.pexpr);
            LaurentPoly Q = parse_laurent(opt.qexpr);
            if (opt.kind == "theo-g")
                T = theo_g(P, Q, opt.r);
            else if (opt.kind == "theo-qp")
                T = theo_qp(P, Q, opt.r, opt.d, opt.lmax, opt.cap);
            else if (opt.kind == "quad")
                T = quadratic_theorem(P, Q, opt.r);
            else if (opt.kind == "finite")
                T = residue_set(P, Q, opt.r, RootsConfig{opt.cap, 200000});
            else
                throw Error("usage", "unknown --kind '" + opt.kind + "'");
        }
        auto [lo, hi] = parse_range(opt.primes);
        VerificationReport rep = verify_range(T, lo, hi);
        if (json_mode) {
            Json j = to_json(T);
            attach_verification(j, rep);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << describe(rep, true);
        }
        return rep.all_match() ? EXIT_OK : EXIT_MISMATCH;
    } catch (const Error& e) {
        return error_exit(e, json_mode);
    }
}

int run_ct(const Options& opt) {
    bool json_mode = opt.format == "json";
    try {
        LaurentPoly P = parse_laurent(opt.pexpr);
        LaurentPoly Q = parse_laurent(opt.qexpr);
        LaurentPoly g = Q;
        std::vector<Rat> a;
        for (long k = 0; k <= opt.kmax; ++k) {
            a.push_back(constant_term(g));
            if (k < opt.kmax) g = g * P;
        }
        if (json_mode) {
            Json arr = Json::array();
            for (const Rat& x : a) arr.push_back(x.get_str());
            Json j{{"schema", 1},
                   {"kind", "ct"},
                   {"input", Json{{"P", pretty_print(P)}, {"Q", pretty_print(Q)}}},
                   {"terms", arr}};
            std::cout << j.dump(2) << "\n";
        } else {
            for (long k = 0; k <= opt.kmax; ++k)
                std::cout << "a_" << k << " = " << a[static_cast<std::size_t>(k)].get_str() << "\n";
        }
        return EXIT_OK;
    } catch (const Error& e) {
        return error_exit(e, json_mode);
    }
}

// the fixture suite: every worked example from the sources of record
int run_selftest(const Options& opt) {
    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
        if (!ok) ++failures;
    };
    try {
        LaurentPoly trinomial = parse_laurent("1/x+2+x");
        LaurentPoly one = parse_laurent("1");

        // central binomial sums: sum_{k<p} C(2k,k) = S_p for x/(x^2+x+1)
        TheoremG t1 = theo_g(trinomial, one, 1);
        check(t1.m == 1 && t1.n == -1 && t1.weights == std::vector<Int>{1, 1},
              "theo-g on (1/x+2+x, 1, r=1)");
        check(brute_force_sum(trinomial, one, 1, 5) == 4, "brute force p=5 equals 99 mod 5");
        check(rat_mod_p(evaluate_theorem(t1, 5), 5) == 4, "prediction matches at p=5");

        // the two-case r=2 theorem: 3 / -3 by p mod 3
        CaseSplitTheorem t2 = theo_qp(trinomial, one, 2, 0, 60);
        check(t2.modulus == 3 && t2.table.at(1) == 3 && t2.table.at(2) == -3,
              "theo-qp table {1 -> 3, 2 -> -3} (mod 3)");
        VerificationReport r2 = verify_range(t2, 5, 200);
        check(r2.all_match() && r2.checked > 0, "theo-qp verified on primes 5..200");

        // quadratic closed form: +-1 by the Legendre character of -3
        QuadraticTheorem t3 = quadratic_theorem(trinomial, one, 1);
        check(t3.delta == -3 && t3.value_sq == 1 && t3.value_nonsq == -1,
              "quadratic branches (S_1, (c/a) S_-1) = (1, -1)");

        // the simple cubic: residue set {-1, 2}
        LaurentPoly P3 = parse_laurent("(x^3-2x+1)/x");
        ResidueSetReport t4 = residue_set(P3, one, 2);
        check(!t4.not_simple && t4.values == std::vector<Rat>{Rat(-1), Rat(2)},
              "residue set of ((x^3-2x+1)/x, r=2) is {-1, 2}");
        VerificationReport r4 = verify_range(t4, 5, 120);
        check(r4.all_match() && r4.checked > 0, "residue set verified on primes 5..120");

        // the non-simple denominator 1-2x^3
        LaurentPoly P5 = parse_laurent("-2*x^2+1+1/x");
        ResidueSetReport t5 = residue_set(P5, one, 1);
        check(t5.not_simple, "1-2x^3 denominator reported not simple");

        // seeded random sweep: predictions against brute force
        std::mt19937_64 rng(opt.seed == 0 ? 0x5eed : opt.seed);
        std::uniform_int_distribution<long> coeff(-3, 3);
        std::uniform_int_distribution<long> rdist(1, 3);
        auto primes = primes_in(2, 40);
        long mism = 0, checked = 0;
        int built = 0;
        while (built < 25) {
            LaurentPoly P, Q;
            for (long e = -2; e <= 2; ++e) P += LaurentPoly::monomial(e, coeff(rng));
            for (long e = -2; e <= 2; ++e) Q += LaurentPoly::monomial(e, coeff(rng));
            if (P == LaurentPoly::one()) continue;
            long r = rdist(rng);
            TheoremG T = theo_g(P, Q, r);
            for (const Int& p : primes) {
                if (!T.admissible(p)) continue;
                ++checked;
                if (rat_mod_p(evaluate_theorem(T, p), p) != brute_force_sum(P, Q, r, p)) ++mism;
            }
            ++built;
        }
        check(mism == 0 && checked > 100,
              "randomized sweep (seed " + std::to_string(opt.seed) + "): " +
                  std::to_string(checked) + " comparisons");
    } catch (const Error& e) {
        std::cout << "FAIL exception: " << e.what() << "\n";
        ++failures;
    }
    std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failures == 0 ? EXIT_OK : EXIT_MISMATCH;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ctcong: congruence theorems for partial sums of constant-term sequences\n"
        "a_k = CT(P(x)^k Q(x)).  Expressions use integers, x, + - * / ^ and\n"
        "parentheses; ^ binds tighter than unary minus (-x^2 = -(x^2)); x^-1\n"
        "and x^(-1) both work; division must be exact in the Laurent ring."};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_qp) {
        sub->add_option("-P,--pexpr", opt.pexpr, "Laurent polynomial P(x)")->required();
        sub->add_option("-Q,--qexpr", opt.qexpr, "Laurent polynomial Q(x) (default 1)");
        sub->add_option("-r", opt.r, "partial sums run to rp-1 (default 1)");
        if (with_qp) {
            sub->add_option("-d", opt.d, "quasi-polynomial degree to try (default 0)");
            sub->add_option("--lmax", opt.lmax, "largest quasi-polynomial period (default 60)");
        }
        sub->add_option("--format", opt.format, "text|json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--cap", opt.cap, "factorization degree cap (default 8)");
        sub->add_option("--verify", opt.verify_range_opt, "also verify over primes LO..HI");
    };

    CLI::App* theog = app.add_subcommand("theo-g", "state the general congruence theorem");
    add_common(theog, false);
    CLI::App* theoqp = app.add_subcommand("theo-qp", "explicit case-split theorem via a quasi-polynomial");
    add_common(theoqp, true);
    CLI::App* quad = app.add_subcommand("quad", "closed-form branches for a quadratic denominator");
    add_common(quad, false);
    CLI::App* finite = app.add_subcommand("finite", "finite residue set when the denominator is simple");
    add_common(finite, false);

    CLI::App* verify = app.add_subcommand("verify", "confront a theorem with brute force");
    verify->add_option("-P,--pexpr", opt.pexpr, "Laurent polynomial P(x)");
    verify->add_option("-Q,--qexpr", opt.qexpr, "Laurent polynomial Q(x)");
    verify->add_option("-r", opt.r, "r");
    verify->add_option("-d", opt.d, "degree for theo-qp");
    verify->add_option("--lmax", opt.lmax, "period bound for theo-qp");
    verify->add_option("--kind", opt.kind, "theo-g|theo-qp|quad|finite");
    verify->add_option("--load", opt.load_path, "load a theorem from a JSON file");
    verify->add_option("--primes", opt.primes, "prime range LO..HI (default 5..200)");
    verify->add_option("--format", opt.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--cap", opt.cap, "factorization degree cap");

    CLI::App* ct = app.add_subcommand("ct", "print a_0..a_K");
    ct->add_option("-P,--pexpr", opt.pexpr, "Laurent polynomial P(x)")->required();
    ct->add_option("-Q,--qexpr", opt.qexpr, "Laurent polynomial Q(x)");
    ct->add_option("-k,--kmax", opt.kmax, "largest index K (default 10)");
    ct->add_option("--format", opt.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in fixture suite");
    selftest->add_option("--seed", opt.seed, "seed for randomized parts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? EXIT_OK : EXIT_USAGE;
    }

    if (theog->parsed()) return run_theorem_command(opt, "theo-g");
    if (theoqp->parsed()) return run_theorem_command(opt, "theo-qp");
    if (quad->parsed()) return run_theorem_command(opt, "quad");
    if (finite->parsed()) return run_theorem_command(opt, "finite");
    if (verify->parsed()) return run_verify(opt);
    if (ct->parsed()) return run_ct(opt);
    if (selftest->parsed()) return run_selftest(opt);
    return EXIT_USAGE;
}
