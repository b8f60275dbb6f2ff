#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ctcong/expr.hpp"
#include "ctcong/verify.hpp"

using namespace ctcong;

TEST_CASE("brute force fixtures") {
    LaurentPoly P = parse_laurent("1/x+2+x"), Q = parse_laurent("1");
    CHECK(brute_force_sum(P, Q, 1, 5) == 4);  // 1+2+6+20+70 = 99
    CHECK(brute_force_sum(P, Q, 1, 7) == 1);  // 1275 mod 7
    CHECK(brute_force_sum(P, Q, 2, 5) == 2);  // 66197 mod 5
}

TEST_CASE("primes_in") {
    auto eq = [](const std::vector<Int>& a, std::vector<long> b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return false;
        return true;
    };
    CHECK(eq(primes_in(2, 11), {2, 3, 5, 7, 11}));
    CHECK(primes_in(14, 16).empty());
    CHECK(eq(primes_in(97, 101), {97, 101}));
    CHECK(eq(primes_in(-5, 2), {2}));
}

TEST_CASE("incremental mod-p sums equal exact big-integer sums") {
    std::mt19937_64 rng(64);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<long> rdist(1, 3);
    auto primes = primes_in(2, 50);
    int done = 0;
    while (done < 15) {
        LaurentPoly P, Q;
        for (long e = -2; e <= 2; ++e) P += LaurentPoly::monomial(e, coeff(rng));
        for (long e = -2; e <= 2; ++e) Q += LaurentPoly::monomial(e, coeff(rng));
        long r = rdist(rng);
        for (const Int& p : primes)
            CHECK(brute_force_sum(P, Q, r, p) == brute_force_sum_exact(P, Q, r, p));
        ++done;
    }
    // the named fixtures too
    LaurentPoly P = parse_laurent("1/x+2+x"), Q = parse_laurent("1");
    for (const Int& p : primes) {
        CHECK(brute_force_sum(P, Q, 1, p) == brute_force_sum_exact(P, Q, 1, p));
        CHECK(brute_force_sum(P, Q, 2, p) == brute_force_sum_exact(P, Q, 2, p));
    }
}

TEST_CASE("verify_range over the two-case theorem") {
    CaseSplitTheorem C = theo_qp(parse_laurent("1/x+2+x"), parse_laurent("1"), 2, 0, 60);
    VerificationReport rep = verify_range(TheoremVariant(C), 5, 100);
    CHECK(rep.all_match());
    CHECK(rep.mismatched == 0);
    CHECK(rep.checked > 20);
    CHECK(rep.kind == "theo-qp");
    // rows ascend and the summary tallies the rows
    long checked = 0, skipped = 0;
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        if (i) CHECK(rep.rows[i].p > rep.rows[i - 1].p);
        rep.rows[i].skip.empty() ? ++checked : ++skipped;
    }
    CHECK(checked == rep.checked);
    CHECK(skipped == rep.skipped);
}

TEST_CASE("verify_range reports mismatches as rows, not exceptions") {
    // doctor a theorem with a wrong table entry
    CaseSplitTheorem C = theo_qp(parse_laurent("1/x+2+x"), parse_laurent("1"), 2, 0, 60);
    C.table[1] = Rat(99);
    VerificationReport rep = verify_range(TheoremVariant(C), 5, 60);
    CHECK_FALSE(rep.all_match());
    CHECK(rep.mismatched > 0);
    bool saw_bad_row = false;
    for (const auto& row : rep.rows)
        if (row.skip.empty() && !row.match) saw_bad_row = true;
    CHECK(saw_bad_row);
}

TEST_CASE("verify_range on the residue set checks membership and prediction") {
    ResidueSetReport R = residue_set(parse_laurent("(x^3-2x+1)/x"), parse_laurent("1"), 2);
    VerificationReport rep = verify_range(TheoremVariant(R), 5, 150);
    CHECK(rep.all_match());
    for (const auto& row : rep.rows) {
        if (!row.skip.empty()) continue;
        CHECK(row.in_set);
        CHECK(row.match);
    }
}

TEST_CASE("keystone: random theorems vs brute force, all admissible p <= 50") {
    std::mt19937_64 rng(20240809);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<long> rdist(1, 3);
    auto primes = primes_in(2, 50);
    int done = 0, failures = 0;
    while (done < 60) {
        LaurentPoly P, Q;
        for (long e = -2; e <= 2; ++e) P += LaurentPoly::monomial(e, coeff(rng));
        for (long e = -2; e <= 2; ++e) Q += LaurentPoly::monomial(e, coeff(rng));
        if (P == LaurentPoly::one()) continue;
        long r = rdist(rng);
        TheoremG T = theo_g(P, Q, r);
        for (const Int& p : primes) {
            if (!T.admissible(p)) continue;
            if (rat_mod_p(evaluate_theorem(T, p), p) != brute_force_sum(P, Q, r, p))
                ++failures;
        }
        ++done;
    }
    CHECK(failures == 0);
}
