#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ctcong/factor.hpp"

using namespace ctcong;

TEST_CASE("x^4 - 1 splits into the classical factors") {
    Factorization f = factor_q(Poly({-1, 0, 0, 0, 1}));
    CHECK(f.unit == 1);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0].first == Poly({-1, 1}));
    CHECK(f.factors[1].first == Poly({1, 1}));
    CHECK(f.factors[2].first == Poly({1, 0, 1}));
    for (const auto& [q, m] : f.factors) CHECK(m == 1);
    CHECK(f.reassemble() == Poly({-1, 0, 0, 0, 1}));
}

TEST_CASE("irreducibles stay whole") {
    Factorization a = factor_q(Poly({1, 1, 1}));
    REQUIRE(a.factors.size() == 1);
    CHECK(a.factors[0] == std::make_pair(Poly({1, 1, 1}), 1));

    Factorization b = factor_q(Poly({1, -3, 0, 1})); // 1 - 3x + x^3
    REQUIRE(b.factors.size() == 1);
    CHECK(b.factors[0].second == 1);
    CHECK(b.factors[0].first == Poly({1, -3, 0, 1}));

    Factorization c = factor_q(Poly({-1, 0, 0, 2})); // 2x^3 - 1
    REQUIRE(c.factors.size() == 1);
}

TEST_CASE("multiplicities via squarefree decomposition") {
    // (x-1)^2 (x+2)
    Poly f = Poly({-1, 1}) * Poly({-1, 1}) * Poly({2, 1});
    Factorization fa = factor_q(f);
    REQUIRE(fa.factors.size() == 2);
    CHECK(fa.factors[0].first == Poly({-1, 1}));
    CHECK(fa.factors[0].second == 2);
    CHECK(fa.factors[1].first == Poly({2, 1}));
    CHECK(fa.factors[1].second == 1);
    CHECK(fa.reassemble() == f);
}

TEST_CASE("content and sign conventions") {
    // -6x^2 + 6 = -6 (x-1)(x+1)
    Factorization f = factor_q(Poly({6, 0, -6}));
    CHECK(f.unit == -6);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.reassemble() == Poly({6, 0, -6}));
    for (const auto& [q, m] : f.factors) {
        CHECK(q.lc() > 0);
        CHECK(q.content() == 1);
    }
}

TEST_CASE("degree cap is a clean error") {
    Poly big = Poly::monomial(9, 1) - Poly::one();
    CHECK_THROWS_AS(factor_q(big), Error);
    try {
        factor_q(big);
    } catch (const Error& e) {
        CHECK(e.kind() == "degree-limit");
    }
    CHECK_NOTHROW(factor_q(big, 12));
    Factorization f = factor_q(big, 12);
    CHECK(f.reassemble() == big);
}

TEST_CASE("random products re-expand exactly") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> coeff(-4, 4);
    auto random_poly = [&](int maxdeg) {
        std::vector<Rat> c(static_cast<std::size_t>(rng() % (maxdeg + 1)) + 1);
        for (auto& x : c) x = coeff(rng);
        return Poly(std::move(c));
    };
    int done = 0;
    while (done < 40) {
        Poly f = random_poly(3) * random_poly(3);
        if (f.is_zero() || f.deg() < 1 || f.deg() > 8) continue;
        Factorization fa = factor_q(f);
        CHECK(fa.reassemble() == f);
        for (std::size_t i = 1; i < fa.factors.size(); ++i)
            CHECK(fa.factors[i - 1].first != fa.factors[i].first);
        ++done;
    }
}

TEST_CASE("non-monic inputs split fully") {
    // 1 - 3x + 2x^2 = (x-1)(2x-1) up to sign conventions
    Factorization f = factor_q(Poly({1, -3, 2}));
    REQUIRE(f.factors.size() == 2);
    bool has_x1 = false, has_2x1 = false;
    for (const auto& [q, m] : f.factors) {
        if (q == Poly({-1, 1})) has_x1 = true;
        if (q == Poly({-1, 2})) has_2x1 = true;
    }
    CHECK(has_x1);
    CHECK(has_2x1);
    CHECK(f.reassemble() == Poly({1, -3, 2}));

    // (2x+1)(3x-1)(x^2+1)
    Poly g = Poly({1, 2}) * Poly({-1, 3}) * Poly({1, 0, 1});
    Factorization fg = factor_q(g);
    REQUIRE(fg.factors.size() == 3);
    CHECK(fg.reassemble() == g);

    // (2x^2+x+1)(3x^2-x+2), both irreducible with nontrivial lc
    Poly h = Poly({1, 1, 2}) * Poly({2, -1, 3});
    Factorization fh = factor_q(h);
    REQUIRE(fh.factors.size() == 2);
    CHECK(fh.reassemble() == h);
}

TEST_CASE("cyclotomic-style stress inputs") {
    // x^8 - 1 = (x-1)(x+1)(x^2+1)(x^4+1)
    Factorization f = factor_q(Poly({-1, 0, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(f.factors.size() == 4);
    CHECK(f.reassemble() == Poly({-1, 0, 0, 0, 0, 0, 0, 0, 1}));

    // x^6 + x^3 + 1 is the 9th cyclotomic polynomial (irreducible)
    Factorization g = factor_q(Poly({1, 0, 0, 1, 0, 0, 1}));
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].second == 1);
}
