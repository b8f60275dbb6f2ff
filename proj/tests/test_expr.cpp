#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <random>

#include "ctcong/expr.hpp"

using namespace ctcong;

namespace {
LaurentPoly term(long e, const Rat& c) { return LaurentPoly::monomial(e, c); }
}

TEST_CASE("classic inputs") {
    CHECK(parse_laurent("1/x+2+x") == term(-1, 1) + term(0, 2) + term(1, 1));
    CHECK(parse_laurent("(x^3-2x+1)/x") == term(2, 1) + term(0, -2) + term(-1, 1));
    CHECK(parse_laurent("-2*x^2+1+1/x") == term(2, -2) + term(0, 1) + term(-1, 1));
    CHECK(parse_laurent("x") == term(1, 1));
}

TEST_CASE("division restrictions") {
    CHECK_THROWS_AS(parse_laurent("1/(1+x)"), Error);
    try {
        parse_laurent("1/(1+x)");
    } catch (const Error& e) {
        CHECK(e.kind() == "inexact-division");
    }
    try {
        parse_laurent("1/(x-x)");
    } catch (const Error& e) {
        CHECK(e.kind() == "division-by-zero");
    }
    // exact non-monomial division is allowed
    CHECK(parse_laurent("(1-x^2)/(1-x)") == term(0, 1) + term(1, 1));
}

TEST_CASE("syntax errors carry a position") {
    try {
        parse_laurent("1 + * x");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == "syntax");
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_laurent("(1+x"), ParseError);
    CHECK_THROWS_AS(parse_laurent(""), ParseError);
    CHECK_THROWS_AS(parse_laurent("x^"), ParseError);
    CHECK_THROWS_AS(parse_laurent("x^y"), ParseError);
    CHECK_THROWS_AS(parse_laurent("y"), ParseError);
}

TEST_CASE("precedence and implicit multiplication") {
    // ^ > unary minus: -x^2 = -(x^2)
    CHECK(parse_laurent("-x^2") == term(2, -1));
    CHECK(parse_laurent("(-x)^2") == term(2, 1));
    // a/b*c = (a/b)*c
    CHECK(parse_laurent("8/2*x") == term(1, 4));
    CHECK(parse_laurent("8/2x") == term(1, 4));
    // implicit multiplication binds like *
    CHECK(parse_laurent("2x") == term(1, 2));
    CHECK(parse_laurent("2 x^2") == term(2, 2));
    CHECK(parse_laurent("(1+x)(1-x)") == term(0, 1) + term(2, -1));
    // juxtaposition never swallows a binary minus
    CHECK(parse_laurent("2-x") == term(0, 2) + term(1, -1));
    // exponent forms
    CHECK(parse_laurent("x^-1") == term(-1, 1));
    CHECK(parse_laurent("x^(-1)") == term(-1, 1));
    CHECK(parse_laurent("2^-2") == term(0, Rat(1, 4)));
    // unary minus against multiplication: -x*y style chain
    CHECK(parse_laurent("-x*2") == term(1, -2));
    CHECK(parse_laurent("- x + x") == LaurentPoly::zero());
}

TEST_CASE("pretty printing fixed forms") {
    CHECK(pretty_print(LaurentPoly::zero()) == "0");
    CHECK(pretty_print(term(-1, 1) + term(0, 2) + term(1, 1)) == "x^-1 + 2 + x");
    CHECK(pretty_print(term(2, -2) + term(0, 1) + term(-1, 1)) == "x^-1 + 1 - 2*x^2");
    CHECK(pretty_print(term(1, -1)) == "-x");
    CHECK(pretty_print(term(0, Rat(-1, 3)) + term(5, Rat(2, 7))) == "-1/3 + 2/7*x^5");
}

TEST_CASE("round trip on random values") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> exp(-6, 6);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly f;
        int nterms = static_cast<int>(rng() % 6);
        for (int t = 0; t < nterms; ++t)
            f += term(exp(rng), Rat(num(rng), den(rng)));
        CHECK(parse_laurent(pretty_print(f)) == f);
    }
}

TEST_CASE("reference evaluation order on random expressions") {
    // parse must agree with an explicit parenthesization of the same string
    CHECK(parse_laurent("1-2-3") == parse_laurent("(1-2)-3"));
    CHECK(parse_laurent("2*3/2") == parse_laurent("(2*3)/2"));
    CHECK(parse_laurent("x/x/x") == parse_laurent("(x/x)/x"));
    CHECK(parse_laurent("-2^2") == parse_laurent("-(2^2)"));
    CHECK(parse_laurent("2x^2") == parse_laurent("2*(x^2)"));
}

namespace {

// random expression trees rendered two ways: relying on the declared
// precedence, and fully parenthesized (the reference evaluation order)
struct Node {
    char op; // 'n' literal, 'x', '+','-','*','^','u' (unary minus)
    long value = 0;
    std::unique_ptr<Node> a, b;
};

std::unique_ptr<Node> random_tree(std::mt19937_64& rng, int depth) {
    auto node = std::make_unique<Node>();
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
    switch (pick(rng)) {
        case 0: node->op = 'n'; node->value = static_cast<long>(rng() % 7); break;
        case 1: node->op = 'x'; break;
        case 2:
        case 3:
            node->op = pick(rng) % 2 ? '+' : '-';
            node->a = random_tree(rng, depth - 1);
            node->b = random_tree(rng, depth - 1);
            break;
        case 4:
            node->op = '*';
            node->a = random_tree(rng, depth - 1);
            node->b = random_tree(rng, depth - 1);
            break;
        default:
            node->op = 'u';
            node->a = random_tree(rng, depth - 1);
            break;
    }
    return node;
}

// precedence levels: + - (0), * (1), unary minus (2), atoms (3)
void render(const Node& n, std::string& flat, std::string& paren, int parent_level) {
    int level = n.op == '+' || n.op == '-' ? 0 : n.op == '*' ? 1 : n.op == 'u' ? 2 : 3;
    bool need = level < parent_level;
    if (need) flat += '(';
    paren += '(';
    switch (n.op) {
        case 'n': flat += std::to_string(n.value); paren += std::to_string(n.value); break;
        case 'x': flat += 'x'; paren += 'x'; break;
        case 'u':
            flat += '-';
            paren += '-';
            render(*n.a, flat, paren, 2);
            break;
        default:
            // left associative: the right child needs strictly higher binding
            render(*n.a, flat, paren, level);
            flat += n.op;
            paren += n.op;
            render(*n.b, flat, paren, level + 1);
            break;
    }
    if (need) flat += ')';
    paren += ')';
}

} // namespace

TEST_CASE("random trees: flat rendering equals full parenthesization") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 150; ++trial) {
        auto tree = random_tree(rng, 4);
        std::string flat, paren;
        render(*tree, flat, paren, 0);
        CHECK(parse_laurent(flat) == parse_laurent(paren));
    }
}
