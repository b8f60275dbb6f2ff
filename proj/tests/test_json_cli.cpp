#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ctcong/expr.hpp"
#include "ctcong/json_io.hpp"

using namespace ctcong;

TEST_CASE("theo-g JSON round trip") {
    TheoremG T = theo_g(parse_laurent("1/x+2+x"), parse_laurent("1"), 1);
    Json j = to_json(T);
    CHECK(j["schema"] == 1);
    CHECK(j["kind"] == "theo-g");
    CHECK(j["input"]["P"] == "x^-1 + 2 + x");
    CHECK(j["input"]["r"] == 1);
    CHECK(j["theorem"]["m"] == 1);
    CHECK(j["theorem"]["n"] == -1);
    CHECK(j["theorem"]["weights"].size() == 2);
    CHECK(j["theorem"]["series"]["shift"] == 1);

    TheoremVariant back = theorem_from_json(j);
    const TheoremG* rt = std::get_if<TheoremG>(&back);
    REQUIRE(rt != nullptr);
    CHECK(rt->P == T.P);
    CHECK(rt->weights == T.weights);
    CHECK(rt->S == T.S);
}

TEST_CASE("theo-qp JSON round trip preserves the case table") {
    CaseSplitTheorem C = theo_qp(parse_laurent("1/x+2+x"), parse_laurent("1"), 2, 0, 60);
    Json j = to_json(C);
    CHECK(j["kind"] == "theo-qp");
    REQUIRE(j["cases"].size() == 2);
    CHECK(j["cases"][0]["modulus"] == "3");

    TheoremVariant back = theorem_from_json(j);
    const CaseSplitTheorem* rt = std::get_if<CaseSplitTheorem>(&back);
    REQUIRE(rt != nullptr);
    CHECK(rt->table == C.table);
    CHECK(rt->modulus == C.modulus);

    // a corrupted table must be rejected on load
    Json bad = j;
    bad["cases"][0]["value"] = "123";
    CHECK_THROWS_AS(theorem_from_json(bad), Error);
}

TEST_CASE("quad JSON round trip") {
    QuadraticTheorem T = quadratic_theorem(parse_laurent("1/x+2+x"), parse_laurent("1"), 2);
    Json j = to_json(T);
    CHECK(j["quad"]["delta"] == "-3");
    CHECK(j["quad"]["value_sq"] == "3");
    CHECK(j["quad"]["value_nonsq"] == "-3");
    TheoremVariant back = theorem_from_json(j);
    const QuadraticTheorem* rt = std::get_if<QuadraticTheorem>(&back);
    REQUIRE(rt != nullptr);
    CHECK(rt->value_sq == T.value_sq);
    CHECK(rt->value_nonsq == T.value_nonsq);
}

TEST_CASE("finite JSON round trip") {
    ResidueSetReport R = residue_set(parse_laurent("(x^3-2x+1)/x"), parse_laurent("1"), 2);
    Json j = to_json(R);
    CHECK(j["kind"] == "finite");
    CHECK(j["residue_set"]["exact"] == true);
    REQUIRE(j["residue_set"]["values"].size() == 2);
    CHECK(j["residue_set"]["values"][0] == "-1");
    CHECK(j["residue_set"]["values"][1] == "2");

    TheoremVariant back = theorem_from_json(j);
    const ResidueSetReport* rt = std::get_if<ResidueSetReport>(&back);
    REQUIRE(rt != nullptr);
    CHECK(rt->values == R.values);
}

TEST_CASE("verification JSON carries rows and summary") {
    CaseSplitTheorem C = theo_qp(parse_laurent("1/x+2+x"), parse_laurent("1"), 2, 0, 60);
    VerificationReport rep = verify_range(TheoremVariant(C), 5, 40);
    Json j = to_json(C);
    attach_verification(j, rep);
    CHECK(j.contains("verification"));
    CHECK(j["verification_summary"]["mismatched"] == 0);
    bool saw_match = false;
    for (const Json& row : j["verification"])
        if (row.contains("match") && row["match"] == true) saw_match = true;
    CHECK(saw_match);
}

TEST_CASE("loaded theorems re-verify") {
    CaseSplitTheorem C = theo_qp(parse_laurent("1/x+2+x"), parse_laurent("1"), 2, 0, 60);
    std::string text = to_json(C).dump();
    TheoremVariant back = theorem_from_json(Json::parse(text));
    VerificationReport rep = verify_range(back, 5, 80);
    CHECK(rep.all_match());
}

TEST_CASE("text rendering mentions the substance") {
    CaseSplitTheorem C = theo_qp(parse_laurent("1/x+2+x"), parse_laurent("1"), 2, 0, 60);
    std::string text = describe(C);
    CHECK(text.find("mod 3") != std::string::npos);
    CHECK(text.find("3") != std::string::npos);
    CHECK(text.find("-3") != std::string::npos);

    ResidueSetReport R = residue_set(parse_laurent("-2*x^2+1+1/x"), parse_laurent("1"), 1);
    std::string nt = describe(R);
    CHECK(nt.find("NOT SIMPLE") != std::string::npos);
}
