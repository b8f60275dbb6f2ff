#include "ctcong/json_io.hpp"

#include <sstream>

#include "ctcong/expr.hpp"

namespace ctcong {

namespace {

Json rat_json(const Rat& q) { return q.get_str(); }
Json int_json(const Int& n) { return n.get_str(); }

Rat rat_from(const Json& j) {
    Rat q(j.get<std::string>());
    q.canonicalize();
    return q;
}

Json excluded_json(const std::set<Int>& e) {
    Json a = Json::array();
    for (const Int& p : e) a.push_back(int_json(p));
    return a;
}

Json series_json(const CFiniteSeq& S) {
    return Json{{"shift", S.shift},
                {"numer", S.numer.str()},
                {"denom", S.denom.str()}};
}

Json base_json(const TheoremG& T) {
    Json w = Json::array();
    for (const Int& x : T.weights) w.push_back(int_json(x));
    Json j{{"m", T.m},
           {"n", T.n},
           {"weights", w},
           {"series", series_json(T.S)},
           {"excluded", excluded_json(T.excluded)}};
    if (T.m_clamped) j["m_clamped"] = true;
    return j;
}

Json input_json(const TheoremG& T) {
    return Json{{"P", pretty_print(T.P)}, {"Q", pretty_print(T.Q)}, {"r", T.r}};
}

std::string weights_sum_text(const TheoremG& T) {
    std::ostringstream os;
    long rm = T.r * T.m;
    bool first = true;
    for (long j = 0; j <= rm; ++j) {
        const Int& w = T.weights[static_cast<std::size_t>(j)];
        if (w == 0) continue;
        Int aw = abs(w);
        if (first) {
            if (w < 0) os << "-";
            first = false;
        } else {
            os << (w < 0 ? " - " : " + ");
        }
        if (aw != 1) os << aw.get_str() << "*";
        os << "S(" << (rm - j) << "p)";
    }
    if (first) os << "0";
    return os.str();
}

std::string excluded_text(const std::set<Int>& e) {
    if (e.empty()) return "none";
    std::ostringstream os;
    bool first = true;
    for (const Int& p : e) {
        if (!first) os << ", ";
        os << p.get_str();
        first = false;
    }
    return os.str();
}

} // namespace

Json to_json(const TheoremG& T) {
    return Json{{"schema", 1},
                {"kind", "theo-g"},
                {"input", input_json(T)},
                {"theorem", base_json(T)}};
}

Json to_json(const CaseSplitTheorem& T) {
    Json cases = Json::array();
    for (const auto& [u, v] : T.table)
        cases.push_back(Json{{"modulus", int_json(T.modulus)},
                             {"class", int_json(u)},
                             {"value", rat_json(v)}});
    Json j{{"schema", 1},
           {"kind", "theo-qp"},
           {"input", input_json(T.base)},
           {"theorem", base_json(T.base)},
           {"cases", cases}};
    j["params"] = Json{{"d", T.qp.degree}, {"lmax", T.qp.period}, {"min_p", T.min_p}};
    j["theorem"]["excluded"] = excluded_json(T.excluded);
    return j;
}

Json to_json(const QuadraticTheorem& T) {
    Json j{{"schema", 1},
           {"kind", "quad"},
           {"input", input_json(T.base)},
           {"theorem", base_json(T.base)}};
    j["quad"] = Json{{"u", rat_json(T.u)},       {"v", rat_json(T.v)},
                     {"a", int_json(T.a)},       {"b", int_json(T.b)},
                     {"c", int_json(T.c)},       {"delta", int_json(T.delta)},
                     {"value_sq", rat_json(T.value_sq)},
                     {"value_nonsq", rat_json(T.value_nonsq)}};
    j["theorem"]["excluded"] = excluded_json(T.excluded);
    return j;
}

Json to_json(const ResidueSetReport& R) {
    Json j{{"schema", 1},
           {"kind", "finite"},
           {"input", input_json(R.base)},
           {"theorem", base_json(R.base)}};
    Json vals = Json::array();
    for (const Rat& v : R.values) vals.push_back(rat_json(v));
    Json rs{{"values", vals}, {"exact", R.exact}, {"excluded", excluded_json(R.excluded)}};
    if (R.not_simple) {
        rs["not_simple"] = true;
        rs["offending"] = R.offending;
        rs["detail"] = R.detail;
    }
    Json fs = Json::array();
    for (const FactorAnalysis& fa : R.factors) {
        Json autoj = Json::array();
        for (std::size_t a = 0; a < fa.autos.size(); ++a) {
            Json per = Json::array();
            for (const Rat& v : fa.r0[a]) per.push_back(rat_json(v));
            autoj.push_back(Json{{"alpha_image", fa.field.to_poly(fa.autos[a].alpha_image).str()},
                                 {"r0", per}});
        }
        fs.push_back(Json{{"factor", fa.q.str()},
                          {"multiplicity", fa.mult},
                          {"reciprocal", fa.field.modulus().str()},
                          {"abelian", fa.abelian},
                          {"automorphisms", autoj}});
    }
    rs["factors"] = fs;
    j["residue_set"] = rs;
    return j;
}

Json to_json(const VerificationReport& R) {
    Json rows = Json::array();
    for (const VerifyRow& row : R.rows) {
        Json r{{"p", int_json(row.p)}};
        if (!row.skip.empty()) {
            r["skip"] = row.skip;
        } else {
            r["brute"] = int_json(row.brute);
            if (row.predicted) r["predicted"] = rat_json(*row.predicted);
            if (row.predicted_rep) r["predicted_rep"] = int_json(*row.predicted_rep);
            r["match"] = row.match && row.in_set;
        }
        rows.push_back(std::move(r));
    }
    return Json{{"kind", R.kind},
                {"input", Json{{"P", R.input_p}, {"Q", R.input_q}, {"r", R.r}}},
                {"rows", rows},
                {"summary", Json{{"checked", R.checked},
                                 {"matched", R.matched},
                                 {"mismatched", R.mismatched},
                                 {"skipped", R.skipped}}}};
}

Json to_json(const TheoremVariant& T) {
    return std::visit([](const auto& t) { return to_json(t); }, T);
}

void attach_verification(Json& j, const VerificationReport& R) {
    j["verification"] = to_json(R)["rows"];
    j["verification_summary"] = to_json(R)["summary"];
}

TheoremVariant theorem_from_json(const Json& j) {
    if (!j.contains("schema") || j["schema"].get<int>() != 1)
        throw Error("usage", "unsupported or missing schema version");
    std::string kind = j.at("kind").get<std::string>();
    LaurentPoly P = parse_laurent(j.at("input").at("P").get<std::string>());
    LaurentPoly Q = parse_laurent(j.at("input").at("Q").get<std::string>());
    long r = j.at("input").at("r").get<long>();

    if (kind == "theo-g") {
        TheoremG T = theo_g(P, Q, r);
        if (j.contains("theorem")) {
            if (T.m != j["theorem"].at("m").get<long>() ||
                T.n != j["theorem"].at("n").get<long>())
                throw Error("usage", "stored theorem fields disagree with the rebuilt object");
        }
        return T;
    }
    if (kind == "theo-qp") {
        int d = j.value("params", Json::object()).value("d", 0);
        long lmax = j.value("params", Json::object()).value("lmax", 60L);
        CaseSplitTheorem T = theo_qp(P, Q, r, d, std::max(lmax, 1L));
        if (j.contains("cases"))
            for (const Json& c : j["cases"]) {
                Int u(c.at("class").get<std::string>());
                Rat v = rat_from(c.at("value"));
                auto it = T.table.find(u);
                if (it == T.table.end() || it->second != v)
                    throw Error("usage", "stored case table disagrees with the rebuilt object");
            }
        return T;
    }
    if (kind == "quad") {
        QuadraticTheorem T = quadratic_theorem(P, Q, r);
        if (j.contains("quad")) {
            if (T.value_sq != rat_from(j["quad"].at("value_sq")) ||
                T.value_nonsq != rat_from(j["quad"].at("value_nonsq")))
                throw Error("usage", "stored branch values disagree with the rebuilt object");
        }
        return T;
    }
    if (kind == "finite") {
        ResidueSetReport R = residue_set(P, Q, r);
        if (j.contains("residue_set") && j["residue_set"].contains("values")) {
            std::vector<Rat> vals;
            for (const Json& v : j["residue_set"]["values"]) vals.push_back(rat_from(v));
            if (vals != R.values)
                throw Error("usage", "stored residue set disagrees with the rebuilt object");
        }
        return R;
    }
    throw Error("usage", "unknown theorem kind '" + kind + "'");
}

// ----------------------------------------------------------------- text

std::string describe(const TheoremG& T) {
    std::ostringstream os;
    os << "Let a_k = CT( P(x)^k Q(x) ) with\n"
       << "  P = " << pretty_print(T.P) << "\n"
       << "  Q = " << pretty_print(T.Q) << "\n"
       << "and let S_k be the coefficient of x^k in Q/(P-1) = "
       << "x^" << T.S.shift << " * (" << T.S.numer.str() << ") / (" << T.S.denom.str() << ").\n"
       << "Then for every prime p > " << T.n;
    if (!T.excluded.empty()) os << " with p not in {" << excluded_text(T.excluded) << "}";
    os << ":\n"
       << "  sum_{k=0}^{" << T.r << "p-1} a_k  =  " << weights_sum_text(T) << "   (mod p)\n";
    if (T.m_clamped)
        os << "  [lowest degree of P is positive; m was clamped to 0]\n";
    return os.str();
}

std::string describe(const CaseSplitTheorem& T) {
    std::ostringstream os;
    os << "Let a_k = CT( P(x)^k Q(x) ) with\n"
       << "  P = " << pretty_print(T.base.P) << "\n"
       << "  Q = " << pretty_print(T.base.Q) << "\n"
       << "Then for every prime p";
    std::ostringstream conds;
    bool any = false;
    if (T.base.n >= 1 || T.min_p > 2) {
        conds << "p >= " << std::max(T.base.n + 1, T.min_p);
        any = true;
    }
    if (!T.excluded.empty()) {
        if (any) conds << ", ";
        conds << "p not in {" << excluded_text(T.excluded) << "}";
        any = true;
    }
    if (any) os << " (" << conds.str() << ")";
    os << ":\n";
    for (const auto& [u, v] : T.table)
        os << "  sum_{k=0}^{" << T.base.r << "p-1} a_k  =  " << v.get_str()
           << "   (mod p)   if p = " << u.get_str() << " (mod " << T.modulus.get_str() << ")\n";
    return os.str();
}

std::string describe(const QuadraticTheorem& T) {
    std::ostringstream os;
    os << "Let a_k = CT( P(x)^k Q(x) ) with\n"
       << "  P = " << pretty_print(T.base.P) << "\n"
       << "  Q = " << pretty_print(T.base.Q) << "\n"
       << "The fraction part of Q/(P-1) is (" << T.v.get_str();
    if (T.u != 0) os << (T.u > 0 ? " + " : " - ") << Rat(abs(T.u)).get_str() << "*x";
    os << ") / (" << T.a.get_str() << " + " << T.b.get_str() << "*x + " << T.c.get_str()
       << "*x^2), Delta = " << T.delta.get_str() << ".\n"
       << "Then for every prime p > " << T.base.n << " with p not in {"
       << excluded_text(T.excluded) << "}:\n"
       << "  sum_{k=0}^{" << T.base.r << "p-1} a_k  =  " << T.value_sq.get_str()
       << "   (mod p)   if Delta is a square mod p,\n"
       << "  sum_{k=0}^{" << T.base.r << "p-1} a_k  =  " << T.value_nonsq.get_str()
       << "   (mod p)   otherwise.\n";
    return os.str();
}

std::string describe(const ResidueSetReport& R) {
    std::ostringstream os;
    os << "Let a_k = CT( P(x)^k Q(x) ) with\n"
       << "  P = " << pretty_print(R.base.P) << "\n"
       << "  Q = " << pretty_print(R.base.Q) << "\n";
    if (R.not_simple) {
        os << "NOT SIMPLE: " << R.detail << "\n"
           << "No finite residue set is asserted for this input.\n";
        return os.str();
    }
    os << "Every irreducible non-x factor of the denominator is simple.\n"
       << "For every prime p > " << R.base.n << " with p not in {" << excluded_text(R.excluded)
       << "}:\n  sum_{k=0}^{" << R.base.r << "p-1} a_k mod p lies in  { ";
    for (std::size_t i = 0; i < R.values.size(); ++i)
        os << (i ? ", " : "") << R.values[i].get_str();
    os << " }" << (R.exact ? "" : "   (superset; see factors)") << "\n";
    for (const FactorAnalysis& fa : R.factors) {
        os << "  factor " << fa.q.str() << " (multiplicity " << fa.mult << ", reciprocal "
           << fa.field.modulus().str() << ", " << (fa.abelian ? "abelian" : "nonabelian")
           << " group of order " << fa.autos.size() << ")\n";
    }
    return os.str();
}

std::string describe(const VerificationReport& R, bool rows) {
    std::ostringstream os;
    os << "verify " << R.kind << "  P = " << R.input_p << "  Q = " << R.input_q
       << "  r = " << R.r << "\n";
    if (rows) {
        for (const VerifyRow& row : R.rows) {
            os << "  p = " << row.p.get_str() << ": ";
            if (!row.skip.empty()) {
                os << "skip (" << row.skip << ")\n";
                continue;
            }
            os << "brute = " << row.brute.get_str();
            if (row.predicted)
                os << ", predicted = " << row.predicted->get_str() << " (rep "
                   << row.predicted_rep->get_str() << ")";
            os << (row.match && row.in_set ? "  ok" : "  MISMATCH") << "\n";
        }
    }
    os << "summary: " << R.checked << " checked, " << R.matched << " matched, "
       << R.mismatched << " mismatched, " << R.skipped << " skipped\n";
    return os.str();
}

} // namespace ctcong
