#include "ctcong/laurent.hpp"

#include <cassert>

namespace ctcong {

LaurentPoly LaurentPoly::monomial(long exp, const Rat& coeff) {
    LaurentPoly f;
    if (coeff != 0) {
        Rat c = coeff;
        c.canonicalize(); // raw two-argument mpq_class values may arrive unreduced
        f.terms_[exp] = c;
    }
    return f;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

long LaurentPoly::lowest_degree() const {
    assert(!terms_.empty());
    return terms_.begin()->first;
}

long LaurentPoly::highest_degree() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

Rat LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool LaurentPoly::has_integer_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

void LaurentPoly::set_coeff(long exp, const Rat& c) {
    if (c == 0) {
        terms_.erase(exp);
    } else {
        Rat v = c;
        v.canonicalize();
        terms_[exp] = v;
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
    for (const auto& [e, c] : g.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
    for (const auto& [e, c] : g.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly r;
    for (const auto& [ef, cf] : f.terms_)
        for (const auto& [eg, cg] : g.terms_) {
            long e = ef + eg;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                Rat c = cf * cg;
                if (c != 0) r.terms_[e] = c;
            } else {
                it->second += cf * cg;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

LaurentPoly lp_pow(const LaurentPoly& f, unsigned long e) {
    LaurentPoly acc = LaurentPoly::one();
    LaurentPoly base = f;
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return acc;
}

Rat constant_term(const LaurentPoly& f) { return f.coeff(0); }

LaurentPoly substitute_xp(const LaurentPoly& f, long p) {
    assert(p >= 1);
    LaurentPoly r;
    for (const auto& [e, c] : f.terms())
        r.set_coeff(e * p, c);
    return r;
}

std::optional<LaurentPoly> laurent_divide(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) return std::nullopt;
    if (f.is_zero()) return LaurentPoly::zero();
    if (g.is_monomial()) {
        long eg = g.lowest_degree();
        Rat cg = g.coeff(eg);
        LaurentPoly r;
        for (const auto& [e, c] : f.terms())
            r.set_coeff(e - eg, c / cg);
        return r;
    }
    // long division on the polynomial parts; x powers shift through exactly
    long lf = f.lowest_degree(), lg = g.lowest_degree();
    long hf = f.highest_degree(), hg = g.highest_degree();
    if (hf - lf < hg - lg) return std::nullopt;
    // rem starts as f shifted to lowest degree 0; divisor likewise
    std::map<long, Rat> rem;
    for (const auto& [e, c] : f.terms()) rem[e - lf] = c;
    std::map<long, Rat> div;
    for (const auto& [e, c] : g.terms()) div[e - lg] = c;
    long degDiv = hg - lg;
    Rat lead = div.rbegin()->second;
    LaurentPoly quot;
    while (!rem.empty() && rem.rbegin()->first >= degDiv) {
        long e = rem.rbegin()->first;
        Rat c = rem.rbegin()->second / lead;
        quot.set_coeff(e - degDiv + lf - lg, c);
        for (const auto& [ed, cd] : div) {
            long k = e - degDiv + ed;
            auto it = rem.find(k);
            Rat nv = (it == rem.end() ? Rat(0) : it->second) - c * cd;
            if (nv == 0) {
                if (it != rem.end()) rem.erase(it);
            } else {
                rem[k] = nv;
            }
        }
    }
    if (!rem.empty()) return std::nullopt;
    return quot;
}

} // namespace ctcong
