#include "ctcong/series.hpp"

#include <algorithm>
#include <cassert>

namespace ctcong {

CFiniteSeq make_cfinite(const LaurentPoly& P, const LaurentPoly& Q) {
    if (P == LaurentPoly::one())
        throw Error("denominator-zero", "P - 1 = 0: the generating function Q/(P-1) is undefined");
    if (Q.is_zero()) return CFiniteSeq{};

    LaurentPoly pm1 = P - LaurentPoly::one();
    auto [la, A] = laurent_split(pm1);
    auto [lq, B] = laurent_split(Q);

    Poly g = poly_gcd(A, B);
    Poly An = poly_divrem(A, g).first;
    Poly Bn = poly_divrem(B, g).first;

    // denominator: primitive integer with positive constant term
    Poly D = An.primitive_part();
    Rat scale = An.content(); // An = scale * D so far (lc(D) > 0)
    if (D.coeff(0) < 0) {
        D = -D;
        scale = -scale;
    }
    Poly N = (Rat(1) / scale) * Bn;

    CFiniteSeq S;
    S.shift = lq - la;
    S.numer = N;
    S.denom = D;
    return S;
}

std::vector<Rat> series_coeffs(const CFiniteSeq& S, long k_max) {
    assert(k_max >= S.shift);
    std::size_t count = static_cast<std::size_t>(k_max - S.shift) + 1;
    std::vector<Rat> out(count, Rat(0));
    if (S.is_zero()) return out;
    const Poly& N = S.numer;
    const Poly& D = S.denom;
    int q = D.deg();
    Rat d0inv = Rat(1) / D.coeff(0);
    // sum_i D_i * S_{k-i} = N_{k-shift}
    for (std::size_t idx = 0; idx < count; ++idx) {
        Rat acc = N.coeff(static_cast<int>(idx));
        for (int i = 1; i <= q && static_cast<std::size_t>(i) <= idx; ++i)
            acc -= D.coeff(i) * out[idx - static_cast<std::size_t>(i)];
        out[idx] = acc * d0inv;
    }
    return out;
}

Rat series_term(const CFiniteSeq& S, long k) {
    if (S.is_zero() || k < S.shift) return Rat(0);
    return series_coeffs(S, k).back();
}

Rat cfinite_term(const CFiniteSeq& S, long k) {
    if (S.is_zero()) return Rat(0);
    if (k >= S.shift) return series_coeffs(S, k).back();
    if (!S.proper())
        throw Error("improper-fraction",
                    "two-sided value at k = " + std::to_string(k) +
                        " requires deg numerator < deg denominator");
    int q = S.denom.deg();
    // seed with the top q series values, then run the homogeneous recurrence
    // backwards; properness makes the closed form valid there
    std::vector<Rat> win = series_coeffs(S, S.shift + q - 1); // S_shift..S_{shift+q-1}
    Rat dq_inv = Rat(1) / S.denom.coeff(q);
    for (long j = S.shift - 1; j >= k; --j) {
        // win holds C(j+1)..C(j+q); sum_{i=0}^{q} D_i * C(j+q-i) = 0
        Rat acc(0);
        for (int i = 0; i < q; ++i)
            acc += S.denom.coeff(i) * win[static_cast<std::size_t>(q - 1 - i)];
        Rat next = -acc * dq_inv;
        // slide the window down: win holds C(j)..C(j+q-1) afterwards
        for (std::size_t t = win.size() - 1; t > 0; --t) win[t] = win[t - 1];
        win[0] = next;
    }
    return win[0];
}

PartialFractionDecomp partial_fractions(const CFiniteSeq& S, int degree_cap) {
    PartialFractionDecomp out;
    if (S.is_zero()) return out;

    // assemble numerator A and denominator x^v * (factors of D)
    Poly A = S.numer;
    int v = 0;
    if (S.shift >= 0) {
        A = A * Poly::monomial(static_cast<int>(S.shift), 1);
    } else {
        v = static_cast<int>(-S.shift);
    }
    Factorization fact = factor_q(S.denom, degree_cap);
    A = (Rat(1) / fact.unit) * A;

    // full denominator B = x^v * prod q_i^{l_i}
    std::vector<std::pair<Poly, int>> dens;
    if (v > 0) dens.emplace_back(Poly::x(), v);
    for (const auto& [qi, li] : fact.factors) dens.emplace_back(qi, li);

    Poly B = Poly::one();
    for (const auto& [qi, li] : dens) B = B * poly_pow(qi, static_cast<unsigned long>(li));

    auto [G, Rm] = poly_divrem(A, B);
    out.poly_part = poly_to_laurent(G);

    for (const auto& [qi, li] : dens) {
        Poly F = poly_pow(qi, static_cast<unsigned long>(li));
        Poly Bi = poly_divrem(B, F).first;
        // A_i = Rm * Bi^{-1} mod F
        ExtGcd eg = poly_ext_gcd(Bi, F);
        assert(eg.g == Poly::one());
        Poly Ai = poly_divrem(Rm * eg.s, F).second;
        if (Ai.is_zero()) continue;
        if (qi == Poly::x()) {
            // contributes c_s x^{s-v} to the Laurent part
            for (int s = 0; s <= Ai.deg(); ++s)
                if (Ai.coeff(s) != 0)
                    out.poly_part += LaurentPoly::monomial(s - v, Ai.coeff(s));
            continue;
        }
        // q-adic digits: A_i = sum_s h_s q^s, deg h_s < deg q
        Poly rest = Ai;
        for (int s = 0; s < li && !rest.is_zero(); ++s) {
            auto [quot, h] = poly_divrem(rest, qi);
            if (!h.is_zero())
                out.terms.push_back(PFTerm{h, qi, li - s});
            rest = quot;
        }
    }
    return out;
}

Rat QuasiPolynomial::value(const Int& k) const {
    Int u = mod_floor(k, Int(period));
    return table[u.get_ui()].eval(Rat(k));
}

namespace {

// Lagrange interpolation through (x_i, y_i), x_i distinct
Poly interpolate(const std::vector<long>& xs, const std::vector<Rat>& ys) {
    Poly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly basis = Poly::one();
        Rat denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            basis = basis * Poly({Rat(-xs[j]), Rat(1)});
            denom *= Rat(xs[i] - xs[j]);
        }
        acc += (ys[i] / denom) * basis;
    }
    return acc;
}

} // namespace

QuasiPolynomial quasipoly_fit(const CFiniteSeq& S, long L_max, int d, int degree_cap) {
    assert(L_max >= 1 && d >= 0);
    long k0 = std::max(S.shift, 0L);
    long degN = S.numer.is_zero() ? 0 : S.numer.deg();

    Factorization fact = factor_q(S.denom, degree_cap);

    for (long L = 1; L <= L_max; ++L) {
        // necessary condition: every root of D is an L-th root of unity with
        // multiplicity <= d+1, i.e. each irreducible factor divides x^L - 1
        bool feasible = true;
        Poly xL1 = Poly::monomial(static_cast<int>(L), 1) - Poly::one();
        for (const auto& [qi, li] : fact.factors) {
            if (li > d + 1 || !poly_divrem(xL1, qi).second.is_zero()) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;

        long M = S.denom.deg() + L * (d + 1);
        long hi = std::max({k0 + (d + 1) * L - 1, k0 + M - 1,
                            S.shift + degN + L * (d + 1)});
        std::vector<Rat> coeffs = series_coeffs(S, hi); // S_shift..S_hi
        auto at = [&](long k) { return coeffs[static_cast<std::size_t>(k - S.shift)]; };

        // interpolate one polynomial per residue class from the first d+1
        // points of the class at or above k0
        std::vector<Poly> table(static_cast<std::size_t>(L));
        for (long u = 0; u < L; ++u) {
            std::vector<long> xs;
            std::vector<Rat> ys;
            long k = k0 + ((u - k0) % L + L) % L;
            for (int t = 0; t <= d; ++t, k += L) {
                xs.push_back(k);
                ys.push_back(at(k));
            }
            table[static_cast<std::size_t>(u)] = interpolate(xs, ys);
        }

        // verify on the whole window [k0, hi]; agreement there forces
        // identity for all k >= k0 via the common order-M recurrence
        bool match = true;
        for (long k = k0; k <= hi && match; ++k) {
            const Poly& f = table[static_cast<std::size_t>(((k % L) + L) % L)];
            if (f.eval(Rat(k)) != at(k)) match = false;
        }
        if (!match) continue;

        QuasiPolynomial qp;
        qp.period = L;
        qp.table = std::move(table);
        qp.degree = 0;
        for (const auto& f : qp.table)
            qp.degree = std::max(qp.degree, std::max(f.deg(), 0));
        return qp;
    }
    throw Error("no-fit",
                "no quasi-polynomial of degree <= " + std::to_string(d) +
                    " and period <= " + std::to_string(L_max) +
                    " matches this sequence (try increasing d or L_max)");
}

} // namespace ctcong
