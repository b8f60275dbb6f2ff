#include "ctcong/theorems.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace ctcong {

std::vector<Int> prime_divisors(const Int& n) {
    std::vector<Int> out;
    Int v = abs(n);
    if (v <= 1) return out;
    for (Int p = 2; p * p <= v && p < 100000; p = (p == 2 ? Int(3) : p + 2)) {
        if (v % p == 0) {
            out.push_back(p);
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) {
        if (is_prime(v)) {
            out.push_back(v);
        } else {
            // Pollard rho for the rare large composite cofactor
            std::vector<Int> stack = {v};
            while (!stack.empty()) {
                Int c = stack.back();
                stack.pop_back();
                if (c == 1) continue;
                if (is_prime(c)) {
                    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
                    continue;
                }
                Int x = 2, y = 2, d = 1, add = 1;
                while (d == 1 || d == c) {
                    auto f = [&](const Int& t) { return mod_floor(t * t + add, c); };
                    x = f(x);
                    y = f(f(y));
                    d = gcd(abs(x - y), c);
                    if (d == c) { ++add; x = 2; y = 2; d = 1; }
                }
                stack.push_back(d);
                stack.push_back(c / d);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// primes dividing denom(0) or any coefficient denominator of numer
std::set<Int> series_excluded_primes(const CFiniteSeq& S) {
    std::set<Int> out;
    for (const Int& p : prime_divisors(Int(S.denom.coeff(0).get_num())))
        out.insert(p);
    for (const Rat& c : S.numer.coeffs())
        for (const Int& p : prime_divisors(Int(c.get_den())))
            out.insert(p);
    return out;
}

} // namespace

std::optional<std::string> TheoremG::inadmissible_reason(const Int& p) const {
    if (!is_prime(p)) return "not prime";
    if (p <= n) return "p <= n = " + std::to_string(n);
    if (excluded.count(p)) return "excluded prime (divides a unit of the series)";
    return std::nullopt;
}

TheoremG theo_g(const LaurentPoly& P, const LaurentPoly& Q, long r) {
    if (r < 1)
        throw Error("usage", "r must be a positive integer");
    if (!P.has_integer_coeffs() || !Q.has_integer_coeffs())
        throw Error("non-integer-coefficients",
                    "Theorem-1 entry points require integer coefficients in P and Q");

    TheoremG T;
    T.P = P;
    T.Q = Q;
    T.r = r;
    T.S = make_cfinite(P, Q); // throws if P = 1
    T.n = T.S.n();
    T.m_raw = P.is_zero() ? 0 : -P.lowest_degree();
    T.m = std::max(T.m_raw, 0L);
    T.m_clamped = T.m_raw < 0;

    LaurentPoly PR = lp_pow(P, static_cast<unsigned long>(r)) - LaurentPoly::one();
    long rm = r * T.m;
    T.weights.reserve(static_cast<std::size_t>(rm) + 1);
    for (long j = 0; j <= rm; ++j) {
        Rat c = PR.coeff(-rm + j);
        assert(c.get_den() == 1);
        T.weights.push_back(Int(c.get_num()));
    }
    T.excluded = series_excluded_primes(T.S);
    return T;
}

Rat evaluate_theorem(const TheoremG& T, const Int& p) {
    if (auto why = T.inadmissible_reason(p))
        throw Error("inadmissible-prime", "p = " + p.get_str() + ": " + *why);
    long rm = T.r * T.m;
    if (!p.fits_slong_p())
        throw Error("bad-prime", "p = " + p.get_str() + " is out of evaluation range");
    long pl = p.get_si();
    Rat acc(0);
    for (long j = 0; j <= rm; ++j) {
        const Int& w = T.weights[static_cast<std::size_t>(j)];
        if (w == 0) continue;
        acc += Rat(w) * series_term(T.S, (rm - j) * pl);
    }
    return acc;
}

std::optional<std::string> CaseSplitTheorem::inadmissible_reason(const Int& p) const {
    if (!is_prime(p)) return "not prime";
    if (p <= base.n) return "p <= n = " + std::to_string(base.n);
    if (p < min_p) return "p below the quasi-polynomial domain (p < " + std::to_string(min_p) + ")";
    if (gcd(p, modulus) != 1) return "p divides the case modulus";
    if (excluded.count(p)) return "excluded prime";
    return std::nullopt;
}

CaseSplitTheorem theo_qp(const LaurentPoly& P, const LaurentPoly& Q, long r,
                         int d, long L_max, int degree_cap) {
    CaseSplitTheorem C;
    C.base = theo_g(P, Q, r);
    C.qp = quasipoly_fit(C.base.S, L_max, d, degree_cap);
    long L = C.qp.period;
    C.modulus = L;
    C.excluded = C.base.excluded;
    C.min_p = std::max(2L, std::max(C.base.S.shift, 0L));

    // table coefficient denominators must stay invertible mod p
    for (const Poly& f : C.qp.table)
        for (const Rat& c : f.coeffs())
            for (const Int& q : prime_divisors(Int(c.get_den())))
                C.excluded.insert(q);
    for (const Int& q : prime_divisors(C.modulus))
        C.excluded.insert(q);

    long rm = C.base.r * C.base.m;
    Rat S0 = series_term(C.base.S, 0);
    for (long u = 0; u < L; ++u) {
        if (std::gcd(u, L) != 1) continue; // classes sharing a factor with L hold no admissible prime
        Rat acc(0);
        for (long j = 0; j <= rm; ++j) {
            const Int& w = C.base.weights[static_cast<std::size_t>(j)];
            if (w == 0) continue;
            long nj = rm - j;
            if (nj == 0) {
                acc += Rat(w) * S0;
            } else {
                // f_{(nj*u) mod L}(nj*p) = constant term mod p, since nj*p = 0 (mod p)
                const Poly& f = C.qp.table[static_cast<std::size_t>((nj * u) % L)];
                acc += Rat(w) * f.coeff(0);
            }
        }
        C.table[Int(u)] = acc;
    }
    return C;
}

Rat evaluate_theorem(const CaseSplitTheorem& T, const Int& p) {
    if (auto why = T.inadmissible_reason(p))
        throw Error("inadmissible-prime", "p = " + p.get_str() + ": " + *why);
    Int u = mod_floor(p, T.modulus);
    auto it = T.table.find(u);
    assert(it != T.table.end());
    return it->second;
}

} // namespace ctcong
