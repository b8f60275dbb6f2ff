#ifndef CTCONG_RAT_HPP
#define CTCONG_RAT_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

#include "ctcong/errors.hpp"

namespace ctcong {

using Int = mpz_class;
using Rat = mpq_class;

/// a mod m in [0, m), m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("bad-prime", "no inverse of " + a.get_str() + " modulo " + m.get_str());
    return r;
}

inline Int mod_pow(const Int& base, const Int& exp, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

/// True iff p divides the denominator of q (in lowest terms).
inline bool prime_divides_denominator(const Rat& q, const Int& p) {
    return mpz_divisible_p(q.get_den().get_mpz_t(), p.get_mpz_t()) != 0;
}

/// Residue of a rational a/b modulo p, in [0, p).  Defined only when p does
/// not divide b; callers gate on admissibility first.
inline Int rat_mod_p(const Rat& q, const Int& p) {
    if (prime_divides_denominator(q, p))
        throw Error("inadmissible-prime", "p = " + p.get_str() + " divides a denominator");
    Int num = mod_floor(q.get_num(), p);
    Int den = mod_floor(q.get_den(), p);
    return mod_floor(num * mod_inverse(den, p), p);
}

/// Symmetric representative in (-p/2, p/2] of a residue r in [0, p).
inline Int symmetric_rep(const Int& r, const Int& p) {
    if (2 * r > p) return r - p;
    return r;
}

/// Residue of a rational modulo p as a symmetric representative.
inline Int rat_rep_p(const Rat& q, const Int& p) {
    return symmetric_rep(rat_mod_p(q, p), p);
}

/// Rational reconstruction: find u/v with |u| <= bound_num, 0 < v <= bound_den,
/// gcd(v, m) = 1 and u = v*a (mod m).  Returns false if none exists.
/// Standard half-extended Euclid on (m, a).
inline bool rational_reconstruct(const Int& a, const Int& m,
                                 const Int& bound_num, const Int& bound_den,
                                 Rat& out) {
    Int r0 = m, r1 = mod_floor(a, m);
    Int t0 = 0, t1 = 1;
    while (r1 > bound_num) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (t1 == 0) return false;
    Int u = r1, v = t1;
    if (v < 0) { u = -u; v = -v; }
    if (v > bound_den) return false;
    if (gcd(v, m) != 1) return false;
    Rat q(u, v);
    q.canonicalize();
    // the Euclid walk guarantees u = v*a (mod m) by construction
    out = q;
    return true;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

} // namespace ctcong

#endif
