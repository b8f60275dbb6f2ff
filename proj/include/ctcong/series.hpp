#ifndef CTCONG_SERIES_HPP
#define CTCONG_SERIES_HPP

#include <vector>

#include "ctcong/factor.hpp"
#include "ctcong/laurent.hpp"
#include "ctcong/poly.hpp"

namespace ctcong {

/// Normalized rational function x^shift * numer(x)/denom(x) and the C-finite
/// coefficient sequence S_k of its Laurent expansion at 0.
/// Invariants: denom is a primitive integer polynomial with denom(0) > 0;
/// gcd(numer, denom) = 1; numer(0) != 0 unless the function is zero (then
/// numer = 0, denom = 1, shift = 0).  The expansion starts at k = shift.
struct CFiniteSeq {
    long shift = 0;
    Poly numer;     // N
    Poly denom{Rat(1)}; // D

    bool is_zero() const { return numer.is_zero(); }
    int order() const { return denom.deg(); }
    /// -n is the lowest degree of the expansion.
    long n() const { return -shift; }
    /// Two-sided evaluation is defined for proper fractions only.
    bool proper() const { return numer.deg() < denom.deg(); }

    bool operator==(const CFiniteSeq&) const = default;
};

/// Q/(P-1) in normalized form.  Throws Error("denominator-zero") if P = 1.
CFiniteSeq make_cfinite(const LaurentPoly& P, const LaurentPoly& Q);

/// S_shift .. S_kmax by the forward recurrence; kmax >= shift.
std::vector<Rat> series_coeffs(const CFiniteSeq& S, long k_max);

/// Series coefficient of x^k: zero below the shift, exact elsewhere.
Rat series_term(const CFiniteSeq& S, long k);

/// S_k for any integer k.  For k >= shift this is the series coefficient;
/// for k < shift the homogeneous recurrence runs backwards (the two-sided
/// closed-form extension), which requires deg numer < deg denom
/// (Error("improper-fraction") otherwise).
Rat cfinite_term(const CFiniteSeq& S, long k);

/// One partial-fraction summand numer/base^exp with deg numer < deg base,
/// base a primitive irreducible integer polynomial, base(0) != 0.
struct PFTerm {
    Poly numer;
    Poly base;
    int exp = 1;
};

/// R = poly_part + sum terms; exact.
struct PartialFractionDecomp {
    LaurentPoly poly_part;
    std::vector<PFTerm> terms;
};

PartialFractionDecomp partial_fractions(const CFiniteSeq& S, int degree_cap = 8);

/// value(k) = table[k mod period](k); the sequence it represents is
/// annihilated by (1 - E^-period)^(degree+1).
struct QuasiPolynomial {
    long period = 1;
    int degree = 0; // max degree over the table
    std::vector<Poly> table;

    Rat value(const Int& k) const;
};

/// Least period L <= L_max and table of degree <= d with value(k) = S_k for
/// every k >= max(shift, 0), established by interpolation plus agreement on
/// a window long enough to force identity under the common recurrence.
/// Throws Error("no-fit") when no such quasi-polynomial exists (a proof of
/// absence for these parameters), or propagates Error("degree-limit").
QuasiPolynomial quasipoly_fit(const CFiniteSeq& S, long L_max, int d, int degree_cap = 8);

} // namespace ctcong

#endif
