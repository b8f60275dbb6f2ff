#ifndef CTCONG_THEOREMS_HPP
#define CTCONG_THEOREMS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ctcong/laurent.hpp"
#include "ctcong/series.hpp"

namespace ctcong {

/// The general congruence: for every admissible prime p,
///   sum_{k=0}^{rp-1} a_k  =  sum_{j=0}^{rm} w_j S_{(rm-j)p}   (mod p),
/// where a_k = CT(P^k Q), w_j = [x^(-rm+j)] (P^r - 1), and S is the
/// coefficient sequence of Q/(P-1).  Admissible: p > n, p not excluded.
struct TheoremG {
    LaurentPoly P, Q;
    long r = 1;
    long m = 0;       // max(-lowest_degree(P), 0)
    long m_raw = 0;   // -lowest_degree(P) before clamping
    bool m_clamped = false;
    long n = 0;       // -n = lowest degree of the expansion of Q/(P-1)
    std::vector<Int> weights; // w_0..w_{rm}
    CFiniteSeq S;
    std::set<Int> excluded; // primes dividing denom(0) or a numerator denominator

    std::optional<std::string> inadmissible_reason(const Int& p) const;
    bool admissible(const Int& p) const { return !inadmissible_reason(p); }
};

/// Explicit case split: for admissible p = u (mod modulus),
///   sum_{k=0}^{rp-1} a_k = table[u]   (mod p).
/// Classes not coprime to the modulus cover at most finitely many primes,
/// all excluded.  Derived from TheoremG by a proven quasi-polynomial for S.
struct CaseSplitTheorem {
    TheoremG base;
    QuasiPolynomial qp;
    Int modulus = 1;
    std::map<Int, Rat> table;
    std::set<Int> excluded;
    long min_p = 2; // additionally requires p >= max(shift, 0) for the fit domain

    std::optional<std::string> inadmissible_reason(const Int& p) const;
    bool admissible(const Int& p) const { return !inadmissible_reason(p); }
};

/// Builds the Theorem-1 object.  Throws Error("non-integer-coefficients")
/// unless P and Q have integer coefficients, Error("denominator-zero") if
/// P = 1.
TheoremG theo_g(const LaurentPoly& P, const LaurentPoly& Q, long r);

/// Runs theo_g, proves a quasi-polynomial for S (period L <= L_max, degree
/// <= d), and folds f(n_j * p) = f_{n_j u mod L}(0) (mod p) through the
/// weights into a residue table keyed by p mod L.  Propagates
/// Error("no-fit").
CaseSplitTheorem theo_qp(const LaurentPoly& P, const LaurentPoly& Q, long r,
                         int d, long L_max, int degree_cap = 8);

/// Predicted residue (exact rational) at an admissible prime;
/// Error("inadmissible-prime") otherwise.
Rat evaluate_theorem(const TheoremG& T, const Int& p);
Rat evaluate_theorem(const CaseSplitTheorem& T, const Int& p);

/// All prime divisors of n (empty for |n| <= 1).
std::vector<Int> prime_divisors(const Int& n);

} // namespace ctcong

#endif
