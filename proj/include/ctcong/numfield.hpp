#ifndef CTCONG_NUMFIELD_HPP
#define CTCONG_NUMFIELD_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ctcong/series.hpp"
#include "ctcong/theorems.hpp"

namespace ctcong {

/// Element of K = Q[t]/(qt): coefficient vector of length deg(qt),
/// representing c[0] + c[1]*alpha + ... + c[d-1]*alpha^(d-1).
struct NFElement {
    std::vector<Rat> c;
    bool operator==(const NFElement&) const = default;
};

/// K = Q[t]/(qt) for an integer polynomial qt, irreducible over Q with
/// qt(0) != 0 (our qt are reciprocals t^d q(1/t) of denominator factors q
/// with q(0) != 0, sign-normalized to positive leading coefficient).
class NumberField {
public:
    explicit NumberField(Poly qt);

    int degree() const { return d_; }
    const Poly& modulus() const { return qt_; }

    NFElement zero() const { return NFElement{std::vector<Rat>(static_cast<std::size_t>(d_), Rat(0))}; }
    NFElement one() const;
    NFElement alpha() const; // the class of t
    NFElement from_rat(const Rat& x) const;
    NFElement from_poly(const Poly& f) const; // reduce mod qt
    Poly to_poly(const NFElement& e) const;

    bool is_zero(const NFElement& e) const;
    /// Rational content iff the element lies in Q.
    std::optional<Rat> as_rational(const NFElement& e) const;

    NFElement add(const NFElement& a, const NFElement& b) const;
    NFElement sub(const NFElement& a, const NFElement& b) const;
    NFElement mul(const NFElement& a, const NFElement& b) const;
    NFElement scale(const Rat& s, const NFElement& a) const;
    /// Error("inverse-of-zero") on zero input.
    NFElement inverse(const NFElement& a) const;
    NFElement pow(const NFElement& a, long e) const; // negative e inverts first
    /// Evaluate a rational-coefficient polynomial at a field element.
    NFElement eval_poly(const Poly& f, const NFElement& x) const;

private:
    Poly qt_;
    int d_;
};

/// Field automorphism of a simple K, recorded by where alpha goes and the
/// permutation it induces on a fixed root list (roots[i] -> roots[sigma[i]]).
struct Automorphism {
    NFElement alpha_image;
    std::vector<int> sigma;
};

struct RootsConfig {
    int degree_cap = 8;
    long prime_limit = 200000; // split-prime search bound
};

/// Outcome of the root search in K: all d roots of qt (simple case, with
/// roots[0] = alpha), or a proof that fewer than d roots lie in K.
struct RootsResult {
    bool simple = false;
    std::vector<NFElement> roots;
    std::string detail; // evidence summary for the non-simple verdict
};

/// All roots of qt expressed in alpha, if qt splits completely over K.
/// Candidates come from a split prime: Hensel-lift the residue roots, solve
/// the mod-p^k Vandermonde system for each conjugate assignment, rationally
/// reconstruct the coordinates, and verify qt(g(alpha)) = 0 exactly in K.
/// The lifting precision exceeds a height bound for root coordinates, so a
/// shortfall of verified roots is a proof of non-simpleness.
RootsResult roots_in_field(const NumberField& F, const RootsConfig& cfg = {});

struct SimpleVerdict {
    bool simple = false;
    Poly qt;                       // the reciprocal polynomial tested
    std::vector<NFElement> roots;  // witnesses when simple
    std::string detail;
};

/// Simpleness test for an irreducible q with q(0) != 0:
/// does the splitting field of t^d q(1/t) equal Q(alpha)?  Degree <= 2 is
/// decided without search.
SimpleVerdict is_simple(const Poly& q, const RootsConfig& cfg = {});

/// The automorphism group alpha -> roots[j] with induced permutations;
/// autos[0] is the identity.  Requires the full root list (simple case).
std::vector<Automorphism> automorphism_group(const NumberField& F,
                                             const std::vector<NFElement>& roots);

bool group_is_abelian(const NumberField& F, const std::vector<Automorphism>& autos);

/// The automorphism matching t^p mod (qt, p): computes t^p by repeated
/// squaring over F_p and compares against each root expression mod p.
/// Error("bad-prime") when p divides lc/disc/denominators or when no single
/// global match exists (possible only for nonabelian groups).
Automorphism frobenius_sigma(const NumberField& F, const std::vector<NFElement>& roots,
                             const Int& p);

/// Legendre symbol by Euler's criterion; p an odd prime.
int legendre(const Int& a, const Int& p);

/// Closed-form congruence for quadratic denominators: with
/// R = poly_part + (u*x + v)/(a + b*x + c*x^2) and Delta = b^2 - 4*a*c,
/// the predicted residue is value_sq when Delta is a square mod p and
/// value_nonsq otherwise (branch values folded through the Theorem-1
/// weights, using S_n resp. (c/a)^n S_{-n}).
struct QuadraticTheorem {
    TheoremG base;
    Rat u, v;     // numerator of the proper fraction part
    Int a, b, c;  // denominator coefficients, ascending
    Int delta;
    Rat value_sq, value_nonsq;
    LaurentPoly poly_part;
    std::set<Int> excluded;

    std::optional<std::string> inadmissible_reason(const Int& p) const;
    bool admissible(const Int& p) const { return !inadmissible_reason(p); }
};

/// Error("not-quadratic") unless the normalized denominator has degree 2
/// and the expansion has no pole at 0; Error("reducible-denominator") when
/// the quadratic splits over Q (use residue_set instead).
QuadraticTheorem quadratic_theorem(const LaurentPoly& P, const LaurentPoly& Q, long r);

Rat evaluate_theorem(const QuadraticTheorem& T, const Int& p);

/// Everything needed to predict per-prime residues for one irreducible
/// denominator factor: the field on the reciprocal polynomial, its roots,
/// automorphisms, and the constant terms f_t(0) of the closed form
/// s_k = sum_t f_t(k) alpha_t^k for this factor's partial-fraction summand.
struct FactorAnalysis {
    Poly q;   // irreducible factor of the denominator (never x)
    int mult = 1;
    NumberField field;
    std::vector<NFElement> roots;
    std::vector<Automorphism> autos;
    bool abelian = true;
    std::vector<NFElement> f0; // per root index
    /// r0[a][i]: rational coordinate of sum_t f0[t] * roots[sigma_a[t]]^n_i,
    /// for the needed indices n_i (see ResidueSetReport::used_ns).
    std::vector<std::vector<Rat>> r0;
};

/// Theorem-2 report: the finite residue set A, with per-prime prediction
/// data.  `exact` when the denominator has a single non-x irreducible
/// factor with multiplicity 1 and an abelian automorphism group; otherwise
/// `values` is a flagged superset (Cartesian enumeration across factors).
struct ResidueSetReport {
    TheoremG base;
    bool not_simple = false;
    std::string offending; // names the non-simple factor
    std::string detail;

    LaurentPoly poly_part;
    std::vector<long> used_ns; // n_j = rm - j with nonzero weight, n_j >= 1
    std::vector<Rat> used_weights;
    Rat weighted_s0; // the n_j = 0 contribution, exact
    std::vector<FactorAnalysis> factors;

    std::vector<Rat> values; // the set A, sorted
    bool exact = false;
    std::set<Int> excluded;

    std::optional<std::string> inadmissible_reason(const Int& p) const;
    bool admissible(const Int& p) const { return !inadmissible_reason(p); }
};

/// Builds the Theorem-2 analysis.  A non-simple factor yields a report with
/// not_simple = true (not an exception); factorization limits propagate as
/// Error("degree-limit").
ResidueSetReport residue_set(const LaurentPoly& P, const LaurentPoly& Q, long r,
                             const RootsConfig& cfg = {});

/// Exact realized residue at p: selects the actual Frobenius automorphism
/// per factor and assembles the value, which always lies in `values`.
Rat predict_prime(const ResidueSetReport& report, const Int& p);

} // namespace ctcong

#endif
