#ifndef CTCONG_LAURENT_HPP
#define CTCONG_LAURENT_HPP

#include <map>
#include <optional>
#include <string>

#include "ctcong/rat.hpp"

namespace ctcong {

/// Laurent polynomial over Q: a finitely supported map exponent -> coefficient.
/// Canonical form stores no zero coefficients, so equality is structural.
/// Values are immutable in spirit: every operation returns a fresh value.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(long exp, const Rat& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    /// Defined only for nonzero values.
    long lowest_degree() const;
    long highest_degree() const;

    Rat coeff(long exp) const;
    const std::map<long, Rat>& terms() const { return terms_; }

    /// True iff every coefficient is an integer.
    bool has_integer_coeffs() const;

    /// True iff the support is exactly one exponent.
    bool is_monomial() const { return terms_.size() == 1; }

    void set_coeff(long exp, const Rat& c); // keeps canonical form

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& g);
    LaurentPoly& operator-=(const LaurentPoly& g);

    friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
    friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);

    bool operator==(const LaurentPoly&) const = default;

private:
    std::map<long, Rat> terms_;
};

LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g);

/// f^e by binary exponentiation, e >= 0; f^0 = 1.
LaurentPoly lp_pow(const LaurentPoly& f, unsigned long e);

/// Coefficient of x^0.
Rat constant_term(const LaurentPoly& f);

/// x -> x^p on exponents (coefficients unchanged), p >= 1.
LaurentPoly substitute_xp(const LaurentPoly& f, long p);

/// Exact Laurent division: returns f/g when g divides f in Q[x, x^-1],
/// std::nullopt otherwise.  Division by a nonzero monomial always succeeds.
std::optional<LaurentPoly> laurent_divide(const LaurentPoly& f, const LaurentPoly& g);

} // namespace ctcong

#endif
