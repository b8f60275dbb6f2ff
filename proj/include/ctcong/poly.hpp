#ifndef CTCONG_POLY_HPP
#define CTCONG_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "ctcong/laurent.hpp"
#include "ctcong/rat.hpp"

namespace ctcong {

/// Dense univariate polynomial over Q, coefficients ascending.
/// Canonical: no trailing zero coefficients; the zero polynomial is empty.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly({Rat(1)}); }
    static Poly x() { return Poly({Rat(0), Rat(1)}); }
    static Poly monomial(int e, const Rat& c);
    static Poly constant(const Rat& c) { return Poly({c}); }

    int deg() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rat coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0); }
    Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool has_integer_coeffs() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& g);
    Poly& operator-=(const Poly& g);
    friend Poly operator+(Poly f, const Poly& g) { return f += g; }
    friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
    friend Poly operator*(const Poly& f, const Poly& g);
    friend Poly operator*(const Rat& a, const Poly& f);

    bool operator==(const Poly&) const = default;

    Rat eval(const Rat& x) const;
    Poly derivative() const;

    /// x^deg * f(1/x): coefficient order reversed.
    Poly reverse() const;

    /// Monic associate (zero stays zero).
    Poly monic() const;

    /// Largest rational c with f = c * (primitive integer polynomial with
    /// positive leading coefficient); content(0) = 0.
    Rat content() const;
    /// f / content(): primitive integer coefficients, positive leading coeff.
    Poly primitive_part() const;

    /// Multiplicity of the root 0, and f with x^v divided out.
    std::pair<int, Poly> strip_x() const;

    std::string str() const; // pretty form in x, for messages and JSON

private:
    void trim();
    std::vector<Rat> c_;
};

/// Quotient and remainder over Q; g must be nonzero.
std::pair<Poly, Poly> poly_divrem(const Poly& f, const Poly& g);

/// Monic gcd over Q (gcd(0,0) = 0).
Poly poly_gcd(Poly f, Poly g);

/// g = gcd(f1, f2) monic, plus s, t with s*f1 + t*f2 = g.
struct ExtGcd {
    Poly g, s, t;
};
ExtGcd poly_ext_gcd(const Poly& f1, const Poly& f2);

/// Resultant of f and g over Q (0 if either is zero and the other nonconstant).
Rat poly_resultant(Poly f, Poly g);

/// Discriminant of f (deg >= 1): (-1)^(d(d-1)/2) * res(f, f') / lc(f).
Rat poly_discriminant(const Poly& f);

Poly poly_pow(const Poly& f, unsigned long e);

/// Laurent polynomial as x^shift * (polynomial with nonzero constant term);
/// the zero polynomial maps to shift 0.
std::pair<long, Poly> laurent_split(const LaurentPoly& f);
LaurentPoly poly_to_laurent(const Poly& f, long shift = 0);

} // namespace ctcong

#endif
