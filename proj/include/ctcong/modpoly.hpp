#ifndef CTCONG_MODPOLY_HPP
#define CTCONG_MODPOLY_HPP

#include <cstdint>
#include <vector>

#include "ctcong/poly.hpp"
#include "ctcong/rat.hpp"

namespace ctcong {
namespace fp {

/// Polynomials over F_p for small p, coefficients in [0, p), ascending,
/// no trailing zeros.  Plain functions over vectors; p rides along.
using FpPoly = std::vector<std::int64_t>;

std::int64_t inv_mod(std::int64_t a, std::int64_t p);

void trim(FpPoly& f);
int deg(const FpPoly& f); // -1 for zero
FpPoly from_poly(const Poly& f, std::int64_t p); // denominators must be units mod p
FpPoly add(const FpPoly& a, const FpPoly& b, std::int64_t p);
FpPoly sub(const FpPoly& a, const FpPoly& b, std::int64_t p);
FpPoly mul(const FpPoly& a, const FpPoly& b, std::int64_t p);
FpPoly scale(std::int64_t c, const FpPoly& a, std::int64_t p);
/// Remainder of a mod f; lc(f) must be a unit.
FpPoly rem(FpPoly a, const FpPoly& f, std::int64_t p);
std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& f, std::int64_t p);
FpPoly gcd(FpPoly a, FpPoly b, std::int64_t p); // monic
FpPoly monic(const FpPoly& a, std::int64_t p);
/// x^e mod f by repeated squaring.
FpPoly xpow_mod(const Int& e, const FpPoly& f, std::int64_t p);
/// g(x)^e mod f.
FpPoly pow_mod(FpPoly g, Int e, const FpPoly& f, std::int64_t p);
std::int64_t eval(const FpPoly& f, std::int64_t x, std::int64_t p);

/// Monic squarefree factorization assumed squarefree input: Berlekamp.
/// Returns the monic irreducible factors of monic squarefree f (any order).
std::vector<FpPoly> berlekamp(const FpPoly& f, std::int64_t p);

/// All roots of f in F_p (f arbitrary nonzero), by direct scan; p small.
std::vector<std::int64_t> roots(const FpPoly& f, std::int64_t p);

} // namespace fp
} // namespace ctcong

#endif
