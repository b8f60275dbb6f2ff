#ifndef CTCONG_FACTOR_HPP
#define CTCONG_FACTOR_HPP

#include <utility>
#include <vector>

#include "ctcong/poly.hpp"

namespace ctcong {

/// q = unit * prod factors[i].first ^ factors[i].second with each factor a
/// primitive irreducible integer polynomial with positive leading
/// coefficient; factors sorted (degree, then rendering) and distinct.
struct Factorization {
    Rat unit;
    std::vector<std::pair<Poly, int>> factors;
    Poly reassemble() const;
};

/// Complete factorization over Q (exact; Zassenhaus with a deterministic
/// Berlekamp splitting stage).  Throws Error("degree-limit") above the cap.
Factorization factor_q(const Poly& q, int degree_cap = 8);

} // namespace ctcong

#endif
