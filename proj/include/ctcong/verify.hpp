#ifndef CTCONG_VERIFY_HPP
#define CTCONG_VERIFY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ctcong/numfield.hpp"
#include "ctcong/theorems.hpp"

namespace ctcong {

/// sum_{k=0}^{rp-1} CT(P^k Q) mod p, in [0, p).  Maintains P^k Q with
/// coefficients reduced mod p; deliberately direct, so it can serve as the
/// ground truth for every theorem object.
Int brute_force_sum(const LaurentPoly& P, const LaurentPoly& Q, long r, const Int& p);

/// Same sum with exact big-integer coefficients, reduced mod p at the end;
/// cross-checks the incremental computation.
Int brute_force_sum_exact(const LaurentPoly& P, const LaurentPoly& Q, long r, const Int& p);

/// Ascending primes in [lo, hi].
std::vector<Int> primes_in(const Int& lo, const Int& hi);

using TheoremVariant = std::variant<TheoremG, CaseSplitTheorem, QuadraticTheorem, ResidueSetReport>;

struct VerifyRow {
    Int p;
    Int brute;               // in [0, p)
    std::optional<Rat> predicted;
    std::optional<Int> predicted_rep; // symmetric representative in (-p/2, p/2]
    bool match = false;
    bool in_set = true;      // residue-set membership, when applicable
    std::string skip;        // nonempty: inadmissible, with the reason
};

struct VerificationReport {
    std::string kind;
    std::string input_p, input_q;
    long r = 1;
    std::vector<VerifyRow> rows;
    long checked = 0, matched = 0, mismatched = 0, skipped = 0;

    bool all_match() const { return mismatched == 0; }
};

/// Confronts a theorem object with brute force over every prime in
/// [lo, hi].  Inadmissible primes become skip rows; failures become
/// mismatch rows, never exceptions.  Rows are in ascending-p order
/// (computed in parallel, merged deterministically).
VerificationReport verify_range(const TheoremVariant& T, const Int& lo, const Int& hi,
                                unsigned threads = 0);

} // namespace ctcong

#endif
