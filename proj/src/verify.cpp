#include "ctcong/verify.hpp"

#include <algorithm>
#include <cassert>
#include <future>
#include <thread>

#include "ctcong/expr.hpp"

namespace ctcong {

Int brute_force_sum(const LaurentPoly& P, const LaurentPoly& Q, long r, const Int& p) {
    assert(P.has_integer_coeffs() && Q.has_integer_coeffs());
    assert(r >= 1 && is_prime(p));
    if (!p.fits_slong_p() || p >= Int(1) << 31)
        throw Error("bad-prime", "p = " + p.get_str() + " exceeds the 64-bit sweep range");
    std::int64_t pl = p.get_si();

    // P as sparse (exponent, residue) pairs
    std::vector<std::pair<long, std::int64_t>> pv;
    for (const auto& [e, c] : P.terms()) {
        std::int64_t cc = mod_floor(Int(c.get_num()), p).get_si();
        if (cc != 0) pv.emplace_back(e, cc);
    }

    long steps = r * pl; // k = 0..rp-1
    if (Q.is_zero()) return 0;

    // dense rolling G = P^k Q mod p
    long lowQ = Q.lowest_degree(), highQ = Q.highest_degree();
    long lowP = 0, highP = 0;
    if (!pv.empty()) {
        lowP = pv.front().first;
        highP = pv.back().first;
        for (const auto& [e, c] : pv) {
            lowP = std::min(lowP, e);
            highP = std::max(highP, e);
        }
    }
    long minOff = lowQ + std::min(0L, lowP) * steps;
    long maxOff = highQ + std::max(0L, highP) * steps;
    std::vector<std::int64_t> g(static_cast<std::size_t>(maxOff - minOff) + 1, 0);
    std::vector<std::int64_t> h(g.size(), 0);
    long glow = lowQ, ghigh = highQ;
    for (const auto& [e, c] : Q.terms())
        g[static_cast<std::size_t>(e - minOff)] = mod_floor(Int(c.get_num()), p).get_si();

    std::int64_t sum = 0;
    for (long k = 0; k < steps; ++k) {
        // cells outside [glow, ghigh] are stale from earlier swaps
        if (glow <= 0 && 0 <= ghigh)
            sum = (sum + g[static_cast<std::size_t>(-minOff)]) % pl;
        if (k + 1 == steps) break;
        if (pv.empty()) break; // P = 0: all later terms vanish
        long nlow = glow + lowP, nhigh = ghigh + highP;
        std::fill(h.begin() + (nlow - minOff), h.begin() + (nhigh - minOff) + 1, 0);
        for (long e = glow; e <= ghigh; ++e) {
            std::int64_t c = g[static_cast<std::size_t>(e - minOff)];
            if (c == 0) continue;
            for (const auto& [ep, cp] : pv) {
                auto& cell = h[static_cast<std::size_t>(e + ep - minOff)];
                cell = (cell + c * cp) % pl;
            }
        }
        std::swap(g, h);
        glow = nlow;
        ghigh = nhigh;
    }
    return Int(sum % pl);
}

Int brute_force_sum_exact(const LaurentPoly& P, const LaurentPoly& Q, long r, const Int& p) {
    assert(P.has_integer_coeffs() && Q.has_integer_coeffs());
    assert(p.fits_slong_p());
    long steps = r * p.get_si();
    LaurentPoly g = Q;
    Int sum = 0;
    for (long k = 0; k < steps; ++k) {
        sum += Int(constant_term(g).get_num());
        if (k + 1 < steps) g = g * P;
    }
    return mod_floor(sum, p);
}

std::vector<Int> primes_in(const Int& lo, const Int& hi) {
    std::vector<Int> out;
    Int p = lo < 2 ? Int(1) : lo - 1;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p > hi) break;
        out.push_back(p);
    }
    return out;
}

namespace {

struct TheoremView {
    std::string kind;
    const LaurentPoly* P;
    const LaurentPoly* Q;
    long r;
};

TheoremView view_of(const TheoremVariant& T) {
    return std::visit(
        [](const auto& t) -> TheoremView {
            using V = std::decay_t<decltype(t)>;
            const TheoremG* base;
            std::string kind;
            if constexpr (std::is_same_v<V, TheoremG>) {
                base = &t;
                kind = "theo-g";
            } else if constexpr (std::is_same_v<V, CaseSplitTheorem>) {
                base = &t.base;
                kind = "theo-qp";
            } else if constexpr (std::is_same_v<V, QuadraticTheorem>) {
                base = &t.base;
                kind = "quad";
            } else {
                base = &t.base;
                kind = "finite";
            }
            return TheoremView{kind, &base->P, &base->Q, base->r};
        },
        T);
}

VerifyRow check_prime(const TheoremVariant& T, const TheoremView& v, const Int& p) {
    VerifyRow row;
    row.p = p;

    std::optional<std::string> skip = std::visit(
        [&](const auto& t) { return t.inadmissible_reason(p); }, T);
    if (const auto* rs = std::get_if<ResidueSetReport>(&T); rs && rs->not_simple && !skip)
        skip = "not simple";
    if (skip) {
        row.skip = *skip;
        return row;
    }

    row.brute = brute_force_sum(*v.P, *v.Q, v.r, p);
    try {
        Rat predicted = std::visit(
            [&](const auto& t) -> Rat {
                using V = std::decay_t<decltype(t)>;
                if constexpr (std::is_same_v<V, ResidueSetReport>)
                    return predict_prime(t, p);
                else
                    return evaluate_theorem(t, p);
            },
            T);
        row.predicted = predicted;
        Int rep = rat_mod_p(predicted, p);
        row.predicted_rep = symmetric_rep(rep, p);
        row.match = rep == row.brute;
        if (const auto* rs = std::get_if<ResidueSetReport>(&T)) {
            row.in_set = false;
            for (const Rat& a : rs->values)
                if (rat_mod_p(a, p) == row.brute) {
                    row.in_set = true;
                    break;
                }
        }
    } catch (const Error& e) {
        row.skip = e.what();
    }
    return row;
}

} // namespace

VerificationReport verify_range(const TheoremVariant& T, const Int& lo, const Int& hi,
                                unsigned threads) {
    TheoremView v = view_of(T);
    VerificationReport rep;
    rep.kind = v.kind;
    rep.input_p = pretty_print(*v.P);
    rep.input_q = pretty_print(*v.Q);
    rep.r = v.r;

    std::vector<Int> primes = primes_in(lo, hi);
    std::vector<VerifyRow> rows(primes.size());

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, primes.size() == 0 ? 1 : static_cast<unsigned>(primes.size()));
    if (threads <= 1 || primes.size() < 8) {
        for (std::size_t i = 0; i < primes.size(); ++i)
            rows[i] = check_prime(T, v, primes[i]);
    } else {
        std::vector<std::future<void>> futs;
        std::size_t chunk = (primes.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::size_t beg = t * chunk, end = std::min(primes.size(), beg + chunk);
            if (beg >= end) break;
            futs.push_back(std::async(std::launch::async, [&, beg, end] {
                for (std::size_t i = beg; i < end; ++i)
                    rows[i] = check_prime(T, v, primes[i]);
            }));
        }
        for (auto& f : futs) f.get();
    }

    rep.rows = std::move(rows);
    for (const VerifyRow& row : rep.rows) {
        if (!row.skip.empty()) {
            ++rep.skipped;
            continue;
        }
        ++rep.checked;
        if (row.match && row.in_set)
            ++rep.matched;
        else
            ++rep.mismatched;
    }
    return rep;
}

} // namespace ctcong
