#include "ctcong/numfield.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "ctcong/modpoly.hpp"

namespace ctcong {

// ------------------------------------------------------------- NumberField

NumberField::NumberField(Poly qt) : qt_(std::move(qt)), d_(qt_.deg()) {
    assert(d_ >= 1);
    assert(qt_.coeff(0) != 0);
}

NFElement NumberField::one() const { return from_rat(Rat(1)); }

NFElement NumberField::alpha() const {
    NFElement e = zero();
    if (d_ == 1) {
        // t = -c0/c1 in the degree-1 quotient
        e.c[0] = -qt_.coeff(0) / qt_.coeff(1);
    } else {
        e.c[1] = 1;
    }
    return e;
}

NFElement NumberField::from_rat(const Rat& x) const {
    NFElement e = zero();
    e.c[0] = x;
    return e;
}

NFElement NumberField::from_poly(const Poly& f) const {
    Poly r = poly_divrem(f, qt_).second;
    NFElement e = zero();
    for (int i = 0; i <= r.deg(); ++i) e.c[static_cast<std::size_t>(i)] = r.coeff(i);
    return e;
}

Poly NumberField::to_poly(const NFElement& e) const {
    return Poly(std::vector<Rat>(e.c.begin(), e.c.end()));
}

bool NumberField::is_zero(const NFElement& e) const {
    for (const auto& x : e.c)
        if (x != 0) return false;
    return true;
}

std::optional<Rat> NumberField::as_rational(const NFElement& e) const {
    for (std::size_t i = 1; i < e.c.size(); ++i)
        if (e.c[i] != 0) return std::nullopt;
    return e.c[0];
}

NFElement NumberField::add(const NFElement& a, const NFElement& b) const {
    NFElement r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

NFElement NumberField::sub(const NFElement& a, const NFElement& b) const {
    NFElement r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

NFElement NumberField::mul(const NFElement& a, const NFElement& b) const {
    return from_poly(to_poly(a) * to_poly(b));
}

NFElement NumberField::scale(const Rat& s, const NFElement& a) const {
    NFElement r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

NFElement NumberField::inverse(const NFElement& a) const {
    if (is_zero(a))
        throw Error("inverse-of-zero", "inverse of zero in the number field");
    ExtGcd eg = poly_ext_gcd(to_poly(a), qt_);
    assert(eg.g.deg() == 0); // qt irreducible
    Rat ginv = Rat(1) / eg.g.coeff(0);
    return from_poly(ginv * eg.s);
}

NFElement NumberField::pow(const NFElement& a, long e) const {
    NFElement base = e < 0 ? inverse(a) : a;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    NFElement acc = one();
    while (k > 0) {
        if (k & 1UL) acc = mul(acc, base);
        k >>= 1UL;
        if (k > 0) base = mul(base, base);
    }
    return acc;
}

NFElement NumberField::eval_poly(const Poly& f, const NFElement& x) const {
    NFElement acc = zero();
    for (int i = f.deg(); i >= 0; --i) {
        acc = mul(acc, x);
        acc.c[0] += f.coeff(i);
    }
    return acc;
}

// ---------------------------------------------------------- roots_in_field

namespace {

// evaluate an integer polynomial at an integer mod m
Int eval_mod(const Poly& f, const Int& x, const Int& m) {
    Int acc = 0;
    for (int i = f.deg(); i >= 0; --i)
        acc = mod_floor(acc * x + Int(f.coeff(i).get_num()), m);
    return acc;
}

// inverse of a d x d matrix over Z/m, m a prime power with unit pivots
std::vector<std::vector<Int>> invert_mod(std::vector<std::vector<Int>> a, const Int& m) {
    std::size_t d = a.size();
    std::vector<std::vector<Int>> inv(d, std::vector<Int>(d, Int(0)));
    for (std::size_t i = 0; i < d; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t piv = col;
        while (piv < d && gcd(a[piv][col], m) != 1) ++piv;
        assert(piv < d && "matrix not invertible mod m");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Int pe = mod_inverse(a[col][col], m);
        for (std::size_t j = 0; j < d; ++j) {
            a[col][j] = mod_floor(a[col][j] * pe, m);
            inv[col][j] = mod_floor(inv[col][j] * pe, m);
        }
        for (std::size_t row = 0; row < d; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Int f = a[row][col];
            for (std::size_t j = 0; j < d; ++j) {
                a[row][j] = mod_floor(a[row][j] - f * a[col][j], m);
                inv[row][j] = mod_floor(inv[row][j] - f * inv[col][j], m);
            }
        }
    }
    return inv;
}

} // namespace

RootsResult roots_in_field(const NumberField& F, const RootsConfig& cfg) {
    int d = F.degree();
    if (d > cfg.degree_cap)
        throw Error("degree-limit", "number field degree " + std::to_string(d) +
                                        " exceeds the cap (" + std::to_string(cfg.degree_cap) + ")");
    RootsResult res;
    res.roots.push_back(F.alpha());
    if (d == 1) {
        res.simple = true;
        return res;
    }
    const Poly& qt = F.modulus();
    if (d == 2) {
        // the conjugate is (-c1/c2) - alpha
        NFElement other = F.sub(F.from_rat(-qt.coeff(1) / qt.coeff(2)), F.alpha());
        res.roots.push_back(other);
        res.simple = true;
        return res;
    }

    // monicize: qhat(s) = lc^(d-1) qt(s/lc) has roots lc * (roots of qt)
    Int lc(qt.lc().get_num());
    Poly qhat;
    {
        std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
        Rat pw(1);
        for (int i = d; i >= 0; --i) {
            c[static_cast<std::size_t>(i)] = qt.coeff(i) * pw;
            if (i > 0) pw *= Rat(lc);
        }
        qhat = Poly(std::move(c));
    }
    Rat disc_r = poly_discriminant(qhat);
    assert(disc_r.get_den() == 1);
    Int disc = abs(Int(disc_r.get_num()));
    assert(disc != 0);

    // height bound for coordinates of qhat-roots in the basis 1, ahat, ...:
    // solving the complex Vandermonde bounds |c_i| by d 2^(d-1) R^d DER^(d-1),
    // and denominators divide f with f^2 | disc
    Int R = 1;
    for (const auto& a : qhat.coeffs()) {
        Int v = abs(Int(a.get_num()));
        if (v + 1 > R) R = v + 1;
    }
    Int DER = 0, rp = 1;
    for (int i = 1; i <= d; ++i) {
        DER += i * abs(Int(qhat.coeff(i).get_num())) * rp;
        rp *= R;
    }
    Int Bc = d;
    Bc <<= static_cast<unsigned>(d - 1);
    for (int i = 0; i < d; ++i) Bc *= R;
    for (int i = 0; i < d - 1; ++i) Bc *= DER;
    Int froot = sqrt(disc) + 1;
    Int bound_num = Bc * froot, bound_den = froot;
    Int need = 2 * bound_num * bound_den + 1;

    // split-prime search; a mixed factor-degree profile at a good prime
    // certifies the field is not Galois, hence not simple
    std::int64_t p0 = 0;
    fp::FpPoly fbar;
    for (std::int64_t cand = 3; cand <= cfg.prime_limit; cand += 2) {
        if (!is_prime(Int(cand))) continue;
        if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(cand))) continue;
        fbar = fp::from_poly(qhat, cand);
        fp::FpPoly xp = fp::xpow_mod(Int(cand), fbar, cand);
        if (xp == fp::FpPoly{0, 1}) { // x^p = x: splits completely
            p0 = cand;
            break;
        }
        // distinct-degree profile
        fp::FpPoly rest = fbar;
        fp::FpPoly xq = xp;
        std::vector<int> degs;
        for (int k = 1; fp::deg(rest) > 0 && k <= d; ++k) {
            if (k > 1) xq = fp::pow_mod(xq, Int(cand), fbar, cand);
            fp::FpPoly probe = fp::sub(xq, {0, 1}, cand);
            fp::FpPoly g = fp::gcd(fp::rem(probe, rest, cand), rest, cand);
            if (fp::deg(g) > 0) {
                for (int t = 0; t < fp::deg(g) / k; ++t) degs.push_back(k);
                rest = fp::divrem(rest, g, cand).first;
            }
        }
        if (!degs.empty() && degs.front() != degs.back()) {
            res.simple = false;
            res.detail = "mod " + std::to_string(cand) +
                         " the reciprocal polynomial has irreducible factors of unequal degrees, "
                         "so its splitting field is larger than Q(alpha)";
            return res;
        }
    }
    if (p0 == 0)
        throw Error("no-splitting-prime",
                    "no completely-split prime below " + std::to_string(cfg.prime_limit));

    // Newton-lift the residue roots past the reconstruction bound
    std::vector<Int> rho;
    for (std::int64_t r0 : fp::roots(fbar, p0)) rho.push_back(r0);
    assert(static_cast<int>(rho.size()) == d);
    Poly qhat_d = qhat.derivative();
    Int M = p0;
    while (M < need) {
        Int M2 = M * M;
        for (auto& r : rho) {
            Int fr = eval_mod(qhat, r, M2);
            Int dr = eval_mod(qhat_d, r, M2);
            r = mod_floor(r - fr * mod_inverse(dr, M2), M2);
        }
        M = M2;
    }

    // V[s][i] = rho_s^i
    std::vector<std::vector<Int>> V(static_cast<std::size_t>(d),
                                    std::vector<Int>(static_cast<std::size_t>(d)));
    for (int s = 0; s < d; ++s) {
        Int pw = 1;
        for (int i = 0; i < d; ++i) {
            V[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)] = pw;
            pw = mod_floor(pw * rho[static_cast<std::size_t>(s)], M);
        }
    }
    auto Vinv = invert_mod(V, M);

    NFElement ahat = F.scale(Rat(lc), F.alpha());
    Rat lcinv = Rat(1) / Rat(lc);

    // for each target rho_m, try all conjugate assignments; rational
    // reconstruction rejects almost everything, exact verification the rest
    for (int m = 1; m < d; ++m) {
        std::vector<int> others;
        for (int s = 0; s < d; ++s)
            if (s != m) others.push_back(s);
        std::sort(others.begin(), others.end());
        bool found = false;
        do {
            std::vector<Int> y(static_cast<std::size_t>(d));
            y[0] = rho[static_cast<std::size_t>(m)];
            for (int s = 1; s < d; ++s)
                y[static_cast<std::size_t>(s)] = rho[static_cast<std::size_t>(others[static_cast<std::size_t>(s - 1)])];
            // c = Vinv * y, then reconstruct coordinates
            std::vector<Rat> coords(static_cast<std::size_t>(d));
            bool ok = true;
            for (int i = 0; i < d && ok; ++i) {
                Int acc = 0;
                for (int s = 0; s < d; ++s)
                    acc += Vinv[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] * y[static_cast<std::size_t>(s)];
                acc = mod_floor(acc, M);
                ok = rational_reconstruct(acc, M, bound_num, bound_den, coords[static_cast<std::size_t>(i)]);
            }
            if (!ok) continue;
            Poly ghat{std::vector<Rat>(coords.begin(), coords.end())};
            NFElement root_hat = F.eval_poly(ghat, ahat);
            NFElement root = F.scale(lcinv, root_hat);
            if (!F.is_zero(F.eval_poly(qt, root))) continue;
            if (std::find(res.roots.begin(), res.roots.end(), root) == res.roots.end()) {
                res.roots.push_back(root);
                found = true;
            }
            break;
        } while (std::next_permutation(others.begin(), others.end()));
        (void)found;
    }

    res.simple = static_cast<int>(res.roots.size()) == d;
    if (!res.simple)
        res.detail = "only " + std::to_string(res.roots.size()) + " of " + std::to_string(d) +
                     " roots of the reciprocal polynomial lie in Q(alpha) "
                     "(verified to the reconstruction height bound)";
    return res;
}

SimpleVerdict is_simple(const Poly& q, const RootsConfig& cfg) {
    assert(q.deg() >= 1 && q.coeff(0) != 0);
    Poly qt = q.primitive_part().reverse();
    if (qt.lc() < 0) qt = -qt;
    SimpleVerdict v;
    v.qt = qt;
    NumberField F(qt);
    RootsResult rr = roots_in_field(F, cfg);
    v.simple = rr.simple;
    v.roots = rr.roots;
    v.detail = rr.detail;
    return v;
}

// ----------------------------------------------------------- automorphisms

std::vector<Automorphism> automorphism_group(const NumberField& F,
                                             const std::vector<NFElement>& roots) {
    std::vector<Automorphism> autos;
    for (const NFElement& img : roots) {
        Automorphism a;
        a.alpha_image = img;
        for (const NFElement& r : roots) {
            NFElement mapped = F.eval_poly(F.to_poly(r), img);
            auto it = std::find(roots.begin(), roots.end(), mapped);
            assert(it != roots.end() && "root list not closed under the automorphism");
            a.sigma.push_back(static_cast<int>(it - roots.begin()));
        }
        autos.push_back(std::move(a));
    }
    return autos;
}

bool group_is_abelian(const NumberField& F, const std::vector<Automorphism>& autos) {
    for (std::size_t i = 0; i < autos.size(); ++i)
        for (std::size_t j = i + 1; j < autos.size(); ++j) {
            NFElement ab = F.eval_poly(F.to_poly(autos[j].alpha_image), autos[i].alpha_image);
            NFElement ba = F.eval_poly(F.to_poly(autos[i].alpha_image), autos[j].alpha_image);
            if (!(ab == ba)) return false;
        }
    return true;
}

Automorphism frobenius_sigma(const NumberField& F, const std::vector<NFElement>& roots,
                             const Int& p) {
    const Poly& qt = F.modulus();
    if (!is_prime(p))
        throw Error("bad-prime", p.get_str() + " is not prime");
    if (mpz_divisible_p(Int(qt.lc().get_num()).get_mpz_t(), p.get_mpz_t()))
        throw Error("bad-prime", "p divides the leading coefficient of the reciprocal polynomial");
    Rat disc = poly_discriminant(qt);
    assert(disc.get_den() == 1);
    if (mpz_divisible_p(Int(disc.get_num()).get_mpz_t(), p.get_mpz_t()))
        throw Error("bad-prime", "p divides the discriminant (reciprocal polynomial not squarefree mod p)");
    if (!p.fits_slong_p() || p >= Int(1) << 31)
        throw Error("bad-prime", "p = " + p.get_str() + " exceeds the 64-bit modular engine");
    std::int64_t pl = p.get_si();

    fp::FpPoly fbar = fp::from_poly(qt, pl);
    fp::FpPoly xp = fp::xpow_mod(p, fbar, pl);

    int match = -1;
    for (std::size_t j = 0; j < roots.size(); ++j) {
        for (const Rat& c : roots[j].c)
            if (prime_divides_denominator(c, p))
                throw Error("bad-prime", "p divides a denominator of a root expression");
        fp::FpPoly gbar = fp::from_poly(F.to_poly(roots[j]), pl);
        if (gbar == xp) {
            if (match >= 0)
                throw Error("bad-prime", "two root expressions collide mod p");
            match = static_cast<int>(j);
        }
    }
    if (match < 0)
        throw Error("bad-prime",
                    "t^p matches no single root expression mod p "
                    "(mixed Frobenius across components; nonabelian group)");

    Automorphism a;
    a.alpha_image = roots[static_cast<std::size_t>(match)];
    for (const NFElement& r : roots) {
        NFElement mapped = F.eval_poly(F.to_poly(r), a.alpha_image);
        auto it = std::find(roots.begin(), roots.end(), mapped);
        assert(it != roots.end());
        a.sigma.push_back(static_cast<int>(it - roots.begin()));
    }
    return a;
}

int legendre(const Int& a, const Int& p) {
    assert(p > 2 && is_prime(p));
    Int t = mod_pow(mod_floor(a, p), (p - 1) / 2, p);
    if (t == 0) return 0;
    if (t == 1) return 1;
    assert(t == p - 1);
    return -1;
}

// ------------------------------------------------------- quadratic theorem

namespace {

void add_interference_primes(const LaurentPoly& g, const std::vector<long>& ns,
                             std::set<Int>& excl) {
    for (const auto& [e, c] : g.terms()) {
        if (e < 1) continue; // n*p > 0 never lands on nonpositive exponents
        for (long n : ns) {
            if (e % n != 0) continue;
            long cand = e / n;
            if (cand >= 2 && is_prime(Int(cand))) excl.insert(Int(cand));
        }
    }
}

void add_denominator_primes(const Rat& q, std::set<Int>& excl) {
    for (const Int& p : prime_divisors(Int(q.get_den()))) excl.insert(p);
}

} // namespace

QuadraticTheorem quadratic_theorem(const LaurentPoly& P, const LaurentPoly& Q, long r) {
    QuadraticTheorem T;
    T.base = theo_g(P, Q, r);
    const CFiniteSeq& S = T.base.S;
    if (S.denom.deg() != 2)
        throw Error("not-quadratic", "normalized denominator has degree " +
                                         std::to_string(S.denom.deg()) + ", expected 2");
    Factorization fact = factor_q(S.denom);
    if (fact.factors.size() != 1 || fact.factors[0].second != 1)
        throw Error("reducible-denominator",
                    "denominator splits over Q; use the residue-set analysis instead");
    const Poly& q = fact.factors[0].first;

    PartialFractionDecomp pfd = partial_fractions(S);
    assert(pfd.terms.size() == 1);
    const Poly& U = pfd.terms[0].numer;
    T.poly_part = pfd.poly_part;
    T.u = U.coeff(1);
    T.v = U.coeff(0);
    T.a = Int(q.coeff(0).get_num());
    T.b = Int(q.coeff(1).get_num());
    T.c = Int(q.coeff(2).get_num());
    T.delta = T.b * T.b - 4 * T.a * T.c;
    assert(T.delta != 0); // q irreducible over Q

    // two-sided sequence for the proper fraction U/q
    auto [vx, N2] = U.strip_x();
    CFiniteSeq Fq;
    Fq.shift = vx;
    if (q.coeff(0) > 0) {
        Fq.numer = N2;
        Fq.denom = q;
    } else {
        Fq.numer = -N2;
        Fq.denom = -q;
    }

    long rm = T.base.r * T.base.m;
    Rat S0 = series_term(S, 0);
    Rat ca = Rat(T.c) / Rat(T.a);
    T.value_sq = 0;
    T.value_nonsq = 0;
    std::vector<long> used;
    for (long j = 0; j <= rm; ++j) {
        const Int& w = T.base.weights[static_cast<std::size_t>(j)];
        if (w == 0) continue;
        long nj = rm - j;
        if (nj == 0) {
            T.value_sq += Rat(w) * S0;
            T.value_nonsq += Rat(w) * S0;
        } else {
            used.push_back(nj);
            T.value_sq += Rat(w) * cfinite_term(Fq, nj);
            Rat fold(1);
            for (long t = 0; t < nj; ++t) fold *= ca;
            T.value_nonsq += Rat(w) * fold * cfinite_term(Fq, -nj);
        }
    }

    T.excluded = T.base.excluded;
    T.excluded.insert(2);
    for (const Int& x : prime_divisors(T.a)) T.excluded.insert(x);
    for (const Int& x : prime_divisors(T.c)) T.excluded.insert(x);
    for (const Int& x : prime_divisors(T.delta)) T.excluded.insert(x);
    add_denominator_primes(T.u, T.excluded);
    add_denominator_primes(T.v, T.excluded);
    add_denominator_primes(T.value_sq, T.excluded);
    add_denominator_primes(T.value_nonsq, T.excluded);
    add_interference_primes(T.poly_part, used, T.excluded);
    return T;
}

std::optional<std::string> QuadraticTheorem::inadmissible_reason(const Int& p) const {
    if (!is_prime(p)) return "not prime";
    if (p <= base.n) return "p <= n = " + std::to_string(base.n);
    if (excluded.count(p)) return "excluded prime (divides 2acDelta or a denominator)";
    return std::nullopt;
}

Rat evaluate_theorem(const QuadraticTheorem& T, const Int& p) {
    if (auto why = T.inadmissible_reason(p))
        throw Error("inadmissible-prime", "p = " + p.get_str() + ": " + *why);
    int ls = legendre(T.delta, p);
    assert(ls != 0);
    return ls == 1 ? T.value_sq : T.value_nonsq;
}

// ------------------------------------------------------------- residue set

namespace {

// first `count` series coefficients of num/den, den(0) != 0
std::vector<Rat> series_front(const Poly& num, const Poly& den, long count) {
    std::vector<Rat> out(static_cast<std::size_t>(count), Rat(0));
    Rat d0inv = Rat(1) / den.coeff(0);
    for (long k = 0; k < count; ++k) {
        Rat acc = num.coeff(static_cast<int>(k));
        for (int i = 1; i <= den.deg() && i <= k; ++i)
            acc -= den.coeff(i) * out[static_cast<std::size_t>(k - i)];
        out[static_cast<std::size_t>(k)] = acc * d0inv;
    }
    return out;
}

// solve M x = b over K by Gaussian elimination (M square, invertible)
std::vector<NFElement> solve_in_field(const NumberField& F,
                                      std::vector<std::vector<NFElement>> M,
                                      std::vector<NFElement> b) {
    std::size_t n = M.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && F.is_zero(M[piv][col])) ++piv;
        assert(piv < n && "singular system over K");
        std::swap(M[piv], M[col]);
        std::swap(b[piv], b[col]);
        NFElement inv = F.inverse(M[col][col]);
        for (std::size_t j = col; j < n; ++j) M[col][j] = F.mul(M[col][j], inv);
        b[col] = F.mul(b[col], inv);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || F.is_zero(M[row][col])) continue;
            NFElement f = M[row][col];
            for (std::size_t j = col; j < n; ++j)
                M[row][j] = F.sub(M[row][j], F.mul(f, M[col][j]));
            b[row] = F.sub(b[row], F.mul(f, b[col]));
        }
    }
    return b;
}

} // namespace

ResidueSetReport residue_set(const LaurentPoly& P, const LaurentPoly& Q, long r,
                             const RootsConfig& cfg) {
    ResidueSetReport rep;
    rep.base = theo_g(P, Q, r);
    const CFiniteSeq& S = rep.base.S;
    long rm = rep.base.r * rep.base.m;

    Rat S0 = series_term(S, 0);
    rep.weighted_s0 = 0;
    for (long j = 0; j <= rm; ++j) {
        const Int& w = rep.base.weights[static_cast<std::size_t>(j)];
        if (w == 0) continue;
        long nj = rm - j;
        if (nj == 0) {
            rep.weighted_s0 += Rat(w) * S0;
        } else {
            rep.used_ns.push_back(nj);
            rep.used_weights.push_back(Rat(w));
        }
    }

    PartialFractionDecomp pfd = partial_fractions(S, cfg.degree_cap);
    rep.poly_part = pfd.poly_part;
    rep.excluded = rep.base.excluded;
    add_interference_primes(rep.poly_part, rep.used_ns, rep.excluded);

    // group the partial-fraction digits back into one summand per factor
    struct Group {
        Poly q;
        int mult = 0;
        std::vector<const PFTerm*> terms;
    };
    std::vector<Group> groups;
    for (const PFTerm& t : pfd.terms) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const Group& g) { return g.q == t.base; });
        if (it == groups.end()) {
            groups.push_back(Group{t.base, t.exp, {&t}});
        } else {
            it->mult = std::max(it->mult, t.exp);
            it->terms.push_back(&t);
        }
    }

    for (const Group& g : groups) {
        // simpleness of the factor
        SimpleVerdict sv = is_simple(g.q, cfg);
        if (!sv.simple) {
            rep.not_simple = true;
            rep.offending = g.q.str();
            rep.detail = "factor " + g.q.str() + " (reciprocal " + sv.qt.str() +
                         ") is not simple: " + sv.detail;
            return rep;
        }
        FactorAnalysis fa{g.q, g.mult, NumberField(sv.qt), sv.roots, {}, true, {}, {}};
        fa.autos = automorphism_group(fa.field, fa.roots);
        fa.abelian = group_is_abelian(fa.field, fa.autos);

        int d = fa.field.degree();
        int l = g.mult;

        // combined numerator A with summand A/q^l
        Poly A;
        for (const PFTerm* t : g.terms)
            A += t->numer * poly_pow(g.q, static_cast<unsigned long>(l - t->exp));

        // closed form: s_k = sum_t f_t(k) alpha_t^k, deg f_t < l; solve the
        // confluent Vandermonde system over K on k = 0..d*l-1
        std::vector<Rat> s = series_front(A, poly_pow(g.q, static_cast<unsigned long>(l)),
                                          static_cast<long>(d) * l);
        std::size_t nunk = static_cast<std::size_t>(d) * static_cast<std::size_t>(l);
        std::vector<std::vector<NFElement>> Mx(nunk, std::vector<NFElement>());
        std::vector<NFElement> bvec;
        for (std::size_t k = 0; k < nunk; ++k) {
            std::vector<NFElement> row;
            Rat ke(1); // k^e
            for (int e = 0; e < l; ++e) {
                for (int t = 0; t < d; ++t) {
                    NFElement apow = fa.field.pow(fa.roots[static_cast<std::size_t>(t)],
                                                  static_cast<long>(k));
                    row.push_back(fa.field.scale(ke, apow));
                }
                ke *= Rat(static_cast<long>(k));
            }
            Mx[k] = std::move(row);
            bvec.push_back(fa.field.from_rat(s[k]));
        }
        std::vector<NFElement> sol = solve_in_field(fa.field, std::move(Mx), std::move(bvec));
        // f_t(0) is the e = 0 block
        for (int t = 0; t < d; ++t)
            fa.f0.push_back(sol[static_cast<std::size_t>(t)]);
        // every coefficient denominator of every f_t must stay invertible mod p
        for (const NFElement& e : sol)
            for (const Rat& c : e.c)
                add_denominator_primes(c, rep.excluded);

        // r0[a][i] for each automorphism and needed index
        for (const Automorphism& au : fa.autos) {
            std::vector<Rat> vals;
            for (long n : rep.used_ns) {
                NFElement W = fa.field.zero();
                for (int t = 0; t < d; ++t) {
                    NFElement conj = fa.roots[static_cast<std::size_t>(au.sigma[static_cast<std::size_t>(t)])];
                    W = fa.field.add(W, fa.field.mul(fa.f0[static_cast<std::size_t>(t)],
                                                     fa.field.pow(conj, n)));
                }
                for (const Rat& c : W.c) add_denominator_primes(c, rep.excluded);
                vals.push_back(W.c[0]);
            }
            fa.r0.push_back(std::move(vals));
        }

        for (const Int& x : prime_divisors(Int(fa.field.modulus().lc().get_num())))
            rep.excluded.insert(x);
        Rat qdisc = poly_discriminant(fa.field.modulus());
        for (const Int& x : prime_divisors(Int(qdisc.get_num())))
            rep.excluded.insert(x);

        rep.factors.push_back(std::move(fa));
    }

    rep.exact = rep.factors.size() <= 1;
    for (const FactorAnalysis& fa : rep.factors)
        if (fa.mult > 1 || !fa.abelian) rep.exact = false;

    // Cartesian enumeration of automorphism choices
    std::vector<Rat> values;
    std::vector<std::size_t> choice(rep.factors.size(), 0);
    while (true) {
        Rat v = rep.weighted_s0;
        for (std::size_t i = 0; i < rep.used_ns.size(); ++i) {
            Rat contrib(0);
            for (std::size_t f = 0; f < rep.factors.size(); ++f)
                contrib += rep.factors[f].r0[choice[f]][i];
            v += rep.used_weights[i] * contrib;
        }
        values.push_back(v);
        // advance the mixed-radix counter
        std::size_t pos = 0;
        while (pos < choice.size()) {
            if (++choice[pos] < rep.factors[pos].autos.size()) break;
            choice[pos] = 0;
            ++pos;
        }
        if (pos == choice.size()) break;
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    rep.values = std::move(values);
    return rep;
}

std::optional<std::string> ResidueSetReport::inadmissible_reason(const Int& p) const {
    if (!is_prime(p)) return "not prime";
    if (p <= base.n) return "p <= n = " + std::to_string(base.n);
    if (excluded.count(p)) return "excluded prime";
    return std::nullopt;
}

Rat predict_prime(const ResidueSetReport& report, const Int& p) {
    if (report.not_simple)
        throw Error("not-simple", report.detail);
    if (auto why = report.inadmissible_reason(p))
        throw Error("inadmissible-prime", "p = " + p.get_str() + ": " + *why);

    Rat v = report.weighted_s0;
    for (const FactorAnalysis& fa : report.factors) {
        Automorphism frob;
        try {
            frob = frobenius_sigma(fa.field, fa.roots, p);
        } catch (const Error& e) {
            throw Error("inadmissible-prime",
                        "p = " + p.get_str() + ": Frobenius selection failed: " + e.what());
        }
        std::size_t idx = 0;
        while (idx < fa.autos.size() && !(fa.autos[idx].alpha_image == frob.alpha_image)) ++idx;
        assert(idx < fa.autos.size());
        for (std::size_t i = 0; i < report.used_ns.size(); ++i)
            v += report.used_weights[i] * fa.r0[idx][i];
    }
    return v;
}

} // namespace ctcong
