#include "ctcong/factor.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "ctcong/modpoly.hpp"

namespace ctcong {

// ---------------------------------------------------------------- F_p layer

namespace fp {

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, newt = 1, r = p, newr = a % p;
    if (newr < 0) newr += p;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    assert(r == 1 && "not a unit");
    return t < 0 ? t + p : t;
}

void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly from_poly(const Poly& f, std::int64_t p) {
    FpPoly r(static_cast<std::size_t>(f.deg() + 1));
    for (int i = 0; i <= f.deg(); ++i) {
        Rat c = f.coeff(i);
        Int num = mod_floor(Int(c.get_num()), p);
        Int den = mod_floor(Int(c.get_den()), p);
        std::int64_t d = den.get_si();
        assert(d != 0 && "denominator not a unit mod p");
        r[static_cast<std::size_t>(i)] =
            (num.get_si() % p) * inv_mod(d, p) % p;
    }
    trim(r);
    return r;
}

FpPoly add(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = v % p;
    }
    trim(r);
    return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        r[i] = ((v % p) + p) % p;
    }
    trim(r);
    return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

FpPoly scale(std::int64_t c, const FpPoly& a, std::int64_t p) {
    c %= p; if (c < 0) c += p;
    FpPoly r = a;
    for (auto& v : r) v = v * c % p;
    trim(r);
    return r;
}

std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& f, std::int64_t p) {
    assert(!f.empty());
    FpPoly r = a, q;
    if (deg(a) >= deg(f)) {
        q.assign(static_cast<std::size_t>(deg(a) - deg(f)) + 1, 0);
        std::int64_t li = inv_mod(f.back(), p);
        for (int k = deg(a) - deg(f); k >= 0; --k) {
            std::int64_t t = r[static_cast<std::size_t>(k + deg(f))] * li % p;
            q[static_cast<std::size_t>(k)] = t;
            if (t == 0) continue;
            for (int j = 0; j <= deg(f); ++j) {
                auto& cell = r[static_cast<std::size_t>(k + j)];
                cell = ((cell - t * f[static_cast<std::size_t>(j)]) % p + p) % p;
            }
        }
    }
    r.resize(static_cast<std::size_t>(std::max(deg(f), 0)));
    trim(r);
    trim(q);
    return {q, r};
}

FpPoly rem(FpPoly a, const FpPoly& f, std::int64_t p) {
    return divrem(a, f, p).second;
}

FpPoly monic(const FpPoly& a, std::int64_t p) {
    if (a.empty()) return a;
    return scale(inv_mod(a.back(), p), a, p);
}

FpPoly gcd(FpPoly a, FpPoly b, std::int64_t p) {
    while (!b.empty()) {
        FpPoly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

FpPoly xpow_mod(const Int& e, const FpPoly& f, std::int64_t p) {
    FpPoly base = rem({0, 1}, f, p);
    FpPoly acc = {1};
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = rem(mul(acc, base, p), f, p);
        k >>= 1;
        if (k > 0) base = rem(mul(base, base, p), f, p);
    }
    return acc;
}

FpPoly pow_mod(FpPoly g, Int e, const FpPoly& f, std::int64_t p) {
    FpPoly acc = {1};
    g = rem(std::move(g), f, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = rem(mul(acc, g, p), f, p);
        e >>= 1;
        if (e > 0) g = rem(mul(g, g, p), f, p);
    }
    return acc;
}

std::int64_t eval(const FpPoly& f, std::int64_t x, std::int64_t p) {
    std::int64_t acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        acc = (acc * x + *it) % p;
    return acc;
}

std::vector<std::int64_t> roots(const FpPoly& f, std::int64_t p) {
    std::vector<std::int64_t> out;
    for (std::int64_t x = 0; x < p; ++x)
        if (eval(f, x, p) == 0) out.push_back(x);
    return out;
}

std::vector<FpPoly> berlekamp(const FpPoly& f, std::int64_t p) {
    int d = deg(f);
    assert(d >= 1);
    if (d == 1) return {monic(f, p)};

    // Q[i][j]: coefficient of x^i in x^(j*p) mod f
    std::vector<FpPoly> xp(static_cast<std::size_t>(d));
    FpPoly xpow = xpow_mod(Int(p), f, p);
    xp[0] = {1};
    for (int j = 1; j < d; ++j) xp[static_cast<std::size_t>(j)] =
        rem(mul(xp[static_cast<std::size_t>(j - 1)], xpow, p), f, p);

    // kernel of (Q - I) by Gaussian elimination over F_p
    std::vector<std::vector<std::int64_t>> m(
        static_cast<std::size_t>(d), std::vector<std::int64_t>(static_cast<std::size_t>(d), 0));
    for (int j = 0; j < d; ++j) {
        const FpPoly& col = xp[static_cast<std::size_t>(j)];
        for (int i = 0; i < d; ++i) {
            std::int64_t v = i <= deg(col) ? col[static_cast<std::size_t>(i)] : 0;
            if (i == j) v = ((v - 1) % p + p) % p;
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        }
    }
    std::vector<int> pivot_col(static_cast<std::size_t>(d), -1);
    int rank = 0;
    for (int col = 0; col < d && rank < d; ++col) {
        int piv = -1;
        for (int row = rank; row < d; ++row)
            if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) { piv = row; break; }
        if (piv < 0) continue;
        std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(rank)]);
        std::int64_t li = inv_mod(m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], p);
        for (int j = 0; j < d; ++j)
            m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] =
                m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] * li % p;
        for (int row = 0; row < d; ++row) {
            if (row == rank) continue;
            std::int64_t c = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (c == 0) continue;
            for (int j = 0; j < d; ++j) {
                auto& cell = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
                cell = ((cell - c * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)]) % p + p) % p;
            }
        }
        pivot_col[static_cast<std::size_t>(rank)] = col;
        ++rank;
    }
    std::vector<FpPoly> basis; // kernel vectors as polynomials
    std::vector<bool> is_pivot(static_cast<std::size_t>(d), false);
    for (int r = 0; r < rank; ++r) is_pivot[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = true;
    for (int col = 0; col < d; ++col) {
        if (is_pivot[static_cast<std::size_t>(col)]) continue;
        FpPoly v(static_cast<std::size_t>(d), 0);
        v[static_cast<std::size_t>(col)] = 1;
        for (int r = 0; r < rank; ++r) {
            std::int64_t c = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (c != 0)
                v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = (p - c) % p;
        }
        trim(v);
        basis.push_back(std::move(v));
    }

    std::size_t nfactors = basis.size(); // dim of Berlekamp subalgebra
    std::vector<FpPoly> factors = {monic(f, p)};
    if (nfactors == 1) return factors;

    for (const auto& v : basis) {
        if (deg(v) <= 0) continue; // the constant vector never separates
        if (factors.size() == nfactors) break;
        std::vector<FpPoly> next;
        for (const auto& u : factors) {
            if (deg(u) == 1) { next.push_back(u); continue; }
            FpPoly u_rest = u;
            for (std::int64_t c = 0; c < p && deg(u_rest) > 0; ++c) {
                FpPoly vc = v;
                if (vc.empty()) vc.push_back(0);
                vc[0] = ((vc[0] - c) % p + p) % p;
                trim(vc);
                FpPoly g = gcd(u_rest, vc, p);
                if (deg(g) > 0 && deg(g) < deg(u_rest)) {
                    next.push_back(g);
                    u_rest = divrem(u_rest, g, p).first;
                }
            }
            if (deg(u_rest) > 0) next.push_back(monic(u_rest, p));
        }
        factors = std::move(next);
    }
    // the subalgebra separates all factors, so the sweep must end split
    assert(factors.size() == nfactors);
    return factors;
}

} // namespace fp

// -------------------------------------------------------- Z/p^k Hensel layer

namespace {

using ZkPoly = std::vector<Int>; // coefficients in [0, m)

void zk_trim(ZkPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int zk_deg(const ZkPoly& f) { return static_cast<int>(f.size()) - 1; }

ZkPoly zk_red(const ZkPoly& f, const Int& m) {
    ZkPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mod_floor(f[i], m);
    zk_trim(r);
    return r;
}

ZkPoly zk_add(const ZkPoly& a, const ZkPoly& b, const Int& m) {
    ZkPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = mod_floor((i < a.size() ? a[i] : Int(0)) + (i < b.size() ? b[i] : Int(0)), m);
    zk_trim(r);
    return r;
}

ZkPoly zk_sub(const ZkPoly& a, const ZkPoly& b, const Int& m) {
    ZkPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = mod_floor((i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0)), m);
    zk_trim(r);
    return r;
}

ZkPoly zk_mul(const ZkPoly& a, const ZkPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZkPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return zk_red(r, m);
}

// division by a monic divisor
std::pair<ZkPoly, ZkPoly> zk_divrem_monic(const ZkPoly& a, const ZkPoly& f, const Int& m) {
    assert(!f.empty() && f.back() == 1);
    ZkPoly r = a, q;
    if (zk_deg(a) >= zk_deg(f)) {
        q.assign(static_cast<std::size_t>(zk_deg(a) - zk_deg(f)) + 1, Int(0));
        for (int k = zk_deg(a) - zk_deg(f); k >= 0; --k) {
            Int t = r[static_cast<std::size_t>(k + zk_deg(f))];
            q[static_cast<std::size_t>(k)] = t;
            if (t == 0) continue;
            for (int j = 0; j <= zk_deg(f); ++j)
                r[static_cast<std::size_t>(k + j)] =
                    mod_floor(r[static_cast<std::size_t>(k + j)] - t * f[static_cast<std::size_t>(j)], m);
        }
    }
    r.resize(static_cast<std::size_t>(std::max(zk_deg(f), 0)));
    zk_trim(r);
    zk_trim(q);
    return {q, r};
}

ZkPoly zk_from_fp(const fp::FpPoly& f) {
    ZkPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    return r;
}

// one quadratic Hensel step: f = g*h (mod m), s*g + t*h = 1 (mod m)
// -> same invariants mod m^2 (g, h monic; deg s < deg h, deg t < deg g)
void hensel_step(const ZkPoly& f, ZkPoly& g, ZkPoly& h, ZkPoly& s, ZkPoly& t, const Int& m) {
    Int m2 = m * m;
    ZkPoly e = zk_sub(zk_red(f, m2), zk_mul(g, h, m2), m2);
    auto [q, r] = zk_divrem_monic(zk_mul(s, e, m2), h, m2);
    ZkPoly g1 = zk_add(g, zk_add(zk_mul(t, e, m2), zk_mul(q, g, m2), m2), m2);
    ZkPoly h1 = zk_add(h, r, m2);
    ZkPoly b = zk_sub(zk_add(zk_mul(s, g1, m2), zk_mul(t, h1, m2), m2), {Int(1)}, m2);
    auto [c, d] = zk_divrem_monic(zk_mul(s, b, m2), h1, m2);
    ZkPoly s1 = zk_sub(s, d, m2);
    ZkPoly t1 = zk_sub(t, zk_add(zk_mul(t, b, m2), zk_mul(c, g1, m2), m2), m2);
    g = std::move(g1); h = std::move(h1); s = std::move(s1); t = std::move(t1);
}

// lift the factorization f = prod(parts) from mod p to mod m, where m is a
// repeated square of p; f is already reduced mod m
std::vector<ZkPoly> hensel_lift_tree(const ZkPoly& f, const std::vector<fp::FpPoly>& parts,
                                     std::int64_t p, const Int& m) {
    if (parts.size() == 1)
        return {zk_red(f, m)};
    // split into two halves, lift the pair, recurse
    std::size_t half = parts.size() / 2;
    std::vector<fp::FpPoly> left(parts.begin(), parts.begin() + static_cast<long>(half));
    std::vector<fp::FpPoly> right(parts.begin() + static_cast<long>(half), parts.end());
    fp::FpPoly gp = {1}, hp = {1};
    for (const auto& u : left) gp = fp::mul(gp, u, p);
    for (const auto& u : right) hp = fp::mul(hp, u, p);
    // Bezout over F_p
    fp::FpPoly sp, tp;
    {
        fp::FpPoly r0 = gp, r1 = hp;
        fp::FpPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
        while (!r1.empty()) {
            auto [q, r2] = fp::divrem(r0, r1, p);
            fp::FpPoly s2 = fp::sub(s0, fp::mul(q, s1, p), p);
            fp::FpPoly t2 = fp::sub(t0, fp::mul(q, t1, p), p);
            r0 = r1; r1 = r2; s0 = s1; s1 = s2; t0 = t1; t1 = t2;
        }
        assert(fp::deg(r0) == 0 && "factors not coprime mod p");
        std::int64_t li = fp::inv_mod(r0[0], p);
        sp = fp::scale(li, s0, p);
        tp = fp::scale(li, t0, p);
    }
    ZkPoly g = zk_from_fp(gp), h = zk_from_fp(hp), s = zk_from_fp(sp), t = zk_from_fp(tp);
    Int cur = p;
    while (cur < m) {
        hensel_step(zk_red(f, cur * cur), g, h, s, t, cur);
        cur = cur * cur;
    }
    auto lf = hensel_lift_tree(g, left, p, m);
    auto rf = hensel_lift_tree(h, right, p, m);
    lf.insert(lf.end(), rf.begin(), rf.end());
    return lf;
}

Poly zk_to_poly_balanced(const ZkPoly& f, const Int& m) {
    std::vector<Rat> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Int v = f[i];
        if (2 * v > m) v -= m;
        c[i] = Rat(v);
    }
    return Poly(std::move(c));
}

// Mignotte-style coefficient bound for monic integer factors of monic g
Int factor_coeff_bound(const Poly& g) {
    Rat norm2(0);
    for (const auto& c : g.coeffs()) norm2 += c * c;
    Int n2 = Int(norm2.get_num()) / Int(norm2.get_den()) + 1;
    Int root = sqrt(n2) + 1;
    Int b = root << static_cast<unsigned>(g.deg() + 1);
    return b;
}

// factor a monic squarefree integer polynomial (deg >= 1) into monic
// irreducible integer factors: Berlekamp mod p, Hensel lift, recombine
std::vector<Poly> factor_monic_squarefree(const Poly& g) {
    int d = g.deg();
    if (d == 1) return {g};

    // pick an odd prime keeping g squarefree mod p
    std::int64_t p = 0;
    Rat disc = poly_discriminant(g);
    Int dnum = Int(disc.get_num()) * Int(disc.get_den()); // integer poly: den = 1
    for (std::int64_t cand = 3;; cand += 2) {
        if (!is_prime(Int(cand))) continue;
        if (mpz_divisible_ui_p(dnum.get_mpz_t(), static_cast<unsigned long>(cand))) continue;
        p = cand;
        break;
    }

    auto parts = fp::berlekamp(fp::from_poly(g, p), p);
    if (parts.size() == 1) return {g};
    std::sort(parts.begin(), parts.end());

    Int target = 2 * factor_coeff_bound(g) + 1;
    Int modulus = p;
    while (modulus < target) modulus = modulus * modulus;
    ZkPoly gz(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) gz[static_cast<std::size_t>(i)] = Int(g.coeff(i).get_num());
    auto lifted = hensel_lift_tree(zk_red(gz, modulus), parts, p, modulus);

    // subset recombination over the lifted factors
    std::vector<Poly> result;
    std::vector<ZkPoly> pool = lifted;
    Poly remaining = g;
    bool changed = true;
    while (changed) {
        changed = false;
        std::size_t n = pool.size();
        if (n == 0) break;
        for (std::size_t sz = 1; sz <= n / 2 && !changed; ++sz) {
            // iterate subsets of size sz via bitmask (n <= 8)
            for (std::uint32_t mask = 1; mask < (1u << n) && !changed; ++mask) {
                if (static_cast<std::size_t>(__builtin_popcount(mask)) != sz) continue;
                ZkPoly prod = {Int(1)};
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (1u << i)) prod = zk_mul(prod, pool[i], modulus);
                Poly cand = zk_to_poly_balanced(prod, modulus);
                auto [q, r] = poly_divrem(remaining, cand);
                if (r.is_zero() && q.has_integer_coeffs() && cand.has_integer_coeffs()) {
                    result.push_back(cand);
                    remaining = q;
                    std::vector<ZkPoly> next;
                    for (std::size_t i = 0; i < n; ++i)
                        if (!(mask & (1u << i))) next.push_back(pool[i]);
                    pool = std::move(next);
                    changed = true;
                }
            }
        }
    }
    if (remaining.deg() > 0) result.push_back(remaining);
    return result;
}

} // namespace

// ------------------------------------------------------------------ factor_q

Factorization factor_q(const Poly& q, int degree_cap) {
    assert(!q.is_zero());
    if (q.deg() > degree_cap)
        throw Error("degree-limit",
                    "factorization degree " + std::to_string(q.deg()) +
                        " exceeds the cap (" + std::to_string(degree_cap) + ")");

    Factorization out;
    out.unit = q.content();
    Poly f = q.primitive_part();
    if (f.deg() <= 0) return out;

    // Yun squarefree decomposition (f primitive, lc > 0)
    std::vector<std::pair<Poly, int>> squarefree;
    {
        Poly fm = f.monic();
        Poly g = poly_gcd(fm, fm.derivative());
        Poly b = poly_divrem(fm, g).first;
        Poly c = poly_divrem(fm.derivative(), g).first;
        Poly dpoly = c - b.derivative();
        int i = 1;
        while (b.deg() > 0) {
            Poly a = poly_gcd(b, dpoly);
            if (a.deg() > 0) squarefree.emplace_back(a, i);
            b = poly_divrem(b, a).first;
            c = poly_divrem(dpoly, a).first;
            dpoly = c - b.derivative();
            ++i;
        }
    }

    for (auto& [sf, mult] : squarefree) {
        // monicize: for h = primitive squarefree with lc b, the roots of
        // b^(d-1) h(x/b) are b*(roots of h) and the polynomial is monic
        Poly h = sf.primitive_part();
        Int b(h.lc().get_num());
        Poly hm;
        {
            int d = h.deg();
            std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
            // coefficient of y^i in b^(d-1) h(y/b) is h_i * b^(d-1-i)
            c[static_cast<std::size_t>(d)] = 1;
            Rat scale(1);
            for (int i = d - 1; i >= 0; --i) {
                c[static_cast<std::size_t>(i)] = h.coeff(i) * scale;
                scale *= Rat(b);
            }
            hm = Poly(std::move(c));
        }
        auto monic_factors = factor_monic_squarefree(hm);
        for (const auto& mf : monic_factors) {
            // map back: factor of h is primitive_part(mf(b*x))
            int d = mf.deg();
            std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
            Rat pw(1);
            for (int i = 0; i <= d; ++i) {
                c[static_cast<std::size_t>(i)] = mf.coeff(i) * pw;
                pw *= Rat(b);
            }
            Poly back = Poly(std::move(c)).primitive_part();
            out.factors.emplace_back(back, mult);
        }
    }

    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b2) {
                  if (a.first.deg() != b2.first.deg()) return a.first.deg() < b2.first.deg();
                  return a.first.str() < b2.first.str();
              });
    return out;
}

Poly Factorization::reassemble() const {
    Poly r = Poly::constant(unit);
    for (const auto& [f, m] : factors)
        r = r * poly_pow(f, static_cast<unsigned long>(m));
    return r;
}

} // namespace ctcong
