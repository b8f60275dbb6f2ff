#include "ctcong/poly.hpp"

#include <cassert>

#include "ctcong/expr.hpp"

namespace ctcong {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(int e, const Rat& c) {
    assert(e >= 0);
    if (c == 0) return Poly();
    std::vector<Rat> v(static_cast<std::size_t>(e) + 1, Rat(0));
    v.back() = c;
    return Poly(std::move(v));
}

bool Poly::has_integer_coeffs() const {
    for (const auto& a : c_)
        if (a.get_den() != 1) return false;
    return true;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

Poly& Poly::operator+=(const Poly& g) {
    if (g.c_.size() > c_.size()) c_.resize(g.c_.size(), Rat(0));
    for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] += g.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& g) {
    if (g.c_.size() > c_.size()) c_.resize(g.c_.size(), Rat(0));
    for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] -= g.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly();
    std::vector<Rat> r(f.c_.size() + g.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
        if (f.c_[i] == 0) continue;
        for (std::size_t j = 0; j < g.c_.size(); ++j)
            r[i + j] += f.c_[i] * g.c_[j];
    }
    return Poly(std::move(r));
}

Poly operator*(const Rat& a, const Poly& f) {
    if (a == 0) return Poly();
    Poly r = f;
    for (auto& c : r.c_) c *= a;
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return Poly(std::move(r));
}

Poly Poly::reverse() const {
    std::vector<Rat> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    Rat inv = Rat(1) / lc();
    return inv * *this;
}

Rat Poly::content() const {
    if (is_zero()) return Rat(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& a : c_) {
        num_gcd = gcd(num_gcd, Int(a.get_num()));
        den_lcm = lcm(den_lcm, Int(a.get_den()));
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    if (lc() < 0) c = -c;
    return c;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return Poly();
    return (Rat(1) / content()) * *this;
}

std::pair<int, Poly> Poly::strip_x() const {
    if (is_zero()) return {0, Poly()};
    std::size_t v = 0;
    while (v < c_.size() && c_[v] == 0) ++v;
    std::vector<Rat> r(c_.begin() + static_cast<long>(v), c_.end());
    return {static_cast<int>(v), Poly(std::move(r))};
}

std::string Poly::str() const { return pretty_print(poly_to_laurent(*this)); }

std::pair<Poly, Poly> poly_divrem(const Poly& f, const Poly& g) {
    assert(!g.is_zero());
    Poly rem = f;
    if (f.deg() < g.deg()) return {Poly(), rem};
    std::vector<Rat> q(static_cast<std::size_t>(f.deg() - g.deg()) + 1, Rat(0));
    std::vector<Rat> r = f.coeffs();
    const auto& gc = g.coeffs();
    Rat ginv = Rat(1) / g.lc();
    for (int k = f.deg() - g.deg(); k >= 0; --k) {
        Rat t = r[static_cast<std::size_t>(k + g.deg())] * ginv;
        q[static_cast<std::size_t>(k)] = t;
        if (t == 0) continue;
        for (int j = 0; j <= g.deg(); ++j)
            r[static_cast<std::size_t>(k + j)] -= t * gc[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(std::max(g.deg(), 0)));
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly poly_gcd(Poly f, Poly g) {
    while (!g.is_zero()) {
        Poly r = poly_divrem(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

ExtGcd poly_ext_gcd(const Poly& f1, const Poly& f2) {
    Poly r0 = f1, r1 = f2;
    Poly s0 = Poly::one(), s1 = Poly::zero();
    Poly t0 = Poly::zero(), t1 = Poly::one();
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divrem(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {Poly(), Poly(), Poly()};
    Rat inv = Rat(1) / r0.lc();
    return {inv * r0, inv * s0, inv * t0};
}

Rat poly_resultant(Poly f, Poly g) {
    // Euclidean remainder sequence with the standard degree/lc bookkeeping
    if (f.is_zero() || g.is_zero()) return Rat(0);
    Rat res(1);
    bool swapped = false;
    while (true) {
        if (f.deg() < g.deg()) {
            if ((f.deg() & 1) && (g.deg() & 1)) res = -res;
            std::swap(f, g);
            swapped = !swapped;
        }
        if (g.deg() == 0) {
            Rat gl = g.lc();
            Rat out = res;
            // res(f, c) = c^deg(f)
            for (int i = 0; i < f.deg(); ++i) out *= gl;
            return out;
        }
        Poly r = poly_divrem(f, g).second;
        if (r.is_zero()) return Rat(0);
        Rat gl = g.lc();
        // res(f,g) = lc(g)^(deg f - deg r) * (-1)^(deg f * deg g) * res(g, r)... sign
        // handled incrementally: res(f,g) = (-1)^(df*dg) lc(g)^(df-dr) res(g,r)
        int df = f.deg(), dg = g.deg(), dr = r.deg();
        if ((df & 1) && (dg & 1)) res = -res;
        Rat pw(1);
        for (int i = 0; i < df - dr; ++i) pw *= gl;
        res *= pw;
        f = std::move(g);
        g = std::move(r);
    }
}

Rat poly_discriminant(const Poly& f) {
    assert(f.deg() >= 1);
    Rat r = poly_resultant(f, f.derivative());
    r /= f.lc();
    int d = f.deg();
    long s = static_cast<long>(d) * (d - 1) / 2;
    if (s % 2 != 0) r = -r;
    return r;
}

Poly poly_pow(const Poly& f, unsigned long e) {
    Poly acc = Poly::one();
    Poly base = f;
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return acc;
}

std::pair<long, Poly> laurent_split(const LaurentPoly& f) {
    if (f.is_zero()) return {0, Poly()};
    long low = f.lowest_degree();
    std::vector<Rat> v(static_cast<std::size_t>(f.highest_degree() - low) + 1, Rat(0));
    for (const auto& [e, c] : f.terms())
        v[static_cast<std::size_t>(e - low)] = c;
    return {low, Poly(std::move(v))};
}

LaurentPoly poly_to_laurent(const Poly& f, long shift) {
    LaurentPoly r;
    for (int i = 0; i <= f.deg(); ++i)
        r.set_coeff(shift + i, f.coeff(i));
    return r;
}

} // namespace ctcong
