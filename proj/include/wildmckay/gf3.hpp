#pragma once

// Exact arithmetic in GF(3^m).
//
// A FieldCtx is built either for a requested root-of-unity order s (the
// field is then the smallest extension of GF(3) whose multiplicative group
// contains an element of order s, i.e. m = ord_s(3)) or for an explicit
// extension degree.  The modulus is the lexicographically first monic
// irreducible polynomial of degree m, coefficients compared low-to-high
// (constant term first), so every context is canonical and reproducible.
//
// Elements are coefficient vectors of length m (low-to-high), and all
// operations are pure functions on the context.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace wmk {

// --- GF(3) scalar helpers ----------------------------------------------------

inline uint8_t g3_add(uint8_t a, uint8_t b) { return uint8_t((a + b) % 3); }
inline uint8_t g3_sub(uint8_t a, uint8_t b) { return uint8_t((a + 3 - b) % 3); }
inline uint8_t g3_neg(uint8_t a) { return uint8_t((3 - a) % 3); }
inline uint8_t g3_mul(uint8_t a, uint8_t b) { return uint8_t((a * b) % 3); }
inline uint8_t g3_inv(uint8_t a) {
    if (a == 0) throw DivisionByZero("gf3: inverse of zero");
    return a;  // 1*1 = 1, 2*2 = 4 = 1
}

// --- polynomials over GF(3) ----------------------------------------------------
// Coefficient vector, low-to-high, with no trailing zero (zero poly is empty).

using GF3Poly = std::vector<uint8_t>;

inline void poly_trim(GF3Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_degree(const GF3Poly& p) { return int(p.size()) - 1; }

inline GF3Poly poly_add(const GF3Poly& a, const GF3Poly& b) {
    GF3Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint8_t x = i < a.size() ? a[i] : 0;
        uint8_t y = i < b.size() ? b[i] : 0;
        r[i] = g3_add(x, y);
    }
    poly_trim(r);
    return r;
}

inline GF3Poly poly_sub(const GF3Poly& a, const GF3Poly& b) {
    GF3Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        uint8_t x = i < a.size() ? a[i] : 0;
        uint8_t y = i < b.size() ? b[i] : 0;
        r[i] = g3_sub(x, y);
    }
    poly_trim(r);
    return r;
}

inline GF3Poly poly_mul(const GF3Poly& a, const GF3Poly& b) {
    if (a.empty() || b.empty()) return {};
    GF3Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = g3_add(r[i + j], g3_mul(a[i], b[j]));
    }
    poly_trim(r);
    return r;
}

// Remainder of a modulo b (b != 0).
inline GF3Poly poly_mod(GF3Poly a, const GF3Poly& b) {
    if (b.empty()) throw DivisionByZero("gf3 poly: division by zero polynomial");
    const uint8_t lead_inv = g3_inv(b.back());
    while (a.size() >= b.size()) {
        uint8_t c = g3_mul(a.back(), lead_inv);
        if (c != 0) {
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = g3_sub(a[shift + i], g3_mul(c, b[i]));
        }
        a.pop_back();
        poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline GF3Poly poly_gcd(GF3Poly a, GF3Poly b) {
    while (!b.empty()) {
        GF3Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {  // make monic
        uint8_t inv = g3_inv(a.back());
        for (auto& c : a) c = g3_mul(c, inv);
    }
    return a;
}

// x^(3^k) mod p, computed by k successive Frobenius (cube) steps.
inline GF3Poly poly_frobenius_power(unsigned k, const GF3Poly& p) {
    GF3Poly t = poly_mod(GF3Poly{0, 1}, p);  // x mod p
    for (unsigned i = 0; i < k; ++i) {
        GF3Poly sq = poly_mod(poly_mul(t, t), p);
        t = poly_mod(poly_mul(sq, t), p);
    }
    return t;
}

// Rabin irreducibility test for a monic polynomial of degree >= 1.
inline bool poly_is_irreducible(const GF3Poly& p) {
    int m = poly_degree(p);
    if (m < 1 || p.back() != 1) return false;
    if (m == 1) return true;
    const GF3Poly x{0, 1};
    // x^(3^m) == x mod p
    if (poly_sub(poly_frobenius_power(unsigned(m), p), poly_mod(x, p)) != GF3Poly{})
        return false;
    // gcd(x^(3^(m/t)) - x, p) == 1 for every prime t | m
    for (int t = 2; t <= m; ++t) {
        if (m % t != 0) continue;
        bool prime = true;
        for (int d = 2; d * d <= t; ++d)
            if (t % d == 0) { prime = false; break; }
        if (!prime) continue;
        GF3Poly g = poly_gcd(poly_sub(poly_frobenius_power(unsigned(m / t), p), x), p);
        if (poly_degree(g) > 0) return false;
    }
    return true;
}

// First monic irreducible of degree m, coefficient tuples (c_0,...,c_{m-1})
// enumerated in lexicographic order with the constant term most significant.
inline GF3Poly first_irreducible(unsigned m) {
    if (m == 0) throw Error("gf3: modulus degree must be positive");
    if (m == 1) return GF3Poly{0, 1};  // x is the lex-first monic of degree 1
    uint64_t rest = 1;  // 3^(m-1) combinations of c_1..c_{m-1}
    for (unsigned i = 0; i + 1 < m; ++i) rest *= 3;
    // Constant term 0 always gives the root 0, so the lex scan over
    // (c_0,...,c_{m-1}) effectively starts at c_0 = 1.
    for (uint8_t c0 = 1; c0 <= 2; ++c0) {
        for (uint64_t idx = 0; idx < rest; ++idx) {
            GF3Poly p(m + 1, 0);
            p[m] = 1;
            p[0] = c0;
            uint64_t v = idx;
            for (unsigned j = m; j-- > 1;) {  // slot c_{m-1} varies fastest
                p[j] = uint8_t(v % 3);
                v /= 3;
            }
            if (poly_is_irreducible(p)) return p;
        }
    }
    throw Error("gf3: no irreducible polynomial found");  // unreachable
}

inline std::string poly_to_string(const GF3Poly& p, const std::string& var = "x") {
    if (p.empty()) return "0";
    std::string out;
    for (int i = poly_degree(p); i >= 0; --i) {
        if (p[size_t(i)] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || p[size_t(i)] != 1) out += std::to_string(int(p[size_t(i)]));
        if (i >= 1) {
            if (p[size_t(i)] != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// --- field elements and context -------------------------------------------------

struct FieldElement {
    std::vector<uint8_t> c;  // coefficients, length = extension degree
    friend bool operator==(const FieldElement&, const FieldElement&) = default;
    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

inline std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> ps;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

class FieldCtx {
  public:
    // Smallest extension of GF(3) containing an element of multiplicative
    // order s.  Requires gcd(s,3) = 1.
    static FieldCtx for_order(uint64_t s) {
        if (s == 0) throw OrderUnavailable("field: order must be positive");
        if (s % 3 == 0)
            throw TameViolation("field: no root of unity of order divisible by 3 in characteristic 3");
        unsigned m = 1;
        uint64_t t = 3 % s;
        while (t != 1 % s) {
            t = (t * 3) % s;
            ++m;
            if (m > kMaxDegree)
                throw OrderUnavailable("field: extension degree exceeds supported bound");
        }
        return FieldCtx(m, s);
    }

    // Extension of given degree; hosts roots of unity of every order dividing 3^m - 1.
    static FieldCtx of_degree(unsigned m) {
        if (m == 0 || m > kMaxDegree)
            throw OrderUnavailable("field: unsupported extension degree");
        uint64_t q = 1;
        for (unsigned i = 0; i < m; ++i) q *= 3;
        return FieldCtx(m, q - 1);
    }

    unsigned degree() const { return m_; }
    uint64_t order() const { return q_; }         // q = 3^m
    uint64_t hosted_order() const { return s_; }  // s | q - 1
    const GF3Poly& modulus() const { return mod_; }

    FieldElement zero() const { return FieldElement{std::vector<uint8_t>(m_, 0)}; }
    FieldElement one() const {
        FieldElement e = zero();
        e.c[0] = 1;
        return e;
    }

    // Element <-> integer index (base-3 digits, coefficient j = digit j).
    FieldElement from_int(uint64_t idx) const {
        FieldElement e = zero();
        for (unsigned j = 0; j < m_ && idx; ++j) {
            e.c[j] = uint8_t(idx % 3);
            idx /= 3;
        }
        return e;
    }
    uint64_t to_int(const FieldElement& a) const {
        check(a);
        uint64_t v = 0;
        for (unsigned j = m_; j-- > 0;) v = v * 3 + a.c[j];
        return v;
    }

    // Embed a GF(3) scalar.
    FieldElement from_scalar(uint8_t v) const { return from_int(v % 3); }

    bool is_zero(const FieldElement& a) const {
        check(a);
        return std::all_of(a.c.begin(), a.c.end(), [](uint8_t x) { return x == 0; });
    }
    bool is_one(const FieldElement& a) const { return a == one(); }

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        check(a);
        check(b);
        FieldElement r = zero();
        for (unsigned i = 0; i < m_; ++i) r.c[i] = g3_add(a.c[i], b.c[i]);
        return r;
    }
    FieldElement sub(const FieldElement& a, const FieldElement& b) const {
        check(a);
        check(b);
        FieldElement r = zero();
        for (unsigned i = 0; i < m_; ++i) r.c[i] = g3_sub(a.c[i], b.c[i]);
        return r;
    }
    FieldElement neg(const FieldElement& a) const { return sub(zero(), a); }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        check(a);
        check(b);
        GF3Poly pa(a.c.begin(), a.c.end()), pb(b.c.begin(), b.c.end());
        poly_trim(pa);
        poly_trim(pb);
        GF3Poly pr = poly_mod(poly_mul(pa, pb), mod_);
        FieldElement r = zero();
        for (size_t i = 0; i < pr.size(); ++i) r.c[i] = pr[i];
        return r;
    }

    FieldElement pow(FieldElement a, uint64_t e) const {
        check(a);
        FieldElement r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    FieldElement inv(const FieldElement& a) const {
        if (is_zero(a)) throw DivisionByZero("field: inverse of zero");
        return pow(a, q_ - 2);
    }

    // Multiplicative order of a nonzero element.
    uint64_t element_order(const FieldElement& a) const {
        if (is_zero(a)) throw DivisionByZero("field: order of zero");
        uint64_t ord = q_ - 1;
        for (uint64_t p : prime_factors(q_ - 1))
            while (ord % p == 0 && is_one(pow(a, ord / p))) ord /= p;
        return ord;
    }

    // Canonical generator of the multiplicative group: the first element, in
    // index order, of order q - 1.
    const FieldElement& primitive_element() const { return gen_; }

    // Canonical primitive n-th root of unity, n | s.
    FieldElement root_of_unity(uint64_t n) const {
        if (n == 0 || s_ % n != 0)
            throw OrderUnavailable("field: requested root order does not divide hosted order");
        return pow(gen_, (q_ - 1) / n);
    }

    std::string describe() const {
        return "GF(3^" + std::to_string(m_) + "), modulus " + poly_to_string(mod_);
    }

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
        return a.m_ == b.m_ && a.s_ == b.s_;  // modulus is determined by m
    }

    static constexpr unsigned kMaxDegree = 40;  // keeps q = 3^m inside uint64

  private:
    FieldCtx(unsigned m, uint64_t s) : m_(m), s_(s) {
        q_ = 1;
        for (unsigned i = 0; i < m_; ++i) q_ *= 3;
        if ((q_ - 1) % s_ != 0)
            throw OrderUnavailable("field: hosted order does not divide group order");
        mod_ = first_irreducible(m_);
        for (uint64_t idx = 1; idx < q_; ++idx) {
            FieldElement cand = from_int(idx);
            if (element_order_raw(cand) == q_ - 1) {
                gen_ = cand;
                break;
            }
        }
    }

    uint64_t element_order_raw(const FieldElement& a) const {
        uint64_t ord = q_ - 1;
        for (uint64_t p : prime_factors(q_ - 1))
            while (ord % p == 0 && is_one(pow(a, ord / p))) ord /= p;
        return ord;
    }

    void check(const FieldElement& a) const {
        if (a.c.size() != m_)
            throw RepresentationError("field: element does not belong to this context");
    }

    unsigned m_ = 1;
    uint64_t s_ = 1;
    uint64_t q_ = 3;
    GF3Poly mod_;
    FieldElement gen_;
};

}  // namespace wmk
