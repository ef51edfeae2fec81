#pragma once

// Sparse multivariate polynomials over GF(3).
//
// A polynomial carries its ring (the ordered list of variable names); all
// binary operations require identical rings.  Terms live in a std::map keyed
// by exponent vectors, so iteration order — and hence printing, hashing and
// matrix assembly — is deterministic.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gf3.hpp"

namespace wmk {

using Exps = std::vector<uint32_t>;

struct PolyRing {
    std::vector<std::string> vars;
    size_t size() const { return vars.size(); }
    friend bool operator==(const PolyRing&, const PolyRing&) = default;
};

class MPoly {
  public:
    MPoly() = default;
    explicit MPoly(PolyRing ring) : ring_(std::move(ring)) {}

    static MPoly constant(const PolyRing& ring, int64_t c) {
        MPoly p(ring);
        uint8_t v = uint8_t(((c % 3) + 3) % 3);
        if (v != 0) p.terms_[Exps(ring.size(), 0)] = v;
        return p;
    }
    static MPoly variable(const PolyRing& ring, size_t i) {
        if (i >= ring.size()) throw Error("mpoly: variable index out of range");
        MPoly p(ring);
        Exps e(ring.size(), 0);
        e[i] = 1;
        p.terms_[e] = 1;
        return p;
    }
    static MPoly monomial(const PolyRing& ring, Exps e, int64_t c) {
        if (e.size() != ring.size()) throw Error("mpoly: exponent arity mismatch");
        MPoly p(ring);
        uint8_t v = uint8_t(((c % 3) + 3) % 3);
        if (v != 0) p.terms_[std::move(e)] = v;
        return p;
    }

    const PolyRing& ring() const { return ring_; }
    const std::map<Exps, uint8_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.same_ring(b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.bump(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        a.same_ring(b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.bump(e, g3_neg(c));
        return r;
    }
    friend MPoly operator-(const MPoly& a) { return MPoly::constant(a.ring_, 0) - a; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.same_ring(b);
        MPoly r(a.ring_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exps e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.bump(e, g3_mul(ca, cb));
            }
        return r;
    }
    friend MPoly operator*(int64_t c, const MPoly& a) {
        return MPoly::constant(a.ring_, c) * a;
    }

    MPoly pow(uint32_t k) const {
        MPoly r = MPoly::constant(ring_, 1);
        MPoly base = *this;
        while (k) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    // Ring morphism determined by variable images (all in the target ring).
    MPoly substitute(const std::vector<MPoly>& images) const {
        if (images.size() != ring_.size())
            throw Error("mpoly: substitution needs one image per variable");
        PolyRing target = images.empty() ? ring_ : images[0].ring();
        for (const MPoly& im : images)
            if (!(im.ring() == target)) throw Error("mpoly: substitution images in mixed rings");
        // memoized power ladders per variable
        std::vector<std::vector<MPoly>> powers(images.size());
        MPoly out(target);
        for (const auto& [e, c] : terms_) {
            MPoly term = MPoly::constant(target, c);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                auto& ladder = powers[i];
                if (ladder.empty()) ladder.push_back(MPoly::constant(target, 1));
                while (ladder.size() <= e[i]) ladder.push_back(ladder.back() * images[i]);
                term = term * ladder[e[i]];
            }
            out = out + term;
        }
        return out;
    }

    MPoly derivative(size_t var) const {
        if (var >= ring_.size()) throw Error("mpoly: variable index out of range");
        MPoly r(ring_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            uint8_t nc = g3_mul(c, uint8_t(e[var] % 3));
            if (nc == 0) continue;
            Exps ne = e;
            --ne[var];
            r.bump(ne, nc);
        }
        return r;
    }

    int64_t degree() const {
        int64_t d = -1;
        for (const auto& [e, c] : terms_) {
            int64_t t = 0;
            for (uint32_t x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }

    int64_t weighted_degree(const std::vector<int64_t>& w) const {
        int64_t d = -1;
        for (const auto& [e, c] : terms_) {
            int64_t t = 0;
            for (size_t i = 0; i < e.size(); ++i) t += w[i] * e[i];
            d = std::max(d, t);
        }
        return d;
    }

    // smallest weighted degree over the terms (useful for multiplicities)
    int64_t min_weighted_degree(const std::vector<int64_t>& w) const {
        if (terms_.empty()) return -1;
        int64_t d = INT64_MAX;
        for (const auto& [e, c] : terms_) {
            int64_t t = 0;
            for (size_t i = 0; i < e.size(); ++i) t += w[i] * e[i];
            d = std::min(d, t);
        }
        return d;
    }

    uint32_t degree_in(size_t var) const {
        uint32_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        // print high-degree terms first for readability
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!out.empty()) out += " + ";
            std::string mono;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += ring_.vars[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                out += std::to_string(int(c));
            else if (c == 1)
                out += mono;
            else
                out += std::to_string(int(c)) + "*" + mono;
        }
        return out;
    }

  private:
    void same_ring(const MPoly& other) const {
        if (!(ring_ == other.ring_)) throw Error("mpoly: operands from different rings");
    }
    void bump(const Exps& e, uint8_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second = g3_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    PolyRing ring_;
    std::map<Exps, uint8_t> terms_;
};

inline std::vector<MPoly> ring_variables(const PolyRing& ring) {
    std::vector<MPoly> vs;
    for (size_t i = 0; i < ring.size(); ++i) vs.push_back(MPoly::variable(ring, i));
    return vs;
}

// Jacobian row: all partial derivatives in variable order.
inline std::vector<MPoly> gradient(const MPoly& f) {
    std::vector<MPoly> g;
    for (size_t i = 0; i < f.ring().size(); ++i) g.push_back(f.derivative(i));
    return g;
}

}  // namespace wmk
