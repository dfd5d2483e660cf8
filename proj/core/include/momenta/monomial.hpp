#ifndef MOMENTA_MONOMIAL_HPP
#define MOMENTA_MONOMIAL_HPP

#include "momenta/registry.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>

namespace momenta {

// Exponent vector with cached total degree. Fixed-capacity so that monomial
// arithmetic is branch-free over the whole array; unused slots stay zero.
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }

    static Monomial var(int i, uint16_t e = 1) {
        Monomial m;
        m.e_[static_cast<size_t>(i)] = e;
        m.deg_ = e;
        return m;
    }

    uint16_t exp(int i) const { return e_[static_cast<size_t>(i)]; }
    uint32_t degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    void set_exp(int i, uint16_t e) {
        deg_ = deg_ - e_[static_cast<size_t>(i)] + e;
        e_[static_cast<size_t>(i)] = e;
    }

    int64_t weighted_degree(const std::vector<int>& w) const {
        int64_t d = 0;
        for (size_t i = 0; i < w.size(); ++i) d += int64_t(e_[i]) * w[i];
        return d;
    }

    // Bitmask of variables with positive exponent; cheap divisibility filter.
    uint32_t support_mask() const {
        uint32_t m = 0;
        for (int i = 0; i < kMaxVars; ++i)
            if (e_[static_cast<size_t>(i)]) m |= (1u << i);
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i)
            r.e_[static_cast<size_t>(i)] =
                static_cast<uint16_t>(a.e_[static_cast<size_t>(i)] + b.e_[static_cast<size_t>(i)]);
        r.deg_ = a.deg_ + b.deg_;
        return r;
    }

    // a | b
    static bool divides(const Monomial& a, const Monomial& b) {
        if (a.deg_ > b.deg_) return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (a.e_[static_cast<size_t>(i)] > b.e_[static_cast<size_t>(i)]) return false;
        return true;
    }

    // b / a, assuming a | b
    static Monomial quotient(const Monomial& b, const Monomial& a) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i)
            r.e_[static_cast<size_t>(i)] =
                static_cast<uint16_t>(b.e_[static_cast<size_t>(i)] - a.e_[static_cast<size_t>(i)]);
        r.deg_ = b.deg_ - a.deg_;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        uint32_t d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            const uint16_t e = std::max(a.e_[static_cast<size_t>(i)], b.e_[static_cast<size_t>(i)]);
            r.e_[static_cast<size_t>(i)] = e;
            d += e;
        }
        r.deg_ = d;
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r;
        uint32_t d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            const uint16_t e = std::min(a.e_[static_cast<size_t>(i)], b.e_[static_cast<size_t>(i)]);
            r.e_[static_cast<size_t>(i)] = e;
            d += e;
        }
        r.deg_ = d;
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < kMaxVars; ++i)
            if (a.e_[static_cast<size_t>(i)] && b.e_[static_cast<size_t>(i)]) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.deg_ == b.deg_ &&
               std::memcmp(a.e_.data(), b.e_.data(), sizeof(a.e_)) == 0;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    size_t hash() const {
        // FNV-1a over the exponent bytes
        uint64_t h = 1469598103934665603ull;
        const auto* p = reinterpret_cast<const unsigned char*>(e_.data());
        for (size_t i = 0; i < sizeof(e_); ++i) {
            h ^= p[i];
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }

private:
    std::array<uint16_t, kMaxVars> e_{};
    uint32_t deg_ = 0;
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace momenta

#endif
