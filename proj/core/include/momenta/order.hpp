#ifndef MOMENTA_ORDER_HPP
#define MOMENTA_ORDER_HPP

#include "momenta/monomial.hpp"

#include <vector>

namespace momenta {

// Monomial orders: lexicographic, graded reverse lexicographic (the default),
// and a block order used for elimination — the block variables are compared
// first (grevlex within the block), then the remaining variables (grevlex).
//
// Variable significance follows registry order; grevlex ties break on the
// reversed registry order, as usual.
class MonomialOrder {
public:
    enum class Kind { Lex, Grevlex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
    static MonomialOrder block(std::vector<int> front_vars) {
        return MonomialOrder(Kind::Block, std::move(front_vars));
    }

    Kind kind() const { return kind_; }
    const std::vector<int>& front() const { return front_; }
    bool eliminates(int var) const { return (front_mask_ >> var) & 1u; }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::Lex: return cmp_lex(a, b);
            case Kind::Grevlex: return cmp_grevlex_masked(a, b, ~0u, a.degree(), b.degree());
            case Kind::Block: {
                uint32_t da = 0, db = 0;
                for (int v : front_) {
                    da += a.exp(v);
                    db += b.exp(v);
                }
                if (int c = cmp_grevlex_masked(a, b, front_mask_, da, db)) return c;
                return cmp_grevlex_masked(a, b, ~front_mask_, a.degree() - da, b.degree() - db);
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    MonomialOrder(Kind k, std::vector<int> front) : kind_(k), front_(std::move(front)) {
        for (int v : front_) front_mask_ |= (1u << v);
    }

    static int cmp_lex(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < kMaxVars; ++i) {
            if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
        }
        return 0;
    }

    // grevlex restricted to the variables in `mask`, with precomputed degrees
    static int cmp_grevlex_masked(const Monomial& a, const Monomial& b, uint32_t mask,
                                  uint32_t da, uint32_t db) {
        if (da != db) return da > db ? 1 : -1;
        for (int i = kMaxVars - 1; i >= 0; --i) {
            if (!((mask >> i) & 1u)) continue;
            if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
        }
        return 0;
    }

    Kind kind_;
    std::vector<int> front_;
    uint32_t front_mask_ = 0;
};

} // namespace momenta

#endif
