#ifndef MOMENTA_POLY_LINALG_HPP
#define MOMENTA_POLY_LINALG_HPP

#include "momenta/polynomial.hpp"

#include <unordered_map>

namespace momenta {

// Row space of polynomials viewed as sparse vectors indexed by monomials.
// Rows are kept echelonized on the grevlex-leading monomial; used for graded
// dimension counts and minimal-generator bookkeeping.
class PolyRowSpace {
public:
    // Reduce p against the stored rows; nonzero remainder joins the basis.
    // Returns true when the rank grew.
    bool insert(Polynomial p) {
        p = reduce(std::move(p));
        if (p.is_zero()) return false;
        const auto& lt = p.terms().front();
        Polynomial monic = p * lt.coef.inverse();
        pivot_.emplace(lt.mono, rows_.size());
        rows_.push_back(std::move(monic));
        return true;
    }

    // Leading-term reduction; ends at zero exactly when p is in the span.
    Polynomial reduce(Polynomial p) const {
        while (!p.is_zero()) {
            const auto& lt = p.terms().front();
            auto it = pivot_.find(lt.mono);
            if (it == pivot_.end()) break;
            p = p - rows_[it->second] * lt.coef;
        }
        return p;
    }

    size_t rank() const { return rows_.size(); }
    const std::vector<Polynomial>& rows() const { return rows_; }

private:
    std::vector<Polynomial> rows_;
    std::unordered_map<Monomial, size_t, MonomialHash> pivot_;
};

} // namespace momenta

#endif
