#ifndef MOMENTA_GROEBNER_HPP
#define MOMENTA_GROEBNER_HPP

#include "momenta/ideal.hpp"
#include "momenta/order.hpp"

#include <memory>

namespace momenta {

namespace detail {
struct GBData; // integer-normalized basis used by the reducer
}

// Reduced Groebner basis: monic elements, no term of any element divisible by
// another element's leading term, sorted ascending by leading monomial.
// Deterministic for fixed input and order.
class GroebnerBasis {
public:
    const Ideal& ideal() const { return ideal_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& basis() const { return basis_; }
    bool is_reduced() const { return reduced_; }
    bool contains_one() const;

private:
    friend GroebnerBasis buchberger(const Ideal&, const MonomialOrder&, const ResourceLimits&);
    friend Polynomial normal_form(const Polynomial&, const GroebnerBasis&);
    friend GroebnerBasis assemble_reduced_basis(Ideal, const MonomialOrder&,
                                                std::vector<Polynomial>);

    GroebnerBasis(Ideal ideal, MonomialOrder order, std::vector<Polynomial> basis,
                  std::shared_ptr<const detail::GBData> data)
        : ideal_(std::move(ideal)), order_(std::move(order)), basis_(std::move(basis)),
          reduced_(true), data_(std::move(data)) {}

    Ideal ideal_;
    MonomialOrder order_;
    std::vector<Polynomial> basis_;
    bool reduced_;
    std::shared_ptr<const detail::GBData> data_;
};

// Buchberger's algorithm with the Gebauer-Moller pair update, normal pair
// selection (minimal weighted lcm degree first) and full interreduction.
GroebnerBasis buchberger(const Ideal& ideal,
                         const MonomialOrder& order = MonomialOrder::grevlex(),
                         const ResourceLimits& limits = {});

// Remainder of multivariate division of p by the basis; exact, and zero iff
// p lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// Wrap a basis that is already reduced (monic, heads pairwise indivisible,
// tails fully reduced) without recomputation. Used to transport elimination
// results: the pure-subring part of a block-order reduced basis is itself a
// reduced basis of the elimination ideal under the induced order.
GroebnerBasis assemble_reduced_basis(Ideal ideal, const MonomialOrder& order,
                                     std::vector<Polynomial> basis);

bool ideal_membership(const Polynomial& p, const Ideal& ideal,
                      const ResourceLimits& limits = {});

} // namespace momenta

#endif
