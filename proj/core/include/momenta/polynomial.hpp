#ifndef MOMENTA_POLYNOMIAL_HPP
#define MOMENTA_POLYNOMIAL_HPP

#include "momenta/monomial.hpp"
#include "momenta/order.hpp"
#include "momenta/rational.hpp"
#include "momenta/registry.hpp"

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace momenta {

struct Term {
    Monomial mono;
    Rational coef;
};

// Degree of the zero polynomial.
inline constexpr int kDegreeMinusInfinity = std::numeric_limits<int>::min();

// Sparse multivariate polynomial over the rationals. Immutable value type:
// no zero coefficients are stored and terms are kept strictly descending in
// grevlex, so equal polynomials have identical representations.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RegistryPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RegistryPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RegistryPtr ring, Rational c);
    static Polynomial variable(RegistryPtr ring, int var);
    static Polynomial variable(RegistryPtr ring, std::string_view name);
    static Polynomial term(RegistryPtr ring, Monomial m, Rational c);
    // Terms in any order, possibly with repeats and zeros; normalizes.
    static Polynomial from_terms(RegistryPtr ring, std::vector<Term> terms);

    const RegistryPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].mono.is_one(); }
    size_t term_count() const { return terms_.size(); }

    // Total degree; kDegreeMinusInfinity for the zero polynomial.
    int degree() const;
    int64_t weighted_degree() const;
    bool is_homogeneous() const;
    bool is_weighted_homogeneous() const;

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient(Monomial::one()); }
    const Term& leading_term(const MonomialOrder& order) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const Rational& c) const;
    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Composition: assigned variables are replaced by their images, the rest
    // map to themselves. Images must share a ring; the result lives there
    // (or in this ring when the map is empty).
    Polynomial substitute(const std::map<int, Polynomial>& assignment) const;
    Polynomial substitute(const std::map<std::string, Polynomial>& assignment) const;

    // Full evaluation at a rational point (by variable index).
    Rational evaluate(const std::vector<Rational>& point) const;

    Polynomial derivative(int var) const;

    // Divide by the rational content so coefficients become coprime integers
    // with positive leading coefficient (grevlex); zero stays zero.
    Polynomial primitive_part() const;

    // Plain-text form: `coef*var1^e1*var2^e2 + ...`, terms descending in the
    // given order (grevlex by default).
    std::string str() const;
    std::string str(const MonomialOrder& order) const;
    static Polynomial parse(const RegistryPtr& ring, std::string_view text);

private:
    void normalize();

    RegistryPtr ring_;
    std::vector<Term> terms_;
};

// Fails on ring mismatch; the named entry point for {add, sub, mul}.
enum class PolyOp { Add, Sub, Mul };
Polynomial poly_arith(const Polynomial& p, const Polynomial& q, PolyOp op);

} // namespace momenta

#endif
