#ifndef MOMENTA_UNIRATIONAL_HPP
#define MOMENTA_UNIRATIONAL_HPP

#include "momenta/rational.hpp"

#include <string>
#include <vector>

namespace momenta {

// Dense univariate polynomial over the rationals, used for Poincare-series
// bookkeeping. Coefficient i is the coefficient of t^i.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coefs);
    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(Rational c);
    static UniPoly monomial(Rational c, size_t power);
    // "1 - 6t^6 + t^28" style text; variable letter t.
    static UniPoly parse(std::string_view text);

    const std::vector<Rational>& coefs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    Rational coef(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational eval(const Rational& x) const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator*(const Rational& s) const;
    UniPoly operator-() const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly pow(unsigned e) const;
    // Euclidean division; denominator must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
    static UniPoly gcd(UniPoly a, UniPoly b); // monic gcd

    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Quotient of univariate polynomials, reduced by the monic gcd.
class UniRationalFunction {
public:
    UniRationalFunction(UniPoly num, UniPoly den);
    static UniRationalFunction from_poly(UniPoly p) {
        return UniRationalFunction(std::move(p), UniPoly::constant(Rational(1)));
    }

    const UniPoly& numerator() const { return num_; }
    const UniPoly& denominator() const { return den_; }

    friend UniRationalFunction operator*(const UniRationalFunction& a,
                                         const UniRationalFunction& b);
    friend bool operator==(const UniRationalFunction& a, const UniRationalFunction& b);

private:
    UniPoly num_, den_;
};

// First order+1 Taylor coefficients of f at t = 0. Requires den(0) != 0.
std::vector<Rational> series_expand(const UniRationalFunction& f, int order);

// True iff f * multiplier == expected as rational functions, decided by exact
// cross-multiplication.
bool ratfun_identity_check(const UniRationalFunction& f, const UniPoly& multiplier,
                           const UniPoly& expected);

} // namespace momenta

#endif
