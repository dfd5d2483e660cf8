#ifndef MOMENTA_RANDOM_HPP
#define MOMENTA_RANDOM_HPP

#include "momenta/rat_matrix.hpp"

#include <cstdint>
#include <random>

namespace momenta {

// Deterministic source of small rational test data. mt19937_64 keeps runs
// reproducible across platforms for a fixed seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }
    int64_t int_in(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(gen_() % static_cast<uint64_t>(hi - lo + 1));
    }

    // small rational with numerator in [-bound, bound] and denominator in [1, dbound]
    Rational rational(int bound = 5, int dbound = 3) {
        const long num = static_cast<long>(int_in(-bound, bound));
        const long den = static_cast<long>(int_in(1, dbound));
        return Rational(num, den);
    }
    Rational nonzero_rational(int bound = 5, int dbound = 3) {
        Rational r = rational(bound, dbound);
        while (r.is_zero()) r = rational(bound, dbound);
        return r;
    }

    RatMatrix matrix(int rows, int cols, int bound = 5) {
        RatMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = rational(bound);
        return m;
    }

private:
    std::mt19937_64 gen_;
};

// J_{2n} = [[0, I_n], [-I_n, 0]].
RatMatrix standard_symplectic_form(int n);
// Q_{2m} = [[0, I_m], [I_m, 0]].
RatMatrix hyperbolic_form(int m);

// Random element of Sp_{2n}(Q): a product of up to `factors` symplectic
// transvections x -> x + c (x^t J v) v with small rational parameters.
RatMatrix random_symplectic(Rng& rng, int n, int factors = 6);

// Random element of SO(Q) for the symmetric form Q, via the Cayley transform
// of a Q-skew matrix: R = (I - S)(I + S)^{-1}, R^t Q R = Q, det R = 1.
RatMatrix random_special_orthogonal(Rng& rng, const RatMatrix& form, int bound = 2);

// Random point of the isotropic-image locus {X : X Q X^t = 0} for the
// hyperbolic form on C^{2m}: rows supported on a random isotropic subspace,
// moved around by a random SO(Q) element.
RatMatrix random_isotropic_point(Rng& rng, int rows, int m);

} // namespace momenta

#endif
