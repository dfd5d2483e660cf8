#include "momenta/random.hpp"

#include <stdexcept>

namespace momenta {

RatMatrix standard_symplectic_form(int n) {
    RatMatrix j(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        j.at(i, n + i) = Rational(1);
        j.at(n + i, i) = Rational(-1);
    }
    return j;
}

RatMatrix hyperbolic_form(int m) {
    RatMatrix q(2 * m, 2 * m);
    for (int i = 0; i < m; ++i) {
        q.at(i, m + i) = Rational(1);
        q.at(m + i, i) = Rational(1);
    }
    return q;
}

RatMatrix random_symplectic(Rng& rng, int n, int factors) {
    const RatMatrix j = standard_symplectic_form(n);
    RatMatrix g = RatMatrix::identity(2 * n);
    const int count = static_cast<int>(rng.int_in(1, factors));
    for (int k = 0; k < count; ++k) {
        RatMatrix v = rng.matrix(2 * n, 1, 2);
        const Rational c = rng.rational(2, 2);
        // T = I + c * v * (v^t J);  T^t J T = J for any v, c
        RatMatrix t = RatMatrix::identity(2 * n) + (v * (v.transpose() * j)) * c;
        g = g * t;
    }
    return g;
}

RatMatrix random_special_orthogonal(Rng& rng, const RatMatrix& form, int bound) {
    const int n = form.rows();
    for (int attempt = 0; attempt < 64; ++attempt) {
        // S with S^t Q + Q S = 0: S = Q^{-1} K for skew K
        RatMatrix k(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                k.at(i, j) = rng.rational(bound, 2);
                k.at(j, i) = -k.at(i, j);
            }
        RatMatrix s = form.inverse() * k;
        RatMatrix iplus = RatMatrix::identity(n) + s;
        try {
            RatMatrix r = (RatMatrix::identity(n) - s) * iplus.inverse();
            return r;
        } catch (const std::domain_error&) {
            continue; // I + S singular; resample
        }
    }
    throw std::runtime_error("random_special_orthogonal: could not invert I + S");
}

RatMatrix random_isotropic_point(Rng& rng, int rows, int m) {
    // rows spanned inside the isotropic coordinate subspace span(e_1..e_m)
    RatMatrix x(rows, 2 * m);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < m; ++j) x.at(i, j) = rng.rational(3);
    const RatMatrix g = random_special_orthogonal(rng, hyperbolic_form(m));
    return x * g.transpose();
}

} // namespace momenta
