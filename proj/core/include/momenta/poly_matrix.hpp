#ifndef MOMENTA_POLY_MATRIX_HPP
#define MOMENTA_POLY_MATRIX_HPP

#include "momenta/ideal.hpp"
#include "momenta/rat_matrix.hpp"

#include <vector>

namespace momenta {

// Matrix with polynomial entries over a common ring.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RegistryPtr ring, int rows, int cols);
    static PolyMatrix from_rational(const RegistryPtr& ring, const RatMatrix& m);
    static PolyMatrix identity(RegistryPtr ring, int n);

    const RegistryPtr& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Polynomial& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Polynomial& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    PolyMatrix transpose() const;
    Polynomial trace() const;
    PolyMatrix operator-() const;
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    PolyMatrix operator*(const Polynomial& s) const;
    PolyMatrix operator*(const Rational& s) const;
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }
    bool is_zero() const;

    // Cofactor expansion, greedily along the sparsest row or column.
    Polynomial det() const;

    PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    bool is_skew_symmetric() const;

    // Entry-wise substitution / evaluation.
    PolyMatrix substitute(const std::map<int, Polynomial>& assignment) const;
    RatMatrix evaluate(const std::vector<Rational>& point) const;

private:
    RegistryPtr ring_;
    int rows_ = 0, cols_ = 0;
    std::vector<Polynomial> a_;
};

// Pfaffian of a skew-symmetric matrix of even size, by recursive expansion
// along the first row. Pf([[0,a],[-a,0]]) = a.
Polynomial pfaffian(const PolyMatrix& a);

// Ideal of all k x k minors (the rank <= k-1 locus). Zero minors dropped,
// duplicates kept once.
Ideal minor_ideal(const PolyMatrix& a, int k);

// Exact congruence normal form of a rational skew-symmetric matrix:
// (S^-1)^t A S^-1 = blockdiag(R^t J_2k R, 0) with J_2k = [[0,I_k],[-I_k,0]].
// The symplectic Gram-Schmidt over the rationals produces the J-block
// directly, so R = I_2k.
struct SkewNormalForm {
    RatMatrix S;
    int rank = 0; // = 2k
    RatMatrix R;  // identity of size rank
};

SkewNormalForm skew_normal_form(const RatMatrix& a);

} // namespace momenta

#endif
