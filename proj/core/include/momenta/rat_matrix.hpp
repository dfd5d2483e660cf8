#ifndef MOMENTA_RAT_MATRIX_HPP
#define MOMENTA_RAT_MATRIX_HPP

#include "momenta/rational.hpp"

#include <optional>
#include <vector>

namespace momenta {

// Dense matrix over the rationals; all operations exact.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static RatMatrix identity(int n);
    static RatMatrix zero(int rows, int cols) { return RatMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool is_zero() const;
    RatMatrix transpose() const;
    RatMatrix operator-() const;
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    RatMatrix operator*(const Rational& s) const;
    friend bool operator==(const RatMatrix& a, const RatMatrix& b);
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    int rank() const;
    RatMatrix inverse() const; // throws std::domain_error if singular
    Rational det() const;
    // One solution x of (*this) x = rhs with free coordinates set to zero,
    // or nullopt when the system is inconsistent.
    std::optional<RatMatrix> solve(const RatMatrix& rhs) const;

    RatMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

} // namespace momenta

#endif
