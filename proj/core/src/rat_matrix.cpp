#include "momenta/rat_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace momenta {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::operator-() const {
    RatMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("RatMatrix: dimension mismatch");
    RatMatrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
    return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) { return a + (-b); }

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: dimension mismatch");
    RatMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * b.at(k, j);
            }
        }
    return r;
}

RatMatrix RatMatrix::operator*(const Rational& s) const {
    RatMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

int RatMatrix::rank() const {
    RatMatrix m = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        const Rational inv = m.at(rank, col).inverse();
        for (int i = rank + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            const Rational f = m.at(i, col) * inv;
            for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix::inverse: not square");
    RatMatrix m = *this;
    RatMatrix inv = identity(rows_);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int i = col; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::domain_error("RatMatrix::inverse: singular");
        for (int j = 0; j < cols_; ++j) {
            std::swap(m.at(col, j), m.at(pivot, j));
            std::swap(inv.at(col, j), inv.at(pivot, j));
        }
        const Rational f = m.at(col, col).inverse();
        for (int j = 0; j < cols_; ++j) {
            m.at(col, j) *= f;
            inv.at(col, j) *= f;
        }
        for (int i = 0; i < rows_; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            const Rational g = m.at(i, col);
            for (int j = 0; j < cols_; ++j) {
                m.at(i, j) -= g * m.at(col, j);
                inv.at(i, j) -= g * inv.at(col, j);
            }
        }
    }
    return inv;
}

Rational RatMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix::det: not square");
    RatMatrix m = *this;
    Rational d(1);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int i = col; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(col, j), m.at(pivot, j));
            d = -d;
        }
        d *= m.at(col, col);
        const Rational inv = m.at(col, col).inverse();
        for (int i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            const Rational f = m.at(i, col) * inv;
            for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

std::optional<RatMatrix> RatMatrix::solve(const RatMatrix& rhs) const {
    if (rhs.rows() != rows_ || rhs.cols() != 1)
        throw std::invalid_argument("RatMatrix::solve: shape mismatch");
    RatMatrix m(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        m.at(i, cols_) = rhs.at(i, 0);
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < cols_ && r < rows_; ++col) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j <= cols_; ++j) std::swap(m.at(r, j), m.at(pivot, j));
        const Rational inv = m.at(r, col).inverse();
        for (int j = col; j <= cols_; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, col).is_zero()) continue;
            const Rational f = m.at(i, col);
            for (int j = col; j <= cols_; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (int i = r; i < rows_; ++i)
        if (!m.at(i, cols_).is_zero()) return std::nullopt;
    RatMatrix x(cols_, 1);
    for (int k = 0; k < r; ++k) x.at(pivot_col[static_cast<size_t>(k)], 0) = m.at(k, cols_);
    return x;
}

RatMatrix RatMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    RatMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            r.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return r;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "[") << at(i, j).str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

} // namespace momenta
