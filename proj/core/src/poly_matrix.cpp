#include "momenta/poly_matrix.hpp"

#include <stdexcept>

namespace momenta {

PolyMatrix::PolyMatrix(RegistryPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      a_(size_t(rows) * cols, Polynomial::zero(ring_)) {}

PolyMatrix PolyMatrix::from_rational(const RegistryPtr& ring, const RatMatrix& m) {
    PolyMatrix r(ring, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.at(i, j) = Polynomial::constant(ring, m.at(i, j));
    return r;
}

PolyMatrix PolyMatrix::identity(RegistryPtr ring, int n) {
    PolyMatrix r(ring, n, n);
    for (int i = 0; i < n; ++i) r.at(i, i) = Polynomial::constant(r.ring(), Rational(1));
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Polynomial PolyMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("PolyMatrix::trace: not square");
    Polynomial s = Polynomial::zero(ring_);
    for (int i = 0; i < rows_; ++i) s = s + at(i, i);
    return s;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix r(ring_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("PolyMatrix: dimension mismatch");
    PolyMatrix r(a.ring_, a.rows_, a.cols_);
    for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + (-b); }

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
    PolyMatrix r(a.ring_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Polynomial& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
            }
        }
    return r;
}

PolyMatrix PolyMatrix::operator*(const Polynomial& s) const {
    PolyMatrix r(ring_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
}

PolyMatrix PolyMatrix::operator*(const Rational& s) const {
    PolyMatrix r(ring_, rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
    return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t k = 0; k < a.a_.size(); ++k)
        if (a.a_[k] != b.a_[k]) return false;
    return true;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : a_)
        if (!p.is_zero()) return false;
    return true;
}

namespace {

Polynomial det_rec(const PolyMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    const size_t n = rows.size();
    if (n == 1) return m.at(rows[0], cols[0]);
    // expand along the row or column with the most zero entries
    int best_row = -1, best_col = -1;
    size_t best_zeros = 0;
    bool found = false;
    for (size_t i = 0; i < n; ++i) {
        size_t z = 0;
        for (size_t j = 0; j < n; ++j)
            if (m.at(rows[i], cols[j]).is_zero()) ++z;
        if (!found || z > best_zeros) {
            best_zeros = z;
            best_row = static_cast<int>(i);
            best_col = -1;
            found = true;
        }
    }
    for (size_t j = 0; j < n; ++j) {
        size_t z = 0;
        for (size_t i = 0; i < n; ++i)
            if (m.at(rows[i], cols[j]).is_zero()) ++z;
        if (z > best_zeros) {
            best_zeros = z;
            best_col = static_cast<int>(j);
            best_row = -1;
        }
    }
    Polynomial acc = Polynomial::zero(m.ring());
    if (best_col < 0) {
        const size_t i = static_cast<size_t>(best_row);
        std::vector<int> sub_rows;
        for (size_t k = 0; k < n; ++k)
            if (k != i) sub_rows.push_back(rows[k]);
        for (size_t j = 0; j < n; ++j) {
            const Polynomial& e = m.at(rows[i], cols[j]);
            if (e.is_zero()) continue;
            std::vector<int> sub_cols;
            for (size_t k = 0; k < n; ++k)
                if (k != j) sub_cols.push_back(cols[k]);
            Polynomial minor = det_rec(m, sub_rows, sub_cols);
            acc = ((i + j) % 2 == 0) ? acc + e * minor : acc - e * minor;
        }
    } else {
        const size_t j = static_cast<size_t>(best_col);
        std::vector<int> sub_cols;
        for (size_t k = 0; k < n; ++k)
            if (k != j) sub_cols.push_back(cols[k]);
        for (size_t i = 0; i < n; ++i) {
            const Polynomial& e = m.at(rows[i], cols[j]);
            if (e.is_zero()) continue;
            std::vector<int> sub_rows;
            for (size_t k = 0; k < n; ++k)
                if (k != i) sub_rows.push_back(rows[k]);
            Polynomial minor = det_rec(m, sub_rows, sub_cols);
            acc = ((i + j) % 2 == 0) ? acc + e * minor : acc - e * minor;
        }
    }
    return acc;
}

void subsets_rec(int n, int k, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
        cur.push_back(i);
        subsets_rec(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets_rec(n, k, 0, cur, out);
    return out;
}

} // namespace

Polynomial PolyMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("PolyMatrix::det: not square");
    if (rows_ == 0) return Polynomial::constant(ring_, Rational(1));
    std::vector<int> idx(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) idx[static_cast<size_t>(i)] = i;
    return det_rec(*this, idx, idx);
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows,
                                 const std::vector<int>& cols) const {
    PolyMatrix r(ring_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            r.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return r;
}

bool PolyMatrix::is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (!(at(i, j) + at(j, i)).is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::substitute(const std::map<int, Polynomial>& assignment) const {
    PolyMatrix r = *this;
    RegistryPtr target = ring_;
    for (size_t k = 0; k < a_.size(); ++k) {
        r.a_[k] = a_[k].substitute(assignment);
        target = r.a_[k].ring();
    }
    r.ring_ = target;
    return r;
}

RatMatrix PolyMatrix::evaluate(const std::vector<Rational>& point) const {
    RatMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).evaluate(point);
    return r;
}

Polynomial pfaffian(const PolyMatrix& a) {
    if (a.rows() != a.cols() || a.rows() % 2 != 0)
        throw std::invalid_argument("pfaffian: matrix must be skew of even size");
    if (!a.is_skew_symmetric())
        throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");

    // recursive expansion along the first remaining row:
    //   Pf(A) = sum_j (-1)^j a_{0j} Pf(A with rows/cols 0,j removed)
    struct Rec {
        const PolyMatrix& m;
        Polynomial run(const std::vector<int>& idx) {
            if (idx.empty()) return Polynomial::constant(m.ring(), Rational(1));
            Polynomial acc = Polynomial::zero(m.ring());
            for (size_t j = 1; j < idx.size(); ++j) {
                const Polynomial& e = m.at(idx[0], idx[j]);
                if (e.is_zero()) continue;
                std::vector<int> rest;
                rest.reserve(idx.size() - 2);
                for (size_t k = 1; k < idx.size(); ++k)
                    if (k != j) rest.push_back(idx[k]);
                Polynomial sub = run(rest);
                acc = (j % 2 == 1) ? acc + e * sub : acc - e * sub;
            }
            return acc;
        }
    };
    std::vector<int> idx(static_cast<size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) idx[static_cast<size_t>(i)] = i;
    return Rec{a}.run(idx);
}

Ideal minor_ideal(const PolyMatrix& a, int k) {
    if (k < 1 || k > std::min(a.rows(), a.cols()))
        throw std::invalid_argument("minor_ideal: bad minor size");
    std::vector<Polynomial> gens;
    for (const auto& rs : subsets(a.rows(), k))
        for (const auto& cs : subsets(a.cols(), k)) {
            Polynomial d = a.submatrix(rs, cs).det();
            if (!d.is_zero()) gens.push_back(std::move(d));
        }
    return Ideal(a.ring(), std::move(gens));
}

SkewNormalForm skew_normal_form(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("skew_normal_form: not square");
    if ((a.transpose() + a).is_zero() == false)
        throw std::invalid_argument("skew_normal_form: not skew-symmetric");
    const int n = a.rows();

    auto pairing = [&](const RatMatrix& u, const RatMatrix& v) {
        Rational s(0);
        for (int i = 0; i < n; ++i) {
            if (u.at(i, 0).is_zero()) continue;
            for (int j = 0; j < n; ++j) s += u.at(i, 0) * a.at(i, j) * v.at(j, 0);
        }
        return s;
    };

    std::vector<RatMatrix> pool;
    for (int i = 0; i < n; ++i) {
        RatMatrix e(n, 1);
        e.at(i, 0) = Rational(1);
        pool.push_back(std::move(e));
    }
    std::vector<RatMatrix> ps, qs, kernel;
    while (!pool.empty()) {
        RatMatrix w = pool.front();
        pool.erase(pool.begin());
        int partner = -1;
        for (size_t j = 0; j < pool.size(); ++j) {
            if (!pairing(w, pool[j]).is_zero()) {
                partner = static_cast<int>(j);
                break;
            }
        }
        if (partner < 0) {
            kernel.push_back(std::move(w));
            continue;
        }
        RatMatrix q = pool[static_cast<size_t>(partner)] * pairing(w, pool[static_cast<size_t>(partner)]).inverse();
        pool.erase(pool.begin() + partner);
        for (auto& u : pool) {
            // remove both pairing components so the remainder is orthogonal
            const Rational cq = pairing(u, q);
            const Rational cw = pairing(u, w);
            u = u - w * cq + q * cw;
        }
        ps.push_back(std::move(w));
        qs.push_back(std::move(q));
    }

    const int k = static_cast<int>(ps.size());
    RatMatrix P(n, n);
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < n; ++i) P.at(i, c) = ps[static_cast<size_t>(c)].at(i, 0);
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < n; ++i) P.at(i, k + c) = qs[static_cast<size_t>(c)].at(i, 0);
    for (int c = 0; c < static_cast<int>(kernel.size()); ++c)
        for (int i = 0; i < n; ++i) P.at(i, 2 * k + c) = kernel[static_cast<size_t>(c)].at(i, 0);

    SkewNormalForm out;
    out.S = P.inverse();
    out.rank = 2 * k;
    out.R = RatMatrix::identity(2 * k);
    return out;
}

} // namespace momenta
