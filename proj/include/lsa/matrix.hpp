#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lsa/field.hpp"

namespace lsa {

struct dimension_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Dense exact matrix over a field F, row-major.
template <class F>
class Matrix {
  public:
    using Elem = typename F::Elem;

    Matrix() : rows_(0), cols_(0) {}
    Matrix(F field, size_t rows, size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {}

    static Matrix identity(const F& f, size_t n) {
        Matrix m(f, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }
    static Matrix zero(const F& f, size_t rows, size_t cols) { return Matrix(f, rows, cols); }

    const F& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Elem& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Elem& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    Elem* row(size_t r) { return a_.data() + r * cols_; }
    const Elem* row(size_t r) const { return a_.data() + r * cols_; }

    bool same_shape(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_;
    }

    bool operator==(const Matrix& o) const {
        if (!same_shape(o)) return false;
        for (size_t i = 0; i < a_.size(); ++i)
            if (!field_.eq(a_[i], o.a_[i])) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        require_same(o);
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(r.a_[i], o.a_[i]);
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        require_same(o);
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(r.a_[i], o.a_[i]);
        return r;
    }
    Matrix scaled(const Elem& c) const {
        Matrix r = *this;
        for (auto& x : r.a_) x = field_.mul(x, c);
        return r;
    }
    void add_scaled(const Matrix& o, const Elem& c) {
        require_same(o);
        for (size_t i = 0; i < a_.size(); ++i)
            a_[i] = field_.add(a_[i], field_.mul(o.a_[i], c));
    }

    // Product; skips zero entries of the left factor row-wise, so products
    // with a sparse left factor cost nnz(A) * cols(B).
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_ || !(field_ == o.field_))
            throw dimension_mismatch("matrix product shape mismatch");
        Matrix r(field_, rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i) {
            const Elem* ai = row(i);
            Elem* ri = r.row(i);
            for (size_t k = 0; k < cols_; ++k) {
                if (field_.is_zero(ai[k])) continue;
                const Elem& c = ai[k];
                const Elem* bk = o.row(k);
                for (size_t j = 0; j < o.cols_; ++j)
                    ri[j] = field_.add(ri[j], field_.mul(c, bk[j]));
            }
        }
        return r;
    }

    std::vector<Elem> apply(const std::vector<Elem>& v) const {
        if (v.size() != cols_) throw dimension_mismatch("matrix-vector shape mismatch");
        std::vector<Elem> r(rows_, field_.zero());
        for (size_t i = 0; i < rows_; ++i) {
            const Elem* ai = row(i);
            Elem acc = field_.zero();
            for (size_t k = 0; k < cols_; ++k)
                if (!field_.is_zero(ai[k])) acc = field_.add(acc, field_.mul(ai[k], v[k]));
            r[i] = acc;
        }
        return r;
    }

    Matrix transpose() const {
        Matrix r(field_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<Elem> col(size_t j) const {
        std::vector<Elem> v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }
    void set_col(size_t j, const std::vector<Elem>& v) {
        for (size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
    }

    size_t nnz() const {
        size_t c = 0;
        for (const auto& x : a_)
            if (!field_.is_zero(x)) ++c;
        return c;
    }

  private:
    void require_same(const Matrix& o) const {
        if (!same_shape(o)) throw dimension_mismatch("matrix shape/field mismatch");
    }

    F field_;
    size_t rows_, cols_;
    std::vector<Elem> a_;
};

// Incremental Gaussian eliminator over vectors of fixed length n.
// Keeps a set of reduced pivot vectors; supports independence tests without
// mutation and incremental growth. Pivot vectors are kept fully reduced
// (pivot entry 1, pivot position cleared in all other kept vectors).
template <class F>
class Eliminator {
  public:
    using Elem = typename F::Elem;
    using Vec = std::vector<Elem>;

    Eliminator(F field, size_t n) : field_(std::move(field)), n_(n), pivot_of_row_(n, SIZE_MAX) {}

    size_t dim() const { return rows_.size(); }
    size_t ambient() const { return n_; }

    // Reduces v against current pivots in place; returns pivot position or
    // SIZE_MAX if v reduces to zero.
    size_t reduce(Vec& v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const Elem& c = v[piv_[i]];
            if (!field_.is_zero(c)) {
                Elem cc = c;  // v[piv] becomes 0
                const Vec& r = rows_[i];
                for (size_t j = 0; j < n_; ++j)
                    if (!field_.is_zero(r[j])) v[j] = field_.sub(v[j], field_.mul(cc, r[j]));
            }
        }
        for (size_t j = 0; j < n_; ++j)
            if (!field_.is_zero(v[j])) return j;
        return SIZE_MAX;
    }

    bool contains(Vec v) const { return reduce(v) == SIZE_MAX; }

    // Adds v to the span; returns false if v was already in the span.
    bool add(Vec v) {
        size_t p = reduce(v);
        if (p == SIZE_MAX) return false;
        Elem ip = field_.inv(v[p]);
        for (size_t j = 0; j < n_; ++j)
            if (!field_.is_zero(v[j])) v[j] = field_.mul(v[j], ip);
        // clear column p in existing rows (full reduction)
        for (size_t i = 0; i < rows_.size(); ++i) {
            const Elem& c = rows_[i][p];
            if (!field_.is_zero(c)) {
                Elem cc = c;
                for (size_t j = 0; j < n_; ++j)
                    if (!field_.is_zero(v[j]))
                        rows_[i][j] = field_.sub(rows_[i][j], field_.mul(cc, v[j]));
            }
        }
        pivot_of_row_[p] = rows_.size();
        piv_.push_back(p);
        rows_.push_back(std::move(v));
        return true;
    }

    const std::vector<size_t>& pivots() const { return piv_; }
    const std::vector<Vec>& basis_rows() const { return rows_; }

  private:
    F field_;
    size_t n_;
    std::vector<Vec> rows_;
    std::vector<size_t> piv_;
    std::vector<size_t> pivot_of_row_;
};

// a*b computed column-wise, skipping zero entries of the right factor;
// costs nnz(b) * rows(a).
template <class F>
Matrix<F> mul_right_sparse(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows() || !(a.field() == b.field()))
        throw dimension_mismatch("matrix product shape mismatch");
    const F& f = a.field();
    Matrix<F> r(f, a.rows(), b.cols());
    for (size_t k = 0; k < b.rows(); ++k)
        for (size_t j = 0; j < b.cols(); ++j) {
            const auto& c = b.at(k, j);
            if (f.is_zero(c)) continue;
            for (size_t i = 0; i < a.rows(); ++i)
                r.at(i, j) = f.add(r.at(i, j), f.mul(a.at(i, k), c));
        }
    return r;
}

template <class F>
size_t mat_rank(const Matrix<F>& m) {
    Eliminator<F> el(m.field(), m.cols());
    for (size_t i = 0; i < m.rows() && el.dim() < m.cols(); ++i) {
        typename Eliminator<F>::Vec v(m.row(i), m.row(i) + m.cols());
        el.add(std::move(v));
    }
    return el.dim();
}

// Normalized rank metric rank(a-b)/n as an exact rational.
template <class F>
Rat rk_dist(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != a.cols() || !a.same_shape(b) || a.rows() == 0)
        throw dimension_mismatch("rk_dist requires equal square matrices over one field");
    Rat r(static_cast<unsigned long>(mat_rank(a - b)), static_cast<unsigned long>(a.rows()));
    r.canonicalize();
    return r;
}

// (m tensor I_copies) directsum 0_pad
template <class F>
Matrix<F> kron_and_pad(const Matrix<F>& m, size_t copies, size_t pad) {
    if (copies < 1) throw std::invalid_argument("copies must be >= 1");
    size_t R = m.rows() * copies + pad, C = m.cols() * copies + pad;
    Matrix<F> r(m.field(), R, C);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (m.field().is_zero(m.at(i, j))) continue;
            for (size_t k = 0; k < copies; ++k)
                r.at(i * copies + k, j * copies + k) = m.at(i, j);
        }
    return r;
}

template <class F>
Matrix<F> mat_inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw dimension_mismatch("inverse of non-square matrix");
    const F& f = m.field();
    size_t n = m.rows();
    Matrix<F> a = m, inv = Matrix<F>::identity(f, n);
    for (size_t col = 0, prow = 0; col < n; ++col) {
        size_t p = prow;
        while (p < n && f.is_zero(a.at(p, col))) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        if (p != prow)
            for (size_t j = 0; j < n; ++j) {
                std::swap(a.at(p, j), a.at(prow, j));
                std::swap(inv.at(p, j), inv.at(prow, j));
            }
        typename F::Elem ip = f.inv(a.at(prow, col));
        for (size_t j = 0; j < n; ++j) {
            a.at(prow, j) = f.mul(a.at(prow, j), ip);
            inv.at(prow, j) = f.mul(inv.at(prow, j), ip);
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == prow) continue;
            const auto c = a.at(i, col);
            if (f.is_zero(c)) continue;
            for (size_t j = 0; j < n; ++j) {
                a.at(i, j) = f.sub(a.at(i, j), f.mul(c, a.at(prow, j)));
                inv.at(i, j) = f.sub(inv.at(i, j), f.mul(c, inv.at(prow, j)));
            }
        }
        ++prow;
    }
    return inv;
}

}  // namespace lsa
