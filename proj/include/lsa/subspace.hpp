#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "lsa/matrix.hpp"

namespace lsa {

// Subspace of K^n in canonical form: basis columns are the unique reduced
// echelon basis, ordered by increasing leading-row index. Two equal subspaces
// have identical basis matrices.
template <class F>
class Subspace {
  public:
    using Elem = typename F::Elem;

    Subspace() : Subspace(F{}, 0) {}
    Subspace(F field, size_t ambient)
        : field_(std::move(field)), ambient_(ambient), basis_(field_, ambient, 0) {}

    static Subspace full(const F& f, size_t n) {
        return from_columns(Matrix<F>::identity(f, n));
    }
    static Subspace zero(const F& f, size_t n) { return Subspace(f, n); }

    // Canonicalizes the span of the given columns.
    static Subspace from_columns(const Matrix<F>& cols) {
        Eliminator<F> el(cols.field(), cols.rows());
        for (size_t j = 0; j < cols.cols(); ++j) el.add(cols.col(j));
        return from_eliminator(cols.field(), cols.rows(), el);
    }

    static Subspace from_eliminator(const F& f, size_t n, const Eliminator<F>& el) {
        std::vector<size_t> order(el.dim());
        std::iota(order.begin(), order.end(), size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return el.pivots()[a] < el.pivots()[b]; });
        Subspace s(f, n);
        s.basis_ = Matrix<F>(f, n, el.dim());
        for (size_t j = 0; j < order.size(); ++j)
            s.basis_.set_col(j, el.basis_rows()[order[j]]);
        return s;
    }

    const F& field() const { return field_; }
    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.cols(); }
    const Matrix<F>& basis() const { return basis_; }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

    bool contains(const std::vector<Elem>& v) const {
        Eliminator<F> el(field_, ambient_);
        for (size_t j = 0; j < basis_.cols(); ++j) el.add(basis_.col(j));
        return el.contains(v);
    }

  private:
    F field_;
    size_t ambient_;
    Matrix<F> basis_;
};

// Right kernel of m, as a canonical subspace of K^cols.
template <class F>
Subspace<F> nullspace(const Matrix<F>& m) {
    const F& f = m.field();
    size_t nr = m.rows(), nc = m.cols();
    // row-reduce a copy to RREF
    Matrix<F> a = m;
    std::vector<size_t> pivot_col;
    size_t prow = 0;
    for (size_t col = 0; col < nc && prow < nr; ++col) {
        size_t p = prow;
        while (p < nr && f.is_zero(a.at(p, col))) ++p;
        if (p == nr) continue;
        if (p != prow)
            for (size_t j = 0; j < nc; ++j) std::swap(a.at(p, j), a.at(prow, j));
        typename F::Elem ip = f.inv(a.at(prow, col));
        for (size_t j = 0; j < nc; ++j) a.at(prow, j) = f.mul(a.at(prow, j), ip);
        for (size_t i = 0; i < nr; ++i) {
            if (i == prow) continue;
            const auto c = a.at(i, col);
            if (f.is_zero(c)) continue;
            for (size_t j = 0; j < nc; ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(c, a.at(prow, j)));
        }
        pivot_col.push_back(col);
        ++prow;
    }
    std::vector<bool> is_pivot(nc, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    Matrix<F> ker(f, nc, nc - pivot_col.size());
    size_t k = 0;
    for (size_t free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        ker.at(free, k) = f.one();
        for (size_t i = 0; i < pivot_col.size(); ++i)
            ker.at(pivot_col[i], k) = f.neg(a.at(i, free));
        ++k;
    }
    return Subspace<F>::from_columns(ker);
}

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient_dim() != b.ambient_dim() || !(a.field() == b.field()))
        throw dimension_mismatch("subspace ambient mismatch");
    Matrix<F> m(a.field(), a.ambient_dim(), a.dim() + b.dim());
    for (size_t j = 0; j < a.dim(); ++j) m.set_col(j, a.basis().col(j));
    for (size_t j = 0; j < b.dim(); ++j) m.set_col(a.dim() + j, b.basis().col(j));
    return Subspace<F>::from_columns(m);
}

template <class F>
Subspace<F> subspace_intersect(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient_dim() != b.ambient_dim() || !(a.field() == b.field()))
        throw dimension_mismatch("subspace ambient mismatch");
    const F& f = a.field();
    size_t n = a.ambient_dim(), ka = a.dim(), kb = b.dim();
    if (ka == 0 || kb == 0) return Subspace<F>::zero(f, n);
    // solve A x = B y via nullspace of [A | -B]
    Matrix<F> stacked(f, n, ka + kb);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < ka; ++j) stacked.at(i, j) = a.basis().at(i, j);
        for (size_t j = 0; j < kb; ++j) stacked.at(i, ka + j) = f.neg(b.basis().at(i, j));
    }
    Subspace<F> ker = nullspace(stacked);
    Matrix<F> vecs(f, n, ker.dim());
    for (size_t j = 0; j < ker.dim(); ++j) {
        auto kcol = ker.basis().col(j);
        std::vector<typename F::Elem> x(kcol.begin(), kcol.begin() + ka);
        vecs.set_col(j, a.basis().apply(x));
    }
    return Subspace<F>::from_columns(vecs);
}

// Extends independent columns to a basis of K^n, drawing the remaining
// columns greedily from the standard basis in index order. The input columns
// are returned unchanged as the leading columns.
template <class F>
Matrix<F> complete_to_basis(const Matrix<F>& vectors) {
    const F& f = vectors.field();
    size_t n = vectors.rows();
    Eliminator<F> el(f, n);
    for (size_t j = 0; j < vectors.cols(); ++j)
        if (!el.add(vectors.col(j)))
            throw std::invalid_argument("complete_to_basis: input columns are dependent");
    Matrix<F> out(f, n, n);
    for (size_t j = 0; j < vectors.cols(); ++j) out.set_col(j, vectors.col(j));
    size_t k = vectors.cols();
    for (size_t i = 0; i < n && k < n; ++i) {
        std::vector<typename F::Elem> e(n, f.zero());
        e[i] = f.one();
        if (el.add(e)) {
            out.at(i, k) = f.one();
            ++k;
        }
    }
    return out;
}

}  // namespace lsa
