#pragma once

// Dense exact linear algebra on Eigen matrices over the liesym scalar types:
// reduced row echelon form, rank, kernels, and subspace arithmetic. Elimination
// is written here (exact pivoting); Eigen supplies storage and products.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "liesym/fields.hpp"

namespace liesym {

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

template <class K>
Mat<K> zeros(Index r, Index c) {
    Mat<K> m(r, c);
    m.setZero();
    return m;
}

template <class K>
Vec<K> zero_vec(Index n) {
    Vec<K> v(n);
    v.setZero();
    return v;
}

template <class K>
Mat<K> identity(const FieldSpec& f, Index n) {
    Mat<K> m = zeros<K>(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = field_traits<K>::make(f, 1);
    return m;
}

template <class K>
bool is_zero_vec(const Vec<K>& v) {
    for (Index i = 0; i < v.size(); ++i)
        if (!is_zero(v(i))) return false;
    return true;
}

template <class K>
bool is_zero_mat(const Mat<K>& m) {
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) return false;
    return true;
}

template <class K>
bool mats_equal(const Mat<K>& a, const Mat<K>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

template <class K>
bool vecs_equal(const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) return false;
    for (Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return false;
    return true;
}

/// v and w span the same 1-space.
template <class K>
bool proportional(const Vec<K>& v, const Vec<K>& w) {
    Index n = v.size();
    if (w.size() != n) return false;
    Index iv = -1;
    for (Index i = 0; i < n; ++i)
        if (!is_zero(v(i))) { iv = i; break; }
    if (iv < 0) return is_zero_vec(w);
    if (is_zero(w(iv))) return false;
    K c = w(iv) / v(iv);
    for (Index i = 0; i < n; ++i)
        if (w(i) != c * v(i)) return false;
    return true;
}

/// Scale so the first nonzero coordinate is 1; canonical representative of a 1-space.
template <class K>
Vec<K> canonical_rep(const Vec<K>& v) {
    for (Index i = 0; i < v.size(); ++i)
        if (!is_zero(v(i))) {
            Vec<K> out = v;
            K inv = v(i).inv();
            for (Index j = 0; j < v.size(); ++j) out(j) = out(j) * inv;
            return out;
        }
    throw std::invalid_argument("zero vector has no projective representative");
}

template <class K>
std::string vec_key(const Vec<K>& v) {
    std::string s;
    for (Index i = 0; i < v.size(); ++i) {
        s += field_traits<K>::key(v(i));
        s += ',';
    }
    return s;
}

// ---------------------------------------------------------------------------
// Reduced row echelon form
// ---------------------------------------------------------------------------

template <class K>
struct Echelon {
    Mat<K> R;                   // reduced row echelon form, zero rows dropped
    Index rank = 0;
    std::vector<Index> pivots;  // strictly increasing pivot columns
};

template <class K>
Echelon<K> echelonize(Mat<K> m) {
    const Index rows = m.rows(), cols = m.cols();
    Index r = 0;
    std::vector<Index> pivots;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index piv = -1;
        for (Index i = r; i < rows; ++i)
            if (!is_zero(m(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) m.row(piv).swap(m.row(r));
        K inv = m(r, c).inv();
        for (Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
        for (Index i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            K f = m(i, c);
            for (Index j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Echelon<K> out;
    out.rank = r;
    out.pivots = std::move(pivots);
    out.R = m.topRows(r);
    return out;
}

template <class K>
Index rank_of(const Mat<K>& m) {
    return echelonize(m).rank;
}

/// Basis of the right kernel {v : m v = 0}, rows echelonized.
template <class K>
Mat<K> kernel_basis(const Mat<K>& m) {
    Echelon<K> e = echelonize(m);
    const Index cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (Index c : e.pivots) is_pivot[c] = true;
    std::vector<Index> free_cols;
    for (Index c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat<K> ker = zeros<K>(static_cast<Index>(free_cols.size()), cols);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        Index fc = free_cols[k];
        ker(k, fc) = K(1); // literal one; binds lazily on first arithmetic
        for (Index i = 0; i < e.rank; ++i) ker(k, e.pivots[i]) = -e.R(i, fc);
    }
    return echelonize(ker).R;
}

// ---------------------------------------------------------------------------
// Subspaces (row spaces in reduced echelon form)
// ---------------------------------------------------------------------------

template <class K>
struct Subspace {
    Index ambient = 0;
    Mat<K> basis; // RREF rows, linearly independent

    static Subspace zero(Index ambient) {
        Subspace s;
        s.ambient = ambient;
        s.basis = zeros<K>(0, ambient);
        return s;
    }

    /// Row space of the given matrix.
    static Subspace from_rows(const Mat<K>& rows) {
        Subspace s;
        s.ambient = rows.cols();
        s.basis = echelonize(rows).R;
        return s;
    }

    static Subspace from_vectors(const std::vector<Vec<K>>& vs, Index ambient) {
        Mat<K> rows = zeros<K>(static_cast<Index>(vs.size()), ambient);
        for (size_t i = 0; i < vs.size(); ++i) rows.row(static_cast<Index>(i)) = vs[i].transpose();
        return from_rows(rows);
    }

    Index dim() const { return basis.rows(); }

    bool contains(const Vec<K>& v) const {
        if (v.size() != ambient) throw std::invalid_argument("ambient dimension mismatch");
        Mat<K> stacked(basis.rows() + 1, ambient);
        stacked.topRows(basis.rows()) = basis;
        stacked.row(basis.rows()) = v.transpose();
        return rank_of(stacked) == dim();
    }

    bool operator==(const Subspace& o) const {
        return ambient == o.ambient && mats_equal(basis, o.basis);
    }
};

template <class K>
Subspace<K> subspace_sum(const Subspace<K>& a, const Subspace<K>& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("ambient dimension mismatch");
    Mat<K> stacked(a.dim() + b.dim(), a.ambient);
    stacked.topRows(a.dim()) = a.basis;
    stacked.bottomRows(b.dim()) = b.basis;
    Subspace<K> s;
    s.ambient = a.ambient;
    s.basis = echelonize(stacked).R;
    return s;
}

/// Intersection via the left kernel of the stacked basis matrix.
template <class K>
Subspace<K> subspace_intersection(const Subspace<K>& a, const Subspace<K>& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("ambient dimension mismatch");
    const Index da = a.dim(), db = b.dim();
    if (da == 0 || db == 0) return Subspace<K>::zero(a.ambient);
    Mat<K> stacked(da + db, a.ambient);
    stacked.topRows(da) = a.basis;
    stacked.bottomRows(db) = b.basis;
    Mat<K> left_ker = kernel_basis(Mat<K>(stacked.transpose())); // rows u with u^T stacked = 0
    Mat<K> inter = zeros<K>(left_ker.rows(), a.ambient);
    for (Index i = 0; i < left_ker.rows(); ++i)
        inter.row(i) = left_ker.row(i).head(da) * a.basis;
    Subspace<K> s;
    s.ambient = a.ambient;
    s.basis = echelonize(inter).R;
    return s;
}

/// All canonical representatives of 1-spaces in K^n (finite fields only):
/// first nonzero coordinate equal to 1, enumerated lexicographically.
template <class K>
std::vector<Vec<K>> projective_points(const FieldSpec& f, Index n) {
    static_assert(field_traits<K>::finite, "cannot enumerate 1-spaces of an infinite field");
    std::vector<K> elems = field_traits<K>::elements(f);
    std::vector<Vec<K>> out;
    K one = field_traits<K>::make(f, 1);
    for (Index lead = 0; lead < n; ++lead) {
        Index tail = n - lead - 1;
        std::vector<size_t> idx(tail, 0);
        for (;;) {
            Vec<K> v = zero_vec<K>(n);
            v(lead) = one;
            for (Index t = 0; t < tail; ++t) v(lead + 1 + t) = elems[idx[t]];
            out.push_back(std::move(v));
            Index t = tail - 1;
            for (; t >= 0; --t) {
                if (++idx[t] < elems.size()) break;
                idx[t] = 0;
            }
            if (t < 0) break;
        }
    }
    return out;
}

/// Exact solution of A x = b, if one exists.
template <class K>
std::optional<Vec<K>> solve_linear(const Mat<K>& A, const Vec<K>& b) {
    const Index rows = A.rows(), cols = A.cols();
    Mat<K> aug(rows, cols + 1);
    aug.leftCols(cols) = A;
    aug.col(cols) = b;
    Echelon<K> e = echelonize(aug);
    Vec<K> x = zero_vec<K>(cols);
    for (Index i = 0; i < e.rank; ++i) {
        if (e.pivots[i] == cols) return std::nullopt; // inconsistent row
        x(e.pivots[i]) = e.R(i, cols);
    }
    return x;
}

/// Coordinates of v in the row space of `rows` (rows need not be echelonized).
template <class K>
std::optional<Vec<K>> coordinates_in_rows(const Mat<K>& rows, const Vec<K>& v) {
    return solve_linear(Mat<K>(rows.transpose()), v);
}

} // namespace liesym
