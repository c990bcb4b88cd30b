#pragma once

// Finite-dimensional spaces carrying an alternating bilinear form, possibly
// degenerate, together with Witt-style hyperbolic bases.

#include <stdexcept>
#include <vector>

#include "liesym/linalg.hpp"

namespace liesym {

template <class K>
struct SymplecticSpace {
    FieldSpec field;
    Index n = 0;
    Mat<K> gram; // alternating: G^T = -G with zero diagonal

    SymplecticSpace() = default;
    SymplecticSpace(FieldSpec f, Mat<K> g) : field(f), n(g.rows()), gram(std::move(g)) {
        if (gram.rows() != gram.cols() || n < 1)
            throw std::invalid_argument("Gram matrix must be square and nonempty");
        for (Index i = 0; i < n; ++i) {
            if (!is_zero(gram(i, i)))
                throw std::invalid_argument("Gram matrix has a nonzero diagonal entry");
            for (Index j = 0; j < n; ++j)
                if (gram(i, j) != -gram(j, i))
                    throw std::invalid_argument("Gram matrix is not antisymmetric");
        }
    }

    bool operator==(const SymplecticSpace& o) const {
        return field == o.field && n == o.n && mats_equal(gram, o.gram);
    }
};

/// Standard space with m hyperbolic pairs (e_i, e_{m+i}) and an r-dimensional
/// radical in the last coordinates: f(e_i, e_{m+i}) = 1 for i < m.
template <class K>
SymplecticSpace<K> standard_space(const FieldSpec& f, Index m, Index r) {
    if (m < 1 && r < 1) throw std::invalid_argument("empty space");
    Index n = 2 * m + r;
    Mat<K> g = zeros<K>(n, n);
    K one = field_traits<K>::make(f, 1);
    for (Index i = 0; i < m; ++i) {
        g(i, m + i) = one;
        g(m + i, i) = -one;
    }
    return SymplecticSpace<K>(f, g);
}

template <class K>
K f_eval(const SymplecticSpace<K>& s, const Vec<K>& v, const Vec<K>& w) {
    if (v.size() != s.n || w.size() != s.n)
        throw std::invalid_argument("vector length does not match space dimension");
    K acc = field_traits<K>::make(s.field, 0);
    for (Index i = 0; i < s.n; ++i) {
        if (is_zero(v(i))) continue;
        for (Index j = 0; j < s.n; ++j)
            if (!is_zero(s.gram(i, j))) acc = acc + v(i) * s.gram(i, j) * w(j);
    }
    return acc;
}

template <class K>
Subspace<K> radical(const SymplecticSpace<K>& s) {
    return Subspace<K>::from_rows(kernel_basis(s.gram));
}

template <class K>
bool nondegenerate(const SymplecticSpace<K>& s) {
    return rank_of(s.gram) == s.n;
}

template <class K>
Vec<K> unit_vec(const SymplecticSpace<K>& s, Index i) {
    Vec<K> v = zero_vec<K>(s.n);
    v(i) = field_traits<K>::make(s.field, 1);
    return v;
}

template <class K>
struct WittBasis {
    std::vector<std::pair<Vec<K>, Vec<K>>> pairs; // f(e_i, f_i) = 1
    std::vector<Vec<K>> radical_basis;
};

/// Greedy hyperbolic-pair peeling. Picks the lexicographically first usable
/// pair at each step, so the basis is reproducible.
template <class K>
WittBasis<K> witt_basis(const SymplecticSpace<K>& s) {
    WittBasis<K> out;
    std::vector<Vec<K>> work;
    for (Index i = 0; i < s.n; ++i) work.push_back(unit_vec(s, i));
    for (;;) {
        Index pi = -1, pj = -1;
        for (size_t i = 0; i < work.size() && pi < 0; ++i)
            for (size_t j = i + 1; j < work.size(); ++j)
                if (!is_zero(f_eval(s, work[i], work[j]))) {
                    pi = static_cast<Index>(i);
                    pj = static_cast<Index>(j);
                    break;
                }
        if (pi < 0) break;
        Vec<K> e = work[pi];
        K scale = f_eval(s, e, work[pj]).inv();
        Vec<K> fv = work[pj];
        for (Index t = 0; t < s.n; ++t) fv(t) = fv(t) * scale;
        // project the rest into the f-perp of the pair
        std::vector<Vec<K>> next;
        for (size_t t = 0; t < work.size(); ++t) {
            if (static_cast<Index>(t) == pi || static_cast<Index>(t) == pj) continue;
            Vec<K> v = work[t];
            K a = f_eval(s, fv, v), b = f_eval(s, e, v);
            for (Index c = 0; c < s.n; ++c) v(c) = v(c) + a * e(c) - b * fv(c);
            next.push_back(std::move(v));
        }
        out.pairs.emplace_back(std::move(e), std::move(fv));
        work = std::move(next);
    }
    for (Vec<K>& v : work)
        if (!is_zero_vec(v)) out.radical_basis.push_back(std::move(v));
    return out;
}

/// Check every defining property of a Witt basis exactly.
template <class K>
bool witt_basis_valid(const SymplecticSpace<K>& s, const WittBasis<K>& w) {
    K one = field_traits<K>::make(s.field, 1);
    std::vector<Vec<K>> all;
    for (auto& [e, fv] : w.pairs) {
        if (f_eval(s, e, fv) != one) return false;
        all.push_back(e);
        all.push_back(fv);
    }
    for (auto& r : w.radical_basis) all.push_back(r);
    for (size_t i = 0; i < w.pairs.size(); ++i)
        for (size_t j = 0; j < w.pairs.size(); ++j) {
            if (i == j) continue;
            if (!is_zero(f_eval(s, w.pairs[i].first, w.pairs[j].first))) return false;
            if (!is_zero(f_eval(s, w.pairs[i].first, w.pairs[j].second))) return false;
            if (!is_zero(f_eval(s, w.pairs[i].second, w.pairs[j].second))) return false;
        }
    for (auto& r : w.radical_basis)
        for (auto& v : all)
            if (!is_zero(f_eval(s, r, v))) return false;
    if (static_cast<Index>(all.size()) != s.n) return false;
    return Subspace<K>::from_vectors(all, s.n).dim() == s.n;
}

/// Restriction of the form to a subspace, expressed in the subspace basis.
template <class K>
SymplecticSpace<K> restrict_space(const SymplecticSpace<K>& s, const Subspace<K>& u) {
    if (u.ambient != s.n) throw std::invalid_argument("subspace not inside this space");
    Mat<K> b = u.basis;
    Mat<K> g = b * s.gram * b.transpose();
    return SymplecticSpace<K>(s.field, g);
}

} // namespace liesym
