#pragma once

// The concrete model of the symplectic Lie algebra: the span of the rank-1
// maps w -> f(v,w) v inside End(V). An element is stored as a symmetric
// coefficient matrix S; the induced endomorphism is S J where J is the Gram
// matrix. The rank-1 generator attached to v has S = v v^T.

#include <stdexcept>

#include "liesym/symplectic.hpp"

namespace liesym {

template <class K>
struct SfElement {
    SymplecticSpace<K> space;
    Mat<K> S; // symmetric

    SfElement() = default;
    SfElement(SymplecticSpace<K> sp, Mat<K> coeff) : space(std::move(sp)), S(std::move(coeff)) {
        if (S.rows() != space.n || S.cols() != space.n)
            throw std::invalid_argument("coefficient matrix size mismatch");
    }

    Mat<K> endo() const { return S * space.gram; }

    /// Elements are the induced maps: equal coefficients modulo the radical
    /// directions count as the same element of the algebra.
    bool same_element(const SfElement& o) const {
        return space == o.space && mats_equal(Mat<K>(endo()), Mat<K>(o.endo()));
    }

    bool is_zero_element() const { return is_zero_mat(Mat<K>(endo())); }

    friend SfElement operator+(const SfElement& a, const SfElement& b) {
        require_same_space(a, b);
        return SfElement(a.space, a.S + b.S);
    }
    friend SfElement operator-(const SfElement& a, const SfElement& b) {
        require_same_space(a, b);
        return SfElement(a.space, a.S - b.S);
    }
    friend SfElement operator*(const K& c, const SfElement& a) {
        return SfElement(a.space, Mat<K>(a.S * c));
    }

    static void require_same_space(const SfElement& a, const SfElement& b) {
        if (!(a.space == b.space)) throw std::invalid_argument("space mismatch");
    }
};

/// v (x) f_v, encoded as S = v v^T. Requires v != 0.
template <class K>
SfElement<K> pure(const SymplecticSpace<K>& sp, const Vec<K>& v) {
    if (is_zero_vec(v)) throw std::invalid_argument("zero vector");
    if (v.size() != sp.n) throw std::invalid_argument("vector length mismatch");
    return SfElement<K>(sp, Mat<K>(v * v.transpose()));
}

/// v (x) f_w + w (x) f_v, encoded as S = v w^T + w v^T.
template <class K>
SfElement<K> sym_pair(const SymplecticSpace<K>& sp, const Vec<K>& v, const Vec<K>& w) {
    return SfElement<K>(sp, Mat<K>(v * w.transpose() + w * v.transpose()));
}

template <class K>
SfElement<K> bracket_model(const SfElement<K>& a, const SfElement<K>& b) {
    SfElement<K>::require_same_space(a, b);
    const Mat<K>& J = a.space.gram;
    return SfElement<K>(a.space, Mat<K>(a.S * J * b.S - b.S * J * a.S));
}

/// Natural action on V.
template <class K>
Vec<K> act(const SfElement<K>& a, const Vec<K>& v) {
    if (v.size() != a.space.n) throw std::invalid_argument("vector length mismatch");
    return a.S * a.space.gram * v;
}

/// Closed form of the extremal form on the model: trace(S_a J S_b J^T).
/// On rank-1 generators this equals f(v,w)^2; see the cross-check against the
/// definitional extraction in the test suite.
template <class K>
K model_extremal_form(const SfElement<K>& a, const SfElement<K>& b) {
    SfElement<K>::require_same_space(a, b);
    const Mat<K>& J = a.space.gram;
    Mat<K> prod = a.S * J * b.S * J.transpose();
    K acc = field_traits<K>::make(a.space.field, 0);
    for (Index i = 0; i < prod.rows(); ++i) acc = acc + prod(i, i);
    return acc;
}

/// Extract g(a, b) from [a,[a,b]] = 2 g(a,b) a, entirely inside the model.
/// Returns nothing if the nested bracket fails to be a multiple of a.
template <class K>
std::optional<K> definitional_extremal_form(const SfElement<K>& a, const SfElement<K>& b) {
    SfElement<K> nested = bracket_model(a, bracket_model(a, b));
    Mat<K> ea = a.endo(), en = nested.endo();
    K two = field_traits<K>::make(a.space.field, 2);
    // find scale c with en = c * ea
    Index pi = -1, pj = -1;
    for (Index i = 0; i < ea.rows() && pi < 0; ++i)
        for (Index j = 0; j < ea.cols(); ++j)
            if (!is_zero(ea(i, j))) { pi = i; pj = j; break; }
    if (pi < 0) return std::nullopt; // a acts as zero
    K c = en(pi, pj) / ea(pi, pj);
    for (Index i = 0; i < ea.rows(); ++i)
        for (Index j = 0; j < ea.cols(); ++j)
            if (en(i, j) != c * ea(i, j)) return std::nullopt;
    return c / two;
}

/// Coordinates of the induced endomorphism, used when spanning subalgebras.
template <class K>
Vec<K> endo_coords(const SfElement<K>& a) {
    Mat<K> e = a.endo();
    Vec<K> v(e.rows() * e.cols());
    Index k = 0;
    for (Index i = 0; i < e.rows(); ++i)
        for (Index j = 0; j < e.cols(); ++j) v(k++) = e(i, j);
    return v;
}

/// Symmetric-matrix coordinates (upper triangle, row major).
template <class K>
Vec<K> sym_coords(const SfElement<K>& a) {
    Index n = a.space.n;
    Vec<K> v(n * (n + 1) / 2);
    Index k = 0;
    for (Index i = 0; i < n; ++i)
        for (Index j = i; j < n; ++j) v(k++) = a.S(i, j);
    return v;
}

template <class K>
SfElement<K> from_sym_coords(const SymplecticSpace<K>& sp, const Vec<K>& v) {
    Index n = sp.n;
    if (v.size() != n * (n + 1) / 2) throw std::invalid_argument("coordinate length mismatch");
    Mat<K> S = zeros<K>(n, n);
    Index k = 0;
    for (Index i = 0; i < n; ++i)
        for (Index j = i; j < n; ++j) {
            S(i, j) = v(k);
            S(j, i) = v(k);
            ++k;
        }
    return SfElement<K>(sp, S);
}

struct SpIdentification {
    Index dim_sf = 0;
    Index dim_sp = 0;
    bool equal = false;
};

/// Dimension of the span of the rank-1 generators versus the dimension of
/// {M : M^T J + J M = 0}. Only meaningful for nondegenerate forms.
template <class K>
SpIdentification sp_identification(const SymplecticSpace<K>& sp) {
    if (!nondegenerate(sp)) throw std::invalid_argument("degenerate form");
    const Index n = sp.n;
    std::vector<Vec<K>> gens;
    for (Index i = 0; i < n; ++i) {
        gens.push_back(sym_coords(pure(sp, unit_vec(sp, i))));
        for (Index j = i + 1; j < n; ++j)
            gens.push_back(sym_coords(pure(sp, Vec<K>(unit_vec(sp, i) + unit_vec(sp, j)))));
    }
    SpIdentification out;
    out.dim_sf = Subspace<K>::from_vectors(gens, n * (n + 1) / 2).dim();

    // linear condition M^T J + J M = 0 on the n^2 entries of M
    Mat<K> cond = zeros<K>(n * n, n * n);
    const Mat<K>& J = sp.gram;
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            // row (a,b): sum_k M(k,a) J(k,b) + J(a,k) M(k,b)
            for (Index k = 0; k < n; ++k) {
                cond(a * n + b, k * n + a) = cond(a * n + b, k * n + a) + J(k, b);
                cond(a * n + b, k * n + b) = cond(a * n + b, k * n + b) + J(a, k);
            }
        }
    out.dim_sp = kernel_basis(cond).rows();
    out.equal = out.dim_sf == out.dim_sp;
    return out;
}

} // namespace liesym
