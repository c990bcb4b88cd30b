#pragma once

// Ready-made model algebras: the full rank-1-generated symplectic algebra on a
// standard space, and the two algebras generated by the rank-1 elements of a
// 3-dimensional subspace (ambient-nondegenerate and intrinsically degenerate).
// Also provides basis scrambles used to exercise recognition.

#include "liesym/structure_algebra.hpp"
#include "liesym/tensor_model.hpp"

namespace liesym {

template <class K>
struct ModelAlgebra {
    StructureLieAlgebra<K> algebra;
    SymplecticSpace<K> space;   // the space the rank-1 generators came from
    Mat<K> embed;               // algebra basis in ambient model coordinates
    bool sym_coordinates = true; // true: embed rows are symmetric-matrix coords, else endo coords
};

namespace detail {

template <class K>
BracketOracle<K> sym_oracle(const SymplecticSpace<K>& sp) {
    return [sp](const Vec<K>& a, const Vec<K>& b) {
        return sym_coords(bracket_model(from_sym_coords(sp, a), from_sym_coords(sp, b)));
    };
}

} // namespace detail

/// The algebra spanned by all rank-1 generators of a nondegenerate standard
/// space with m hyperbolic pairs; dimension m(2m+1). Generators (listed as
/// extremal generators) are the unit and pairwise-sum rank-1 elements.
template <class K>
ModelAlgebra<K> build_sp_model(const FieldSpec& f, Index m) {
    if (m < 1) throw std::invalid_argument("need at least one hyperbolic pair");
    SymplecticSpace<K> sp = standard_space<K>(f, m, 0);
    std::vector<Vec<K>> gens;
    for (Index i = 0; i < sp.n; ++i) {
        gens.push_back(sym_coords(pure(sp, unit_vec(sp, i))));
        for (Index j = i + 1; j < sp.n; ++j)
            gens.push_back(sym_coords(pure(sp, Vec<K>(unit_vec(sp, i) + unit_vec(sp, j)))));
    }
    ClosureResult<K> res = from_bracket_closure<K>(f, detail::sym_oracle(sp), gens);
    res.algebra.set_extremal_generators(res.generator_coords);
    return ModelAlgebra<K>{std::move(res.algebra), std::move(sp), std::move(res.embed), true};
}

/// The subalgebra of the 4-dimensional model generated by the rank-1 elements
/// of the 3-space W = <e1, e2, e3>; dimension 6 with a 1-dimensional center.
template <class K>
ModelAlgebra<K> build_sp3_model(const FieldSpec& f) {
    SymplecticSpace<K> sp = standard_space<K>(f, 2, 0);
    std::vector<Vec<K>> w_vectors;
    for (Index i : {0, 1, 2}) w_vectors.push_back(unit_vec(sp, i));
    for (Index i : {0, 1, 2})
        for (Index j : {0, 1, 2})
            if (i < j) w_vectors.push_back(Vec<K>(unit_vec(sp, i) + unit_vec(sp, j)));
    std::vector<Vec<K>> gens;
    for (const auto& v : w_vectors) gens.push_back(sym_coords(pure(sp, v)));
    ClosureResult<K> res = from_bracket_closure<K>(f, detail::sym_oracle(sp), gens);
    res.algebra.set_extremal_generators(res.generator_coords);
    return ModelAlgebra<K>{std::move(res.algebra), std::move(sp), std::move(res.embed), true};
}

/// The algebra generated by the rank-1 elements of the intrinsically
/// degenerate 3-space (W, f|_W); dimension 5 with trivial center. Elements are
/// tracked through their induced endomorphisms since the radical direction
/// contributes nothing.
template <class K>
ModelAlgebra<K> build_psp3_model(const FieldSpec& f) {
    SymplecticSpace<K> big = standard_space<K>(f, 2, 0);
    Subspace<K> w = Subspace<K>::from_vectors(
        {unit_vec(big, 0), unit_vec(big, 1), unit_vec(big, 2)}, 4);
    SymplecticSpace<K> sp = restrict_space(big, w); // radical is the middle basis vector
    BracketOracle<K> oracle = [sp](const Vec<K>& a, const Vec<K>& b) {
        const Index n = sp.n;
        Mat<K> ma(n, n), mb(n, n);
        Index k = 0;
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) ma(i, j) = a(k++);
        k = 0;
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) mb(i, j) = b(k++);
        Mat<K> comm = ma * mb - mb * ma;
        Vec<K> out(n * n);
        k = 0;
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) out(k++) = comm(i, j);
        return out;
    };
    std::vector<Vec<K>> w_vectors;
    for (Index i = 0; i < 3; ++i) w_vectors.push_back(unit_vec(sp, i));
    for (Index i = 0; i < 3; ++i)
        for (Index j = i + 1; j < 3; ++j) w_vectors.push_back(Vec<K>(unit_vec(sp, i) + unit_vec(sp, j)));
    std::vector<Vec<K>> gens;
    for (const auto& v : w_vectors) gens.push_back(endo_coords(pure(sp, v)));
    std::vector<Vec<K>> nonzero_gens;
    for (auto& g : gens)
        if (!is_zero_vec(g)) nonzero_gens.push_back(g);
    ClosureResult<K> res = from_bracket_closure<K>(f, oracle, nonzero_gens);
    res.algebra.set_extremal_generators(res.generator_coords);
    return ModelAlgebra<K>{std::move(res.algebra), std::move(sp), std::move(res.embed), false};
}

/// A GL(d)-scramble of L with an optional global bracket scale:
/// [x, y]_new = scale * A^{-1} [A x, A y]_old.
template <class K>
struct Scramble {
    StructureLieAlgebra<K> algebra;
    Mat<K> map;   // A
    K scale;      // global bracket scalar
};

template <class K>
Scramble<K> scrambled_copy(const StructureLieAlgebra<K>& L, Rng& rng, std::optional<K> scale = {}) {
    const Index d = L.dim();
    Mat<K> A = random_gl<K>(L.field(), d, rng);
    K c = scale ? *scale : random_nonzero_scalar<K>(L.field(), rng);
    // columns of Ainv give A^{-1}
    Mat<K> aug(d, 2 * d);
    aug.leftCols(d) = A;
    aug.rightCols(d) = identity<K>(L.field(), d);
    Echelon<K> e = echelonize(aug);
    Mat<K> Ainv = e.R.rightCols(d);

    std::vector<TableEntry<K>> entries;
    for (Index i = 0; i < d; ++i)
        for (Index j = i + 1; j < d; ++j) {
            Vec<K> w = Ainv * L.bracket(A.col(i), A.col(j));
            TableEntry<K> en;
            en.i = i;
            en.j = j;
            for (Index k = 0; k < d; ++k)
                if (!is_zero(w(k))) en.coeffs.emplace_back(k, c * w(k));
            if (!en.coeffs.empty()) entries.push_back(std::move(en));
        }
    Scramble<K> out{StructureLieAlgebra<K>::from_table(L.field(), d, entries), A, c};
    std::vector<Vec<K>> gens;
    for (const Vec<K>& g : L.extremal_generators()) gens.push_back(Vec<K>(Ainv * g));
    out.algebra.set_extremal_generators(std::move(gens));
    return out;
}

} // namespace liesym
