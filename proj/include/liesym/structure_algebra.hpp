#pragma once

// Abstract Lie algebras given by structure constants: bracket closure of a
// generating set, ad matrices, center, ideals, simplicity probing, base
// change to the quadratic extension, and the extremal form extracted from
// the definitional identity [x,[x,y]] = 2 g(x,y) x.

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "liesym/rng.hpp"
#include "liesym/symplectic.hpp"

namespace liesym {

template <class K>
using BracketOracle = std::function<Vec<K>(const Vec<K>&, const Vec<K>&)>;

/// One sparse structure-constant entry: [b_i, b_j] = sum_k c_k b_k for i < j.
template <class K>
struct TableEntry {
    Index i = 0, j = 0;
    std::vector<std::pair<Index, K>> coeffs;
};

template <class K>
class StructureLieAlgebra {
  public:
    StructureLieAlgebra() = default;

    static StructureLieAlgebra from_table(const FieldSpec& field, Index dim,
                                          const std::vector<TableEntry<K>>& entries) {
        StructureLieAlgebra L;
        L.field_ = field;
        L.dim_ = dim;
        L.ad_.assign(dim, zeros<K>(dim, dim));
        for (const auto& e : entries) {
            if (e.i >= e.j || e.j >= dim)
                throw std::invalid_argument("structure table requires 0 <= i < j < dim");
            for (auto& [k, c] : e.coeffs) {
                if (k >= dim) throw std::invalid_argument("structure coefficient index out of range");
                L.ad_[e.i](k, e.j) = L.ad_[e.i](k, e.j) + c;
                L.ad_[e.j](k, e.i) = L.ad_[e.j](k, e.i) - c;
            }
        }
        return L;
    }

    const FieldSpec& field() const { return field_; }
    Index dim() const { return dim_; }

    /// Matrix of y -> [b_i, y].
    const Mat<K>& ad_basis(Index i) const { return ad_[i]; }

    Vec<K> basis_bracket(Index i, Index j) const { return ad_[i].col(j); }

    Vec<K> bracket(const Vec<K>& x, const Vec<K>& y) const {
        Vec<K> out = zero_vec<K>(dim_);
        for (Index i = 0; i < dim_; ++i) {
            if (is_zero(x(i))) continue;
            out += x(i) * (ad_[i] * y);
        }
        return out;
    }

    /// Matrix of y -> [x, y].
    Mat<K> ad_matrix(const Vec<K>& x) const {
        Mat<K> out = zeros<K>(dim_, dim_);
        for (Index i = 0; i < dim_; ++i) {
            if (is_zero(x(i))) continue;
            out += x(i) * ad_[i];
        }
        return out;
    }

    std::vector<TableEntry<K>> table() const {
        std::vector<TableEntry<K>> out;
        for (Index i = 0; i < dim_; ++i)
            for (Index j = i + 1; j < dim_; ++j) {
                TableEntry<K> e;
                e.i = i;
                e.j = j;
                for (Index k = 0; k < dim_; ++k)
                    if (!is_zero(ad_[i](k, j))) e.coeffs.emplace_back(k, ad_[i](k, j));
                if (!e.coeffs.empty()) out.push_back(std::move(e));
            }
        return out;
    }

    const std::vector<Vec<K>>& extremal_generators() const { return extremal_generators_; }
    void set_extremal_generators(std::vector<Vec<K>> gens) { extremal_generators_ = std::move(gens); }

    K zero() const { return field_traits<K>::make(field_, 0); }
    K one() const { return field_traits<K>::make(field_, 1); }
    Vec<K> basis_vec(Index i) const {
        Vec<K> v = zero_vec<K>(dim_);
        v(i) = one();
        return v;
    }

  private:
    FieldSpec field_;
    Index dim_ = 0;
    std::vector<Mat<K>> ad_;
    std::vector<Vec<K>> extremal_generators_;
};

/// Exhaustive Jacobi check on basis triples, capped for large dimensions.
template <class K>
bool jacobi_holds(const StructureLieAlgebra<K>& L, Index exhaustive_limit = 21,
                  Rng* rng = nullptr, int samples = 400) {
    const Index d = L.dim();
    auto check = [&](Index i, Index j, Index k) {
        Vec<K> s = L.bracket(L.basis_vec(i), L.basis_bracket(j, k)) +
                   L.bracket(L.basis_vec(j), L.basis_bracket(k, i)) +
                   L.bracket(L.basis_vec(k), L.basis_bracket(i, j));
        return is_zero_vec(s);
    };
    if (d <= exhaustive_limit || rng == nullptr) {
        for (Index i = 0; i < d; ++i)
            for (Index j = i + 1; j < d; ++j)
                for (Index k = j + 1; k < d; ++k)
                    if (!check(i, j, k)) return false;
        return true;
    }
    std::uniform_int_distribution<Index> pick(0, d - 1);
    for (int s = 0; s < samples; ++s)
        if (!check(pick(*rng), pick(*rng), pick(*rng))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Bracket closure of a generating set inside an ambient space
// ---------------------------------------------------------------------------

template <class K>
struct ClosureResult {
    StructureLieAlgebra<K> algebra;
    Mat<K> embed;                        // dim x ambient: algebra basis in ambient coordinates
    std::vector<Vec<K>> generator_coords; // the generators, re-expressed in the new basis
};

/// Smallest bracket-closed subspace containing the generators. The oracle must
/// be bilinear and antisymmetric on the ambient coordinates.
template <class K>
ClosureResult<K> from_bracket_closure(const FieldSpec& field, const BracketOracle<K>& oracle,
                                      const std::vector<Vec<K>>& generators, Index dim_cap = 64) {
    if (generators.empty()) throw std::invalid_argument("empty generating set");
    const Index ambient = generators.front().size();
    Mat<K> rows = zeros<K>(static_cast<Index>(generators.size()), ambient);
    for (size_t i = 0; i < generators.size(); ++i) rows.row(static_cast<Index>(i)) = generators[i].transpose();
    Mat<K> basis = echelonize(rows).R;

    for (bool grew = true; grew;) {
        grew = false;
        if (basis.rows() > dim_cap) throw std::runtime_error("dimension budget exceeded");
        const Index d = basis.rows();
        std::vector<Vec<K>> fresh;
        for (Index i = 0; i < d; ++i)
            for (Index j = i + 1; j < d; ++j) {
                Vec<K> w = oracle(basis.row(i).transpose(), basis.row(j).transpose());
                if (is_zero_vec(w)) continue;
                Mat<K> stacked(basis.rows() + static_cast<Index>(fresh.size()) + 1, ambient);
                stacked.topRows(basis.rows()) = basis;
                for (size_t t = 0; t < fresh.size(); ++t)
                    stacked.row(basis.rows() + static_cast<Index>(t)) = fresh[t].transpose();
                stacked.row(stacked.rows() - 1) = w.transpose();
                if (rank_of(stacked) > basis.rows() + static_cast<Index>(fresh.size()))
                    fresh.push_back(std::move(w));
            }
        if (!fresh.empty()) {
            Mat<K> stacked(basis.rows() + static_cast<Index>(fresh.size()), ambient);
            stacked.topRows(basis.rows()) = basis;
            for (size_t t = 0; t < fresh.size(); ++t)
                stacked.row(basis.rows() + static_cast<Index>(t)) = fresh[t].transpose();
            Mat<K> next = echelonize(stacked).R;
            grew = next.rows() > basis.rows();
            basis = std::move(next);
        }
    }
    if (basis.rows() > dim_cap) throw std::runtime_error("dimension budget exceeded");

    const Index d = basis.rows();
    ClosureResult<K> out;
    std::vector<TableEntry<K>> entries;
    for (Index i = 0; i < d; ++i)
        for (Index j = i + 1; j < d; ++j) {
            Vec<K> w = oracle(basis.row(i).transpose(), basis.row(j).transpose());
            auto coords = coordinates_in_rows(basis, w);
            if (!coords) throw std::logic_error("closure is not closed; oracle not bilinear?");
            TableEntry<K> e;
            e.i = i;
            e.j = j;
            for (Index k = 0; k < d; ++k)
                if (!is_zero((*coords)(k))) e.coeffs.emplace_back(k, (*coords)(k));
            if (!e.coeffs.empty()) entries.push_back(std::move(e));
        }
    out.algebra = StructureLieAlgebra<K>::from_table(field, d, entries);
    out.embed = basis;
    for (const auto& g : generators) {
        auto c = coordinates_in_rows(basis, g);
        if (!c) throw std::logic_error("generator escaped its own closure");
        out.generator_coords.push_back(*c);
    }
    if (!jacobi_holds(out.algebra)) throw std::logic_error("closure violates the Jacobi identity");
    return out;
}

// ---------------------------------------------------------------------------
// Center, ideals, simplicity
// ---------------------------------------------------------------------------

template <class K>
Subspace<K> center(const StructureLieAlgebra<K>& L) {
    const Index d = L.dim();
    Mat<K> stacked(d * d, d);
    for (Index i = 0; i < d; ++i) stacked.middleRows(i * d, d) = L.ad_basis(i);
    return Subspace<K>::from_rows(kernel_basis(stacked));
}

/// Smallest ideal containing the seed.
template <class K>
Subspace<K> ideal_generated(const StructureLieAlgebra<K>& L, const Vec<K>& seed) {
    const Index d = L.dim();
    Mat<K> basis = echelonize(Mat<K>(seed.transpose())).R;
    for (bool grew = true; grew;) {
        grew = false;
        for (Index r = 0; r < basis.rows(); ++r)
            for (Index i = 0; i < d; ++i) {
                Vec<K> w = L.ad_basis(i) * basis.row(r).transpose();
                if (is_zero_vec(w)) continue;
                Mat<K> stacked(basis.rows() + 1, d);
                stacked.topRows(basis.rows()) = basis;
                stacked.row(basis.rows()) = w.transpose();
                Mat<K> next = echelonize(stacked).R;
                if (next.rows() > basis.rows()) {
                    basis = std::move(next);
                    grew = true;
                }
            }
    }
    Subspace<K> s;
    s.ambient = d;
    s.basis = basis;
    return s;
}

/// True iff the ideal generated by every basis vector, and by a sample of
/// random nonzero elements, is the whole algebra.
template <class K>
bool simplicity_probe(const StructureLieAlgebra<K>& L, Rng& rng, int samples = 8) {
    const Index d = L.dim();
    if (d == 0) return false;
    for (Index i = 0; i < d; ++i)
        if (ideal_generated(L, L.basis_vec(i)).dim() != d) return false;
    for (int s = 0; s < samples; ++s) {
        Vec<K> x = random_nonzero_vec<K>(L.field(), d, rng);
        if (ideal_generated(L, x).dim() != d) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Extremality primitives and the extremal form
// ---------------------------------------------------------------------------

template <class K>
struct ExtremalCheck {
    bool extremal = false;
    bool sandwich = false;
};

/// x is extremal iff [x,[x,b]] lands in <x> for every basis vector b, and a
/// sandwich iff all those values vanish.
template <class K>
ExtremalCheck<K> is_extremal(const StructureLieAlgebra<K>& L, const Vec<K>& x) {
    if (is_zero_vec(x)) throw std::invalid_argument("zero vector is not extremal");
    ExtremalCheck<K> out;
    Mat<K> adx = L.ad_matrix(x);
    Index pivot = -1;
    for (Index i = 0; i < x.size(); ++i)
        if (!is_zero(x(i))) { pivot = i; break; }
    bool all_zero = true;
    for (Index b = 0; b < L.dim(); ++b) {
        Vec<K> w = adx * (adx * L.basis_vec(b));
        if (is_zero_vec(w)) continue;
        all_zero = false;
        if (is_zero(w(pivot))) return out; // cannot be a multiple of x
        K c = w(pivot) / x(pivot);
        for (Index i = 0; i < w.size(); ++i)
            if (w(i) != c * x(i)) return out;
    }
    out.extremal = true;
    out.sandwich = all_zero;
    return out;
}

/// g(x, y) for extremal x, from [x,[x,y]] = 2 g(x,y) x. Sandwiches take g = 0.
/// Returns nothing when the nested bracket is not a multiple of x.
template <class K>
std::optional<K> extract_g(const StructureLieAlgebra<K>& L, const Vec<K>& x, const Vec<K>& y) {
    Vec<K> w = L.bracket(x, L.bracket(x, y));
    if (is_zero_vec(w)) return field_traits<K>::make(L.field(), 0);
    Index pivot = -1;
    for (Index i = 0; i < x.size(); ++i)
        if (!is_zero(x(i))) { pivot = i; break; }
    if (pivot < 0 || is_zero(w(pivot))) return std::nullopt;
    K c = w(pivot) / x(pivot);
    for (Index i = 0; i < w.size(); ++i)
        if (w(i) != c * x(i)) return std::nullopt;
    return c / field_traits<K>::make(L.field(), 2);
}

template <class K>
struct ExtremalFormTable {
    std::vector<Vec<K>> spanning;  // extremal elements spanning L
    std::vector<bool> sandwich;    // per spanning element
    Mat<K> gram;                   // g on the spanning elements
    Mat<K> gram_basis;             // g on the algebra basis (bilinear extension)
    Subspace<K> radical;           // radical of g inside L
};

/// The extremal form on a spanning set of extremal elements, extended
/// bilinearly to all of L. Sandwich rows are zero by convention.
template <class K>
ExtremalFormTable<K> extremal_form(const StructureLieAlgebra<K>& L,
                                   const std::vector<Vec<K>>& spanning) {
    const Index d = L.dim();
    const Index k = static_cast<Index>(spanning.size());
    Mat<K> span_rows = zeros<K>(k, d);
    for (Index i = 0; i < k; ++i) span_rows.row(i) = spanning[i].transpose();
    if (rank_of(span_rows) != d)
        throw std::invalid_argument("spanning set does not span the algebra");

    ExtremalFormTable<K> out;
    out.spanning = spanning;
    out.sandwich.resize(k);
    for (Index i = 0; i < k; ++i) {
        ExtremalCheck<K> chk = is_extremal(L, spanning[i]);
        if (!chk.extremal) throw std::invalid_argument("listed element is not extremal");
        out.sandwich[i] = chk.sandwich;
    }

    // g(x_i, b_j) for every basis vector, then extend to basis x basis
    Mat<K> gxb = zeros<K>(k, d);
    for (Index i = 0; i < k; ++i) {
        if (out.sandwich[i]) continue; // row stays zero
        for (Index j = 0; j < d; ++j) {
            auto g = extract_g(L, spanning[i], L.basis_vec(j));
            if (!g) throw std::invalid_argument("not extremal");
            gxb(i, j) = *g;
        }
    }
    out.gram_basis = zeros<K>(d, d);
    for (Index a = 0; a < d; ++a) {
        auto coords = coordinates_in_rows(span_rows, L.basis_vec(a));
        if (!coords) throw std::logic_error("spanning set lost a basis vector");
        out.gram_basis.row(a) = (coords->transpose() * gxb);
    }
    out.gram = zeros<K>(k, k);
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j)
            out.gram(i, j) = (spanning[i].transpose() * out.gram_basis * spanning[j])(0, 0);
    out.radical = Subspace<K>::from_rows(kernel_basis(out.gram_basis));
    return out;
}

/// Same structure constants reinterpreted over the quadratic extension.
template <class K>
StructureLieAlgebra<Fp2> base_change_quadratic(const StructureLieAlgebra<K>& L) {
    if constexpr (!std::is_same_v<K, Fp>) {
        throw std::invalid_argument("unsupported field for quadratic base change");
    } else {
        FieldSpec ext = quadratic_extension(L.field());
        std::vector<TableEntry<Fp2>> entries;
        for (const TableEntry<Fp>& e : L.table()) {
            TableEntry<Fp2> e2;
            e2.i = e.i;
            e2.j = e.j;
            for (auto& [idx, c] : e.coeffs) e2.coeffs.emplace_back(idx, Fp2::embed(c, ext.nonsquare));
            entries.push_back(std::move(e2));
        }
        auto L2 = StructureLieAlgebra<Fp2>::from_table(ext, L.dim(), entries);
        std::vector<Vec<Fp2>> gens;
        for (const Vec<Fp>& g : L.extremal_generators()) {
            Vec<Fp2> v(g.size());
            for (Index i = 0; i < g.size(); ++i) v(i) = Fp2::embed(g(i), ext.nonsquare);
            gens.push_back(std::move(v));
        }
        L2.set_extremal_generators(std::move(gens));
        if (!jacobi_holds(L2)) throw std::logic_error("base change broke the Jacobi identity");
        return L2;
    }
}

} // namespace liesym
