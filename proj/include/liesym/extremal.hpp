#pragma once

// Analysis of extremal elements in an abstract algebra: pair classification,
// exponential automorphisms, the conic of extremal points in an sl2 pair, and
// the two hypothesis checkers (no extremal lines; commuting witness in every
// hyperbolic subalgebra).

#include "liesym/structure_algebra.hpp"

namespace liesym {

enum class PairClass {
    SamePoint,                // <x> = <y>
    CommutingExtremalLine,    // [x,y] = 0 and every combination is extremal
    CommutingRigid,           // [x,y] = 0 and only the trivial combinations are extremal
    CommutingBracketExtremal, // [x,y] != 0 extremal, commuting with both
    Sl2,                      // <x,y> is a 3-dimensional hyperbolic subalgebra
};

inline const char* pair_class_name(PairClass c) {
    switch (c) {
        case PairClass::SamePoint: return "same_point";
        case PairClass::CommutingExtremalLine: return "commuting_extremal_line";
        case PairClass::CommutingRigid: return "commuting_rigid";
        case PairClass::CommutingBracketExtremal: return "commuting_bracket_extremal";
        case PairClass::Sl2: return "sl2";
    }
    return "?";
}

struct PairClassification {
    PairClass cls;
    bool exhaustive; // false when combination testing was sampled (rationals)
};

/// Ratios sampled when deciding the extremal-line case over an infinite field.
inline const long long kRationalRatioSample[] = {1, -1, 2, 3};

template <class K>
PairClassification classify_pair(const StructureLieAlgebra<K>& L, const Vec<K>& x, const Vec<K>& y) {
    if (!is_extremal(L, x).extremal || !is_extremal(L, y).extremal)
        throw std::invalid_argument("non-extremal input");
    if (proportional(x, y)) return {PairClass::SamePoint, true};

    Vec<K> b = L.bracket(x, y);
    if (is_zero_vec(b)) {
        bool all = true, exhaustive = true;
        if constexpr (field_traits<K>::finite) {
            for (const K& lam : field_traits<K>::elements(L.field())) {
                if (is_zero(lam)) continue;
                Vec<K> comb = x;
                for (Index i = 0; i < comb.size(); ++i) comb(i) = lam * x(i) + y(i);
                if (!is_extremal(L, comb).extremal) { all = false; break; }
            }
        } else {
            exhaustive = false;
            for (long long r : kRationalRatioSample) {
                K lam = field_traits<K>::make(L.field(), r);
                Vec<K> comb = x;
                for (Index i = 0; i < comb.size(); ++i) comb(i) = lam * x(i) + y(i);
                if (!is_extremal(L, comb).extremal) { all = false; break; }
            }
        }
        return {all ? PairClass::CommutingExtremalLine : PairClass::CommutingRigid, exhaustive};
    }

    auto g = extract_g(L, x, y);
    if (!g) throw std::invalid_argument("non-extremal input");
    if (!is_zero(*g)) return {PairClass::Sl2, true};

    // [x,y] != 0 with g(x,y) = 0: the bracket itself must be extremal and
    // commutes with both x and y automatically.
    if (!is_extremal(L, b).extremal)
        throw std::runtime_error("pair does not fit the extremal classification");
    return {PairClass::CommutingBracketExtremal, true};
}

// ---------------------------------------------------------------------------
// Exponential automorphisms
// ---------------------------------------------------------------------------

/// exp(x, l) y = y + l [x,y] + l^2 g(x,y) x for pure extremal x.
template <class K>
Vec<K> exp_apply(const StructureLieAlgebra<K>& L, const Vec<K>& x, const K& lambda, const Vec<K>& y) {
    ExtremalCheck<K> chk = is_extremal(L, x);
    if (!chk.extremal) throw std::invalid_argument("non-extremal input");
    if (chk.sandwich) throw std::invalid_argument("pure required");
    auto g = extract_g(L, x, y);
    if (!g) throw std::logic_error("extraction failed for an extremal element");
    return y + lambda * L.bracket(x, y) + (lambda * lambda * *g) * x;
}

/// Verify exp(x, l)[a,b] = [exp(x, l)a, exp(x, l)b] on all basis pairs.
template <class K>
bool exp_check(const StructureLieAlgebra<K>& L, const Vec<K>& x, const K& lambda) {
    const Index d = L.dim();
    std::vector<Vec<K>> image(d);
    for (Index i = 0; i < d; ++i) image[i] = exp_apply(L, x, lambda, L.basis_vec(i));
    for (Index i = 0; i < d; ++i)
        for (Index j = i + 1; j < d; ++j) {
            Vec<K> lhs = exp_apply(L, x, lambda, L.basis_bracket(i, j));
            Vec<K> rhs = L.bracket(image[i], image[j]);
            if (!vecs_equal(lhs, rhs)) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// The conic of extremal points in a hyperbolic pair
// ---------------------------------------------------------------------------

template <class K>
struct Sl2Points {
    Vec<K> scaled_x;           // g(x,y) x
    Vec<K> y;
    Vec<K> bracket;            // [x,y]
    std::vector<Vec<K>> points; // canonical representatives; q+1 of them over F_q
    bool exhaustive;

    /// The conic parametrization g(x,y) x + l^2 y + l [x,y].
    Vec<K> point_at(const K& lambda) const {
        return scaled_x + (lambda * lambda) * y + lambda * bracket;
    }
};

template <class K>
Sl2Points<K> sl2_extremal_points(const StructureLieAlgebra<K>& L, const Vec<K>& x, const Vec<K>& y) {
    auto g = extract_g(L, x, y);
    if (!g || is_zero(*g)) throw std::invalid_argument("not hyperbolic");
    Sl2Points<K> out;
    out.scaled_x = *g * x;
    out.y = y;
    out.bracket = L.bracket(x, y);
    if constexpr (field_traits<K>::finite) {
        out.exhaustive = true;
        for (const K& lam : field_traits<K>::elements(L.field()))
            out.points.push_back(canonical_rep(out.point_at(lam)));
    } else {
        out.exhaustive = false;
        for (long long r : {0LL, 1LL, -1LL, 2LL, 3LL})
            out.points.push_back(canonical_rep(out.point_at(field_traits<K>::make(L.field(), r))));
    }
    out.points.push_back(canonical_rep(y)); // the point the parametrization misses
    return out;
}

// ---------------------------------------------------------------------------
// Hypothesis checkers
// ---------------------------------------------------------------------------

template <class K>
struct ConditionAWitness {
    Vec<K> x, y;
    PairClass cls;
};

template <class K>
struct ConditionAReport {
    bool pass = true;
    bool exhaustive = true;
    std::vector<ConditionAWitness<K>> witnesses;
};

/// Condition (A): every pair of listed extremal points is equal, commuting
/// rigid, or spans a hyperbolic subalgebra. Any extremal-line occurrence
/// (cases with extremal combinations or extremal brackets) is a violation.
template <class K>
ConditionAReport<K> check_condition_A(const StructureLieAlgebra<K>& L,
                                      const std::vector<Vec<K>>& points) {
    ConditionAReport<K> out;
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j) {
            PairClassification pc = classify_pair(L, points[i], points[j]);
            out.exhaustive = out.exhaustive && pc.exhaustive;
            if (pc.cls == PairClass::CommutingExtremalLine ||
                pc.cls == PairClass::CommutingBracketExtremal) {
                out.pass = false;
                out.witnesses.push_back({points[i], points[j], pc.cls});
            }
        }
    return out;
}

enum class ConditionBStatus {
    WitnessInBaseField,   // a commuting extremal element of <x,y> was found
    ExtensionRoots,       // the quadratic only has roots in the quadratic extension
    RootsOutsideField,    // rational (irrational discriminant) or F_{p^2} analogue
    NoCommutingElement,   // no conic point satisfies g(z, .) = 0, or none commutes
};

template <class K>
struct ConditionBResult {
    ConditionBStatus status;
    std::optional<Vec<K>> witness;       // extremal u in <x,y> with [u,z] = 0
    std::vector<Fp2> extension_roots;    // for the extension branch (prime fields)
};

namespace detail {

/// Shared worker: g-values supplied by the caller.
template <class K>
ConditionBResult<K> condition_B_impl(const StructureLieAlgebra<K>& L, const Vec<K>& x,
                                     const Vec<K>& y, const Vec<K>& z, const Vec<K>& bxy,
                                     const K& gxy_v, const K& gzx_v, const K& gzy_v,
                                     const K& gzb_v);

} // namespace detail

/// Condition (B) for a triple: find extremal u in <x,y> commuting with z by
/// solving g(z, u_l) = g(x,y) g(z,x) + l^2 g(z,y) + l g(z,[x,y]) = 0.
template <class K>
ConditionBResult<K> condition_B_witness(const StructureLieAlgebra<K>& L, const Vec<K>& x,
                                        const Vec<K>& y, const Vec<K>& z) {
    Vec<K> bxy = L.bracket(x, y);
    if (is_zero_vec(bxy)) throw std::invalid_argument("[x,y] must be nonzero");
    for (const Vec<K>* p : {&x, &y, &z})
        if (!is_extremal(L, *p).extremal) throw std::invalid_argument("non-extremal input");

    auto gxy = extract_g(L, x, y);
    auto gzx = extract_g(L, z, x);
    auto gzy = extract_g(L, z, y);
    auto gzb = extract_g(L, z, bxy);
    if (!gxy || !gzx || !gzy || !gzb) throw std::invalid_argument("non-extremal input");
    return detail::condition_B_impl(L, x, y, z, bxy, *gxy, *gzx, *gzy, *gzb);
}

/// Same check with g evaluated through a precomputed Gram of the extremal
/// form on the basis; the caller vouches that x, y, z are extremal.
template <class K>
ConditionBResult<K> condition_B_witness(const StructureLieAlgebra<K>& L, const Mat<K>& g_table,
                                        const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) {
    Vec<K> bxy = L.bracket(x, y);
    if (is_zero_vec(bxy)) throw std::invalid_argument("[x,y] must be nonzero");
    auto g = [&](const Vec<K>& a, const Vec<K>& b) { return K((a.transpose() * g_table * b)(0, 0)); };
    return detail::condition_B_impl(L, x, y, z, bxy, g(x, y), g(z, x), g(z, y), g(z, bxy));
}

namespace detail {

template <class K>
ConditionBResult<K> condition_B_impl(const StructureLieAlgebra<K>& L, const Vec<K>& x,
                                     const Vec<K>& y, const Vec<K>& z, const Vec<K>& bxy,
                                     const K& gxy_v, const K& gzx_v, const K& gzy_v,
                                     const K& gzb_v) {
    const K* gxy = &gxy_v;
    const K* gzx = &gzx_v;
    const K* gzy = &gzy_v;
    const K* gzb = &gzb_v;
    ConditionBResult<K> out{ConditionBStatus::NoCommutingElement, std::nullopt, {}};
    auto candidate = [&](const K& lam) {
        return Vec<K>(*gxy * x + (lam * lam) * y + lam * bxy);
    };
    auto try_witness = [&](const Vec<K>& u) {
        if (is_zero_vec(u)) return false;
        if (!is_zero_vec(L.bracket(u, z))) return false;
        out.status = ConditionBStatus::WitnessInBaseField;
        out.witness = u;
        return true;
    };

    // trivial witnesses first: x itself, then the conic point the
    // parametrization misses
    if (try_witness(x)) return out;
    if (is_zero(*gzy) && try_witness(y)) return out;

    const K a = *gzy, b = *gzb, c = *gxy * *gzx;
    if (is_zero(a) && is_zero(b)) {
        if (!is_zero(c)) return out; // g(z, .) misses zero on the whole conic
        // g(z, .) vanishes on the whole conic; scan for a commuting point
        if constexpr (field_traits<K>::finite) {
            for (const K& lam : field_traits<K>::elements(L.field()))
                if (try_witness(candidate(lam))) return out;
        } else {
            for (long long r : {0LL, 1LL, -1LL, 2LL, 3LL})
                if (try_witness(candidate(field_traits<K>::make(L.field(), r)))) return out;
        }
        return out;
    }

    QuadraticRoots<K> roots = solve_quadratic(a, b, c);
    for (const K& lam : roots.roots)
        if (try_witness(candidate(lam))) return out;
    if (roots.status == QuadraticStatus::QuadraticExtension) {
        out.status = ConditionBStatus::ExtensionRoots;
        out.extension_roots = roots.extension_roots;
    } else if (roots.status == QuadraticStatus::IrrationalDiscriminant ||
               roots.status == QuadraticStatus::NoRootInField) {
        out.status = ConditionBStatus::RootsOutsideField;
    }
    return out;
}

} // namespace detail

} // namespace liesym
