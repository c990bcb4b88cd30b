#pragma once

// Deterministic sampling helpers. Every randomized routine in the library and
// the CLI threads one of these generators through, so runs are reproducible
// for a fixed seed.

#include <random>

#include "liesym/fields.hpp"
#include "liesym/linalg.hpp"

namespace liesym {

using Rng = std::mt19937_64;

template <class K>
K random_scalar(const FieldSpec& f, Rng& rng) {
    if constexpr (std::is_same_v<K, Fp>) {
        std::uniform_int_distribution<long long> d(0, f.p - 1);
        return Fp(d(rng), f.p);
    } else if constexpr (std::is_same_v<K, Fp2>) {
        std::uniform_int_distribution<long long> d(0, f.p - 1);
        long long a = d(rng), b = d(rng);
        return Fp2(a, b, f.p, f.nonsquare);
    } else {
        std::uniform_int_distribution<long long> num(-6, 6), den(1, 4);
        return Rat(num(rng), den(rng));
    }
}

template <class K>
K random_nonzero_scalar(const FieldSpec& f, Rng& rng) {
    for (;;) {
        K x = random_scalar<K>(f, rng);
        if (!is_zero(x)) return x;
    }
}

template <class K>
Vec<K> random_vec(const FieldSpec& f, Index n, Rng& rng) {
    Vec<K> v(n);
    for (Index i = 0; i < n; ++i) v(i) = random_scalar<K>(f, rng);
    return v;
}

template <class K>
Vec<K> random_nonzero_vec(const FieldSpec& f, Index n, Rng& rng) {
    for (;;) {
        Vec<K> v = random_vec<K>(f, n, rng);
        if (!is_zero_vec(v)) return v;
    }
}

template <class K>
Mat<K> random_mat(const FieldSpec& f, Index r, Index c, Rng& rng) {
    Mat<K> m(r, c);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j) m(i, j) = random_scalar<K>(f, rng);
    return m;
}

/// Random invertible matrix (rejection sampling).
template <class K>
Mat<K> random_gl(const FieldSpec& f, Index n, Rng& rng) {
    for (;;) {
        Mat<K> m = random_mat<K>(f, n, n, rng);
        if (rank_of(m) == n) return m;
    }
}

} // namespace liesym
