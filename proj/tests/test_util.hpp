#pragma once

// Shared helpers for the test suites.

#include <initializer_list>
#include <vector>

#include "liesym/fields.hpp"
#include "liesym/linalg.hpp"
#include "liesym/rng.hpp"

namespace liesym::testing {

template <class K>
Mat<K> mat_from(const FieldSpec& f, std::initializer_list<std::initializer_list<long long>> rows) {
    Index r = static_cast<Index>(rows.size());
    Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
    Mat<K> m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (long long v : row) m(i, j++) = field_traits<K>::make(f, v);
        ++i;
    }
    return m;
}

template <class K>
Vec<K> vec_from(const FieldSpec& f, std::initializer_list<long long> entries) {
    Vec<K> v(static_cast<Index>(entries.size()));
    Index i = 0;
    for (long long e : entries) v(i++) = field_traits<K>::make(f, e);
    return v;
}

/// Unit coordinate vector.
template <class K>
Vec<K> unit(const FieldSpec& f, Index n, Index i) {
    Vec<K> v = zero_vec<K>(n);
    v(i) = field_traits<K>::make(f, 1);
    return v;
}

} // namespace liesym::testing
