#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liesym/linalg.hpp"
#include "liesym/rng.hpp"
#include "test_util.hpp"

using namespace liesym;
using namespace liesym::testing;

TEST_CASE("echelon form of simple matrices") {
    FieldSpec f3 = FieldSpec::prime(3);
    FieldSpec q = FieldSpec::rational();

    SUBCASE("identity over F_3") {
        Mat<Fp> id = identity<Fp>(f3, 3);
        Echelon<Fp> e = echelonize(id);
        CHECK(e.rank == 3);
        CHECK(kernel_basis(id).rows() == 0);
    }
    SUBCASE("zero 2x4 over Q") {
        Mat<Rat> z = zeros<Rat>(2, 4);
        CHECK(rank_of(z) == 0);
        CHECK(kernel_basis(z).rows() == 4);
    }
    SUBCASE("standard 4-dim alternating Gram matrix is invertible") {
        Mat<Fp> J = mat_from<Fp>(f3, {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
        CHECK(rank_of(J) == 4);
        CHECK(kernel_basis(J).rows() == 0);
    }
    SUBCASE("rational elimination with fractions") {
        Mat<Rat> m = mat_from<Rat>(q, {{2, 4}, {1, 3}});
        Echelon<Rat> e = echelonize(m);
        CHECK(e.rank == 2);
        CHECK(e.R(0, 0) == Rat(1));
        CHECK(e.R(0, 1) == Rat(0));
    }
}

template <class K>
static void rref_properties(const FieldSpec& f) {
    Rng rng(99);
    for (int rep = 0; rep < 40; ++rep) {
        Index r = 1 + rep % 5, c = 1 + (rep * 7) % 6;
        Mat<K> m = random_mat<K>(f, r, c, rng);
        Echelon<K> e = echelonize(m);
        // idempotence
        Echelon<K> e2 = echelonize(e.R);
        CHECK(mats_equal(e.R, e2.R));
        // pivots strictly increasing
        for (size_t i = 1; i < e.pivots.size(); ++i) CHECK(e.pivots[i] > e.pivots[i - 1]);
        // rank-nullity
        Mat<K> ker = kernel_basis(m);
        CHECK(e.rank + ker.rows() == c);
        // kernel rows really lie in the kernel
        for (Index i = 0; i < ker.rows(); ++i) {
            Vec<K> v = ker.row(i).transpose();
            CHECK(is_zero_vec(Vec<K>(m * v)));
        }
    }
}

TEST_CASE("echelon properties over all field kinds") {
    rref_properties<Fp>(FieldSpec::prime(3));
    rref_properties<Fp>(FieldSpec::prime(5));
    rref_properties<Fp2>(FieldSpec::prime_square(3, 2));
    rref_properties<Rat>(FieldSpec::rational());
}

TEST_CASE("subspace arithmetic") {
    FieldSpec f3 = FieldSpec::prime(3);
    FieldSpec q = FieldSpec::rational();

    SUBCASE("coordinate axes in F_3^4") {
        auto a = Subspace<Fp>::from_vectors({unit<Fp>(f3, 4, 0)}, 4);
        auto b = Subspace<Fp>::from_vectors({unit<Fp>(f3, 4, 1)}, 4);
        CHECK(subspace_sum(a, b).dim() == 2);
        CHECK(subspace_intersection(a, b).dim() == 0);
        CHECK(a.contains(unit<Fp>(f3, 4, 0)));
        CHECK(!a.contains(unit<Fp>(f3, 4, 1)));
    }
    SUBCASE("sum and intersection are idempotent on equal inputs") {
        Rng rng(3);
        Mat<Fp> rows = random_mat<Fp>(f3, 2, 5, rng);
        auto a = Subspace<Fp>::from_rows(rows);
        CHECK(subspace_sum(a, a) == a);
        CHECK(subspace_intersection(a, a) == a);
    }
    SUBCASE("<e1+e2, e2> meets <e1> in <e1> inside Q^3") {
        auto a = Subspace<Rat>::from_vectors({vec_from<Rat>(q, {1, 1, 0}), vec_from<Rat>(q, {0, 1, 0})}, 3);
        auto b = Subspace<Rat>::from_vectors({vec_from<Rat>(q, {1, 0, 0})}, 3);
        auto inter = subspace_intersection(a, b);
        CHECK(inter.dim() == 1);
        CHECK(inter.contains(vec_from<Rat>(q, {1, 0, 0})));
    }
    SUBCASE("ambient mismatch is an error") {
        auto a = Subspace<Fp>::from_vectors({unit<Fp>(f3, 4, 0)}, 4);
        auto b = Subspace<Fp>::from_vectors({unit<Fp>(f3, 3, 0)}, 3);
        CHECK_THROWS_AS(subspace_sum(a, b), std::invalid_argument);
        CHECK_THROWS_AS(subspace_intersection(a, b), std::invalid_argument);
    }
    SUBCASE("random intersections satisfy the dimension formula") {
        Rng rng(17);
        for (int rep = 0; rep < 30; ++rep) {
            auto a = Subspace<Fp>::from_rows(random_mat<Fp>(f3, 2, 5, rng));
            auto b = Subspace<Fp>::from_rows(random_mat<Fp>(f3, 3, 5, rng));
            auto s = subspace_sum(a, b);
            auto i = subspace_intersection(a, b);
            CHECK(s.dim() + i.dim() == a.dim() + b.dim());
            for (Index r = 0; r < i.basis.rows(); ++r) {
                CHECK(a.contains(Vec<Fp>(i.basis.row(r).transpose())));
                CHECK(b.contains(Vec<Fp>(i.basis.row(r).transpose())));
            }
        }
    }
}

TEST_CASE("linear solving") {
    FieldSpec f5 = FieldSpec::prime(5);
    Rng rng(11);
    for (int rep = 0; rep < 40; ++rep) {
        Mat<Fp> A = random_mat<Fp>(f5, 3, 4, rng);
        Vec<Fp> x = random_vec<Fp>(f5, 4, rng);
        Vec<Fp> b = A * x;
        auto sol = solve_linear(A, b);
        REQUIRE(sol.has_value());
        CHECK(vecs_equal(Vec<Fp>(A * *sol), b));
    }
    // inconsistent system
    Mat<Fp> A = mat_from<Fp>(f5, {{1, 0}, {1, 0}});
    Vec<Fp> b = vec_from<Fp>(f5, {1, 2});
    CHECK(!solve_linear(A, b).has_value());
}

TEST_CASE("projective representatives") {
    FieldSpec f5 = FieldSpec::prime(5);
    Vec<Fp> v = vec_from<Fp>(f5, {0, 2, 3});
    Vec<Fp> w = vec_from<Fp>(f5, {0, 4, 1});
    CHECK(proportional(v, w));
    CHECK(vecs_equal(canonical_rep(v), canonical_rep(w)));
    CHECK(canonical_rep(v)(1) == Fp(1, 5));
    CHECK(!proportional(v, vec_from<Fp>(f5, {1, 2, 3})));
    CHECK_THROWS(canonical_rep(zero_vec<Fp>(3)));
}
