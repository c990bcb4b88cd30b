#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liesym/symplectic.hpp"
#include "test_util.hpp"

using namespace liesym;
using namespace liesym::testing;

TEST_CASE("standard spaces") {
    FieldSpec f3 = FieldSpec::prime(3);
    FieldSpec q = FieldSpec::rational();

    SUBCASE("two hyperbolic pairs give the 4-dim nondegenerate space") {
        auto s = standard_space<Fp>(f3, 2, 0);
        CHECK(s.n == 4);
        CHECK(nondegenerate(s));
        CHECK(f_eval(s, unit_vec(s, 0), unit_vec(s, 2)) == Fp(1, 3));
        CHECK(f_eval(s, unit_vec(s, 1), unit_vec(s, 3)) == Fp(1, 3));
        CHECK(is_zero(f_eval(s, unit_vec(s, 0), unit_vec(s, 1))));
        CHECK(is_zero(f_eval(s, unit_vec(s, 0), unit_vec(s, 3))));
    }
    SUBCASE("one pair plus radical line over Q") {
        auto s = standard_space<Rat>(q, 1, 1);
        CHECK(s.n == 3);
        CHECK(!nondegenerate(s));
        CHECK(radical(s).dim() == 1);
        CHECK(radical(s).contains(unit_vec(s, 2)));
    }
    SUBCASE("zero form") {
        auto s = standard_space<Fp>(FieldSpec::prime(5), 0, 2);
        CHECK(s.n == 2);
        CHECK(radical(s).dim() == 2);
        CHECK(is_zero_mat(s.gram));
    }
    SUBCASE("alternating validation") {
        Mat<Fp> bad = mat_from<Fp>(f3, {{0, 1}, {1, 0}});
        CHECK_THROWS(SymplecticSpace<Fp>(f3, bad));
        Mat<Fp> diag = mat_from<Fp>(f3, {{1, 0}, {0, 0}});
        CHECK_THROWS(SymplecticSpace<Fp>(f3, diag));
    }
}

TEST_CASE("form evaluation is bilinear and alternating") {
    FieldSpec f3 = FieldSpec::prime(3);
    auto s = standard_space<Fp>(f3, 2, 0);
    auto e = [&](Index i) { return unit_vec(s, i); };
    CHECK(f_eval(s, Vec<Fp>(e(0) + e(1)), e(2)) == Fp(1, 3));

    Rng rng(5);
    for (int rep = 0; rep < 60; ++rep) {
        Vec<Fp> v = random_vec<Fp>(f3, 4, rng);
        Vec<Fp> w = random_vec<Fp>(f3, 4, rng);
        CHECK(is_zero(f_eval(s, v, v)));
        CHECK(f_eval(s, v, w) == -f_eval(s, w, v));
    }
    CHECK_THROWS(f_eval(s, zero_vec<Fp>(3), zero_vec<Fp>(4)));
}

TEST_CASE("restriction of the standard 4-space") {
    FieldSpec f3 = FieldSpec::prime(3);
    auto s = standard_space<Fp>(f3, 2, 0);

    SUBCASE("W = <e1,e2,e3> has rank-2 restriction with radical <e2>") {
        auto w = Subspace<Fp>::from_vectors({unit_vec(s, 0), unit_vec(s, 1), unit_vec(s, 2)}, 4);
        auto r = restrict_space(s, w);
        CHECK(r.n == 3);
        CHECK(rank_of(r.gram) == 2);
        auto rad = radical(r);
        CHECK(rad.dim() == 1);
        CHECK(rad.contains(vec_from<Fp>(f3, {0, 1, 0}))); // e2 in W-coordinates
    }
    SUBCASE("restriction to a hyperbolic pair is nondegenerate") {
        auto w = Subspace<Fp>::from_vectors({unit_vec(s, 0), unit_vec(s, 2)}, 4);
        CHECK(nondegenerate(restrict_space(s, w)));
    }
    SUBCASE("restriction to an isotropic pair is the zero form") {
        auto w = Subspace<Fp>::from_vectors({unit_vec(s, 0), unit_vec(s, 1)}, 4);
        CHECK(is_zero_mat(restrict_space(s, w).gram));
    }
}

TEST_CASE("Witt bases") {
    FieldSpec f3 = FieldSpec::prime(3);
    FieldSpec f5 = FieldSpec::prime(5);

    SUBCASE("standard (2,0) peels into 2 pairs, no radical") {
        auto s = standard_space<Fp>(f3, 2, 0);
        auto w = witt_basis(s);
        CHECK(w.pairs.size() == 2);
        CHECK(w.radical_basis.empty());
        CHECK(witt_basis_valid(s, w));
    }
    SUBCASE("restricted W peels into 1 pair plus radical <e2>") {
        auto s = standard_space<Fp>(f3, 2, 0);
        auto sub = Subspace<Fp>::from_vectors({unit_vec(s, 0), unit_vec(s, 1), unit_vec(s, 2)}, 4);
        auto r = restrict_space(s, sub);
        auto w = witt_basis(r);
        CHECK(w.pairs.size() == 1);
        REQUIRE(w.radical_basis.size() == 1);
        CHECK(proportional(w.radical_basis[0], vec_from<Fp>(f3, {0, 1, 0})));
        CHECK(witt_basis_valid(r, w));
    }
    SUBCASE("random alternating forms satisfy all Witt invariants") {
        Rng rng(23);
        for (int rep = 0; rep < 25; ++rep) {
            Index n = 2 + rep % 5;
            Mat<Fp> a = random_mat<Fp>(f5, n, n, rng);
            Mat<Fp> g = a - Mat<Fp>(a.transpose());
            for (Index i = 0; i < n; ++i) g(i, i) = Fp(0, 5);
            SymplecticSpace<Fp> s(f5, g);
            auto w = witt_basis(s);
            CHECK(witt_basis_valid(s, w));
            CHECK(static_cast<Index>(2 * w.pairs.size() + w.radical_basis.size()) == n);
            CHECK(static_cast<Index>(w.radical_basis.size()) == radical(s).dim());
        }
    }
    SUBCASE("random nondegenerate 6x6 over F_5 gives 3 pairs") {
        Rng rng(31);
        for (;;) {
            Mat<Fp> a = random_mat<Fp>(f5, 6, 6, rng);
            Mat<Fp> g = a - Mat<Fp>(a.transpose());
            for (Index i = 0; i < 6; ++i) g(i, i) = Fp(0, 5);
            if (rank_of(g) != 6) continue;
            SymplecticSpace<Fp> s(f5, g);
            auto w = witt_basis(s);
            CHECK(w.pairs.size() == 3);
            CHECK(w.radical_basis.empty());
            CHECK(witt_basis_valid(s, w));
            break;
        }
    }
}
