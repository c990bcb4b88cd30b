#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liesym/tensor_model.hpp"
#include "test_util.hpp"

using namespace liesym;
using namespace liesym::testing;

namespace {

const FieldSpec f3 = FieldSpec::prime(3);

SymplecticSpace<Fp> space4() { return standard_space<Fp>(f3, 2, 0); }

} // namespace

TEST_CASE("rank-1 generators") {
    auto s = space4();
    auto e = [&](Index i) { return unit_vec(s, i); };

    SUBCASE("coefficient matrix of pure(e1) is the (1,1) unit cell") {
        auto p = pure(s, e(0));
        CHECK(p.S(0, 0) == Fp(1, 3));
        for (Index i = 0; i < 4; ++i)
            for (Index j = 0; j < 4; ++j)
                if (i || j) CHECK(is_zero(p.S(i, j)));
        CHECK(rank_of(p.S) == 1);
    }
    SUBCASE("pure is quadratic in its argument") {
        Rng rng(1);
        for (int rep = 0; rep < 30; ++rep) {
            Vec<Fp> v = random_nonzero_vec<Fp>(f3, 4, rng);
            Fp c = random_nonzero_scalar<Fp>(f3, rng);
            Vec<Fp> cv = v;
            for (Index i = 0; i < 4; ++i) cv(i) = cv(i) * c;
            CHECK(mats_equal(pure(s, cv).S, Mat<Fp>(pure(s, v).S * (c * c))));
        }
    }
    SUBCASE("pure of a sum expands through sym_pair") {
        auto lhs = pure(s, Vec<Fp>(e(0) + e(2)));
        auto rhs = pure(s, e(0)) + pure(s, e(2)) + sym_pair(s, e(0), e(2));
        CHECK(mats_equal(lhs.S, rhs.S));
    }
    SUBCASE("zero vector is rejected") {
        CHECK_THROWS_WITH_AS(pure(s, zero_vec<Fp>(4)), doctest::Contains("zero vector"),
                             std::invalid_argument);
    }
    SUBCASE("sym_pair basics") {
        CHECK(mats_equal(sym_pair(s, e(0), e(0)).S, Mat<Fp>(pure(s, e(0)).S * Fp(2, 3))));
        auto sp = sym_pair(s, e(0), e(2));
        int nonzero = 0;
        for (Index i = 0; i < 4; ++i)
            for (Index j = 0; j < 4; ++j)
                if (!is_zero(sp.S(i, j))) ++nonzero;
        CHECK(nonzero == 2);
    }
}

TEST_CASE("bracket and action") {
    auto s = space4();
    auto e = [&](Index i) { return unit_vec(s, i); };

    SUBCASE("bracket of noncommuting generators is f(v,w) sym_pair") {
        auto br = bracket_model(pure(s, e(0)), pure(s, e(2)));
        CHECK(mats_equal(br.S, sym_pair(s, e(0), e(2)).S));
    }
    SUBCASE("bracket is alternating and vanishes on f-orthogonal generators") {
        auto a = pure(s, e(0));
        CHECK(is_zero_mat(bracket_model(a, a).S));
        CHECK(is_zero_mat(bracket_model(pure(s, e(0)), pure(s, e(1))).S));
    }
    SUBCASE("action of rank-1 elements") {
        CHECK(vecs_equal(act(pure(s, e(0)), e(2)), e(0)));
        CHECK(is_zero_vec(act(pure(s, e(0)), e(0))));
    }
    SUBCASE("bracket acts as the commutator") {
        Rng rng(2);
        for (int rep = 0; rep < 40; ++rep) {
            auto a = pure(s, random_nonzero_vec<Fp>(f3, 4, rng));
            auto b = sym_pair(s, random_vec<Fp>(f3, 4, rng), random_vec<Fp>(f3, 4, rng));
            Vec<Fp> v = random_vec<Fp>(f3, 4, rng);
            Vec<Fp> lhs = act(bracket_model(a, b), v);
            Vec<Fp> rhs = act(a, act(b, v)) - act(b, act(a, v));
            CHECK(vecs_equal(lhs, rhs));
        }
    }
    SUBCASE("Jacobi identity holds exactly on random triples") {
        Rng rng(3);
        for (int rep = 0; rep < 25; ++rep) {
            auto a = pure(s, random_nonzero_vec<Fp>(f3, 4, rng));
            auto b = pure(s, random_nonzero_vec<Fp>(f3, 4, rng));
            auto c = pure(s, random_nonzero_vec<Fp>(f3, 4, rng));
            auto j = bracket_model(a, bracket_model(b, c)) + bracket_model(b, bracket_model(c, a)) +
                     bracket_model(c, bracket_model(a, b));
            CHECK(is_zero_mat(j.S));
        }
    }
    SUBCASE("space mismatch is rejected") {
        auto s5 = standard_space<Fp>(FieldSpec::prime(5), 2, 0);
        CHECK_THROWS_WITH_AS(bracket_model(pure(s, e(0)), pure(s5, unit_vec(s5, 0))),
                             doctest::Contains("space mismatch"), std::invalid_argument);
    }
}

TEST_CASE("model extremal form") {
    auto s = space4();
    auto e = [&](Index i) { return unit_vec(s, i); };

    CHECK(model_extremal_form(pure(s, e(0)), pure(s, e(2))) == Fp(1, 3));
    CHECK(model_extremal_form(sym_pair(s, e(0), e(1)), pure(s, Vec<Fp>(e(2) + e(3)))) == Fp(2, 3));

    SUBCASE("g(pure v, pure v) = 0 and g(pure v, pure w) = f(v,w)^2") {
        Rng rng(4);
        for (int rep = 0; rep < 60; ++rep) {
            Vec<Fp> v = random_nonzero_vec<Fp>(f3, 4, rng);
            Vec<Fp> w = random_nonzero_vec<Fp>(f3, 4, rng);
            CHECK(is_zero(model_extremal_form(pure(s, v), pure(s, v))));
            Fp fv = f_eval(s, v, w);
            CHECK(model_extremal_form(pure(s, v), pure(s, w)) == fv * fv);
        }
    }
    SUBCASE("closed form agrees with the definitional extraction, exhaustively") {
        // all projective points of F_3^4, against each other
        std::vector<Vec<Fp>> pts = projective_points<Fp>(f3, 4);
        REQUIRE(pts.size() == 40);
        for (const auto& v : pts)
            for (const auto& w : pts) {
                auto a = pure(s, v);
                auto b = pure(s, w);
                auto definitional = definitional_extremal_form(a, b);
                REQUIRE(definitional.has_value());
                CHECK(*definitional == model_extremal_form(a, b));
            }
    }
    SUBCASE("extremal identity [x,[x,y]] = 2 f(v,w)^2 x on random pairs") {
        Rng rng(6);
        for (int rep = 0; rep < 50; ++rep) {
            Vec<Fp> v = random_nonzero_vec<Fp>(f3, 4, rng);
            Vec<Fp> w = random_nonzero_vec<Fp>(f3, 4, rng);
            auto x = pure(s, v);
            auto nested = bracket_model(x, bracket_model(x, pure(s, w)));
            Fp fv = f_eval(s, v, w);
            CHECK(mats_equal(nested.S, Mat<Fp>(x.S * (Fp(2, 3) * fv * fv))));
        }
    }
}

TEST_CASE("identification with the full symplectic algebra") {
    SUBCASE("n = 4 over F_3 gives 10 = 10") {
        auto r = sp_identification(space4());
        CHECK(r.dim_sf == 10);
        CHECK(r.dim_sp == 10);
        CHECK(r.equal);
    }
    SUBCASE("n = 2 over Q gives 3 = 3") {
        auto r = sp_identification(standard_space<Rat>(FieldSpec::rational(), 1, 0));
        CHECK(r.dim_sf == 3);
        CHECK(r.dim_sp == 3);
        CHECK(r.equal);
    }
    SUBCASE("n = 6 over F_3 gives 21 = 21") {
        auto r = sp_identification(standard_space<Fp>(f3, 3, 0));
        CHECK(r.dim_sf == 21);
        CHECK(r.dim_sp == 21);
        CHECK(r.equal);
    }
    SUBCASE("degenerate spaces are rejected") {
        CHECK_THROWS_WITH_AS(sp_identification(standard_space<Fp>(f3, 1, 1)),
                             doctest::Contains("degenerate"), std::invalid_argument);
    }
}

TEST_CASE("degenerate spaces quotient by the radical at the element level") {
    // over (W, f|_W) with radical <e2>: the rank-1 element attached to a
    // radical vector induces the zero map even though its S matrix is nonzero
    auto w3 = standard_space<Fp>(f3, 1, 1);
    auto r = pure(w3, unit_vec(w3, 2));
    CHECK(!is_zero_mat(r.S));
    CHECK(r.is_zero_element());
    auto p = pure(w3, unit_vec(w3, 0));
    CHECK(!p.is_zero_element());
    CHECK(!p.same_element(r));
}
