#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liesym/recognition.hpp"
#include "test_util.hpp"

using namespace liesym;
using namespace liesym::testing;

namespace {

const FieldSpec f3 = FieldSpec::prime(3);
const FieldSpec f5 = FieldSpec::prime(5);

template <class K>
StructureLieAlgebra<K> rescaled_table(const StructureLieAlgebra<K>& L, const K& c) {
    std::vector<TableEntry<K>> entries = L.table();
    for (auto& e : entries)
        for (auto& [k, v] : e.coeffs) v = v * c;
    auto out = StructureLieAlgebra<K>::from_table(L.field(), L.dim(), entries);
    out.set_extremal_generators(L.extremal_generators());
    return out;
}

} // namespace

TEST_CASE("frame finding") {
    SUBCASE("two hyperbolic pairs in the 10-dim model") {
        auto m = build_sp_model<Fp>(f3, 2);
        auto geom = enumerate_geometry(m.algebra);
        auto frame = find_frame(m.algebra, geom);
        CHECK(frame.m == 2);
        // frame reps pair to 1 within pairs and to 0 across
        for (Index k = 0; k < 2; ++k) {
            auto g = extract_g(m.algebra, frame.x[k], frame.y[k]);
            REQUIRE(g.has_value());
            CHECK(*g == Fp(1, 3));
        }
        CHECK(is_zero_vec(m.algebra.bracket(frame.x[0], frame.x[1])));
        CHECK(is_zero_vec(m.algebra.bracket(frame.x[0], frame.y[1])));
    }
    SUBCASE("a single line gives m = 1") {
        auto m = build_sp_model<Fp>(f3, 1);
        auto geom = enumerate_geometry(m.algebra);
        CHECK(geom.size() == 4);
        CHECK(find_frame(m.algebra, geom).m == 1);
    }
    SUBCASE("three pairs in the 21-dim model, dimension formula holds") {
        auto m = build_sp_model<Fp>(f3, 3);
        std::vector<Vec<Fp>> seeds;
        for (const auto& g : m.algebra.extremal_generators()) seeds.push_back(canonical_rep(g));
        auto geom = build_geometry(m.algebra, seeds);
        auto frame = find_frame(m.algebra, geom);
        CHECK(frame.m == 3);
        CHECK(m.algebra.dim() == frame.m * (2 * frame.m + 1));
    }
}

TEST_CASE("coordinatization in the model") {
    auto m = build_sp_model<Fp>(f3, 2);
    const auto& L = m.algebra;
    auto geom = enumerate_geometry(L);
    auto frame = find_frame(L, geom);
    Coordinatizer<Fp> ct(L, geom, frame);
    auto space = reconstruct_space(f3, frame);

    SUBCASE("frame points map to their own directions") {
        for (Index k = 0; k < frame.m; ++k) {
            Vec<Fp> cp = ct.coords()[frame.p_points[k]];
            Vec<Fp> cq = ct.coords()[frame.q_points[k]];
            CHECK(proportional(cp, unit_vec(space, k)));
            CHECK(proportional(cq, unit_vec(space, frame.m + k)));
        }
    }
    SUBCASE("the map is a bijection onto the 40 projective points") {
        std::set<std::string> keys;
        for (const auto& c : ct.coords()) keys.insert(vec_key(c));
        CHECK(keys.size() == 40);
        CHECK(projective_points<Fp>(f3, 4).size() == 40);
    }
    SUBCASE("perp corresponds to f-orthogonality") {
        for (size_t a = 0; a < geom.size(); ++a)
            for (size_t b = a + 1; b < geom.size(); ++b) {
                bool commute = geom.commutes(a, b);
                CHECK(commute == is_zero(f_eval(space, ct.coords()[a], ct.coords()[b])));
            }
    }
    SUBCASE("hyperbolic lines map into 2-spaces and polar lines into isotropic 2-spaces") {
        auto lines = enumerate_lines(L, geom);
        auto image_rank = [&](const GeomLine& l) {
            Mat<Fp> rows = zeros<Fp>(static_cast<Index>(l.points.size()), 4);
            for (size_t t = 0; t < l.points.size(); ++t)
                rows.row(static_cast<Index>(t)) = ct.coords()[l.points[t]].transpose();
            return rank_of(rows);
        };
        for (const auto& l : lines.hyperbolic) CHECK(image_rank(l) == 2);
        for (const auto& l : lines.polar) {
            CHECK(image_rank(l) == 2);
            for (size_t a = 0; a < l.points.size(); ++a)
                for (size_t b = a + 1; b < l.points.size(); ++b)
                    CHECK(is_zero(f_eval(space, ct.coords()[l.points[a]], ct.coords()[l.points[b]])));
        }
    }
}

TEST_CASE("recognition of the model itself") {
    auto m = build_sp_model<Fp>(f3, 2);
    auto rep = recognize(m.algebra);
    CHECK(rep.m == 2);
    CHECK(rep.all_pass());
    CHECK(rep.gamma * rep.gamma == Fp(1, 3)); // recovered up to the root sign
    CHECK(nondegenerate(rep.space));
}

TEST_CASE("recognition round-trips through scrambles") {
    SUBCASE("plain scramble composes to an automorphism") {
        auto m = build_sp_model<Fp>(f3, 2);
        Rng rng(90);
        Scramble<Fp> sc = scrambled_copy(m.algebra, rng, std::optional<Fp>(Fp(1, 3)));
        auto rep = recognize(sc.algebra);
        CHECK(rep.m == 2);
        CHECK(rep.all_pass());
        // xi = phi o A^{-1} : model -> S_f must preserve brackets exactly
        const Index d = m.algebra.dim();
        Mat<Fp> aug(d, 2 * d);
        aug.leftCols(d) = sc.map;
        aug.rightCols(d) = identity<Fp>(f3, d);
        Mat<Fp> Ainv = echelonize(aug).R.rightCols(d);
        Mat<Fp> xi = rep.psi * Ainv;
        auto model_bracket = [&](const Vec<Fp>& a, const Vec<Fp>& b) {
            return sym_coords(
                bracket_model(from_sym_coords(rep.space, a), from_sym_coords(rep.space, b)));
        };
        for (Index i = 0; i < d; ++i)
            for (Index j = i + 1; j < d; ++j) {
                Vec<Fp> lhs = model_bracket(xi.col(i), xi.col(j));
                Vec<Fp> rhs = xi * m.algebra.basis_bracket(i, j);
                CHECK(vecs_equal(lhs, rhs));
            }
    }
    SUBCASE("random scrambles with random global scalars are recognized") {
        auto m = build_sp_model<Fp>(f3, 2);
        Rng rng(91);
        for (int rep_i = 0; rep_i < 4; ++rep_i) {
            Scramble<Fp> sc = scrambled_copy(m.algebra, rng);
            auto rep = recognize(sc.algebra);
            CHECK(rep.m == 2);
            CHECK(rep.all_pass());
        }
    }
    SUBCASE("a scrambled 21-dim model is recognized") {
        auto m = build_sp_model<Fp>(f3, 3);
        Rng rng(92);
        Scramble<Fp> sc = scrambled_copy(m.algebra, rng);
        auto rep = recognize(sc.algebra);
        CHECK(rep.m == 3);
        CHECK(rep.all_pass());
    }
    SUBCASE("the trivial m = 1 case") {
        auto m = build_sp_model<Fp>(f5, 1);
        Rng rng(93);
        Scramble<Fp> sc = scrambled_copy(m.algebra, rng);
        auto rep = recognize(sc.algebra);
        CHECK(rep.m == 1);
        CHECK(rep.all_pass());
    }
    SUBCASE("scrambles over F_5 (square roots with p = 1 mod 4)") {
        auto m = build_sp_model<Fp>(f5, 2);
        Rng rng(95);
        for (int i = 0; i < 2; ++i) {
            Scramble<Fp> sc = scrambled_copy(m.algebra, rng);
            auto rep = recognize(sc.algebra);
            CHECK(rep.m == 2);
            CHECK(rep.all_pass());
        }
    }
    SUBCASE("recognition over the quadratic extension flags the automorphism assumption") {
        auto m = build_sp_model<Fp>(f3, 1);
        auto L2 = base_change_quadratic(m.algebra);
        auto rep = recognize(L2);
        CHECK(rep.m == 1);
        CHECK(rep.all_pass());
        bool flagged = false;
        for (const auto& c : rep.checks) flagged |= c.name == "field_automorphism_assumed_trivial";
        CHECK(flagged);
    }
}

TEST_CASE("recognition rejects hypothesis failures") {
    SUBCASE("the 6-dim algebra has a degenerate geometry") {
        auto s = build_sp3_model<Fp>(f3);
        CHECK_THROWS_WITH_AS(recognize(s.algebra), doctest::Contains("degenerate"),
                             std::runtime_error);
    }
    SUBCASE("missing generators are rejected") {
        auto m = build_sp_model<Fp>(f3, 2);
        StructureLieAlgebra<Fp> bare =
            StructureLieAlgebra<Fp>::from_table(f3, m.algebra.dim(), m.algebra.table());
        CHECK_THROWS_AS(recognize(bare), std::invalid_argument);
    }
}

TEST_CASE("product uniqueness scalar") {
    auto m = build_sp_model<Fp>(f5, 2);
    const auto& L1 = m.algebra;
    std::vector<Vec<Fp>> shared = L1.extremal_generators();

    SUBCASE("gamma in {2,3,4} is recovered with full verification") {
        for (long long c : {2LL, 3LL, 4LL}) {
            auto L2 = rescaled_table(L1, Fp(c, 5));
            auto pg = product_gamma(L1, L2, shared);
            CHECK(pg.gamma == Fp(c, 5));
            CHECK(pg.fully_verified);
        }
    }
    SUBCASE("identical products give gamma = 1") {
        auto pg = product_gamma(L1, L1, shared);
        CHECK(pg.gamma == Fp(1, 5));
    }
    SUBCASE("a perturbed table is rejected as not proportional") {
        auto entries = L1.table();
        REQUIRE(!entries.empty());
        entries.front().coeffs.front().second = entries.front().coeffs.front().second + Fp(1, 5);
        auto L2 = StructureLieAlgebra<Fp>::from_table(f5, L1.dim(), entries);
        CHECK_THROWS_WITH_AS(product_gamma(L1, L2, {}), doctest::Contains("not proportional"),
                             std::runtime_error);
    }
    SUBCASE("the rescaling map is an isomorphism between the two products") {
        // with [.,.]_2 = c [.,.]_1, scaling vectors by c^{-1} intertwines exactly
        Fp c(3, 5);
        auto L2 = rescaled_table(L1, c);
        Rng rng(94);
        Fp cinv = c.inv();
        for (int rep = 0; rep < 20; ++rep) {
            Vec<Fp> v = random_vec<Fp>(f5, L1.dim(), rng);
            Vec<Fp> w = random_vec<Fp>(f5, L1.dim(), rng);
            Vec<Fp> lhs = L2.bracket(cinv * v, cinv * w);
            Vec<Fp> rhs = cinv * L1.bracket(v, w);
            CHECK(vecs_equal(lhs, rhs));
        }
    }
}
