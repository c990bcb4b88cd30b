#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liesym/serialization.hpp"
#include "test_util.hpp"

using namespace liesym;
using namespace liesym::testing;

namespace {
const FieldSpec f3 = FieldSpec::prime(3);
}

TEST_CASE("field spec JSON") {
    CHECK(to_json(f3) == json({{"type", "prime"}, {"p", 3}}));
    CHECK(to_json(FieldSpec::prime_square(3, 2)) ==
          json({{"type", "prime_square"}, {"p", 3}, {"nonsquare", 2}}));
    CHECK(to_json(FieldSpec::rational()) == json({{"type", "rational"}}));
    CHECK(field_from_json(to_json(f3)) == f3);
    CHECK(field_from_json(to_json(FieldSpec::prime_square(5, 2))) == FieldSpec::prime_square(5, 2));
    CHECK(field_from_json(to_json(FieldSpec::rational())) == FieldSpec::rational());
    CHECK_THROWS(field_from_json(json{{"type", "octonion"}}));
}

TEST_CASE("scalar formats") {
    CHECK(scalar_to_json(Fp(2, 3)) == json(2));
    CHECK(scalar_to_json(Fp2(1, 2, 3, 2)) == json::array({1, 2}));
    CHECK(scalar_to_json(Rat(-4, 6)) == json("-2/3"));
    CHECK(scalar_from_json<Rat>(FieldSpec::rational(), json("-2/3")) == Rat(-2, 3));
    CHECK(scalar_from_json<Rat>(FieldSpec::rational(), json(7)) == Rat(7));
    CHECK(scalar_from_json<Fp>(f3, json(5)) == Fp(2, 3));
    FieldSpec f9 = FieldSpec::prime_square(3, 2);
    CHECK(scalar_from_json<Fp2>(f9, json::array({1, 2})) == Fp2(1, 2, 3, 2));
    CHECK(scalar_from_json<Fp2>(f9, json(2)) == Fp2(2, 0, 3, 2));
}

template <class K>
static void roundtrip_random_scalars(const FieldSpec& f) {
    Rng rng(123);
    for (int rep = 0; rep < 100; ++rep) {
        K x = random_scalar<K>(f, rng);
        CHECK(scalar_from_json<K>(f, scalar_to_json(x)) == x);
    }
}

TEST_CASE("scalar round trips are lossless in all three kinds") {
    roundtrip_random_scalars<Fp>(FieldSpec::prime(7));
    roundtrip_random_scalars<Fp2>(FieldSpec::prime_square(5, 2));
    roundtrip_random_scalars<Rat>(FieldSpec::rational());
}

TEST_CASE("space and model element round trips") {
    auto sp = standard_space<Fp>(f3, 2, 0);
    auto back = space_from_json<Fp>(space_to_json(sp));
    CHECK(back == sp);

    auto el = pure(sp, Vec<Fp>(unit_vec(sp, 0) + unit_vec(sp, 2)));
    auto el2 = sf_from_json<Fp>(sf_to_json(el));
    CHECK(el2.same_element(el));
    CHECK(mats_equal(el2.S, el.S));

    // degenerate spaces serialize too
    auto w = standard_space<Rat>(FieldSpec::rational(), 1, 1);
    CHECK(space_from_json<Rat>(space_to_json(w)) == w);
}

TEST_CASE("algebra round trip preserves brackets and generators") {
    auto m = build_sp_model<Fp>(f3, 2);
    json j = algebra_to_json(m.algebra);
    auto back = algebra_from_json<Fp>(j);
    CHECK(back.dim() == 10);
    CHECK(back.extremal_generators().size() == 10);
    Rng rng(5);
    for (int rep = 0; rep < 25; ++rep) {
        Vec<Fp> x = random_vec<Fp>(f3, 10, rng);
        Vec<Fp> y = random_vec<Fp>(f3, 10, rng);
        CHECK(vecs_equal(m.algebra.bracket(x, y), back.bracket(x, y)));
    }
    // unlisted pairs are zero and i < j is enforced
    for (const auto& e : j.at("bracket")) CHECK(e.at(0).get<Index>() < e.at(1).get<Index>());
}

TEST_CASE("rational algebra round trip keeps exact fractions") {
    auto m = build_sp_model<Rat>(FieldSpec::rational(), 1);
    // scale the table by 1/2 to force fractional constants
    auto entries = m.algebra.table();
    for (auto& e : entries)
        for (auto& [k, c] : e.coeffs) c = c * Rat(1, 2);
    auto L = StructureLieAlgebra<Rat>::from_table(FieldSpec::rational(), 3, entries);
    auto back = algebra_from_json<Rat>(algebra_to_json(L));
    bool has_fraction = false;
    for (const auto& e : back.table())
        for (auto& [k, c] : e.coeffs) has_fraction |= c.den() != 1;
    CHECK(has_fraction);
    Rng rng(6);
    Vec<Rat> x = random_vec<Rat>(FieldSpec::rational(), 3, rng);
    Vec<Rat> y = random_vec<Rat>(FieldSpec::rational(), 3, rng);
    CHECK(vecs_equal(L.bracket(x, y), back.bracket(x, y)));
}

TEST_CASE("geometry exports") {
    auto m = build_sp_model<Fp>(f3, 1);
    auto geom = enumerate_geometry(m.algebra);
    auto lines = enumerate_lines(m.algebra, geom);
    json j = geometry_to_json(geom, lines);
    CHECK(j.at("points").size() == 4);
    CHECK(j.at("hyperbolic_lines").size() == 1);
    CHECK(j.at("hyperbolic_lines").at(0).size() == 4);
    CHECK(j.at("polar_lines").empty());

    std::string dot = geometry_to_dot(geom);
    CHECK(dot.find("graph extremal_geometry") != std::string::npos);
    CHECK(dot.find("p0 [label=") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
}

TEST_CASE("condition report JSON carries witnesses") {
    TableEntry<Fp> e;
    e.i = 0;
    e.j = 1;
    e.coeffs.emplace_back(2, Fp(1, 3));
    auto H = StructureLieAlgebra<Fp>::from_table(f3, 3, {e});
    auto rep = check_condition_A(H, {H.basis_vec(0), H.basis_vec(1), H.basis_vec(2)});
    json j = condition_report_to_json(rep);
    CHECK(j.at("check") == "condition_A");
    CHECK(j.at("pass") == false);
    CHECK(!j.at("witnesses").empty());
    CHECK(j.at("witnesses").at(0).contains("class"));
}

TEST_CASE("recognition report JSON has the documented shape") {
    auto m = build_sp_model<Fp>(f3, 1);
    auto rep = recognize(m.algebra);
    json j = recognition_to_json(rep);
    CHECK(j.at("m") == 1);
    CHECK(j.at("gram").size() == 2);
    CHECK(j.contains("gamma"));
    CHECK(j.at("psi").size() == 3);
    CHECK(!j.at("checks").empty());
    for (const auto& c : j.at("checks")) {
        CHECK(c.contains("name"));
        CHECK(c.at("pass") == true);
    }
}
