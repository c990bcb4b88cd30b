#pragma once

// JSON formats for every value that crosses the CLI boundary, plus the DOT
// export of geometries. All files are UTF-8 JSON; rationals are "num/den"
// strings; extension scalars are [a, b] pairs meaning a + b t.

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "liesym/geometry.hpp"
#include "liesym/recognition.hpp"

namespace liesym {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Field specs and scalars
// ---------------------------------------------------------------------------

inline json to_json(const FieldSpec& f) {
    switch (f.kind) {
        case FieldKind::Prime: return json{{"type", "prime"}, {"p", f.p}};
        case FieldKind::PrimeSquare:
            return json{{"type", "prime_square"}, {"p", f.p}, {"nonsquare", f.nonsquare}};
        default: return json{{"type", "rational"}};
    }
}

inline FieldSpec field_from_json(const json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "prime") return FieldSpec::prime(j.at("p").get<long long>());
    if (type == "prime_square")
        return FieldSpec::prime_square(j.at("p").get<long long>(), j.at("nonsquare").get<long long>());
    if (type == "rational") return FieldSpec::rational();
    throw std::invalid_argument("unknown field type: " + type);
}

inline json scalar_to_json(const Fp& x) { return json(x.value()); }
inline json scalar_to_json(const Fp2& x) { return json::array({x.re(), x.im()}); }
inline json scalar_to_json(const Rat& x) {
    return json(x.num().get_str() + "/" + x.den().get_str());
}

template <class K>
K scalar_from_json(const FieldSpec& f, const json& j);

template <>
inline Fp scalar_from_json<Fp>(const FieldSpec& f, const json& j) {
    return Fp(j.get<long long>(), f.p);
}

template <>
inline Fp2 scalar_from_json<Fp2>(const FieldSpec& f, const json& j) {
    if (j.is_number()) return Fp2(j.get<long long>(), 0, f.p, f.nonsquare);
    return Fp2(j.at(0).get<long long>(), j.at(1).get<long long>(), f.p, f.nonsquare);
}

template <>
inline Rat scalar_from_json<Rat>(const FieldSpec&, const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    mpq_class q(slash == std::string::npos ? s : s.substr(0, slash) + "/" + s.substr(slash + 1));
    return Rat(q);
}

template <class K>
json vec_to_json(const Vec<K>& v) {
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(scalar_to_json(v(i)));
    return out;
}

template <class K>
Vec<K> vec_from_json(const FieldSpec& f, const json& j) {
    Vec<K> v(static_cast<Index>(j.size()));
    for (size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = scalar_from_json<K>(f, j[i]);
    return v;
}

template <class K>
json mat_to_json(const Mat<K>& m) {
    json out = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

template <class K>
Mat<K> mat_from_json(const FieldSpec& f, const json& j) {
    Index rows = static_cast<Index>(j.size());
    Index cols = rows ? static_cast<Index>(j.at(0).size()) : 0;
    Mat<K> m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index c = 0; c < cols; ++c) m(i, c) = scalar_from_json<K>(f, j.at(i).at(c));
    return m;
}

// ---------------------------------------------------------------------------
// Spaces and algebras
// ---------------------------------------------------------------------------

template <class K>
json space_to_json(const SymplecticSpace<K>& s) {
    return json{{"field", to_json(s.field)}, {"dim", s.n}, {"gram", mat_to_json(s.gram)}};
}

template <class K>
SymplecticSpace<K> space_from_json(const json& j) {
    FieldSpec f = field_from_json(j.at("field"));
    return SymplecticSpace<K>(f, mat_from_json<K>(f, j.at("gram")));
}

template <class K>
json sf_to_json(const SfElement<K>& a) {
    return json{{"space", space_to_json(a.space)}, {"S", mat_to_json(a.S)}};
}

template <class K>
SfElement<K> sf_from_json(const json& j) {
    SymplecticSpace<K> sp = space_from_json<K>(j.at("space"));
    FieldSpec f = sp.field;
    return SfElement<K>(sp, mat_from_json<K>(f, j.at("S")));
}

/// Algebra files: {"field":..., "dim":d, "bracket":[[i,j,[[k,c],...]],...],
/// "extremal_generators":[[...],...]} with 0-based indices, i < j, antisymmetry
/// implied, unlisted pairs zero.
template <class K>
json algebra_to_json(const StructureLieAlgebra<K>& L) {
    json bracket = json::array();
    for (const TableEntry<K>& e : L.table()) {
        json coeffs = json::array();
        for (auto& [k, c] : e.coeffs) coeffs.push_back(json::array({k, scalar_to_json(c)}));
        bracket.push_back(json::array({e.i, e.j, std::move(coeffs)}));
    }
    json gens = json::array();
    for (const auto& g : L.extremal_generators()) gens.push_back(vec_to_json(g));
    return json{{"field", to_json(L.field())},
                {"dim", L.dim()},
                {"bracket", std::move(bracket)},
                {"extremal_generators", std::move(gens)}};
}

template <class K>
StructureLieAlgebra<K> algebra_from_json(const json& j) {
    FieldSpec f = field_from_json(j.at("field"));
    Index d = j.at("dim").get<Index>();
    std::vector<TableEntry<K>> entries;
    for (const auto& e : j.at("bracket")) {
        TableEntry<K> te;
        te.i = e.at(0).get<Index>();
        te.j = e.at(1).get<Index>();
        for (const auto& kc : e.at(2))
            te.coeffs.emplace_back(kc.at(0).get<Index>(), scalar_from_json<K>(f, kc.at(1)));
        entries.push_back(std::move(te));
    }
    auto L = StructureLieAlgebra<K>::from_table(f, d, entries);
    if (j.contains("extremal_generators")) {
        std::vector<Vec<K>> gens;
        for (const auto& g : j.at("extremal_generators")) gens.push_back(vec_from_json<K>(f, g));
        L.set_extremal_generators(std::move(gens));
    }
    return L;
}

// ---------------------------------------------------------------------------
// Geometry exports
// ---------------------------------------------------------------------------

template <class K>
json geometry_to_json(const Geometry<K>& g, const GeometryLines<K>& lines) {
    json points = json::array();
    for (const auto& p : g.points) points.push_back(vec_to_json(p));
    json hyp = json::array(), pol = json::array();
    for (const auto& l : lines.hyperbolic) hyp.push_back(l.points);
    for (const auto& l : lines.polar) pol.push_back(l.points);
    return json{{"points", std::move(points)},
                {"hyperbolic_lines", std::move(hyp)},
                {"polar_lines", std::move(pol)},
                {"spans", g.spans},
                {"complete", g.complete}};
}

template <class K>
std::string point_label(const Vec<K>& v) {
    std::ostringstream os;
    os << "(";
    for (Index i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v(i);
    }
    os << ")";
    return os.str();
}

/// DOT export: nodes are points labeled by canonical representatives, solid
/// edges join noncommuting points.
template <class K>
std::string geometry_to_dot(const Geometry<K>& g) {
    std::ostringstream os;
    os << "graph extremal_geometry {\n";
    for (size_t i = 0; i < g.size(); ++i)
        os << "  p" << i << " [label=\"" << point_label(g.points[i]) << "\"];\n";
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j)
            if (g.noncommuting[i][j]) os << "  p" << i << " -- p" << j << " [style=solid];\n";
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

template <class K>
json condition_report_to_json(const ConditionAReport<K>& r) {
    json witnesses = json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back(json{{"x", vec_to_json(w.x)},
                                 {"y", vec_to_json(w.y)},
                                 {"class", pair_class_name(w.cls)}});
    return json{{"check", "condition_A"},
                {"pass", r.pass},
                {"exhaustive", r.exhaustive},
                {"witnesses", std::move(witnesses)}};
}

template <class K>
json recognition_to_json(const RecognitionReport<K>& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(json{{"name", c.name}, {"pass", c.pass}});
    json coords = json::array();
    for (const auto& c : r.point_coords) coords.push_back(vec_to_json(c));
    return json{{"m", r.m},
                {"gram", mat_to_json(r.space.gram)},
                {"gamma", scalar_to_json(r.gamma)},
                {"psi", mat_to_json(r.psi)},
                {"point_coordinates", std::move(coords)},
                {"checks", std::move(checks)}};
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return json::parse(in); // parse errors carry byte positions
}

} // namespace liesym
