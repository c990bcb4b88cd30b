#pragma once

// The point-line geometry on extremal points: noncommuting adjacency,
// hyperbolic (sl2) lines, polar lines via double perps, symplectic planes,
// triple classification, and the nondegeneracy/connectivity health checks.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <variant>

#include "liesym/extremal.hpp"

namespace liesym {

enum class LineKind { Hyperbolic, Polar };

struct GeomLine {
    LineKind kind;
    std::vector<int> points; // sorted indices into Geometry::points
};

template <class K>
struct Geometry {
    std::vector<Vec<K>> points; // canonical representatives
    std::vector<std::vector<char>> noncommuting;
    bool spans = false;   // point representatives span the algebra
    bool complete = true; // false when the closure hit its budget

    int find(const Vec<K>& rep) const {
        for (size_t i = 0; i < points.size(); ++i)
            if (vecs_equal(points[i], rep)) return static_cast<int>(i);
        return -1;
    }
    bool commutes(int i, int j) const { return i == j || !noncommuting[i][j]; }
    size_t size() const { return points.size(); }
};

struct GeometryBudget {
    size_t max_points = 20000;
    size_t max_lines = 200000;
    bool exp_orbit_expansion = false; // also close under exp(x, l) images
};

namespace detail {

template <class K>
std::string span_key(const Mat<K>& rows) {
    Mat<K> r = echelonize(rows).R;
    std::string s = std::to_string(r.rows()) + "|";
    for (Index i = 0; i < r.rows(); ++i) s += vec_key(Vec<K>(r.row(i).transpose()));
    return s;
}

template <class K>
void finish_geometry(const StructureLieAlgebra<K>& L, Geometry<K>& g) {
    const size_t n = g.points.size();
    g.noncommuting.assign(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        Mat<K> adx = L.ad_matrix(g.points[i]);
        for (size_t j = i + 1; j < n; ++j) {
            bool nc = !is_zero_vec(Vec<K>(adx * g.points[j]));
            g.noncommuting[i][j] = g.noncommuting[j][i] = nc;
        }
    }
    Mat<K> rows = zeros<K>(static_cast<Index>(n), L.dim());
    for (size_t i = 0; i < n; ++i) rows.row(static_cast<Index>(i)) = g.points[i].transpose();
    g.spans = rank_of(rows) == L.dim();
}

/// Scale c with w = c * x, when w is a multiple of x.
template <class K>
std::optional<K> multiple_of(const Vec<K>& w, const Vec<K>& x) {
    Index pivot = -1;
    for (Index i = 0; i < x.size(); ++i)
        if (!is_zero(x(i))) { pivot = i; break; }
    if (pivot < 0) return std::nullopt;
    K c = w(pivot) / x(pivot);
    for (Index i = 0; i < w.size(); ++i)
        if (w(i) != c * x(i)) return std::nullopt;
    return c;
}

} // namespace detail

/// Closure of a seed set under adding all conic points of lines through
/// noncommuting pairs. Stops at a fixpoint or when the budget is exhausted.
template <class K>
Geometry<K> build_geometry(const StructureLieAlgebra<K>& L, const std::vector<Vec<K>>& seeds,
                           const GeometryBudget& budget = {}) {
    Geometry<K> g;
    std::map<std::string, int> index;
    std::set<std::string> processed_lines;
    auto add_point = [&](const Vec<K>& v) -> int {
        Vec<K> rep = canonical_rep(v);
        std::string key = vec_key(rep);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(g.points.size());
        index.emplace(std::move(key), id);
        g.points.push_back(std::move(rep));
        return id;
    };
    for (const auto& s : seeds) {
        ExtremalCheck<K> chk = is_extremal(L, s);
        if (!chk.extremal) throw std::invalid_argument("seed is not extremal");
        if (chk.sandwich) throw std::invalid_argument("seed is a sandwich; geometry points are pure");
        add_point(s);
    }

    size_t lines_done = 0;
    bool complete = true;
    std::vector<K> all_lambdas;
    if constexpr (field_traits<K>::finite) {
        for (const K& l : field_traits<K>::elements(L.field())) all_lambdas.push_back(l);
    } else {
        for (long long r : {0LL, 1LL, -1LL, 2LL, 3LL})
            all_lambdas.push_back(field_traits<K>::make(L.field(), r));
    }
    K two = field_traits<K>::make(L.field(), 2);
    auto conic_pass = [&]() {
        for (size_t i = 0; i < g.points.size() && complete; ++i) {
            Mat<K> adx = L.ad_matrix(g.points[i]);
            for (size_t j = 0; j < g.points.size() && complete; ++j) {
                if (i == j) continue;
                if (g.points.size() > budget.max_points || lines_done > budget.max_lines) {
                    complete = false;
                    break;
                }
                Vec<K> x = g.points[i]; // copies: add_point below reallocates the store
                Vec<K> y = g.points[j];
                Vec<K> br = adx * y;
                if (is_zero_vec(br)) continue;
                auto scale = detail::multiple_of(Vec<K>(adx * br), x); // [x,[x,y]] = 2g x
                if (!scale || is_zero(*scale)) continue; // bracket-extremal pairs carry no line
                K gxy = *scale / two;
                Mat<K> span(3, L.dim());
                span.row(0) = x.transpose();
                span.row(1) = y.transpose();
                span.row(2) = br.transpose();
                std::string key = detail::span_key(span);
                if (!processed_lines.insert(key).second) continue;
                ++lines_done;
                Vec<K> gx = gxy * x;
                for (const K& lam : all_lambdas) add_point(Vec<K>(gx + (lam * lam) * y + lam * br));
                add_point(y);
            }
        }
    };
    conic_pass();
    if (budget.exp_orbit_expansion && complete) {
        // optional second closure: images of points under exp of other points
        for (bool grew = true; grew && complete;) {
            grew = false;
            size_t before = g.points.size();
            std::vector<K> lambdas;
            if constexpr (field_traits<K>::finite) {
                for (const K& l : field_traits<K>::elements(L.field()))
                    if (!is_zero(l)) lambdas.push_back(l);
            } else {
                for (long long r : {1LL, -1LL, 2LL}) lambdas.push_back(field_traits<K>::make(L.field(), r));
            }
            for (size_t i = 0; i < before && complete; ++i)
                for (size_t j = 0; j < before && complete; ++j) {
                    if (i == j) continue;
                    if (g.points.size() > budget.max_points) { complete = false; break; }
                    for (const K& lam : lambdas) {
                        Vec<K> img = exp_apply(L, g.points[i], lam, g.points[j]);
                        if (!is_zero_vec(img)) add_point(img);
                    }
                }
            if (g.points.size() > before) {
                grew = true;
                conic_pass();
            }
        }
    }
    g.complete = complete;
    detail::finish_geometry(L, g);
    return g;
}

/// Brute-force enumeration of every extremal point (finite fields, and only
/// sensible for modest dimensions).
template <class K>
Geometry<K> enumerate_geometry(const StructureLieAlgebra<K>& L, size_t scan_cap = 2000000) {
    static_assert(field_traits<K>::finite, "enumeration needs a finite field");
    const Index d = L.dim();
    double vectors = 1;
    for (Index i = 0; i < d; ++i) vectors *= static_cast<double>(L.field().order());
    double projective = (vectors - 1) / static_cast<double>(L.field().order() - 1);
    if (projective > static_cast<double>(scan_cap))
        throw std::invalid_argument("projective space too large to enumerate; use seeded closure");
    Geometry<K> g;
    for (const auto& v : projective_points<K>(L.field(), d)) {
        ExtremalCheck<K> chk = is_extremal(L, v);
        if (chk.extremal && !chk.sandwich) g.points.push_back(v);
    }
    detail::finish_geometry(L, g);
    return g;
}

// ---------------------------------------------------------------------------
// Perps and polar lines
// ---------------------------------------------------------------------------

/// Commuting neighbours of x, excluding x itself.
template <class K>
std::vector<int> perp_set(const Geometry<K>& g, int x) {
    std::vector<int> out;
    for (size_t k = 0; k < g.size(); ++k)
        if (static_cast<int>(k) != x && !g.noncommuting[x][k]) out.push_back(static_cast<int>(k));
    return out;
}

/// Double perp of a commuting pair within the enumerated point set.
template <class K>
GeomLine polar_line(const Geometry<K>& g, int x, int y) {
    if (x == y || !g.commutes(x, y)) throw std::invalid_argument("not a polar pair");
    std::vector<int> common;
    for (size_t k = 0; k < g.size(); ++k)
        if (g.commutes(static_cast<int>(k), x) && g.commutes(static_cast<int>(k), y))
            common.push_back(static_cast<int>(k));
    GeomLine line{LineKind::Polar, {}};
    for (size_t q = 0; q < g.size(); ++q) {
        bool in = true;
        for (int a : common)
            if (!g.commutes(static_cast<int>(q), a)) { in = false; break; }
        if (in) line.points.push_back(static_cast<int>(q));
    }
    return line;
}

/// The hyperbolic line through a noncommuting pair, as point indices. On a
/// complete finite geometry this is the full conic and every conic point must
/// be present; on sampled geometries (incomplete, or over an infinite field)
/// it collects the present points of the line's 3-space instead.
template <class K>
GeomLine hyperbolic_line(const StructureLieAlgebra<K>& L, const Geometry<K>& g, int x, int y) {
    if (g.commutes(x, y)) throw std::invalid_argument("points commute; no hyperbolic line");
    GeomLine line{LineKind::Hyperbolic, {}};
    if (g.complete && field_traits<K>::finite) {
        Sl2Points<K> conic = sl2_extremal_points(L, g.points[x], g.points[y]);
        for (const auto& p : conic.points) {
            int id = g.find(canonical_rep(p));
            if (id < 0) throw std::logic_error("conic point missing from the geometry");
            line.points.push_back(id);
        }
    } else {
        Mat<K> rows(3, L.dim());
        rows.row(0) = g.points[x].transpose();
        rows.row(1) = g.points[y].transpose();
        rows.row(2) = L.bracket(g.points[x], g.points[y]).transpose();
        Subspace<K> span = Subspace<K>::from_rows(rows);
        for (size_t k = 0; k < g.size(); ++k)
            if (span.contains(g.points[k])) line.points.push_back(static_cast<int>(k));
    }
    std::sort(line.points.begin(), line.points.end());
    line.points.erase(std::unique(line.points.begin(), line.points.end()), line.points.end());
    return line;
}

template <class K>
struct GeometryLines {
    std::vector<GeomLine> hyperbolic;
    std::vector<GeomLine> polar;
    bool truncated = false; // line_cap hit
};

template <class K>
GeometryLines<K> enumerate_lines(const StructureLieAlgebra<K>& L, const Geometry<K>& g,
                                 size_t line_cap = SIZE_MAX) {
    GeometryLines<K> out;
    std::set<std::string> seen_h;
    std::set<std::vector<int>> seen_p;
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j) {
            if (g.noncommuting[i][j]) {
                if (out.hyperbolic.size() >= line_cap) {
                    out.truncated = true;
                    continue;
                }
                Mat<K> rows(3, L.dim());
                rows.row(0) = g.points[i].transpose();
                rows.row(1) = g.points[j].transpose();
                rows.row(2) = L.bracket(g.points[i], g.points[j]).transpose();
                if (!seen_h.insert(detail::span_key(Mat<K>(rows))).second) continue;
                out.hyperbolic.push_back(hyperbolic_line(L, g, static_cast<int>(i), static_cast<int>(j)));
            } else {
                if (out.polar.size() >= line_cap) {
                    out.truncated = true;
                    continue;
                }
                GeomLine l = polar_line(g, static_cast<int>(i), static_cast<int>(j));
                if (seen_p.insert(l.points).second) out.polar.push_back(std::move(l));
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Span and oval checks for lines
// ---------------------------------------------------------------------------

struct LineSpanReport {
    Index span_dim = 0;
    bool span_ok = false;       // the points span a 3-space
    bool points_exact = false;  // geometry points inside the span are exactly the line
    bool oval_ok = false;       // no 3 points collinear in the projective plane
    bool conic_relation = false; // a common quadratic form vanishes on all points
    size_t count = 0;
    bool pass = false;
};

template <class K>
LineSpanReport polar_span_check(const StructureLieAlgebra<K>& L, const Geometry<K>& g,
                                const GeomLine& line) {
    LineSpanReport rep;
    rep.count = line.points.size();
    Mat<K> rows = zeros<K>(static_cast<Index>(line.points.size()), L.dim());
    for (size_t i = 0; i < line.points.size(); ++i)
        rows.row(static_cast<Index>(i)) = g.points[line.points[i]].transpose();
    Subspace<K> span = Subspace<K>::from_rows(rows);
    rep.span_dim = span.dim();
    rep.span_ok = span.dim() == 3;
    if (!rep.span_ok) return rep;

    rep.points_exact = true;
    std::set<int> on_line(line.points.begin(), line.points.end());
    for (size_t k = 0; k < g.size(); ++k) {
        bool inside = span.contains(g.points[k]);
        if (inside != (on_line.count(static_cast<int>(k)) > 0)) rep.points_exact = false;
    }

    // coordinates of each point in the span basis
    std::vector<Vec<K>> coords;
    for (int p : line.points) {
        auto c = coordinates_in_rows(span.basis, g.points[p]);
        if (!c) return rep;
        coords.push_back(*c);
    }
    // no 3 collinear: every 3x3 coordinate matrix has full rank
    rep.oval_ok = true;
    for (size_t a = 0; a < coords.size() && rep.oval_ok; ++a)
        for (size_t b = a + 1; b < coords.size() && rep.oval_ok; ++b)
            for (size_t c = b + 1; c < coords.size() && rep.oval_ok; ++c) {
                Mat<K> m(3, 3);
                m.row(0) = coords[a].transpose();
                m.row(1) = coords[b].transpose();
                m.row(2) = coords[c].transpose();
                if (rank_of(m) < 3) rep.oval_ok = false;
            }
    // common quadratic relation: the evaluation matrix on the 6 monomials
    Mat<K> eval = zeros<K>(static_cast<Index>(coords.size()), 6);
    for (size_t i = 0; i < coords.size(); ++i) {
        const Vec<K>& c = coords[i];
        eval(i, 0) = c(0) * c(0);
        eval(i, 1) = c(1) * c(1);
        eval(i, 2) = c(2) * c(2);
        eval(i, 3) = c(0) * c(1);
        eval(i, 4) = c(0) * c(2);
        eval(i, 5) = c(1) * c(2);
    }
    rep.conic_relation = kernel_basis(eval).rows() > 0;
    rep.pass = rep.span_ok && rep.points_exact && rep.oval_ok && rep.conic_relation;
    return rep;
}

/// Unique point of a hyperbolic line commuting with x, or "contained".
template <class K>
std::variant<int, std::string> line_meets_perp(const Geometry<K>& g, int x, const GeomLine& line) {
    std::vector<int> hits;
    for (int p : line.points)
        if (g.commutes(x, p)) hits.push_back(p);
    if (hits.size() == line.points.size()) return std::string("contained");
    if (hits.size() == 1) return hits[0];
    throw std::logic_error("perp meets the line in " + std::to_string(hits.size()) +
                           " points; geometry hypothesis violated");
}

// ---------------------------------------------------------------------------
// Symplectic planes
// ---------------------------------------------------------------------------

struct DualAffineReport {
    size_t points = 0;
    size_t lines = 0;
    size_t points_per_line = 0;
    size_t parallel_classes = 0;
    size_t class_size = 0;
    bool equivalence_ok = false; // non-collinearity is an equivalence relation
    bool counts_ok = false;      // q^2+q points, q^2 lines of q+1 points, q+1 classes of q
    bool pass = false;
};

template <class K>
struct PlaneResult {
    std::vector<Vec<K>> points; // canonical representatives
    DualAffineReport report;
};

/// The subspace of the geometry generated by a symplectic triple (x, z, y)
/// with hinge z: closure of the three points under hyperbolic-line conics.
/// Validates the dual affine plane axioms over finite fields.
template <class K>
PlaneResult<K> symplectic_plane(const StructureLieAlgebra<K>& L, const Vec<K>& x, const Vec<K>& z,
                                const Vec<K>& y) {
    if (is_zero_vec(L.bracket(x, z)) || is_zero_vec(L.bracket(z, y)) ||
        !is_zero_vec(L.bracket(x, y)))
        throw std::invalid_argument("not a symplectic triple");
    Mat<K> sl2span(3, L.dim());
    sl2span.row(0) = x.transpose();
    sl2span.row(1) = z.transpose();
    sl2span.row(2) = L.bracket(x, z).transpose();
    if (Subspace<K>::from_rows(sl2span).contains(y))
        throw std::invalid_argument("not a symplectic triple");

    Geometry<K> closed = build_geometry(L, {x, z, y});
    PlaneResult<K> out;
    out.points = closed.points;
    DualAffineReport& rep = out.report;
    rep.points = closed.points.size();

    GeometryLines<K> lines = enumerate_lines(L, closed);
    rep.lines = lines.hyperbolic.size();
    rep.points_per_line = rep.lines ? lines.hyperbolic.front().points.size() : 0;
    bool uniform = true;
    for (const auto& l : lines.hyperbolic) uniform &= l.points.size() == rep.points_per_line;

    // non-collinearity (= commuting) must be an equivalence relation
    const size_t n = closed.points.size();
    rep.equivalence_ok = true;
    for (size_t a = 0; a < n && rep.equivalence_ok; ++a)
        for (size_t b = 0; b < n && rep.equivalence_ok; ++b) {
            if (a == b) continue;
            if (!closed.commutes(a, b)) continue;
            for (size_t c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                if (closed.commutes(b, c) && !closed.commutes(a, c)) {
                    rep.equivalence_ok = false;
                    break;
                }
            }
        }
    std::vector<int> cls(n, -1);
    int nclasses = 0;
    for (size_t a = 0; a < n; ++a) {
        if (cls[a] >= 0) continue;
        cls[a] = nclasses;
        for (size_t b = 0; b < n; ++b)
            if (b != a && closed.commutes(a, b)) cls[b] = nclasses;
        ++nclasses;
    }
    rep.parallel_classes = nclasses;
    std::vector<size_t> sizes(nclasses, 0);
    for (size_t a = 0; a < n; ++a) ++sizes[cls[a]];
    rep.class_size = sizes.empty() ? 0 : sizes.front();
    bool same_size = true;
    for (size_t s : sizes) same_size &= s == rep.class_size;

    if constexpr (field_traits<K>::finite) {
        size_t q = static_cast<size_t>(L.field().order());
        rep.counts_ok = uniform && same_size && rep.points == q * q + q &&
                        rep.lines == q * q && rep.points_per_line == q + 1 &&
                        rep.parallel_classes == q + 1 && rep.class_size == q;
    } else {
        rep.counts_ok = uniform && same_size;
    }
    rep.pass = rep.counts_ok && rep.equivalence_ok && closed.complete;
    return out;
}

// ---------------------------------------------------------------------------
// Symplectic triples
// ---------------------------------------------------------------------------

enum class TripleKind { Sp3, PSp3 };

template <class K>
struct TripleClass {
    TripleKind kind;
    Index dim = 0;
    Index center_dim = 0;
    bool table_verified = false; // the six bracket identities
    Mat<K> span;                 // rows spanning the generated subalgebra
};

/// Classify the subalgebra generated by a symplectic triple (x, y, z) with
/// hinge y: [x,y] != 0, [y,z] != 0, [x,z] = 0, z outside <x,y>. After
/// normalizing g(x,y) = g(z,y) = 1 the six structure identities pin the
/// multiplication table; the span has dimension 6 (nontrivial center) or 5.
template <class K>
TripleClass<K> classify_triple(const StructureLieAlgebra<K>& L, Vec<K> x, const Vec<K>& y, Vec<K> z) {
    if (is_zero_vec(L.bracket(x, y)) || is_zero_vec(L.bracket(y, z)) ||
        !is_zero_vec(L.bracket(x, z)))
        throw std::invalid_argument("not a symplectic triple");
    if (!is_extremal(L, x).extremal || !is_extremal(L, y).extremal || !is_extremal(L, z).extremal)
        throw std::invalid_argument("non-extremal input");
    {
        Mat<K> sl2span(3, L.dim());
        sl2span.row(0) = x.transpose();
        sl2span.row(1) = y.transpose();
        sl2span.row(2) = L.bracket(x, y).transpose();
        if (Subspace<K>::from_rows(sl2span).contains(z))
            throw std::invalid_argument("not a symplectic triple");
    }
    auto gxy = extract_g(L, x, y);
    auto gzy = extract_g(L, z, y);
    auto gxz = extract_g(L, x, z);
    if (!gxy || !gzy || !gxz) throw std::invalid_argument("non-extremal input");
    if (is_zero(*gxy) || is_zero(*gzy))
        throw std::invalid_argument("hinge pairings must be hyperbolic");
    if (!is_zero(*gxz)) throw std::logic_error("commuting pair with nonzero extremal pairing");

    // normalize representatives: g(x,y) = g(z,y) = 1
    K cx = gxy->inv(), cz = gzy->inv();
    for (Index i = 0; i < x.size(); ++i) x(i) = x(i) * cx;
    for (Index i = 0; i < z.size(); ++i) z(i) = z(i) * cz;

    Vec<K> bxy = L.bracket(x, y);
    Vec<K> byz = L.bracket(y, z);
    Vec<K> bxyz = L.bracket(x, byz);
    K two = field_traits<K>::make(L.field(), 2);

    TripleClass<K> out;
    bool ok = true;
    ok &= is_zero_vec(L.bracket(x, bxyz));
    ok &= is_zero_vec(L.bracket(z, bxyz));
    ok &= vecs_equal(L.bracket(y, bxyz), Vec<K>(bxy - byz));
    ok &= vecs_equal(L.bracket(bxy, byz), Vec<K>(bxy + byz));
    ok &= vecs_equal(L.bracket(bxy, bxyz), Vec<K>(two * x - bxyz));
    ok &= vecs_equal(L.bracket(byz, bxyz), Vec<K>(bxyz - two * z));
    out.table_verified = ok;

    Mat<K> rows(6, L.dim());
    rows.row(0) = x.transpose();
    rows.row(1) = y.transpose();
    rows.row(2) = z.transpose();
    rows.row(3) = bxy.transpose();
    rows.row(4) = byz.transpose();
    rows.row(5) = bxyz.transpose();
    Echelon<K> e = echelonize(rows);
    out.dim = e.rank;
    out.span = e.R;
    if (out.dim != 5 && out.dim != 6) throw std::runtime_error("table mismatch");

    // induced structure constants on the span, for the center
    BracketOracle<K> oracle = [&L](const Vec<K>& a, const Vec<K>& b) { return L.bracket(a, b); };
    std::vector<Vec<K>> gens;
    for (Index i = 0; i < out.span.rows(); ++i) gens.push_back(out.span.row(i).transpose());
    ClosureResult<K> sub = from_bracket_closure<K>(L.field(), oracle, gens);
    if (sub.algebra.dim() != out.dim) throw std::runtime_error("table mismatch");
    out.center_dim = center(sub.algebra).dim();
    out.kind = out.dim == 6 ? TripleKind::Sp3 : TripleKind::PSp3;
    if ((out.dim == 6 && out.center_dim != 1) || (out.dim == 5 && out.center_dim != 0))
        throw std::runtime_error("table mismatch");
    return out;
}

// ---------------------------------------------------------------------------
// Health
// ---------------------------------------------------------------------------

struct GeometryHealth {
    bool connected = false;
    bool nondegenerate = false;
};

template <class K>
GeometryHealth geometry_health(const Geometry<K>& g) {
    GeometryHealth out;
    const size_t n = g.size();
    if (n == 0) return out;
    std::vector<char> seen(n, 0);
    std::deque<size_t> queue{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!queue.empty()) {
        size_t a = queue.front();
        queue.pop_front();
        for (size_t b = 0; b < n; ++b)
            if (g.noncommuting[a][b] && !seen[b]) {
                seen[b] = 1;
                ++reached;
                queue.push_back(b);
            }
    }
    out.connected = reached == n;

    out.nondegenerate = true;
    for (size_t i = 0; i < n && out.nondegenerate; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (g.noncommuting[i][j]) continue; // inclusive perps of noncommuting points differ
            bool same = true;
            for (size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (g.noncommuting[i][k] != g.noncommuting[j][k]) { same = false; break; }
            }
            if (same) {
                out.nondegenerate = false;
                break;
            }
        }
    return out;
}

} // namespace liesym
