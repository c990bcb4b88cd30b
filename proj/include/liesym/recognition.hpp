#pragma once

// Reconstruction of (V, f) and an explicit isomorphism onto the rank-1 model
// from an abstract algebra with extremal generators: hyperbolic frame search,
// gauge-fixed projective coordinatization of every extremal point, theta
// solving along a spanning tree of the noncommuting graph, and recovery of the
// global product scalar gamma.

#include <map>

#include "liesym/geometry.hpp"
#include "liesym/models.hpp"

namespace liesym {

template <class K>
struct HyperbolicFrame {
    Index m = 0;
    std::vector<int> p_points, q_points; // indices into the geometry
    std::vector<Vec<K>> x, y;            // reps normalized so g(x_k, y_k) = 1

    Index directions() const { return 2 * m; }
    Index partner(Index i) const { return (i + m) % (2 * m); }
    const Vec<K>& rep(Index i) const { return i < m ? x[i] : y[i - m]; }
    int point(Index i) const { return i < m ? p_points[i] : q_points[i - m]; }
};

/// Greedy hyperbolic peeling on the geometry: pick the first noncommuting
/// pair, normalize, restrict to the common perp, recurse.
template <class K>
HyperbolicFrame<K> find_frame(const StructureLieAlgebra<K>& L, const Geometry<K>& geom) {
    HyperbolicFrame<K> frame;
    std::vector<int> live(geom.size());
    for (size_t i = 0; i < geom.size(); ++i) live[i] = static_cast<int>(i);
    while (!live.empty()) {
        int a = -1, b = -1;
        for (size_t i = 0; i < live.size() && a < 0; ++i)
            for (size_t j = i + 1; j < live.size(); ++j)
                if (geom.noncommuting[live[i]][live[j]]) {
                    a = live[i];
                    b = live[j];
                    break;
                }
        if (a < 0) {
            if (!live.empty())
                throw std::runtime_error("degenerate geometry: leftover points all commute");
            break;
        }
        Vec<K> xr = geom.points[a];
        Vec<K> yr = geom.points[b];
        auto g = extract_g(L, xr, yr);
        if (!g || is_zero(*g)) throw std::runtime_error("degenerate geometry: zero pairing");
        K inv = g->inv();
        for (Index t = 0; t < yr.size(); ++t) yr(t) = yr(t) * inv;
        frame.p_points.push_back(a);
        frame.q_points.push_back(b);
        frame.x.push_back(std::move(xr));
        frame.y.push_back(std::move(yr));
        std::vector<int> next;
        for (int k : live)
            if (k != a && k != b && geom.commutes(k, a) && geom.commutes(k, b)) next.push_back(k);
        live = std::move(next);
    }
    frame.m = static_cast<Index>(frame.p_points.size());
    if (frame.m == 0) throw std::runtime_error("degenerate geometry: no noncommuting pair");
    return frame;
}

/// The reconstructed space: F^{2m} with the standard m-pair form fixed by the
/// frame gauge.
template <class K>
SymplecticSpace<K> reconstruct_space(const FieldSpec& f, const HyperbolicFrame<K>& frame) {
    return standard_space<K>(f, frame.m, 0);
}

namespace detail {

/// Symmetric bilinear extension of the extremal form, for cheap g evaluation.
template <class K>
struct GForm {
    Mat<K> G;
    K operator()(const Vec<K>& a, const Vec<K>& b) const {
        return (a.transpose() * G * b)(0, 0);
    }
};

template <class K>
GForm<K> g_form(const StructureLieAlgebra<K>& L, const Geometry<K>& geom) {
    // spanning extremal subset of the geometry points
    std::vector<Vec<K>> spanning;
    Mat<K> rows = zeros<K>(0, L.dim());
    for (const auto& p : geom.points) {
        Mat<K> cand(rows.rows() + 1, L.dim());
        cand.topRows(rows.rows()) = rows;
        cand.row(rows.rows()) = p.transpose();
        if (rank_of(cand) > rows.rows()) {
            rows = echelonize(cand).R;
            spanning.push_back(p);
        }
        if (rows.rows() == L.dim()) break;
    }
    if (rows.rows() != L.dim())
        throw std::runtime_error("geometry does not span the algebra");
    return GForm<K>{extremal_form(L, spanning).gram_basis};
}

} // namespace detail

// ---------------------------------------------------------------------------
// Coordinatization
// ---------------------------------------------------------------------------

template <class K>
class Coordinatizer {
  public:
    Coordinatizer(const StructureLieAlgebra<K>& L, const Geometry<K>& geom,
                  const HyperbolicFrame<K>& frame)
        : L_(L), geom_(geom), frame_(frame), g_(detail::g_form(L, geom)) {
        if (frame_.m > 1) align_frame_blocks();
        build_squares_table();
        if (frame_.m > 1) fix_gauges();
        coordinatize_all();
    }

    const HyperbolicFrame<K>& frame() const { return frame_; }

    /// Projective coordinates in F^{2m} of every geometry point.
    const std::vector<Vec<K>>& coords() const { return coords_; }
    const detail::GForm<K>& g() const { return g_; }

    /// Coordinates of an arbitrary extremal point rep (must be a geometry point).
    Vec<K> coordinates_of(const Vec<K>& rep) const {
        int id = geom_.find(canonical_rep(rep));
        if (id < 0) throw std::invalid_argument("point is not part of the geometry");
        return coords_[id];
    }

  private:
    const StructureLieAlgebra<K>& L_;
    const Geometry<K>& geom_;
    HyperbolicFrame<K> frame_; // local copy; block alignment rescales its reps
    detail::GForm<K> g_;
    Mat<K> squares_;                         // |points| x 2m: g(point, frame rep)
    std::map<std::pair<Index, Index>, Vec<K>> gauge_; // normalized third points
    std::vector<Vec<K>> coords_;

    K zero() const { return field_traits<K>::make(L_.field(), 0); }
    K one() const { return field_traits<K>::make(L_.field(), 1); }
    K two() const { return field_traits<K>::make(L_.field(), 2); }

    /// Rescale each pair's reps against the first block so the same hidden
    /// scale multiplies every x_k. A third point on the polar line through
    /// P_0 and P_l, normalized against y_0, carries the scale across.
    void align_frame_blocks() {
        for (Index l = 1; l < frame_.m; ++l) {
            GeomLine line = polar_line(geom_, frame_.point(0), frame_.point(l));
            std::optional<Vec<K>> gauge;
            for (int s : line.points) {
                if (s == frame_.point(0) || s == frame_.point(l)) continue;
                K alpha = g_(geom_.points[s], frame_.y[0]);
                if (is_zero(alpha)) continue;
                Vec<K> rep = geom_.points[s];
                K inv = alpha.inv();
                for (Index t = 0; t < rep.size(); ++t) rep(t) = rep(t) * inv;
                if (!gauge || vec_key(rep) < vec_key(*gauge)) gauge = rep;
            }
            if (!gauge) throw std::runtime_error("frame chain gap: no block-alignment point");
            K scale = g_(*gauge, frame_.y[l]);
            if (is_zero(scale)) throw std::runtime_error("frame chain gap: degenerate alignment");
            for (Index t = 0; t < L_.dim(); ++t) frame_.x[l](t) = frame_.x[l](t) * scale;
            auto g = extract_g(L_, frame_.x[l], frame_.y[l]);
            if (!g || is_zero(*g)) throw std::runtime_error("frame chain gap: alignment broke a pair");
            K inv = g->inv();
            for (Index t = 0; t < L_.dim(); ++t) frame_.y[l](t) = frame_.y[l](t) * inv;
        }
    }

    void build_squares_table() {
        const Index dirs = frame_.directions();
        squares_ = zeros<K>(static_cast<Index>(geom_.size()), dirs);
        for (size_t p = 0; p < geom_.size(); ++p)
            for (Index i = 0; i < dirs; ++i) squares_(p, i) = g_(geom_.points[p], frame_.rep(i));
    }

    /// Mixed product of functional coordinates at z through the gauge of (i,j).
    K gauge_product(const Vec<K>& z, const K& qi, const K& qj, Index i, Index j) const {
        auto it = gauge_.find(std::minmax(i, j));
        if (it == gauge_.end()) throw std::runtime_error("frame chain gap: missing gauge");
        return (g_(z, it->second) - qi - qj) / two();
    }

    /// Candidate gauge reps on the polar line through frame directions i, j:
    /// scaled so the pairing with partner(i)'s rep is 1, keeping only those
    /// whose pairing with partner(j)'s rep is also 1.
    std::vector<Vec<K>> gauge_candidates(Index i, Index j) const {
        GeomLine line = polar_line(geom_, frame_.point(i), frame_.point(j));
        std::vector<Vec<K>> out;
        for (int s : line.points) {
            if (s == frame_.point(i) || s == frame_.point(j)) continue;
            K alpha = g_(geom_.points[s], frame_.rep(frame_.partner(i)));
            if (is_zero(alpha)) continue;
            Vec<K> rep = geom_.points[s];
            K inv = alpha.inv();
            for (Index t = 0; t < rep.size(); ++t) rep(t) = rep(t) * inv;
            if (g_(rep, frame_.rep(frame_.partner(j))) == one()) out.push_back(std::move(rep));
        }
        return out;
    }

    /// A geometry point with nonzero squares at all three directions.
    int find_probe(Index a, Index b, Index c) const {
        for (size_t p = 0; p < geom_.size(); ++p)
            if (!is_zero(squares_(p, a)) && !is_zero(squares_(p, b)) && !is_zero(squares_(p, c)))
                return static_cast<int>(p);
        return -1;
    }

    /// A path i -> ... -> j through already-fixed gauge edges.
    std::vector<Index> fixed_path(Index i, Index j) const {
        const Index dirs = frame_.directions();
        std::vector<Index> prev(dirs, -1);
        std::deque<Index> queue{i};
        prev[i] = i;
        while (!queue.empty()) {
            Index a = queue.front();
            queue.pop_front();
            if (a == j) break;
            for (Index b = 0; b < dirs; ++b)
                if (prev[b] < 0 && gauge_.count(std::minmax(a, b))) {
                    prev[b] = a;
                    queue.push_back(b);
                }
        }
        if (prev[j] < 0) throw std::runtime_error("frame chain gap: gauge graph disconnected");
        std::vector<Index> path{j};
        while (path.back() != i) path.push_back(prev[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
    }

    void select_gauge_free(Index i, Index j) {
        std::vector<Vec<K>> cands = gauge_candidates(i, j);
        if (cands.empty()) throw std::runtime_error("frame chain gap: no gauge candidate");
        size_t best = 0;
        for (size_t t = 1; t < cands.size(); ++t)
            if (vec_key(cands[t]) < vec_key(cands[best])) best = t;
        gauge_[std::minmax(i, j)] = cands[best];
    }

    /// Fix the gauge of (i, j) so its products multiply consistently along an
    /// already-fixed path from i to j, tested on a probe point.
    void select_gauge_consistent(Index i, Index j) {
        std::vector<Vec<K>> cands = gauge_candidates(i, j);
        if (cands.empty()) throw std::runtime_error("frame chain gap: no gauge candidate");
        std::vector<Index> path = fixed_path(i, j);
        int probe = -1;
        for (size_t p = 0; p < geom_.size() && probe < 0; ++p) {
            bool ok = true;
            for (Index v : path) ok &= !is_zero(squares_(p, v));
            if (ok) probe = static_cast<int>(p);
        }
        if (probe < 0) throw std::runtime_error("frame chain gap: no probe point");
        const Vec<K>& z = geom_.points[probe];
        // target: product of the path's mixed products over the intermediate squares
        K target = field_traits<K>::make(L_.field(), 1);
        for (size_t t = 0; t + 1 < path.size(); ++t)
            target = target * gauge_product(z, squares_(probe, path[t]), squares_(probe, path[t + 1]),
                                            path[t], path[t + 1]);
        for (size_t t = 1; t + 1 < path.size(); ++t) target = target / squares_(probe, path[t]);
        K qi = squares_(probe, i), qj = squares_(probe, j);
        for (auto& cand : cands) {
            K p = (g_(z, cand) - qi - qj) / two();
            if (p == target) {
                gauge_[std::minmax(i, j)] = cand;
                return;
            }
        }
        throw std::runtime_error("frame chain gap: no consistent gauge candidate");
    }

    void fix_gauges() {
        const Index m = frame_.m, dirs = 2 * m;
        // free choices on a spanning tree of the cross-pair graph:
        // star at direction 0, plus (1, partner(0)) to reach 0's partner
        for (Index j = 1; j < dirs; ++j)
            if (j != frame_.partner(0)) select_gauge_free(0, j);
        select_gauge_free(1, frame_.partner(0));
        // every remaining cross pair is consistency-tested against the tree
        for (Index i = 0; i < dirs; ++i)
            for (Index j = i + 1; j < dirs; ++j) {
                if (j == frame_.partner(i)) continue;
                if (gauge_.count(std::minmax(i, j))) continue;
                select_gauge_consistent(i, j);
            }
    }

    /// Raw functional coordinates of point p (pair-sign pattern not yet fixed).
    /// Returns an empty vector for points that need the in-line fallback.
    Vec<K> chain_functionals(size_t p) const {
        const Index dirs = frame_.directions();
        Vec<K> func = zero_vec<K>(dirs);
        Index pivot = -1;
        for (Index i = 0; i < dirs; ++i)
            if (!is_zero(squares_(p, i))) { pivot = i; break; }
        if (pivot < 0) throw std::runtime_error("inconsistency: point orthogonal to the frame");
        const Vec<K>& z = geom_.points[p];
        func(pivot) = squares_(p, pivot);
        for (Index i = 0; i < dirs; ++i) {
            if (i == pivot) continue;
            if (i != frame_.partner(pivot)) {
                if (is_zero(squares_(p, i))) continue; // c_i = 0
                func(i) = gauge_product(z, squares_(p, pivot), squares_(p, i), pivot, i);
            } else {
                Index via = -1;
                for (Index a = 0; a < dirs; ++a)
                    if (a != pivot && a != i && !is_zero(squares_(p, a))) { via = a; break; }
                if (via < 0) return Vec<K>(); // point lies on the frame's own line
                K pa = gauge_product(z, squares_(p, pivot), squares_(p, via), pivot, via);
                K aj = gauge_product(z, squares_(p, via), squares_(p, i), via, i);
                func(i) = pa * aj / squares_(p, via);
            }
        }
        return func;
    }

    /// Functional coordinates of a point on the sl2 line of frame pair k, by
    /// solving z = alpha x_k + beta y_k + delta [x_k, y_k]. The sign of the
    /// mixed coordinate is settled later against the rest of the geometry.
    Vec<K> line_functionals(size_t p, Index pivot, const K& delta_sign) const {
        Index k = pivot % frame_.m;
        Vec<K> br = L_.bracket(frame_.x[k], frame_.y[k]);
        Mat<K> cols(L_.dim(), 3);
        cols.col(0) = frame_.x[k];
        cols.col(1) = frame_.y[k];
        cols.col(2) = br;
        auto sol = solve_linear(cols, geom_.points[p]);
        if (!sol) throw std::runtime_error("inconsistency: line point escapes its plane");
        Vec<K> func = zero_vec<K>(frame_.directions());
        func(pivot) = squares_(p, pivot);
        func(frame_.partner(pivot)) = -delta_sign * (*sol)(2);
        return func;
    }

    /// Vector coordinates from functional coordinates through the frame Gram.
    Vec<K> vector_coords(const Vec<K>& func) const {
        const Index m = frame_.m;
        Vec<K> v = zero_vec<K>(2 * m);
        for (Index k = 0; k < m; ++k) {
            v(k) = func(m + k);
            v(m + k) = -func(k);
        }
        return canonical_rep(v);
    }

    bool orthogonality_consistent(const SymplecticSpace<K>& space,
                                  const std::vector<std::pair<size_t, Vec<K>>>& done,
                                  size_t p, const Vec<K>& coord) const {
        for (const auto& [q, cq] : done) {
            if (q == p) continue;
            bool commute = geom_.commutes(static_cast<int>(p), static_cast<int>(q));
            if (commute != is_zero(f_eval(space, coord, cq))) return false;
        }
        return true;
    }

    void coordinatize_all() {
        const Index m = frame_.m;
        SymplecticSpace<K> space = standard_space<K>(L_.field(), m, 0);
        const size_t n = geom_.size();
        std::vector<Vec<K>> raw_func(n);
        std::vector<char> deferred(n, 0);
        for (size_t p = 0; p < n; ++p) {
            raw_func[p] = chain_functionals(p);
            if (raw_func[p].size() == 0) deferred[p] = 1;
        }

        // pair-sign pattern: flip the y_k functional column for k in a subset
        // of {1..m-1}; the correct pattern maps commuting exactly to f = 0
        std::vector<std::pair<size_t, Vec<K>>> chained;
        for (size_t p = 0; p < n; ++p)
            if (!deferred[p]) chained.emplace_back(p, Vec<K>());
        Index flips = m > 1 ? (Index(1) << (m - 1)) : 1;
        bool fixed = false;
        for (Index mask = 0; mask < flips && !fixed; ++mask) {
            for (auto& [p, c] : chained) {
                Vec<K> func = raw_func[p];
                for (Index k = 1; k < m; ++k)
                    if (mask & (Index(1) << (k - 1))) func(m + k) = -func(m + k);
                c = vector_coords(func);
            }
            bool ok = true;
            for (size_t a = 0; a < chained.size() && ok; ++a)
                for (size_t b = a + 1; b < chained.size(); ++b) {
                    bool commute = geom_.commutes(static_cast<int>(chained[a].first),
                                                  static_cast<int>(chained[b].first));
                    if (commute != is_zero(f_eval(space, chained[a].second, chained[b].second))) {
                        ok = false;
                        break;
                    }
                }
            if (ok) fixed = true;
        }
        if (!fixed) throw std::runtime_error("inconsistency: no pair-sign pattern matches the perp relation");

        coords_.assign(n, Vec<K>());
        for (auto& [p, c] : chained) coords_[p] = c;

        // deferred points: settle the mixed-coordinate sign locally
        for (size_t p = 0; p < n; ++p) {
            if (!deferred[p]) continue;
            Index pivot = -1;
            for (Index i = 0; i < frame_.directions(); ++i)
                if (!is_zero(squares_(p, i))) { pivot = i; break; }
            bool placed = false;
            for (long long s : {1LL, -1LL}) {
                Vec<K> func = line_functionals(p, pivot, field_traits<K>::make(L_.field(), s));
                Vec<K> coord = vector_coords(func);
                if (orthogonality_consistent(space, chained, p, coord)) {
                    coords_[p] = coord;
                    placed = true;
                    break;
                }
            }
            if (!placed) throw std::runtime_error("inconsistency: line point has no consistent sign");
        }
    }
};

// ---------------------------------------------------------------------------
// The isomorphism
// ---------------------------------------------------------------------------

struct RecognitionCheck {
    std::string name;
    bool pass;
};

template <class K>
struct RecognitionReport {
    Index m = 0;
    SymplecticSpace<K> space;        // reconstructed (V, f)
    std::vector<Vec<K>> point_coords; // projective image of each geometry point
    Mat<K> psi;                       // linear map L -> S_f (symmetric coords), final scaling
    K gamma;                          // recovered product scalar
    std::vector<RecognitionCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

template <class K>
RecognitionReport<K> build_isomorphism(const StructureLieAlgebra<K>& L, const Geometry<K>& geom,
                                       const HyperbolicFrame<K>& frame) {
    RecognitionReport<K> rep;
    rep.m = frame.m;
    const Index d = L.dim();
    if (d != frame.m * (2 * frame.m + 1))
        throw std::runtime_error("dimension mismatch: dim L != m(2m+1)");
    rep.space = reconstruct_space(L.field(), frame);
    rep.checks.push_back({"dimension_formula", true});

    Coordinatizer<K> ct(L, geom, frame);
    rep.point_coords = ct.coords();
    const auto& g = ct.g();

    // injectivity of the coordinate map
    {
        std::set<std::string> keys;
        for (const auto& c : rep.point_coords) keys.insert(vec_key(c));
        rep.checks.push_back({"coordinate_map_injective", keys.size() == geom.size()});
    }
    // perp translates to f-orthogonality
    {
        bool ok = true;
        for (size_t a = 0; a < geom.size() && ok; ++a)
            for (size_t b = a + 1; b < geom.size(); ++b) {
                bool commute = geom.commutes(static_cast<int>(a), static_cast<int>(b));
                if (commute != is_zero(f_eval(rep.space, rep.point_coords[a], rep.point_coords[b]))) {
                    ok = false;
                    break;
                }
            }
        rep.checks.push_back({"perp_matches_orthogonality", ok});
    }

    // theta solving along a spanning tree of the noncommuting graph
    const size_t n = geom.size();
    auto fsq = [&](size_t a, size_t b) {
        K f = f_eval(rep.space, rep.point_coords[a], rep.point_coords[b]);
        return f * f;
    };
    std::vector<K> theta(n, field_traits<K>::make(L.field(), 0));
    std::vector<char> have(n, 0);
    // root triangle: three pairwise noncommuting points
    size_t r0 = n, r1 = n, r2 = n;
    for (size_t a = 0; a < n && r0 == n; ++a)
        for (size_t b = a + 1; b < n && r0 == n; ++b) {
            if (geom.commutes(a, b)) continue;
            for (size_t c = b + 1; c < n; ++c)
                if (!geom.commutes(a, c) && !geom.commutes(b, c)) {
                    r0 = a;
                    r1 = b;
                    r2 = c;
                    break;
                }
        }
    if (r0 == n) throw std::runtime_error("theta inconsistency: no noncommuting triangle");
    {
        K num = g(geom.points[r0], geom.points[r1]) * g(geom.points[r0], geom.points[r2]) * fsq(r1, r2);
        K den = g(geom.points[r1], geom.points[r2]) * fsq(r0, r1) * fsq(r0, r2);
        auto root = sqrt_in_field(num / den);
        if (!root) throw std::runtime_error("theta inconsistency: root scale is not a square");
        theta[r0] = *root;
        have[r0] = 1;
    }
    std::deque<size_t> queue{r0};
    while (!queue.empty()) {
        size_t a = queue.front();
        queue.pop_front();
        for (size_t b = 0; b < n; ++b) {
            if (have[b] || geom.commutes(a, b)) continue;
            theta[b] = g(geom.points[a], geom.points[b]) / (theta[a] * fsq(a, b));
            have[b] = 1;
            queue.push_back(b);
        }
    }
    bool theta_all = true;
    for (size_t a = 0; a < n; ++a) theta_all &= have[a] == 1;
    if (!theta_all) throw std::runtime_error("theta inconsistency: noncommuting graph disconnected");
    // verification on every noncommuting pair (tree and non-tree edges alike)
    {
        bool ok = true;
        for (size_t a = 0; a < n && ok; ++a)
            for (size_t b = a + 1; b < n; ++b) {
                if (geom.commutes(a, b)) continue;
                if (g(geom.points[a], geom.points[b]) != theta[a] * theta[b] * fsq(a, b)) {
                    ok = false;
                    break;
                }
            }
        if (!ok) throw std::runtime_error("theta inconsistency");
        rep.checks.push_back({"theta_consistent", ok});
    }

    // basis of L from point reps; psi on it via theta-scaled rank-1 images
    std::vector<size_t> basis_pts;
    Mat<K> rows = zeros<K>(0, d);
    for (size_t p = 0; p < n && static_cast<Index>(basis_pts.size()) < d; ++p) {
        Mat<K> cand(rows.rows() + 1, d);
        cand.topRows(rows.rows()) = rows;
        cand.row(rows.rows()) = geom.points[p].transpose();
        if (rank_of(cand) > rows.rows()) {
            rows = echelonize(cand).R;
            basis_pts.push_back(p);
        }
    }
    if (static_cast<Index>(basis_pts.size()) != d)
        throw std::runtime_error("geometry does not span the algebra");

    Mat<K> reps(d, d), images(d, d);
    for (Index c = 0; c < d; ++c) {
        size_t p = basis_pts[c];
        reps.col(c) = geom.points[p];
        images.col(c) = theta[p] * sym_coords(pure(rep.space, rep.point_coords[p]));
    }
    // psi = images * reps^{-1}
    Mat<K> aug(d, 2 * d);
    aug.leftCols(d) = reps;
    aug.rightCols(d) = identity<K>(L.field(), d);
    Echelon<K> einv = echelonize(aug);
    if (einv.rank != d) throw std::runtime_error("basis inversion failed");
    Mat<K> psi = images * einv.R.rightCols(d);

    // gamma from the first noncommuting basis pair, then full verification
    auto model_bracket = [&](const Vec<K>& a, const Vec<K>& b) {
        return sym_coords(bracket_model(from_sym_coords(rep.space, a), from_sym_coords(rep.space, b)));
    };
    std::optional<K> gamma;
    bool proportional_all = true;
    for (Index i = 0; i < d && proportional_all; ++i)
        for (Index j = i + 1; j < d; ++j) {
            Vec<K> lhs = model_bracket(psi.col(i), psi.col(j));
            Vec<K> rhs = psi * L.basis_bracket(i, j);
            if (is_zero_vec(rhs)) {
                if (!is_zero_vec(lhs)) proportional_all = false;
                continue;
            }
            auto c = detail::multiple_of(lhs, rhs);
            if (!c || is_zero(*c)) {
                proportional_all = false;
                break;
            }
            if (!gamma) gamma = *c;
            else if (*gamma != *c) {
                proportional_all = false;
                break;
            }
        }
    if (!proportional_all || !gamma) throw std::runtime_error("product not proportional");
    rep.checks.push_back({"gamma_constant", true});
    rep.gamma = *gamma;

    // rescale by gamma^{-1}: phi = gamma^{-1} psi is an exact isomorphism
    Mat<K> phi = psi * gamma->inv();
    bool exact = rank_of(phi) == d;
    for (Index i = 0; i < d && exact; ++i)
        for (Index j = i + 1; j < d; ++j) {
            Vec<K> lhs = model_bracket(phi.col(i), phi.col(j));
            Vec<K> rhs = phi * L.basis_bracket(i, j);
            if (!vecs_equal(lhs, rhs)) {
                exact = false;
                break;
            }
        }
    rep.checks.push_back({"bracket_preserving_isomorphism", exact});
    rep.psi = phi;
    if (L.field().kind == FieldKind::PrimeSquare)
        rep.checks.push_back({"field_automorphism_assumed_trivial", true});
    return rep;
}

/// Full pipeline: geometry from the extremal generators, frame, isomorphism.
template <class K>
RecognitionReport<K> recognize(const StructureLieAlgebra<K>& L,
                               const GeometryBudget& budget = {}) {
    if (L.extremal_generators().empty())
        throw std::invalid_argument("recognition requires extremal generators");
    std::vector<Vec<K>> seeds;
    for (const auto& g : L.extremal_generators()) {
        ExtremalCheck<K> chk = is_extremal(L, g);
        if (!chk.extremal) throw std::invalid_argument("listed generator is not extremal");
        if (chk.sandwich) continue; // sandwiches are never geometry points
        seeds.push_back(canonical_rep(g));
    }
    if (seeds.empty()) throw std::runtime_error("degenerate input: all generators are sandwiches");
    Geometry<K> geom = build_geometry(L, seeds, budget);
    if (!geom.complete) throw std::runtime_error("geometry budget exhausted");
    GeometryHealth health = geometry_health(geom);
    if (!health.connected) throw std::runtime_error("geometry is disconnected");
    if (!health.nondegenerate) throw std::runtime_error("degenerate geometry");
    if (!geom.spans) throw std::runtime_error("geometry does not span the algebra");
    HyperbolicFrame<K> frame = find_frame(L, geom);
    return build_isomorphism(L, geom, frame);
}

// ---------------------------------------------------------------------------
// Product uniqueness
// ---------------------------------------------------------------------------

template <class K>
struct ProductGamma {
    K gamma;
    bool fully_verified; // proportionality checked on every basis pair
};

/// Two Lie products on the same space sharing extremal structure differ by a
/// global scalar; recover it and verify on every basis pair.
template <class K>
ProductGamma<K> product_gamma(const StructureLieAlgebra<K>& L1, const StructureLieAlgebra<K>& L2,
                              const std::vector<Vec<K>>& shared_extremal) {
    if (L1.dim() != L2.dim() || !(L1.field() == L2.field()))
        throw std::invalid_argument("products live on different spaces");
    for (const auto& e : shared_extremal) {
        if (!is_extremal(L1, e).extremal || !is_extremal(L2, e).extremal)
            throw std::invalid_argument("shared element is not extremal for both products");
    }
    for (size_t a = 0; a < shared_extremal.size(); ++a)
        for (size_t b = a + 1; b < shared_extremal.size(); ++b) {
            bool z1 = is_zero_vec(L1.bracket(shared_extremal[a], shared_extremal[b]));
            bool z2 = is_zero_vec(L2.bracket(shared_extremal[a], shared_extremal[b]));
            if (z1 != z2) throw std::invalid_argument("products disagree on the perp relation");
        }

    const Index d = L1.dim();
    std::optional<K> gamma;
    for (Index i = 0; i < d && !gamma; ++i)
        for (Index j = i + 1; j < d; ++j) {
            Vec<K> w1 = L1.basis_bracket(i, j);
            if (is_zero_vec(w1)) continue;
            Vec<K> w2 = L2.basis_bracket(i, j);
            auto c = detail::multiple_of(w2, w1);
            if (c && !is_zero(*c)) { gamma = *c; break; }
            throw std::runtime_error("not proportional");
        }
    if (!gamma) throw std::runtime_error("no noncommuting pair");
    for (Index i = 0; i < d; ++i)
        for (Index j = i + 1; j < d; ++j) {
            Vec<K> w1 = L1.basis_bracket(i, j);
            Vec<K> w2 = L2.basis_bracket(i, j);
            if (!vecs_equal(w2, Vec<K>(*gamma * w1))) throw std::runtime_error("not proportional");
        }
    return ProductGamma<K>{*gamma, true};
}

} // namespace liesym
