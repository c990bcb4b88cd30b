#pragma once

// Named verification checks over model algebras and over arbitrary input
// algebras. The CLI's verify command and the acceptance binary both run these.

#include <chrono>
#include <cmath>
#include <functional>

#include "liesym/recognition.hpp"

namespace liesym {

struct CheckResult {
    std::string name;
    bool pass = false;
    long long millis = 0;
    std::string detail;
};

using CheckList = std::vector<CheckResult>;

inline CheckResult run_check(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    try {
        auto [pass, detail] = body();
        r.pass = pass;
        r.detail = detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

namespace checks {

// ---------------------------------------------------------------------------
// Model-backed checks
// ---------------------------------------------------------------------------

/// Model dimension n(n+1)/2 and agreement with {M : M^T J + J M = 0}.
template <class K>
CheckResult model_dimensions(const FieldSpec& f, Index m) {
    return run_check("model_dimensions[" + f.name() + ",m=" + std::to_string(m) + "]", [&] {
        Index n = 2 * m;
        Index expected = n * (n + 1) / 2;
        auto model = build_sp_model<K>(f, m);
        auto ident = sp_identification(model.space);
        bool pass = model.algebra.dim() == expected && ident.dim_sf == expected &&
                    ident.dim_sp == expected && ident.equal;
        return std::pair{pass, "dim=" + std::to_string(model.algebra.dim()) +
                                   " sp=" + std::to_string(ident.dim_sp)};
    });
}

/// g(pure v, pure w) = f(v,w)^2 by the closed form and by the definitional
/// extraction: every unordered pair of projective points over a finite field,
/// a deterministic integer-vector sample over the rationals.
template <class K>
CheckResult extremal_form_identity(const FieldSpec& f, Index m) {
    return run_check("extremal_form_identity[" + f.name() + ",m=" + std::to_string(m) + "]", [&] {
        SymplecticSpace<K> sp = standard_space<K>(f, m, 0);
        std::vector<Vec<K>> pts;
        if constexpr (field_traits<K>::finite) {
            pts = projective_points<K>(f, sp.n);
        } else {
            // small integer grid, capped
            std::vector<long long> vals = {-1, 0, 1, 2};
            std::vector<size_t> idx(sp.n, 0);
            while (pts.size() < 60) {
                Vec<K> v(sp.n);
                for (Index i = 0; i < sp.n; ++i) v(i) = field_traits<K>::make(f, vals[idx[i]]);
                if (!is_zero_vec(v)) pts.push_back(std::move(v));
                Index t = 0;
                for (; t < sp.n; ++t) {
                    if (++idx[t] < vals.size()) break;
                    idx[t] = 0;
                }
                if (t == sp.n) break;
            }
        }
        size_t pairs = 0;
        for (size_t a = 0; a < pts.size(); ++a)
            for (size_t b = a; b < pts.size(); ++b) {
                SfElement<K> x = pure(sp, pts[a]), y = pure(sp, pts[b]);
                K fv = f_eval(sp, pts[a], pts[b]);
                K closed = model_extremal_form(x, y);
                auto definitional = definitional_extremal_form(x, y);
                if (!definitional || closed != fv * fv || *definitional != closed)
                    return std::pair{false, "mismatch at pair " + std::to_string(a) + "," + std::to_string(b)};
                ++pairs;
            }
        return std::pair{true, std::to_string(pts.size()) + " points, " + std::to_string(pairs) + " pairs"};
    });
}

/// Brute force over every nonzero element: the extremal ones are exactly the
/// scalar multiples of rank-1 elements.
inline CheckResult pure_classification_f3(const FieldSpec& f, Index m, long long expected_extremal) {
    return run_check("pure_classification[" + f.name() + ",m=" + std::to_string(m) + "]", [&] {
        auto model = build_sp_model<Fp>(f, m);
        const auto& L = model.algebra;
        const Index d = L.dim();
        long long q = f.order();
        std::vector<Index> digits(d, 0);
        Vec<Fp> x = zero_vec<Fp>(d);
        long long found = 0, scanned = 0;
        std::vector<Fp> elems = field_traits<Fp>::elements(f);
        for (;;) {
            Index t = 0;
            for (; t < d; ++t) {
                if (++digits[t] < q) break;
                digits[t] = 0;
            }
            if (t == d) break;
            for (Index i = 0; i < d; ++i) x(i) = elems[digits[i]];
            ++scanned;
            if (is_extremal(L, x).extremal) {
                Vec<Fp> amb = model.embed.transpose() * x;
                if (rank_of(from_sym_coords(model.space, amb).S) != 1)
                    return std::pair{false, std::string("extremal element of rank > 1 found")};
                ++found;
            }
        }
        bool pass = found == expected_extremal;
        return std::pair{pass, std::to_string(scanned) + " elements scanned, " +
                                   std::to_string(found) + " extremal"};
    });
}

/// The six structure identities on the benchmark triple for the 6-dim algebra
/// (ambient model) and its 5-dim quotient (degenerate model).
template <class K>
CheckResult triple_table_models(const FieldSpec& f) {
    return run_check("triple_table[" + f.name() + "]", [&] {
        auto s = build_sp3_model<K>(f);
        auto coords6 = [&](const Vec<K>& v) {
            auto c = coordinates_in_rows(s.embed, sym_coords(pure(s.space, v)));
            if (!c) throw std::logic_error("triple outside algebra");
            return *c;
        };
        Vec<K> e1 = unit_vec(s.space, 0), e2 = unit_vec(s.space, 1), e3 = unit_vec(s.space, 2);
        auto t6 = classify_triple(s.algebra, coords6(e1), coords6(e3), coords6(Vec<K>(e1 - e2)));
        bool ok6 = t6.kind == TripleKind::Sp3 && t6.dim == 6 && t6.center_dim == 1 && t6.table_verified;

        auto s0 = build_psp3_model<K>(f);
        auto coords5 = [&](const Vec<K>& v) {
            auto c = coordinates_in_rows(s0.embed, endo_coords(pure(s0.space, v)));
            if (!c) throw std::logic_error("triple outside algebra");
            return *c;
        };
        Vec<K> w1 = unit_vec(s0.space, 0), w2 = unit_vec(s0.space, 1), w3 = unit_vec(s0.space, 2);
        auto t5 = classify_triple(s0.algebra, coords5(w1), coords5(w3), coords5(Vec<K>(w1 - w2)));
        bool ok5 = t5.kind == TripleKind::PSp3 && t5.dim == 5 && t5.center_dim == 0 && t5.table_verified;
        return std::pair{ok6 && ok5, std::string("dims 6/5, centers 1/0, identities exact")};
    });
}

/// Random symplectic triples in a larger model all satisfy the identities.
template <class K>
CheckResult random_triples(const FieldSpec& f, Index m, int count, Rng& rng) {
    return run_check("random_triples[" + f.name() + ",m=" + std::to_string(m) + "]", [&] {
        auto model = build_sp_model<K>(f, m);
        const auto& sp = model.space;
        auto coords = [&](const Vec<K>& v) {
            auto c = coordinates_in_rows(model.embed, sym_coords(pure(sp, v)));
            if (!c) throw std::logic_error("outside model");
            return *c;
        };
        int done = 0;
        while (done < count) {
            Vec<K> a = random_nonzero_vec<K>(f, sp.n, rng);
            Vec<K> b = random_nonzero_vec<K>(f, sp.n, rng);
            Vec<K> c = random_nonzero_vec<K>(f, sp.n, rng);
            if (is_zero(f_eval(sp, a, b)) || is_zero(f_eval(sp, b, c)) || !is_zero(f_eval(sp, a, c)))
                continue;
            Mat<K> rows(3, sp.n);
            rows.row(0) = a.transpose();
            rows.row(1) = b.transpose();
            rows.row(2) = c.transpose();
            if (rank_of(rows) < 3) continue;
            auto tc = classify_triple(model.algebra, coords(a), coords(b), coords(c));
            if (!tc.table_verified || tc.kind != TripleKind::Sp3 || tc.center_dim != 1)
                return std::pair{false, "identity failure on triple " + std::to_string(done)};
            ++done;
        }
        return std::pair{true, std::to_string(count) + " triples verified"};
    });
}

/// Point, line, and plane counts of the geometry on the 4-dim model.
template <class K>
CheckResult geometry_counts(const FieldSpec& f) {
    return run_check("geometry_counts[" + f.name() + "]", [&] {
        long long q = f.order();
        auto model = build_sp_model<K>(f, 2);
        const auto& L = model.algebra;
        auto geom = enumerate_geometry(L);
        size_t expected_points = static_cast<size_t>((q * q * q * q - 1) / (q - 1));
        if (geom.size() != expected_points)
            return std::pair{false, "point count " + std::to_string(geom.size())};
        auto lines = enumerate_lines(L, geom);
        for (const auto& l : lines.hyperbolic) {
            if (l.points.size() != static_cast<size_t>(q + 1)) return std::pair{false, std::string("line size")};
            if (!polar_span_check(L, geom, l).pass) return std::pair{false, std::string("hyperbolic span/oval check")};
        }
        for (const auto& l : lines.polar) {
            if (l.points.size() != static_cast<size_t>(q + 1)) return std::pair{false, std::string("polar size")};
            if (!polar_span_check(L, geom, l).pass) return std::pair{false, std::string("polar span/oval check")};
        }

        // enumerate all symplectic planes through deduplicated triple spans
        std::set<std::string> plane_keys;
        size_t planes_checked = 0;
        for (size_t xi = 0; xi < geom.size(); ++xi)
            for (size_t zi = 0; zi < geom.size(); ++zi) {
                if (geom.commutes(xi, zi)) continue;
                for (size_t yi = 0; yi < geom.size(); ++yi) {
                    if (yi == xi || yi == zi) continue;
                    if (!geom.commutes(xi, yi) || geom.commutes(zi, yi)) continue;
                    Mat<K> rows(3, L.dim());
                    rows.row(0) = geom.points[xi].transpose();
                    rows.row(1) = geom.points[zi].transpose();
                    rows.row(2) = L.bracket(geom.points[xi], geom.points[zi]).transpose();
                    if (Subspace<K>::from_rows(rows).contains(geom.points[yi])) continue;
                    Mat<K> span6(6, L.dim());
                    span6.topRows(3) = rows;
                    span6.row(3) = geom.points[yi].transpose();
                    span6.row(4) = L.bracket(geom.points[zi], geom.points[yi]).transpose();
                    span6.row(5) =
                        L.bracket(geom.points[xi], L.bracket(geom.points[zi], geom.points[yi])).transpose();
                    std::string key = detail::span_key(Mat<K>(span6));
                    if (!plane_keys.insert(key).second) continue;
                    auto plane =
                        symplectic_plane(L, geom.points[xi], geom.points[zi], geom.points[yi]);
                    if (!plane.report.pass)
                        return std::pair{false, std::string("plane axioms failed")};
                    ++planes_checked;
                }
            }
        auto health = geometry_health(geom);
        bool pass = health.connected && health.nondegenerate;
        return std::pair{pass, std::to_string(geom.size()) + " points, " +
                                   std::to_string(lines.hyperbolic.size()) + "+" +
                                   std::to_string(lines.polar.size()) + " lines, " +
                                   std::to_string(planes_checked) + " planes"};
    });
}

/// exp(x, l) is an automorphism for random pure x and random l.
template <class K>
CheckResult exp_automorphism(const FieldSpec& f, Index m, int count, Rng& rng) {
    return run_check("exp_automorphism[" + f.name() + ",m=" + std::to_string(m) + "]", [&] {
        auto model = build_sp_model<K>(f, m);
        for (int rep = 0; rep < count; ++rep) {
            Vec<K> v = random_nonzero_vec<K>(f, model.space.n, rng);
            auto c = coordinates_in_rows(model.embed, sym_coords(pure(model.space, v)));
            if (!c) return std::pair{false, std::string("coordinate failure")};
            K lam = random_scalar<K>(f, rng);
            if (!exp_check(model.algebra, *c, lam))
                return std::pair{false, "bracket preservation failed at sample " + std::to_string(rep)};
        }
        return std::pair{true, std::to_string(count) + " (x,l) samples"};
    });
}

/// Condition (A) over every pair of geometry points.
template <class K>
CheckResult condition_A_exhaustive(const FieldSpec& f, Index m) {
    return run_check("condition_A[" + f.name() + ",m=" + std::to_string(m) + "]", [&] {
        auto model = build_sp_model<K>(f, m);
        auto geom = enumerate_geometry(model.algebra);
        auto rep = check_condition_A(model.algebra, geom.points);
        return std::pair{rep.pass && rep.exhaustive,
                         std::to_string(geom.size()) + " points, " +
                             std::to_string(rep.witnesses.size()) + " witnesses"};
    });
}

/// Condition (B) over every ordered triple of geometry points with [x,y] != 0:
/// a base-field witness always exists on the model.
template <class K>
CheckResult condition_B_sweep(const FieldSpec& f, Index m) {
    return run_check("condition_B[" + f.name() + ",m=" + std::to_string(m) + "]", [&] {
        auto model = build_sp_model<K>(f, m);
        const auto& L = model.algebra;
        auto geom = enumerate_geometry(L);
        Mat<K> g_table = extremal_form(L, L.extremal_generators()).gram_basis;
        size_t triples = 0;
        for (size_t a = 0; a < geom.size(); ++a)
            for (size_t b = 0; b < geom.size(); ++b) {
                if (a == b || geom.commutes(a, b)) continue;
                for (size_t c = 0; c < geom.size(); ++c) {
                    auto res =
                        condition_B_witness(L, g_table, geom.points[a], geom.points[b], geom.points[c]);
                    if (res.status != ConditionBStatus::WitnessInBaseField)
                        return std::pair{false, std::string("no base-field witness for a triple")};
                    ++triples;
                }
            }
        return std::pair{true, std::to_string(triples) + " triples"};
    });
}

/// Every hyperbolic line meets every perp in exactly one point or lies in it.
template <class K>
CheckResult perp_line_uniqueness(const FieldSpec& f, Index m) {
    return run_check("perp_line_uniqueness[" + f.name() + ",m=" + std::to_string(m) + "]", [&] {
        auto model = build_sp_model<K>(f, m);
        auto geom = enumerate_geometry(model.algebra);
        auto lines = enumerate_lines(model.algebra, geom);
        size_t checked = 0;
        for (const auto& l : lines.hyperbolic)
            for (size_t x = 0; x < geom.size(); ++x) {
                line_meets_perp(geom, static_cast<int>(x), l); // throws on count violations
                ++checked;
            }
        return std::pair{true, std::to_string(checked) + " (point, line) pairs"};
    });
}

/// Product-uniqueness scalar recovery for a list of gammas, plus a perturbed
/// negative control that must be rejected.
template <class K>
CheckResult uniqueness_of_product(const FieldSpec& f, Index m, const std::vector<long long>& gammas) {
    return run_check("uniqueness_of_product[" + f.name() + ",m=" + std::to_string(m) + "]", [&] {
        auto model = build_sp_model<K>(f, m);
        const auto& L1 = model.algebra;
        for (long long c : gammas) {
            K kc = field_traits<K>::make(f, c);
            std::vector<TableEntry<K>> entries = L1.table();
            for (auto& e : entries)
                for (auto& [k, v] : e.coeffs) v = v * kc;
            auto L2 = StructureLieAlgebra<K>::from_table(f, L1.dim(), entries);
            auto pg = product_gamma(L1, L2, L1.extremal_generators());
            if (pg.gamma != kc || !pg.fully_verified)
                return std::pair{false, "gamma " + std::to_string(c) + " not recovered"};
        }
        // negative control: perturb one structure constant
        std::vector<TableEntry<K>> entries = L1.table();
        entries.front().coeffs.front().second =
            entries.front().coeffs.front().second + field_traits<K>::make(f, 1);
        auto L2 = StructureLieAlgebra<K>::from_table(f, L1.dim(), entries);
        try {
            product_gamma(L1, L2, {});
            return std::pair{false, std::string("perturbed table accepted")};
        } catch (const std::runtime_error& e) {
            if (std::string(e.what()).find("not proportional") == std::string::npos)
                return std::pair{false, std::string("unexpected rejection: ") + e.what()};
        }
        return std::pair{true, std::to_string(gammas.size()) + " gammas recovered, negative control rejected"};
    });
}

/// Recognition round-trip on random scrambles with random global scalars.
template <class K>
CheckResult recognition_roundtrip(const FieldSpec& f, Index m, int count, Rng& rng,
                                  long long per_case_limit_ms) {
    return run_check("recognition_roundtrip[" + f.name() + ",m=" + std::to_string(m) + "]", [&] {
        auto model = build_sp_model<K>(f, m);
        long long worst = 0;
        for (int i = 0; i < count; ++i) {
            auto t0 = std::chrono::steady_clock::now();
            Scramble<K> sc = scrambled_copy(model.algebra, rng);
            auto rep = recognize(sc.algebra);
            long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
            worst = std::max(worst, ms);
            if (rep.m != m || !rep.all_pass() || !nondegenerate(rep.space))
                return std::pair{false, "scramble " + std::to_string(i) + " failed"};
            if (sc.algebra.dim() != m * (2 * m + 1))
                return std::pair{false, std::string("dimension drift")};
            if (per_case_limit_ms > 0 && ms > per_case_limit_ms)
                return std::pair{false, "case took " + std::to_string(ms) + " ms"};
        }
        return std::pair{true, std::to_string(count) + " scrambles, worst case " +
                                   std::to_string(worst) + " ms"};
    });
}

/// Inside the 21-dim model, the rank-1 elements of a nondegenerate 4-subspace
/// generate a 10-dim subalgebra equal to their linear span.
template <class K>
CheckResult restriction_lemma(const FieldSpec& f) {
    return run_check("restriction_lemma[" + f.name() + "]", [&] {
        auto model = build_sp_model<K>(f, 3);
        const auto& sp = model.space;
        std::vector<Vec<K>> v0 = {unit_vec(sp, 0), unit_vec(sp, 1), unit_vec(sp, 3), unit_vec(sp, 4)};
        std::vector<Vec<K>> gens;
        for (size_t i = 0; i < v0.size(); ++i) {
            gens.push_back(sym_coords(pure(sp, v0[i])));
            for (size_t j = i + 1; j < v0.size(); ++j)
                gens.push_back(sym_coords(pure(sp, Vec<K>(v0[i] + v0[j]))));
        }
        BracketOracle<K> oracle = [sp](const Vec<K>& a, const Vec<K>& b) {
            return sym_coords(bracket_model(from_sym_coords(sp, a), from_sym_coords(sp, b)));
        };
        auto res = from_bracket_closure<K>(f, oracle, gens);
        Index span_dim = Subspace<K>::from_vectors(gens, 21).dim();
        bool pass = res.algebra.dim() == 10 && span_dim == 10;
        return std::pair{pass, "closure dim " + std::to_string(res.algebra.dim()) +
                                   ", span dim " + std::to_string(span_dim)};
    });
}

/// rad f = 0 => rad g = 0 => geometry nondegenerate on the full models; the
/// 6-dim subalgebra shows rad g != 0 with its sandwich detected.
template <class K>
CheckResult nondegeneracy_transfer(const FieldSpec& f) {
    return run_check("nondegeneracy_transfer[" + f.name() + "]", [&] {
        for (Index m : {Index(2), Index(3)}) {
            auto model = build_sp_model<K>(f, m);
            if (radical(model.space).dim() != 0) return std::pair{false, std::string("rad f != 0")};
            auto table = extremal_form(model.algebra, model.algebra.extremal_generators());
            if (table.radical.dim() != 0) return std::pair{false, std::string("rad g != 0 on the model")};
            std::vector<Vec<K>> seeds;
            for (const auto& g : model.algebra.extremal_generators()) seeds.push_back(canonical_rep(g));
            auto geom = m == 2 ? enumerate_geometry(model.algebra)
                               : build_geometry(model.algebra, seeds);
            auto health = geometry_health(geom);
            if (!health.connected || !health.nondegenerate)
                return std::pair{false, "geometry health failed at m=" + std::to_string(m)};
        }
        auto s = build_sp3_model<K>(f);
        auto table = extremal_form(s.algebra, s.algebra.extremal_generators());
        if (table.radical.dim() == 0)
            return std::pair{false, std::string("degenerate model has trivial radical")};
        auto c = coordinates_in_rows(s.embed, sym_coords(pure(s.space, unit_vec(s.space, 1))));
        if (!c) return std::pair{false, std::string("central element missing")};
        ExtremalCheck<K> chk = is_extremal(s.algebra, *c);
        bool pass = chk.extremal && chk.sandwich;
        return std::pair{pass, "model radicals trivial, degenerate radical dim " +
                                   std::to_string(table.radical.dim()) + ", sandwich detected"};
    });
}

// ---------------------------------------------------------------------------
// Checks on arbitrary input algebras
// ---------------------------------------------------------------------------

template <class K>
CheckResult input_jacobi(const StructureLieAlgebra<K>& L, Rng& rng) {
    return run_check("jacobi", [&] {
        Rng local = rng;
        bool ok = jacobi_holds(L, 21, &local);
        return std::pair{ok, "dim " + std::to_string(L.dim())};
    });
}

template <class K>
CheckResult input_generators_extremal(const StructureLieAlgebra<K>& L) {
    return run_check("generators_extremal", [&] {
        if (L.extremal_generators().empty())
            return std::pair{false, std::string("no extremal generators listed")};
        size_t sandwiches = 0;
        for (const auto& g : L.extremal_generators()) {
            ExtremalCheck<K> chk = is_extremal(L, g);
            if (!chk.extremal) return std::pair{false, std::string("listed generator not extremal")};
            if (chk.sandwich) ++sandwiches;
        }
        return std::pair{true, std::to_string(L.extremal_generators().size()) + " generators, " +
                                   std::to_string(sandwiches) + " sandwiches"};
    });
}

template <class K>
Geometry<K> input_geometry(const StructureLieAlgebra<K>& L, const GeometryBudget& budget) {
    std::vector<Vec<K>> seeds;
    for (const auto& g : L.extremal_generators()) {
        ExtremalCheck<K> chk = is_extremal(L, g);
        if (chk.extremal && !chk.sandwich) seeds.push_back(canonical_rep(g));
    }
    if (seeds.empty()) throw std::runtime_error("no pure extremal generators");
    return build_geometry(L, seeds, budget);
}

template <class K>
CheckResult input_geometry_checks(const StructureLieAlgebra<K>& L, const GeometryBudget& budget) {
    return run_check("geometry_lines_and_health", [&] {
        Geometry<K> geom = input_geometry(L, budget);
        const bool sampled = !field_traits<K>::finite || !geom.complete;
        auto lines = enumerate_lines(L, geom, sampled ? 300 : SIZE_MAX);
        for (const auto& l : lines.hyperbolic) {
            if (sampled && l.points.size() < 3) continue; // too few samples to test
            auto rep = polar_span_check(L, geom, l);
            bool ok = sampled ? (rep.span_ok && rep.points_exact && rep.oval_ok) : rep.pass;
            if (!ok) return std::pair{false, std::string("hyperbolic line span/oval failure")};
        }
        if (!sampled) {
            // polar lines of a sampled geometry are not double-perp enumerable
            for (const auto& l : lines.polar)
                if (!polar_span_check(L, geom, l).pass)
                    return std::pair{false, std::string("polar line span/oval failure")};
        }
        auto health = geometry_health(geom);
        std::string detail = std::to_string(geom.size()) + " points, " +
                             std::to_string(lines.hyperbolic.size()) + " hyperbolic + " +
                             std::to_string(lines.polar.size()) + " polar lines, " +
                             (health.connected ? "connected" : "disconnected") + ", " +
                             (health.nondegenerate ? "nondegenerate" : "degenerate") +
                             (geom.complete ? "" : ", budget exhausted");
        return std::pair{health.connected, detail};
    });
}

template <class K>
CheckResult input_conditions(const StructureLieAlgebra<K>& L, const GeometryBudget& budget,
                             size_t pair_cap = 200000) {
    return run_check("conditions_A_and_B", [&] {
        Geometry<K> geom = input_geometry(L, budget);
        size_t n = geom.size();
        if (n * n > pair_cap) n = static_cast<size_t>(std::max<double>(2, std::sqrt(double(pair_cap))));
        std::vector<Vec<K>> pts(geom.points.begin(), geom.points.begin() + n);
        auto repA = check_condition_A(L, pts);
        if (!repA.pass) return std::pair{false, std::string("condition (A) violated")};
        size_t triples = 0;
        for (size_t a = 0; a < n && triples < 2000; ++a)
            for (size_t b = 0; b < n && triples < 2000; ++b) {
                if (a == b || geom.commutes(a, b)) continue;
                for (size_t c = 0; c < n && triples < 2000; ++c) {
                    auto res = condition_B_witness(L, geom.points[a], geom.points[b], geom.points[c]);
                    if (res.status != ConditionBStatus::WitnessInBaseField &&
                        res.status != ConditionBStatus::ExtensionRoots)
                        return std::pair{false, std::string("condition (B) violated")};
                    ++triples;
                }
            }
        return std::pair{true, std::to_string(pts.size()) + " points, " + std::to_string(triples) +
                                   " triples" + (repA.exhaustive ? "" : " (sampled)")};
    });
}

template <class K>
CheckResult input_triples(const StructureLieAlgebra<K>& L, const GeometryBudget& budget, int count) {
    return run_check("triple_identities", [&] {
        Geometry<K> geom = input_geometry(L, budget);
        int done = 0;
        for (size_t a = 0; a < geom.size() && done < count; ++a)
            for (size_t b = 0; b < geom.size() && done < count; ++b) {
                if (a == b || geom.commutes(a, b)) continue;
                for (size_t c = 0; c < geom.size() && done < count; ++c) {
                    if (c == a || c == b) continue;
                    if (!geom.commutes(a, c) || geom.commutes(b, c)) continue;
                    Mat<K> rows(3, L.dim());
                    rows.row(0) = geom.points[a].transpose();
                    rows.row(1) = geom.points[b].transpose();
                    rows.row(2) = L.bracket(geom.points[a], geom.points[b]).transpose();
                    if (Subspace<K>::from_rows(rows).contains(geom.points[c])) continue;
                    auto tc = classify_triple(L, geom.points[a], geom.points[b], geom.points[c]);
                    if (!tc.table_verified) return std::pair{false, std::string("identity failure")};
                    ++done;
                }
            }
        if (done == 0) return std::pair{false, std::string("no symplectic triple found")};
        return std::pair{true, std::to_string(done) + " triples verified"};
    });
}

template <class K>
CheckResult input_uniqueness(const StructureLieAlgebra<K>& L) {
    return run_check("uniqueness_of_product", [&] {
        for (long long c : {2LL, 3LL}) {
            K kc = field_traits<K>::make(L.field(), c);
            if (is_zero(kc) || kc == field_traits<K>::make(L.field(), 1)) continue;
            std::vector<TableEntry<K>> entries = L.table();
            for (auto& e : entries)
                for (auto& [k, v] : e.coeffs) v = v * kc;
            auto L2 = StructureLieAlgebra<K>::from_table(L.field(), L.dim(), entries);
            auto pg = product_gamma(L, L2, L.extremal_generators());
            if (pg.gamma != kc) return std::pair{false, std::string("gamma not recovered")};
        }
        auto entries = L.table();
        if (!entries.empty()) {
            entries.front().coeffs.front().second =
                entries.front().coeffs.front().second + field_traits<K>::make(L.field(), 1);
            auto L2 = StructureLieAlgebra<K>::from_table(L.field(), L.dim(), entries);
            try {
                product_gamma(L, L2, {});
                return std::pair{false, std::string("perturbed table accepted")};
            } catch (const std::exception&) {
            }
        }
        return std::pair{true, std::string("scaled products recovered, perturbation rejected")};
    });
}

template <class K>
CheckResult input_recognition(const StructureLieAlgebra<K>& L, const GeometryBudget& budget) {
    return run_check("recognition", [&] {
        auto rep = recognize(L, budget);
        std::string detail = "m=" + std::to_string(rep.m);
        for (const auto& c : rep.checks)
            if (!c.pass) return std::pair{false, detail + ", check failed: " + c.name};
        return std::pair{true, detail + ", isomorphism verified"};
    });
}

} // namespace checks

} // namespace liesym
