// liesym: build model algebras, run verification suites, recognize abstract
// algebras with extremal generators, and export extremal-point geometries.
//
// Exit codes: 0 all checks passed, 1 a check or recognition failed,
// 2 usage or input parse error.

#include <iostream>

#include <CLI11.hpp>

#include "liesym/serialization.hpp"
#include "liesym/suites.hpp"

using namespace liesym;

namespace {

struct CommonOpts {
    long long p = 0;
    bool rational = false;
    bool extension = false;
    Index pairs = 2;
    Index radical_dim = 0;
    long long seed = 12345;
    size_t budget = 20000;
    std::string out;
};

FieldSpec field_from_opts(const CommonOpts& o) {
    if (o.rational) return FieldSpec::rational();
    if (o.p == 0) throw CLI::ValidationError("--p or --rational is required");
    FieldSpec base = FieldSpec::prime(o.p);
    return o.extension ? quadratic_extension(base) : base;
}

template <class Fn>
auto with_field(const FieldSpec& f, Fn&& fn) {
    switch (f.kind) {
        case FieldKind::Prime: return fn(std::type_identity<Fp>{});
        case FieldKind::PrimeSquare: return fn(std::type_identity<Fp2>{});
        default: return fn(std::type_identity<Rat>{});
    }
}

void emit(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << std::endl;
    } else {
        write_text_file(out, j.dump(2) + "\n");
        std::cerr << "wrote " << out << std::endl;
    }
}

/// The closure algebra generated by all rank-1 elements of a standard space
/// with m pairs and an r-dimensional radical (endomorphism coordinates when
/// the form is degenerate).
template <class K>
StructureLieAlgebra<K> build_degenerate_model(const FieldSpec& f, Index m, Index r) {
    SymplecticSpace<K> sp = standard_space<K>(f, m, r);
    BracketOracle<K> oracle = [sp](const Vec<K>& a, const Vec<K>& b) {
        const Index n = sp.n;
        Mat<K> ma(n, n), mb(n, n);
        Index k = 0;
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) ma(i, j) = a(k++);
        k = 0;
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) mb(i, j) = b(k++);
        Mat<K> comm = ma * mb - mb * ma;
        Vec<K> out(n * n);
        k = 0;
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) out(k++) = comm(i, j);
        return out;
    };
    std::vector<Vec<K>> gens;
    for (Index i = 0; i < sp.n; ++i) {
        Vec<K> g = endo_coords(pure(sp, unit_vec(sp, i)));
        if (!is_zero_vec(g)) gens.push_back(std::move(g));
        for (Index j = i + 1; j < sp.n; ++j) {
            Vec<K> h = endo_coords(pure(sp, Vec<K>(unit_vec(sp, i) + unit_vec(sp, j))));
            if (!is_zero_vec(h)) gens.push_back(std::move(h));
        }
    }
    auto res = from_bracket_closure<K>(f, oracle, gens);
    res.algebra.set_extremal_generators(res.generator_coords);
    return res.algebra;
}

int cmd_build(const std::string& kind, const CommonOpts& o) {
    FieldSpec f = field_from_opts(o);
    return with_field(f, [&](auto tag) {
        using K = typename decltype(tag)::type;
        StructureLieAlgebra<K> L;
        if (kind == "sp") {
            if (o.radical_dim > 0) {
                L = build_degenerate_model<K>(f, o.pairs, o.radical_dim);
            } else {
                auto model = build_sp_model<K>(f, o.pairs);
                L = model.algebra;
            }
        } else if (kind == "sp3") {
            L = build_sp3_model<K>(f).algebra;
        } else {
            L = build_psp3_model<K>(f).algebra;
        }
        json j = algebra_to_json(L);
        j["name"] = kind;
        emit(j, o.out);
        std::cerr << kind << " over " << f.name() << ": dim " << L.dim() << ", "
                  << L.extremal_generators().size() << " generators" << std::endl;
        return 0;
    });
}

json check_to_json(const CheckResult& c) {
    return json{{"check", c.name}, {"pass", c.pass}, {"millis", c.millis}, {"detail", c.detail}};
}

int finish_suite(const CheckList& results, const std::string& out) {
    json arr = json::array();
    bool all = true;
    for (const auto& c : results) {
        arr.push_back(check_to_json(c));
        all &= c.pass;
        std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.millis << " ms) "
                  << c.detail << std::endl;
    }
    emit(json{{"pass", all}, {"checks", arr}}, out);
    return all ? 0 : 1;
}

template <class K>
CheckList model_suite(const std::string& suite, const FieldSpec& f, Index m, Rng& rng) {
    CheckList out;
    bool all = suite == "all";
    double order = f.finite() ? double(f.order()) : 1e9;
    if (all || suite == "tensor") {
        out.push_back(checks::model_dimensions<K>(f, m));
        out.push_back(checks::extremal_form_identity<K>(f, m));
        out.push_back(checks::restriction_lemma<K>(f));
    }
    if (all || suite == "extremal") {
        out.push_back(checks::exp_automorphism<K>(f, m, 100, rng));
        if constexpr (std::is_same_v<K, Fp>) {
            if (std::pow(order, double(m * (2 * m + 1))) <= 250000) {
                long long expected = 1;
                for (Index t = 0; t < 2 * m; ++t) expected *= f.order();
                out.push_back(checks::pure_classification_f3(f, m, expected - 1));
            }
        }
        if constexpr (field_traits<K>::finite) {
            if (std::pow(order, 2.0 * m) <= 5000 * (order - 1))
                out.push_back(checks::condition_A_exhaustive<K>(f, m));
        }
    }
    if (all || suite == "geometry") {
        bool enumerated = false;
        if constexpr (field_traits<K>::finite) {
            if (m == 2 && order <= 5) {
                out.push_back(checks::geometry_counts<K>(f));
                out.push_back(checks::perp_line_uniqueness<K>(f, m));
                enumerated = true;
            }
            if (m == 2 && order <= 3) out.push_back(checks::condition_B_sweep<K>(f, m));
        }
        if (!enumerated) {
            auto model = build_sp_model<K>(f, m);
            GeometryBudget budget;
            if (!f.finite()) budget.max_points = 200; // rational closures never saturate
            out.push_back(checks::input_geometry_checks(model.algebra, budget));
        }
    }
    if (all || suite == "triples") {
        out.push_back(checks::triple_table_models<K>(f));
        if (m >= 2) out.push_back(checks::random_triples<K>(f, m, 10, rng));
    }
    if (all || suite == "uniqueness") {
        std::vector<long long> gammas;
        for (long long c : {2LL, 3LL, 4LL})
            if (!f.finite() || c % f.p != 0) gammas.push_back(c);
        out.push_back(checks::uniqueness_of_product<K>(f, m, gammas));
    }
    if (all || suite == "recognition") {
        if (f.finite()) {
            out.push_back(checks::recognition_roundtrip<K>(f, m, 3, rng, 0));
        } else if (m == 1) {
            // rational closures only saturate on a single line; larger ranks
            // would chase an infinite point set
            out.push_back(checks::recognition_roundtrip<K>(f, 1, 2, rng, 0));
        }
    }
    return out;
}

template <class K>
CheckList file_suite(const std::string& suite, const StructureLieAlgebra<K>& L, Rng& rng,
                     const GeometryBudget& budget) {
    CheckList out;
    bool all = suite == "all";
    out.push_back(checks::input_jacobi(L, rng)); // every verify run validates the table
    if (all || suite == "tensor" || suite == "extremal")
        out.push_back(checks::input_generators_extremal(L));
    if (all || suite == "extremal") out.push_back(checks::input_conditions(L, budget));
    if (all || suite == "geometry") out.push_back(checks::input_geometry_checks(L, budget));
    if (all || suite == "triples") out.push_back(checks::input_triples(L, budget, 6));
    if (all || suite == "uniqueness") out.push_back(checks::input_uniqueness(L));
    if (all || suite == "recognition") out.push_back(checks::input_recognition(L, budget));
    return out;
}

int cmd_verify(const std::string& suite, const std::string& file, const CommonOpts& o) {
    Rng rng(o.seed);
    GeometryBudget budget;
    budget.max_points = o.budget;
    if (!file.empty()) {
        json j = read_json_file(file);
        FieldSpec f = field_from_json(j.at("field"));
        return with_field(f, [&](auto tag) {
            using K = typename decltype(tag)::type;
            auto L = algebra_from_json<K>(j);
            return finish_suite(file_suite(suite, L, rng, budget), o.out);
        });
    }
    FieldSpec f = field_from_opts(o);
    return with_field(f, [&](auto tag) {
        using K = typename decltype(tag)::type;
        return finish_suite(model_suite<K>(suite, f, o.pairs, rng), o.out);
    });
}

int cmd_recognize(const std::string& file, const CommonOpts& o) {
    json j = read_json_file(file);
    FieldSpec f = field_from_json(j.at("field"));
    return with_field(f, [&](auto tag) {
        using K = typename decltype(tag)::type;
        auto L = algebra_from_json<K>(j);
        GeometryBudget budget;
        budget.max_points = o.budget;
        try {
            auto rep = recognize(L, budget);
            emit(recognition_to_json(rep), o.out);
            for (const auto& c : rep.checks)
                std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << std::endl;
            return rep.all_pass() ? 0 : 1;
        } catch (const std::runtime_error& e) {
            emit(json{{"error", e.what()}, {"hypothesis_failure", true}}, o.out);
            std::cerr << "recognition failed: " << e.what() << std::endl;
            return 1;
        }
    });
}

int cmd_geometry(const std::string& file, const CommonOpts& o, const std::string& dot) {
    json j = read_json_file(file);
    FieldSpec f = field_from_json(j.at("field"));
    return with_field(f, [&](auto tag) {
        using K = typename decltype(tag)::type;
        auto L = algebra_from_json<K>(j);
        GeometryBudget budget;
        budget.max_points = o.budget;
        Geometry<K> geom = checks::input_geometry(L, budget);
        auto lines = enumerate_lines(L, geom);
        std::cerr << geom.size() << " points, " << lines.hyperbolic.size()
                  << " hyperbolic lines, " << lines.polar.size() << " polar lines"
                  << (geom.complete ? "" : " (budget exhausted; partial)") << std::endl;
        emit(geometry_to_json(geom, lines), o.out);
        if (!dot.empty()) {
            write_text_file(dot, geometry_to_dot(geom));
            std::cerr << "wrote " << dot << std::endl;
        }
        return geom.complete ? 0 : 1;
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for symplectic Lie algebras generated by extremal elements"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string file, suite = "all", kind, dot;

    auto add_common = [&](CLI::App* cmd, bool field_flags) {
        if (field_flags) {
            cmd->add_option("--p", o.p, "odd prime field size");
            cmd->add_flag("--rational", o.rational, "work over the rationals");
            cmd->add_flag("--extension", o.extension, "use the quadratic extension of F_p");
            cmd->add_option("--pairs", o.pairs, "number of hyperbolic pairs")->default_val(2);
            cmd->add_option("--radical", o.radical_dim, "radical dimension of the space")->default_val(0);
        }
        cmd->add_option("--seed", o.seed, "seed for randomized sampling")->default_val(12345);
        cmd->add_option("--budget", o.budget, "geometry point budget")->default_val(20000);
        cmd->add_option("--out", o.out, "output file (default: stdout)");
    };

    CLI::App* build = app.add_subcommand("build", "emit a model algebra as JSON");
    build->add_option("kind", kind, "sp | sp3 | psp3")
        ->required()
        ->check(CLI::IsMember({"sp", "sp3", "psp3"}));
    add_common(build, true);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("file", file, "algebra JSON file (otherwise build from flags)");
    verify->add_option("--suite", suite, "tensor|extremal|geometry|triples|uniqueness|recognition|all")
        ->default_val("all")
        ->check(CLI::IsMember({"tensor", "extremal", "geometry", "triples", "uniqueness",
                               "recognition", "all"}));
    add_common(verify, true);

    CLI::App* recognizec = app.add_subcommand("recognize", "reconstruct (V,f) and the isomorphism");
    recognizec->add_option("file", file, "algebra JSON file with extremal_generators")->required();
    add_common(recognizec, false);

    CLI::App* geometry = app.add_subcommand("geometry", "export the extremal-point geometry");
    geometry->add_option("file", file, "algebra JSON file")->required();
    geometry->add_option("--dot", dot, "also write a DOT graph here");
    add_common(geometry, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*build) return cmd_build(kind, o);
        if (*verify) return cmd_verify(suite, file, o);
        if (*recognizec) return cmd_recognize(file, o);
        if (*geometry) return cmd_geometry(file, o, dot);
    } catch (const json::exception& e) {
        std::cerr << "input parse error: " << e.what() << std::endl;
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 2;
}
