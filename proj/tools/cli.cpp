#include "cli.hpp"

#include "chromcoh/algebra_io.hpp"
#include "chromcoh/chromatic.hpp"
#include "chromcoh/complex.hpp"
#include "chromcoh/graph.hpp"
#include "chromcoh/homology.hpp"
#include "chromcoh/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <ostream>

namespace chromcoh::cli {

namespace {

using nlohmann::json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json int_json(const BigInt& v) {
    if (fits_int64(v)) return v.get_si();
    return v.get_str();
}

json poly_json(const IntPolynomial& p) {
    json c = json::array();
    for (const auto& x : p.coeffs()) c.push_back(int_json(x));
    return c;
}

json group_json(const GroupInvariant& g) {
    json parts = json::array();
    for (const auto& [j, p] : g.parts()) {
        json torsion = json::array();
        for (const auto& t : p.torsion) torsion.push_back(int_json(t));
        parts.push_back({{"j", j}, {"rank", p.free_rank}, {"torsion", std::move(torsion)}});
    }
    return parts;
}

json cohomology_json(const Cohomology& h) {
    json out = json::array();
    for (const auto& g : h) out.push_back(group_json(g));
    return out;
}

json checks_json(const std::vector<CheckReport>& reports) {
    json out = json::array();
    for (const auto& r : reports)
        out.push_back({{"check", r.check}, {"instance", r.instance}, {"passed", r.passed}, {"witness", r.witness}});
    return out;
}

std::string graph_label(const std::string& path) {
    return path.empty() ? "graph" : std::filesystem::path(path).stem().string();
}

Graph load_checked_graph(const std::string& path, const RunConfig& cfg) {
    if (path.empty()) throw InputError("--graph is required");
    Graph g = load_graph(path);
    if (g.num_edges() > cfg.max_edges)
        throw InputError("graph has " + std::to_string(g.num_edges()) + " edges; --max-edges is " + std::to_string(cfg.max_edges));
    return g;
}

struct LoadedAlgebra {
    GradedAlgebra algebra;
    std::optional<Endomorphism> twist;
};

LoadedAlgebra load_inputs_algebra(const RunConfig& cfg) {
    AlgebraSpec spec = load_algebra(cfg.algebra);
    std::optional<Endomorphism> twist = spec.twist;
    if (!cfg.twist.empty()) twist = load_twist(cfg.twist, spec.algebra);
    return {std::move(spec.algebra), std::move(twist)};
}

void enforce_dim_cap(const Graph& g, const GradedAlgebra& a, const RunConfig& cfg) {
    std::size_t largest = 0;
    for (const auto& row : chain_block_dims(g, a))
        for (auto d : row) largest = std::max(largest, d);
    if (largest > cfg.max_dim)
        throw InputError("largest chain block has dimension " + std::to_string(largest) + "; --max-dim is " +
                         std::to_string(cfg.max_dim));
}

void require_valid(const GradedAlgebra& a, const std::optional<Endomorphism>& twist) {
    CheckReport r = check_algebra(a, twist);
    if (!r.passed) throw InputError("invalid algebra " + r.instance + ": " + r.witness);
}

json input_json(const RunConfig& cfg, const Graph& g, const GradedAlgebra& a, const std::optional<Endomorphism>& twist) {
    return {{"graph", cfg.graph_path},
            {"vertices", g.num_vertices()},
            {"edges", g.num_edges()},
            {"algebra", a.name()},
            {"twist", twist ? (cfg.twist.empty() ? std::string("from-algebra") : cfg.twist) : std::string()}};
}

int cmd_cohomology(const RunConfig& cfg, std::ostream& out) {
    const Graph g = load_checked_graph(cfg.graph_path, cfg);
    auto [a, twist] = load_inputs_algebra(cfg);
    require_valid(a, twist);
    enforce_dim_cap(g, a, cfg);
    const auto cx = build_complex(g, a, twist);
    const Cohomology h = cohomology(cx);
    const IntPolynomial qd = q_dim(a);
    const IntPolynomial chrom = chromatic_delete_contract(g);
    const IntPolynomial euler = graded_euler(h);
    if (cfg.json) {
        json doc;
        doc["input"] = input_json(cfg, g, a, twist);
        doc["qdim"] = poly_json(qd);
        doc["chromatic"] = poly_json(chrom);
        doc["cohomology"] = cohomology_json(h);
        doc["euler"] = poly_json(euler);
        doc["checks"] = json::array();
        out << doc.dump(2) << '\n';
        return kOk;
    }
    out << (twist ? "twisted cohomology" : "cohomology") << " of " << graph_label(cfg.graph_path) << " (v=" << g.num_vertices()
        << ", e=" << g.num_edges() << ") over " << a.name() << '\n';
    out << render_cohomology(h);
    for (std::size_t i = 0; i < h.size(); ++i) out << "qdim H^" << i << " = " << h[i].q_dim().to_string("q") << '\n';
    out << "euler = " << euler.to_string("q") << '\n';
    out << "P_G(qdim A) = " << evaluate_at_qdim(chrom, qd).to_string("q") << '\n';
    return kOk;
}

int cmd_chromatic(const RunConfig& cfg, std::ostream& out) {
    if (cfg.graph_path.empty()) throw InputError("--graph is required");
    const Graph g = load_graph(cfg.graph_path);
    const IntPolynomial dc = chromatic_delete_contract(g);
    std::optional<IntPolynomial> ss;
    if (g.num_edges() <= cfg.max_edges) ss = chromatic_state_sum(g, cfg.max_edges);
    const bool agree = !ss || *ss == dc;
    if (cfg.json) {
        json doc;
        doc["input"] = {{"graph", cfg.graph_path}, {"vertices", g.num_vertices()}, {"edges", g.num_edges()}};
        doc["chromatic"] = poly_json(dc);
        doc["state_sum"] = ss ? poly_json(*ss) : json();
        doc["agree"] = agree;
        out << doc.dump(2) << '\n';
    } else {
        out << "deletion-contraction: " << dc.to_string("L") << '\n';
        if (ss)
            out << "state-sum: " << ss->to_string("L") << '\n';
        else
            out << "state-sum: skipped (" << g.num_edges() << " edges > --max-edges)\n";
        out << (agree ? "AGREE" : "DISAGREE") << '\n';
    }
    return agree ? kOk : kCheckFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const Graph g = load_checked_graph(cfg.graph_path, cfg);
    auto [a, twist] = load_inputs_algebra(cfg);
    SuiteOptions opts;
    opts.twist = twist;
    opts.seed = cfg.seed;
    opts.graph_name = graph_label(cfg.graph_path);
    if (!cfg.all) opts.only = cfg.checks;
    for (const auto& name : opts.only) {
        auto names = check_names();
        if (std::find(names.begin(), names.end(), name) == names.end()) throw InputError("unknown check '" + name + "'");
    }
    if (!cfg.graph2_path.empty()) {
        opts.partner = load_checked_graph(cfg.graph2_path, cfg);
        opts.partner_name = graph_label(cfg.graph2_path);
    }
    if (check_algebra(a, twist).passed) enforce_dim_cap(g, a, cfg);
    const auto reports = run_checks(g, a, opts);
    const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
    if (cfg.json) {
        json doc;
        doc["input"] = {{"graph", cfg.graph_path}, {"algebra", a.name()}, {"twist", twist.has_value()}, {"seed", cfg.seed}};
        doc["checks"] = checks_json(reports);
        out << doc.dump(2) << '\n';
    } else {
        for (const auto& r : reports) {
            out << (r.passed ? "PASS " : "FAIL ") << r.check << ' ' << r.instance;
            if (!r.passed) out << " -- " << r.witness;
            out << '\n';
        }
    }
    return all_pass ? kOk : kCheckFailed;
}

int cmd_classify_ring(const RunConfig& cfg, std::ostream& out) {
    if (cfg.ring_params.size() != 4) throw InputError("classify-ring needs four integers: a b a' b'");
    const RingParams p{BigInt(cfg.ring_params[0]), BigInt(cfg.ring_params[1])};
    const RingParams q{BigInt(cfg.ring_params[2]), BigInt(cfg.ring_params[3])};
    const auto ip = ring_invariant(p), iq = ring_invariant(q);
    const bool iso = rings_isomorphic(p, q);
    if (cfg.json) {
        json doc;
        doc["input"] = {{"a", cfg.ring_params[0]}, {"b", cfg.ring_params[1]}, {"a2", cfg.ring_params[2]}, {"b2", cfg.ring_params[3]}};
        doc["invariants"] = {{{"discriminant", int_json(ip.discriminant)}, {"parity", ip.parity}},
                             {{"discriminant", int_json(iq.discriminant)}, {"parity", iq.parity}}};
        doc["isomorphic"] = iso;
        out << doc.dump(2) << '\n';
        return kOk;
    }
    auto line = [&](const RingParams& r, const RingInvariant& inv) {
        out << "x*x = " << r.a.get_str() << "*1 + " << r.b.get_str() << "*x: b^2+4a = " << inv.discriminant.get_str()
            << ", b mod 2 = " << inv.parity << '\n';
    };
    line(p, ip);
    line(q, iq);
    out << (iso ? "ISOMORPHIC" : "NOT ISOMORPHIC") << '\n';
    return kOk;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
    const Graph g1 = load_checked_graph(cfg.graph_path, cfg);
    if (cfg.graph2_path.empty()) throw InputError("compare needs --graph2");
    const Graph g2 = load_checked_graph(cfg.graph2_path, cfg);
    auto [a, twist] = load_inputs_algebra(cfg);
    require_valid(a, twist);
    enforce_dim_cap(g1, a, cfg);
    enforce_dim_cap(g2, a, cfg);
    const IntPolynomial p1 = chromatic_delete_contract(g1), p2 = chromatic_delete_contract(g2);
    const auto cx1 = build_complex(g1, a, twist), cx2 = build_complex(g2, a, twist);
    const Cohomology h1 = cohomology(cx1), h2 = cohomology(cx2);
    const std::size_t levels = std::max(h1.size(), h2.size());
    auto at = [](const Cohomology& h, std::size_t i) { return i < h.size() ? h[i] : GroupInvariant{}; };
    auto chain_group = [](const BigradedComplex& cx, int i) {
        GroupInvariant g;
        for (int j = 0; j <= cx.max_degree(); ++j) g.add_free(j, cx.dim(i, j));
        return g;
    };
    if (cfg.json) {
        json doc;
        doc["input"] = {{"graph", cfg.graph_path}, {"graph2", cfg.graph2_path}, {"algebra", a.name()}, {"twist", twist.has_value()}};
        doc["chromatic"] = {poly_json(p1), poly_json(p2)};
        doc["chromatic_equal"] = p1 == p2;
        doc["cohomology"] = {cohomology_json(h1), cohomology_json(h2)};
        json eq = json::array();
        for (std::size_t i = 0; i < levels; ++i) eq.push_back(at(h1, i) == at(h2, i));
        doc["cohomology_equal"] = std::move(eq);
        out << doc.dump(2) << '\n';
        return kOk;
    }
    out << "chromatic " << (p1 == p2 ? "EQUAL " : "DIFFER ") << p1.to_string("L");
    if (!(p1 == p2)) out << " vs " << p2.to_string("L");
    out << '\n';
    for (std::size_t i = 0; i < levels; ++i) {
        const auto x = chain_group(cx1, static_cast<int>(i)), y = chain_group(cx2, static_cast<int>(i));
        out << "C^" << i << ' ' << (x == y ? "EQUAL " : "DIFFER ") << x.to_string();
        if (!(x == y)) out << " vs " << y.to_string();
        out << '\n';
    }
    for (std::size_t i = 0; i < levels; ++i) {
        const auto x = at(h1, i), y = at(h2, i);
        out << "H^" << i << ' ' << (x == y ? "EQUAL " : "DIFFER ") << x.to_string();
        if (!(x == y)) out << " vs " << y.to_string();
        out << '\n';
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Graph cohomology over graded algebras: chain complexes, integer cohomology and structural checks"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub, bool with_graph) {
        if (with_graph) sub->add_option("--graph", cfg.graph_path, "Graph file")->check(CLI::ExistingFile);
        sub->add_flag("--json", cfg.json, "Machine-readable output");
        sub->add_option("--max-edges", cfg.max_edges, "Refuse graphs with more edges")->check(CLI::PositiveNumber);
    };
    auto algebra_opts = [&](CLI::App* sub) {
        sub->add_option("--algebra", cfg.algebra, "Builtin algebra name or JSON algebra file");
        sub->add_option("--twist", cfg.twist, "zero, identity or a JSON twist file");
        sub->add_option("--max-dim", cfg.max_dim, "Refuse chain blocks larger than this")->check(CLI::PositiveNumber);
    };

    auto* coh = app.add_subcommand("cohomology", "Integer cohomology of a graph");
    common(coh, true);
    algebra_opts(coh);

    auto* chrom = app.add_subcommand("chromatic", "Chromatic polynomial by two algorithms");
    common(chrom, true);

    auto* ver = app.add_subcommand("verify", "Run structural checks on one instance");
    common(ver, true);
    algebra_opts(ver);
    ver->add_option("--graph2", cfg.graph2_path, "Partner graph for the Kunneth check")->check(CLI::ExistingFile);
    ver->add_option("--seed", cfg.seed, "Seed for randomized checks");
    ver->add_option("--check", cfg.checks, "Check to run (repeatable)");
    ver->add_flag("--all", cfg.all, "Run every applicable check");

    auto* cls = app.add_subcommand("classify-ring", "Isomorphism test for rank-2 rings x*x = a + b x");
    cls->add_option("params", cfg.ring_params, "a b a' b'")->expected(4)->required();
    cls->add_flag("--json", cfg.json, "Machine-readable output");

    auto* cmp = app.add_subcommand("compare", "Compare invariants of two graphs");
    common(cmp, true);
    algebra_opts(cmp);
    cmp->add_option("--graph2", cfg.graph2_path, "Second graph")->check(CLI::ExistingFile);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (coh->parsed()) return cmd_cohomology(cfg, out);
        if (chrom->parsed()) return cmd_chromatic(cfg, out);
        if (ver->parsed()) return cmd_verify(cfg, out);
        if (cls->parsed()) return cmd_classify_ring(cfg, out);
        if (cmp->parsed()) return cmd_compare(cfg, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const AlgebraError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const ComplexError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const ChromaticError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace chromcoh::cli
