// Acceptance suite: one PASS/FAIL line per criterion. Expected values come
// from the brute-force oracles in tests/support or from closed forms written
// out here; tolerance is exact equality everywhere.

#include "chromcoh/algebra.hpp"
#include "chromcoh/chromatic.hpp"
#include "chromcoh/complex.hpp"
#include "chromcoh/homology.hpp"
#include "chromcoh/snf.hpp"
#include "chromcoh/verify.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace chromcoh;
using namespace testsupport;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& what) {
        if (passed) detail = what;
        passed = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::optional<Endomorphism> no_twist() { return std::nullopt; }

const std::vector<NamedGraph>& corpus() {
    static const std::vector<NamedGraph> graphs = acceptance_corpus();
    return graphs;
}

IntPolynomial oracle_chromatic_at(const Graph& g, const IntPolynomial& qd) {
    const auto c = state_sum_coefficients(g);
    IntPolynomial out;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) out += IntPolynomial::constant(c[k]) * qd.pow(static_cast<unsigned>(k));
    return out;
}

IntPolynomial oracle_qdim(const std::vector<int>& degrees) {
    IntPolynomial out;
    for (int d : degrees) out += IntPolynomial::monomial(1, static_cast<std::size_t>(d));
    return out;
}

GroupInvariant free_from_ranks(const std::map<int, std::size_t>& ranks) {
    GroupInvariant g;
    for (auto [j, r] : ranks) g.add_free(j, r);
    return g;
}

GroupInvariant free_from_poly(const IntPolynomial& p) {
    GroupInvariant g;
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) g.add_free(static_cast<int>(j), p.coeffs()[j].get_ui());
    return g;
}

GroupInvariant at(const Cohomology& h, std::size_t i) { return i < h.size() ? h[i] : GroupInvariant{}; }

std::string str(const Cohomology& h) { return render_cohomology(h); }

// 1
Outcome triangle_over_zx3() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto h = cohomology(build_complex(polygon(3), builtin_algebra("zx3")));
    const double elapsed = seconds_since(t0);
    GroupInvariant h0, h1;
    h0.add_free(3, 1), h0.add_free(4, 3), h0.add_free(5, 3), h0.add_free(6, 1);
    h1.add_free(1, 1), h1.add_free(2, 1), h1.add_torsion(3, 3);
    if (at(h, 0) != h0 || at(h, 1) != h1) o.fail("got\n" + str(h));
    for (std::size_t i = 2; i < h.size(); ++i)
        if (!h[i].is_zero()) o.fail("H^" + std::to_string(i) + " nonzero");
    if (elapsed >= 1.0) o.fail("runtime " + std::to_string(elapsed) + " s");
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("H^0 = ") + h0.to_string() + ", H^1 = " + h1.to_string();
    return o;
}

// 2
Outcome rank2_sweep() {
    Outcome o;
    const auto t0 = Clock::now();
    int cases = 0;
    for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b) {
            const long disc = b * b + 4 * a;
            GroupInvariant h0, h1;
            if (disc == 0) {
                h0.add_free(0, 1);
                h1.add_free(0, 1);
                h1.add_torsion(0, 2);
            } else if (b % 2 != 0) {
                h1.add_torsion(0, std::abs(disc));
            } else {
                h1.add_torsion(0, 2);
                h1.add_torsion(0, std::abs(disc) / 2);
            }
            const auto h = cohomology(build_complex(polygon(3), rank2_algebra({a, b})));
            bool ok = at(h, 0) == h0 && at(h, 1) == h1;
            for (std::size_t i = 2; i < h.size(); ++i) ok = ok && h[i].is_zero();
            if (!ok) o.fail("a=" + std::to_string(a) + " b=" + std::to_string(b) + ":\n" + str(h));
            ++cases;
        }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 5.0) o.fail("runtime " + std::to_string(elapsed) + " s");
    if (o.passed) o.detail = std::to_string(cases) + " rings";
    return o;
}

// 3
Outcome euler_identity() {
    Outcome o;
    int n = 0;
    for (const auto& name : builtin_algebra_names()) {
        const auto a = builtin_algebra(name);
        const auto qd = oracle_qdim(a.degrees());
        for (const auto& [gname, g] : corpus()) {
            const auto h = cohomology(build_complex(g, a));
            if (graded_euler(h) != oracle_chromatic_at(g, qd)) o.fail(gname + "/" + name);
            ++n;
        }
    }
    if (o.passed) o.detail = std::to_string(n) + " instances, " + std::to_string(corpus().size()) + " graphs";
    return o;
}

// 4
Outcome d_squared_and_faces() {
    Outcome o;
    int n = 0;
    for (const auto& name : builtin_algebra_names()) {
        const auto a = builtin_algebra(name);
        for (const auto& twist : {no_twist(), std::optional(Endomorphism::identity(a.dim())),
                                  std::optional(Endomorphism::zero(a.dim()))}) {
            if (twist && !verify_endomorphism(a, *twist).ok()) continue;
            for (const auto& [gname, g] : corpus()) {
                const auto cx = build_complex(g, a, twist);
                const std::string inst = instance_name(g, a, twist, gname);
                for (int i = 0; i + 1 < cx.num_edges(); ++i)
                    for (int j = 0; j <= cx.max_degree(); ++j)
                        if (!(cx.differential(i + 1, j) * cx.differential(i, j)).is_zero())
                            o.fail("d^2 != 0 on " + inst + " at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                auto faces = check_cube_faces(g, a, twist, gname);
                if (!faces.passed) o.fail(faces.instance + ": " + faces.witness);
                ++n;
            }
        }
    }
    if (o.passed) o.detail = std::to_string(n) + " complexes";
    return o;
}

// 5
Outcome edge_order() {
    Outcome o;
    int n = 0;
    for (const auto& name : builtin_algebra_names()) {
        const auto a = builtin_algebra(name);
        std::uint64_t seed = 1;
        for (const auto& [gname, g] : corpus()) {
            const auto base = cohomology(build_complex(g, a));
            std::mt19937_64 rng(seed++);
            for (int t = 0; t < 5; ++t) {
                std::vector<std::size_t> perm(g.num_edges());
                std::iota(perm.begin(), perm.end(), std::size_t{0});
                std::shuffle(perm.begin(), perm.end(), rng);
                const Graph q = permute_edges(g, perm);
                if (cohomology(build_complex(q, a)) != base) o.fail(gname + "/" + name + " trial " + std::to_string(t));
                ++n;
            }
        }
    }
    if (o.passed) o.detail = std::to_string(n) + " permuted complexes";
    return o;
}

// 6
Outcome loops_and_multiedges() {
    Outcome o;
    const std::vector<NamedGraph> with_loop = {{"loop", loop_graph()},
                                               {"p3+loop", Graph(3, {{0, 1}, {1, 2}, {0, 2}, {1, 1}})},
                                               {"two-loops", Graph(2, {{0, 0}, {0, 1}, {1, 1}})}};
    struct Pair {
        std::string name;
        Graph multi, simple;
    };
    const std::vector<Pair> multi = {
        {"double", double_edge(), path_tree(1)},
        {"triple", Graph(2, {{0, 1}, {1, 0}, {0, 1}}), path_tree(1)},
        {"p3+parallel", Graph(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1}}), polygon(3)},
        {"t2-doubled", Graph(3, {{0, 1}, {1, 2}, {1, 2}}), path_tree(2)},
    };
    for (const auto& name : builtin_algebra_names()) {
        const auto a = builtin_algebra(name);
        for (const auto& [gname, g] : with_loop)
            for (const auto& grp : cohomology(build_complex(g, a)))
                if (!grp.is_zero()) o.fail(gname + "/" + name + " has nonzero group " + grp.to_string());
        for (const auto& p : multi)
            if (!same_cohomology(cohomology(build_complex(p.multi, a)), cohomology(build_complex(p.simple, a))))
                o.fail(p.name + "/" + name + " differs from its simple graph");
    }
    if (o.passed) o.detail = "3 loop graphs, 4 multigraphs, all builtins";
    return o;
}

// 7
Outcome trees() {
    Outcome o;
    for (const auto& name : {"zx2", "zx3", "rank2:1,1"}) {
        const auto a = builtin_algebra(name);
        const auto qd = oracle_qdim(a.degrees());
        const IntPolynomial reduced = qd - IntPolynomial{1};  // A' = A / Z1
        for (int n = 0; n <= 5; ++n) {
            const auto h = cohomology(build_complex(path_tree(n), a));
            const auto expect = free_from_poly(qd * reduced.pow(static_cast<unsigned>(n)));
            if (at(h, 0) != expect) o.fail(std::string(name) + " T" + std::to_string(n) + ": " + at(h, 0).to_string());
            for (std::size_t i = 1; i < h.size(); ++i)
                if (!h[i].is_zero()) o.fail(std::string(name) + " T" + std::to_string(n) + " H^" + std::to_string(i));
        }
    }
    if (o.passed) o.detail = "T0..T5 over zx2, zx3, rank2:1,1";
    return o;
}

// 8
Outcome short_exact_sequence() {
    Outcome o;
    int n = 0;
    const std::vector<NamedGraph> graphs = {{"p3", polygon(3)}, {"t3", path_tree(3)}, {"double", double_edge()}};
    for (const auto& name : {"zx2", "zx3"})
        for (const auto& [gname, g] : graphs)
            for (std::size_t e = 0; e < g.num_edges(); ++e) {
                auto r = check_ses(g, builtin_algebra(name), e, std::nullopt, gname);
                if (!r.passed) o.fail(r.instance + ": " + r.witness);
                ++n;
            }
    if (o.passed) o.detail = std::to_string(n) + " (graph, edge, algebra) instances";
    return o;
}

// 9
Outcome kunneth() {
    Outcome o;
    const auto zx3 = builtin_algebra("zx3");
    const Graph p3 = polygon(3);
    const auto hp3 = cohomology(build_complex(p3, zx3));
    for (const auto& [name, other] : std::vector<NamedGraph>{{"n1", Graph(1, {})}, {"t1", path_tree(1)}, {"p3", p3}}) {
        const auto direct = cohomology(build_complex(disjoint_union(p3, other), zx3));
        const auto predicted = kunneth_predict(hp3, cohomology(build_complex(other, zx3)));
        if (!same_cohomology(direct, predicted)) o.fail("p3+" + name + ":\n" + str(direct) + "vs\n" + str(predicted));
    }
    // Without the Tor terms the prediction for p3+p3 is short by exactly
    // Tor(Z_3{3}, Z_3{3}) = Z_3{6} in H^1.
    const auto direct = cohomology(build_complex(disjoint_union(p3, p3), zx3));
    GroupInvariant tensor_only;
    for (std::size_t p = 0; p < hp3.size(); ++p)
        for (std::size_t q = 0; p + q <= 1 && q < hp3.size(); ++q)
            if (p + q == 1) tensor_only += group_tensor(hp3[p], hp3[q]);
    GroupInvariant with_tor = tensor_only;
    with_tor.add_torsion(6, 3);
    if (at(direct, 1) != with_tor) o.fail("H^1(p3+p3) = " + at(direct, 1).to_string());
    if (at(direct, 1) == tensor_only) o.fail("no Tor contribution visible");
    if (o.passed) o.detail = "p3+n1, p3+t1, p3+p3; Tor(Z_3,Z_3) = Z_3{6} in H^1(p3+p3)";
    return o;
}

// 10
Outcome pendant() {
    Outcome o;
    const std::vector<NamedGraph> bases = {{"n1", Graph(1, {})}, {"t2", path_tree(2)}, {"p3", polygon(3)}};
    int n = 0;
    for (const auto& name : builtin_algebra_names()) {
        const auto a = builtin_algebra(name);
        if (!a.has_unit()) continue;
        // For every builtin the unit is b_0, so A' has the remaining degrees.
        std::vector<int> reduced(a.degrees().begin() + 1, a.degrees().end());
        for (const auto& [bname, base] : bases)
            for (Vertex v = 0; v < base.num_vertices(); ++v) {
                std::vector<Edge> edges = base.edges();
                edges.emplace_back(v, base.num_vertices());
                const Graph g(base.num_vertices() + 1, edges);
                const auto hg = cohomology(build_complex(g, a));
                const auto hb = cohomology(build_complex(base, a));
                Cohomology expect(hb.size());
                for (std::size_t i = 0; i < hb.size(); ++i)
                    for (int d : reduced) expect[i] += hb[i].shifted(d);
                if (!same_cohomology(hg, expect))
                    o.fail(bname + "+pendant@" + std::to_string(v) + "/" + name + ":\n" + str(hg) + "vs\n" + str(expect));
                ++n;
            }
    }
    if (o.passed) o.detail = std::to_string(n) + " attachments over unital builtins";
    return o;
}

// 11
Outcome twisted_example() {
    Outcome o;
    const IntPolynomial l{0, 1}, lm1{-1, 1}, lm2{-2, 1};
    const IntPolynomial p = l * lm1.pow(2) * lm2.pow(2);
    const Graph g1 = bowtie(), g2 = triangles_on_edge();
    if (chromatic_delete_contract(g1) != p || chromatic_delete_contract(g2) != p) o.fail("chromatic polynomials");
    const auto a = builtin_algebra("zx-nilpotent");
    const auto f = Endomorphism::zero(1);
    const auto h1 = cohomology(build_complex(g1, a, f)), h2 = cohomology(build_complex(g2, a, f));
    const auto c1 = chain_ranks(g1, a.degrees()), c2 = chain_ranks(g2, a.degrees());
    auto grp = [](std::initializer_list<std::pair<int, std::size_t>> parts) {
        GroupInvariant g;
        for (auto [j, r] : parts) g.add_free(j, r);
        return g;
    };
    // At i = 4, 5 the two graphs take the two listed values; which graph
    // gets which is settled by the component-count oracle above.
    const std::vector<GroupInvariant> shared = {grp({{5, 1}}), grp({{4, 6}}), grp({{3, 15}}), grp({{3, 2}, {2, 18}}),
                                                {}, {}, grp({{1, 1}})};
    const std::vector<std::pair<GroupInvariant, GroupInvariant>> split = {{grp({{2, 7}, {1, 8}}), grp({{2, 6}, {1, 9}})},
                                                                          {grp({{2, 1}, {1, 5}}), grp({{1, 6}})}};
    for (std::size_t i = 0; i <= 6; ++i) {
        const std::string lvl = "i=" + std::to_string(i);
        if (at(h1, i) != free_from_ranks(c1[i]) || at(h2, i) != free_from_ranks(c2[i])) o.fail(lvl + ": H != C");
        if (i == 4 || i == 5) {
            const auto& [x, y] = split[i - 4];
            const bool match = (at(h1, i) == x && at(h2, i) == y) || (at(h1, i) == y && at(h2, i) == x);
            if (!match) o.fail(lvl + ": " + at(h1, i).to_string() + " / " + at(h2, i).to_string());
            if (at(h1, i) == at(h2, i)) o.fail(lvl + ": groups do not differ");
        } else if (at(h1, i) != shared[i] || at(h2, i) != shared[i]) {
            o.fail(lvl + ": " + at(h1, i).to_string() + " / " + at(h2, i).to_string());
        }
    }
    if (o.passed)
        o.detail = "H^4: " + at(h1, 4).to_string() + " vs " + at(h2, 4).to_string() + "; H^5: " + at(h1, 5).to_string() +
                   " vs " + at(h2, 5).to_string();
    return o;
}

// 12
Outcome classification_and_integers() {
    Outcome o;
    int pairs = 0;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long a2 = -3; a2 <= 3; ++a2)
                for (long b2 = -3; b2 <= 3; ++b2) {
                    if (rings_isomorphic({a, b}, {a2, b2}) != brute_ring_isomorphic(a, b, a2, b2))
                        o.fail("(" + std::to_string(a) + "," + std::to_string(b) + ") vs (" + std::to_string(a2) + "," +
                               std::to_string(b2) + ")");
                    ++pairs;
                }
    const auto z = builtin_algebra("z");
    int graphs = 0;
    auto check_z = [&](const std::string& gname, const Graph& g) {
        const auto h = cohomology(build_complex(g, z));
        for (std::size_t i = 0; i < h.size(); ++i) {
            const bool expect_z = i == 0 && g.num_edges() == 0;
            const GroupInvariant want = expect_z ? GroupInvariant::free_group(0, 1) : GroupInvariant{};
            if (h[i] != want) o.fail(gname + "/z H^" + std::to_string(i) + " = " + h[i].to_string());
        }
        ++graphs;
    };
    for (const auto& [gname, g] : corpus()) check_z(gname, g);
    check_z("n1", Graph(1, {}));
    if (o.passed) o.detail = std::to_string(pairs) + " ring pairs, " + std::to_string(graphs) + " graphs over Z";
    return o;
}

// 13
Outcome snf_oracle() {
    Outcome o;
    std::mt19937_64 shape(13);
    std::uint64_t state = 1300;
    for (int t = 0; t < 500; ++t) {
        const int rows = 1 + static_cast<int>(shape() % 6), cols = 1 + static_cast<int>(shape() % 6);
        const auto m = random_small_matrix(state, rows, cols, 3);
        const auto expect = minors_invariant_factors(m);
        const IntMatrix dense = to_matrix(m);
        for (const auto& got : {smith_normal_form(dense), sparse_smith_normal_form(SparseMatrix::from_dense(dense))}) {
            std::vector<BigInt> nz;
            for (const auto& x : got.factors)
                if (x != 0) nz.push_back(x);
            if (nz != expect || got.rank != expect.size()) o.fail("mismatch on " + render_dense(dense));
        }
    }
    if (o.passed) o.detail = "500 matrices, dense and sparse kernels";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"triangle over Z[x]/(x^3)", triangle_over_zx3},
        {"rank-2 ring sweep", rank2_sweep},
        {"graded Euler characteristic", euler_identity},
        {"d^2 = 0 and cube faces", d_squared_and_faces},
        {"edge-order invariance", edge_order},
        {"loops and multi-edges", loops_and_multiedges},
        {"trees", trees},
        {"short exact sequence", short_exact_sequence},
        {"Kunneth formula", kunneth},
        {"pendant edge", pendant},
        {"twisted distinguishing example", twisted_example},
        {"ring classification and A = Z", classification_and_integers},
        {"Smith normal form oracle", snf_oracle},
    };
    const auto start = Clock::now();
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("%s %2zu %s (%.2f s): %s\n", o.passed ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), seconds_since(t0),
                    o.detail.c_str());
        std::fflush(stdout);
        failures += !o.passed;
    }
    std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failures, criteria.size(),
                seconds_since(start));
    return failures == 0 ? 0 : 1;
}
