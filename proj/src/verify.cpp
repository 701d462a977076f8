#include "chromcoh/verify.hpp"

#include "chromcoh/chromatic.hpp"
#include "chromcoh/complex.hpp"
#include "chromcoh/snf.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

namespace chromcoh {

namespace {

CheckReport pass(std::string check, std::string instance) { return {std::move(check), std::move(instance), true, {}}; }

CheckReport fail(std::string check, std::string instance, std::string witness) {
    return {std::move(check), std::move(instance), false, std::move(witness)};
}

std::string first_entry(const SparseMatrix& m) {
    if (m.is_zero()) return "none";
    const auto& t = m.entries().front();
    return "(" + std::to_string(t.row) + "," + std::to_string(t.col) + ")=" + t.value.get_str();
}

std::string block(const char* what, int i, int j) {
    return std::string(what) + "^{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

std::string compare_witness(const Cohomology& got, const Cohomology& want) {
    std::ostringstream out;
    const auto a = trimmed(got), b = trimmed(want);
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        GroupInvariant x = i < a.size() ? a[i] : GroupInvariant{};
        GroupInvariant y = i < b.size() ? b[i] : GroupInvariant{};
        if (!(x == y)) {
            out << "H^" << i << ": " << x.to_string() << " vs " << y.to_string();
            break;
        }
    }
    return out.str();
}

std::unordered_map<std::uint64_t, const SubsetBasis*> subset_index(const BigradedComplex& cx) {
    std::unordered_map<std::uint64_t, const SubsetBasis*> idx;
    for (int i = 0; i <= cx.num_edges(); ++i)
        for (const auto& sb : cx.level(i)) idx.emplace(sb.subset.bits(), &sb);
    return idx;
}

bool is_split_injection(const SparseMatrix& m) {
    auto r = sparse_smith_normal_form(m);
    return r.rank == m.cols() && r.torsion().empty();
}

bool is_split_surjection(const SparseMatrix& m) {
    auto r = sparse_smith_normal_form(m);
    return r.rank == m.rows() && r.torsion().empty();
}

}  // namespace

std::string instance_name(const Graph& g, const GradedAlgebra& a, const std::optional<Endomorphism>& twist,
                          const std::string& graph_name) {
    std::string gname = graph_name.empty()
                            ? "v" + std::to_string(g.num_vertices()) + "e" + std::to_string(g.num_edges())
                            : graph_name;
    std::string out = gname + "/" + a.name();
    if (twist) out += twist->is_identity() ? "/twist=identity" : (twist->matrix.is_zero() ? "/twist=zero" : "/twist");
    return out;
}

CheckReport check_algebra(const GradedAlgebra& a, const std::optional<Endomorphism>& twist) {
    auto rep = verify_algebra(a);
    std::string inst = a.name();
    if (!rep.ok()) return fail("algebra", inst, rep.describe());
    if (twist) {
        auto trep = verify_endomorphism(a, *twist);
        if (!trep.ok()) return fail("algebra", inst + "/twist", trep.describe());
    }
    return pass("algebra", inst);
}

CheckReport check_d_squared(const Graph& g, const GradedAlgebra& a, const std::optional<Endomorphism>& twist,
                            const std::string& graph_name) {
    const std::string inst = instance_name(g, a, twist, graph_name);
    const auto cx = build_complex(g, a, twist);
    for (int i = 0; i + 1 < cx.num_edges(); ++i)
        for (int j = 0; j <= cx.max_degree(); ++j) {
            SparseMatrix dd = cx.differential(i + 1, j) * cx.differential(i, j);
            if (!dd.is_zero())
                return fail("d_squared", inst, block("d", i + 1, j) + " * " + block("d", i, j) + " != 0, first entry " + first_entry(dd));
        }
    return pass("d_squared", inst);
}

CheckReport check_cube_faces(const Graph& g, const GradedAlgebra& a, const std::optional<Endomorphism>& twist,
                             const std::string& graph_name) {
    const std::string inst = instance_name(g, a, twist, graph_name);
    const std::size_t n = g.num_edges();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const EdgeSubset s(n, mask);
        for (std::size_t e = 0; e < n; ++e) {
            if (s.contains(e)) continue;
            const SparseMatrix first_e = per_edge_map(g, a, s, e, twist);
            for (std::size_t f = e + 1; f < n; ++f) {
                if (s.contains(f)) continue;
                SparseMatrix via_e = per_edge_map(g, a, s.with(e), f, twist) * first_e;
                SparseMatrix via_f = per_edge_map(g, a, s.with(f), e, twist) * per_edge_map(g, a, s, f, twist);
                if (!(via_e == via_f))
                    return fail("cube_faces", inst,
                                "face at subset " + std::to_string(mask) + " with edges " + std::to_string(e) + "," +
                                    std::to_string(f) + " does not commute, first difference " + first_entry(via_e - via_f));
            }
        }
    }
    return pass("cube_faces", inst);
}

CheckReport check_edge_order(const Graph& g, const GradedAlgebra& a, int trials, std::uint64_t seed,
                             const std::optional<Endomorphism>& twist, const std::string& graph_name) {
    const std::string inst = instance_name(g, a, twist, graph_name) + "/trials=" + std::to_string(trials);
    const Cohomology base = compute_cohomology(g, a, twist);
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> perm(g.num_edges());
    for (int t = 0; t < trials; ++t) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Cohomology other = compute_cohomology(permute_edges(g, perm), a, twist);
        if (!same_cohomology(base, other)) {
            std::ostringstream w;
            w << "permutation [";
            for (std::size_t k = 0; k < perm.size(); ++k) w << (k ? "," : "") << perm[k];
            w << "] changes " << compare_witness(other, base);
            return fail("edge_order", inst, w.str());
        }
    }
    return pass("edge_order", inst);
}

CheckReport check_euler(const Graph& g, const GradedAlgebra& a, const std::optional<Endomorphism>& twist,
                        EulerOptions options, const std::string& graph_name) {
    const std::string inst = instance_name(g, a, twist, graph_name);
    const auto qd = q_dim(a);
    auto chromatic = [&](const Graph& x) {
        return x.num_edges() <= options.state_sum_cap ? chromatic_state_sum(x, options.state_sum_cap)
                                                      : chromatic_delete_contract(x);
    };
    const auto cx = build_complex(g, a, twist);
    const IntPolynomial chi = graded_euler(cohomology(cx));
    const IntPolynomial chi_chain = graded_euler(cx);
    const IntPolynomial expected = evaluate_at_qdim(chromatic(g), qd);
    if (!(chi == expected))
        return fail("euler", inst, "chi_q(H) = " + chi.to_string("q") + " but P_G(q dim A) = " + expected.to_string("q"));
    if (!(chi_chain == expected))
        return fail("euler", inst, "chi_q(C) = " + chi_chain.to_string("q") + " but P_G(q dim A) = " + expected.to_string("q"));
    if (options.per_edge) {
        for (std::size_t e = 0; e < g.num_edges(); ++e) {
            const IntPolynomial del = graded_euler(compute_cohomology(delete_edge(g, e), a, twist));
            const IntPolynomial con = graded_euler(compute_cohomology(contract_edge(g, e).graph, a, twist));
            if (!(chi == del - con))
                return fail("euler", inst,
                            "edge " + std::to_string(e) + ": chi(G) = " + chi.to_string("q") + " but chi(G-e) - chi(G/e) = " +
                                (del - con).to_string("q"));
        }
    }
    return pass("euler", inst);
}

CheckReport check_ses(const Graph& g, const GradedAlgebra& a, std::size_t e, const std::optional<Endomorphism>& twist,
                      const std::string& graph_name) {
    const std::string inst = instance_name(g, a, twist, graph_name) + "/e=" + std::to_string(e);
    if (e >= g.num_edges()) return fail("ses", inst, "edge index out of range");
    const std::size_t n = g.num_edges();
    // Move e to the end, keeping the relative order of the others.
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = k < e ? k : (k == e ? n - 1 : k - 1);
    const Graph ordered = permute_edges(g, perm);
    const Contraction contraction = contract_edge(ordered, n - 1);
    const Graph deleted = delete_edge(ordered, n - 1);

    const auto cx = build_complex(ordered, a, twist);
    const auto cc = build_complex(contraction.graph, a, twist);
    const auto cd = build_complex(deleted, a, twist);
    const auto idx = subset_index(cx);
    const int m = a.dim();
    const int J = cx.max_degree() + 1;
    const std::uint64_t e_bit = std::uint64_t{1} << (n - 1);

    // alpha[i][j]: C^{i,j}(G/e) -> C^{i+1,j}(G), i = 0..n-1
    std::vector<std::vector<SparseMatrix>> alpha(n, std::vector<SparseMatrix>(static_cast<std::size_t>(J)));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<Triplet>> entries(static_cast<std::size_t>(J));
        for (const auto& small : cc.level(static_cast<int>(i))) {
            const SubsetBasis& big = *idx.at(small.subset.bits() | e_bit);
            const int k = big.partition.count;
            if (k != small.partition.count) return fail("ses", inst, "component counts of G/e and G disagree");
            const auto reps = big.partition.representatives();
            std::vector<int> small_of(static_cast<std::size_t>(k));
            for (int c = 0; c < k; ++c) small_of[c] = small.partition.component_of[contraction.vertex_map[reps[c]]];
            for (std::uint64_t t = 0; t < small.size(); ++t) {
                const auto digits = tensor_digits(t, k, m);
                std::uint64_t u = 0;
                for (int c = 0; c < k; ++c) u = u * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(digits[small_of[c]]);
                const int j = small.tensor_degree[t];
                entries[j].push_back({big.block_position[u], small.block_position[t], BigInt(1)});
            }
        }
        for (int j = 0; j < J; ++j)
            alpha[i][j] = SparseMatrix(cx.dim(static_cast<int>(i) + 1, j), cc.dim(static_cast<int>(i), j), std::move(entries[j]));
    }
    // beta[i][j]: C^{i,j}(G) -> C^{i,j}(G-e), i = 0..n; identical bases on subsets without e.
    const auto del_idx = subset_index(cd);
    std::vector<std::vector<SparseMatrix>> beta(n + 1, std::vector<SparseMatrix>(static_cast<std::size_t>(J)));
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::vector<Triplet>> entries(static_cast<std::size_t>(J));
        for (const auto& sb : cx.level(static_cast<int>(i))) {
            if (sb.subset.bits() & e_bit) continue;
            const SubsetBasis& target = *del_idx.at(sb.subset.bits());
            for (std::uint64_t t = 0; t < sb.size(); ++t)
                entries[sb.tensor_degree[t]].push_back({target.block_position[t], sb.block_position[t], BigInt(1)});
        }
        for (int j = 0; j < J; ++j)
            beta[i][j] = SparseMatrix(cd.dim(static_cast<int>(i), j), cx.dim(static_cast<int>(i), j), std::move(entries[j]));
    }

    auto alpha_at = [&](int i, int j) -> SparseMatrix {
        if (i < 0 || i >= static_cast<int>(n)) return SparseMatrix(cx.dim(i + 1, j), cc.dim(i, j));
        return alpha[i][j];
    };
    for (int j = 0; j < J; ++j) {
        for (int i = 0; i < static_cast<int>(n); ++i) {
            // alpha is a chain map: d_G alpha == alpha d_{G/e}
            SparseMatrix lhs = cx.differential(i + 1, j) * alpha_at(i, j);
            SparseMatrix rhs = alpha_at(i + 1, j) * cc.differential(i, j);
            if (!(lhs == rhs)) return fail("ses", inst, "alpha does not commute with d at " + block("C", i, j));
            // beta is a chain map: d_{G-e} beta == beta d_G
            SparseMatrix lb = cd.differential(i, j) * beta[i][j];
            SparseMatrix rb = beta[i + 1][j] * cx.differential(i, j);
            if (!(lb == rb)) return fail("ses", inst, "beta does not commute with d at " + block("C", i, j));
        }
        for (int i = 0; i <= static_cast<int>(n); ++i) {
            const SparseMatrix al = alpha_at(i - 1, j);
            const SparseMatrix& be = beta[i][j];
            if (!(be * al).is_zero()) return fail("ses", inst, "beta alpha != 0 at " + block("C", i, j));
            if (!is_split_injection(al)) return fail("ses", inst, "alpha is not a split injection into " + block("C", i, j));
            if (!is_split_surjection(be)) return fail("ses", inst, "beta is not a split surjection from " + block("C", i, j));
            if (al.cols() + be.rows() != cx.dim(i, j))
                return fail("ses", inst, "rank alpha + rank beta != dim " + block("C", i, j));
        }
    }
    return pass("ses", inst);
}

CheckReport check_loops_and_multiedges(const Graph& g, const GradedAlgebra& a, const std::string& graph_name) {
    const std::string inst = instance_name(g, a, std::nullopt, graph_name);
    const Cohomology h = compute_cohomology(g, a);
    if (g.has_loop()) {
        for (std::size_t i = 0; i < h.size(); ++i)
            if (!h[i].is_zero()) return fail("loops_multiedges", inst, "graph has a loop but H^" + std::to_string(i) + " = " + h[i].to_string());
    }
    const Graph simple = collapse_multi_edges(g);
    if (simple.num_edges() != g.num_edges()) {
        const Cohomology hs = compute_cohomology(simple, a);
        if (!same_cohomology(h, hs))
            return fail("loops_multiedges", inst, "collapsing parallel edges changes " + compare_witness(h, hs));
    }
    return pass("loops_multiedges", inst);
}

bool is_pendant_edge(const Graph& g, std::size_t e) {
    if (e >= g.num_edges()) return false;
    const auto [u, v] = g.edge(e);
    return u != v && (g.degree(u) == 1 || g.degree(v) == 1);
}

CheckReport check_pendant(const Graph& g, const GradedAlgebra& a, std::size_t e, const std::string& graph_name) {
    const std::string inst = instance_name(g, a, std::nullopt, graph_name) + "/e=" + std::to_string(e);
    if (!a.has_unit()) return fail("pendant", inst, "algebra has no unit");
    if (!is_pendant_edge(g, e)) return fail("pendant", inst, "edge is not pendant");
    const UnitComplement uc = unit_complement(a);
    GroupInvariant complement;
    for (int d : uc.complement_degrees) complement.add_free(d, 1);
    const Cohomology h = compute_cohomology(g, a);
    const Cohomology hc = compute_cohomology(contract_edge(g, e).graph, a);
    Cohomology predicted;
    for (const auto& part : hc) predicted.push_back(group_tensor(part, complement));
    if (!same_cohomology(h, predicted)) return fail("pendant", inst, compare_witness(h, predicted));
    return pass("pendant", inst);
}

CheckReport check_kunneth(const Graph& g1, const Graph& g2, const GradedAlgebra& a, const std::string& name1,
                          const std::string& name2) {
    const std::string n1 = name1.empty() ? instance_name(g1, a).substr(0, instance_name(g1, a).find('/')) : name1;
    const std::string n2 = name2.empty() ? instance_name(g2, a).substr(0, instance_name(g2, a).find('/')) : name2;
    const std::string inst = n1 + "+" + n2 + "/" + a.name();
    const Cohomology direct = compute_cohomology(disjoint_union(g1, g2), a);
    const Cohomology predicted = kunneth_predict(compute_cohomology(g1, a), compute_cohomology(g2, a));
    if (!same_cohomology(direct, predicted)) return fail("kunneth", inst, compare_witness(direct, predicted));
    return pass("kunneth", inst);
}

std::vector<std::string> check_names() {
    return {"algebra", "cube_faces", "d_squared", "edge_order", "euler", "kunneth", "loops_multiedges", "pendant", "ses"};
}

std::vector<CheckReport> run_checks(const Graph& g, const GradedAlgebra& a, const SuiteOptions& options) {
    auto wanted = [&](const std::string& name) {
        return options.only.empty() || std::find(options.only.begin(), options.only.end(), name) != options.only.end();
    };
    std::vector<CheckReport> out;
    const auto& twist = options.twist;
    const auto& gname = options.graph_name;
    CheckReport alg = check_algebra(a, twist);
    if (wanted("algebra") || !alg.passed) out.push_back(alg);
    if (alg.passed) {
        if (wanted("d_squared")) out.push_back(check_d_squared(g, a, twist, gname));
        if (wanted("cube_faces")) out.push_back(check_cube_faces(g, a, twist, gname));
        if (wanted("edge_order")) out.push_back(check_edge_order(g, a, options.edge_order_trials, options.seed, twist, gname));
        if (wanted("euler")) out.push_back(check_euler(g, a, twist, {}, gname));
        if (wanted("ses"))
            for (std::size_t e = 0; e < g.num_edges(); ++e) out.push_back(check_ses(g, a, e, twist, gname));
        // The remaining statements are about the untwisted differential.
        if (!twist) {
            if (wanted("loops_multiedges")) out.push_back(check_loops_and_multiedges(g, a, gname));
            if (wanted("pendant") && a.has_unit())
                for (std::size_t e = 0; e < g.num_edges(); ++e)
                    if (is_pendant_edge(g, e)) out.push_back(check_pendant(g, a, e, gname));
            if (wanted("kunneth")) {
                const Graph partner = options.partner.value_or(Graph::null_graph(1));
                const std::string pname = options.partner ? options.partner_name : "N1";
                out.push_back(check_kunneth(g, partner, a, gname, pname));
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const CheckReport& x, const CheckReport& y) {
        return x.check != y.check ? x.check < y.check : x.instance < y.instance;
    });
    return out;
}

}  // namespace chromcoh
