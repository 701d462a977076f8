#include "chromcoh/homology.hpp"

#include <algorithm>
#include <sstream>

namespace chromcoh {

GroupInvariant GroupInvariant::free_group(int degree, std::size_t rank) {
    GroupInvariant g;
    g.add_free(degree, rank);
    return g;
}

GroupInvariant GroupInvariant::cyclic_group(int degree, const BigInt& order) {
    GroupInvariant g;
    if (order == 0)
        g.add_free(degree, 1);
    else
        g.add_torsion(degree, order);
    return g;
}

GroupInvariant GroupInvariant::from_algebra(const GradedAlgebra& a) {
    GroupInvariant g;
    for (int d : a.degrees()) g.add_free(d, 1);
    return g;
}

void GroupInvariant::add_free(int degree, std::size_t rank) {
    if (rank == 0) return;
    parts_[degree].free_rank += rank;
}

void GroupInvariant::add_torsion(int degree, const BigInt& order) {
    if (abs(order) <= 1) return;
    parts_[degree].torsion.push_back(abs(order));
    canonicalize(degree);
}

void GroupInvariant::canonicalize(int degree) {
    auto it = parts_.find(degree);
    if (it == parts_.end()) return;
    it->second.torsion = canonical_torsion(std::move(it->second.torsion));
    if (it->second.is_zero()) parts_.erase(it);
}

GroupInvariant& GroupInvariant::operator+=(const GroupInvariant& other) {
    for (const auto& [j, p] : other.parts_) {
        auto& mine = parts_[j];
        mine.free_rank += p.free_rank;
        mine.torsion.insert(mine.torsion.end(), p.torsion.begin(), p.torsion.end());
        canonicalize(j);
    }
    return *this;
}

GroupInvariant GroupInvariant::shifted(int by) const {
    GroupInvariant g;
    for (const auto& [j, p] : parts_) g.parts_[j + by] = p;
    return g;
}

DegreePart GroupInvariant::part(int degree) const {
    auto it = parts_.find(degree);
    return it == parts_.end() ? DegreePart{} : it->second;
}

std::size_t GroupInvariant::total_free_rank() const {
    std::size_t r = 0;
    for (const auto& [j, p] : parts_) r += p.free_rank;
    return r;
}

bool GroupInvariant::has_torsion() const {
    return std::any_of(parts_.begin(), parts_.end(), [](const auto& kv) { return !kv.second.torsion.empty(); });
}

IntPolynomial GroupInvariant::q_dim() const {
    IntPolynomial p;
    for (const auto& [j, part] : parts_)
        if (part.free_rank) p += IntPolynomial::monomial(BigInt(static_cast<unsigned long>(part.free_rank)), static_cast<std::size_t>(j));
    return p;
}

std::string GroupInvariant::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) out << " + ";
        first = false;
    };
    for (const auto& [j, p] : parts_) {
        if (p.free_rank) {
            sep();
            out << 'Z';
            if (p.free_rank > 1) out << '^' << p.free_rank;
            out << '{' << j << '}';
        }
        for (const auto& t : p.torsion) {
            sep();
            out << "Z_" << t.get_str() << '{' << j << '}';
        }
    }
    return out.str();
}

namespace {

Cohomology assemble(const BigradedComplex& cx, const std::vector<std::vector<SnfResult>>& snf) {
    const int n = cx.num_edges();
    Cohomology h(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= cx.max_degree(); ++j) {
            const std::size_t dim = cx.dim(i, j);
            if (dim == 0) continue;
            const std::size_t out_rank = i < n ? snf[i][j].rank : 0;
            const std::size_t in_rank = i > 0 ? snf[i - 1][j].rank : 0;
            if (out_rank + in_rank > dim)
                throw ComplexError("complex audit failure: rank d^{i,j} + rank d^{i-1,j} exceeds dim C^{i,j} at (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
            h[i].add_free(j, dim - out_rank - in_rank);
            if (i > 0)
                for (const auto& t : snf[i - 1][j].torsion()) h[i].add_torsion(j, t);
        }
    return h;
}

}  // namespace

Cohomology cohomology(const BigradedComplex& cx, Execution exec) {
    const int n = cx.num_edges();
    const int J = cx.max_degree() + 1;
    std::vector<std::vector<SnfResult>> snf(static_cast<std::size_t>(n), std::vector<SnfResult>(static_cast<std::size_t>(J)));
    // Largest blocks first for load balance; results land in fixed slots.
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < J; ++j)
            if (!cx.differential(i, j).is_zero()) blocks.emplace_back(i, j);
    std::stable_sort(blocks.begin(), blocks.end(), [&](const auto& x, const auto& y) {
        return cx.differential(x.first, x.second).nonzeros() > cx.differential(y.first, y.second).nonzeros();
    });
    const auto count = static_cast<long>(blocks.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::Parallel)
    for (long b = 0; b < count; ++b) {
        const auto [i, j] = blocks[b];
        snf[i][j] = sparse_smith_normal_form(cx.differential(i, j));
    }
    return assemble(cx, snf);
}

namespace reference {

Cohomology cohomology(const BigradedComplex& cx) {
    const int n = cx.num_edges();
    const int J = cx.max_degree() + 1;
    std::vector<std::vector<SnfResult>> snf(static_cast<std::size_t>(n), std::vector<SnfResult>(static_cast<std::size_t>(J)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < J; ++j) snf[i][j] = smith_normal_form(cx.differential(i, j).to_dense());
    return assemble(cx, snf);
}

}  // namespace reference

Cohomology compute_cohomology(const Graph& g, const GradedAlgebra& a, const std::optional<Endomorphism>& twist) {
    return cohomology(build_complex(g, a, twist));
}

IntPolynomial graded_euler(const Cohomology& h) {
    IntPolynomial chi;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i % 2)
            chi -= h[i].q_dim();
        else
            chi += h[i].q_dim();
    }
    return chi;
}

IntPolynomial graded_euler(const BigradedComplex& cx) {
    IntPolynomial chi;
    for (int i = 0; i <= cx.num_edges(); ++i) {
        if (i % 2)
            chi -= cx.chain_q_dim(i);
        else
            chi += cx.chain_q_dim(i);
    }
    return chi;
}

GroupInvariant group_tensor(const GroupInvariant& a, const GroupInvariant& b) {
    GroupInvariant out;
    for (const auto& [ja, pa] : a.parts())
        for (const auto& [jb, pb] : b.parts()) {
            const int j = ja + jb;
            out.add_free(j, pa.free_rank * pb.free_rank);
            // Z^r (x) Z_n = Z_n^r on both sides.
            for (const auto& t : pb.torsion)
                for (std::size_t r = 0; r < pa.free_rank; ++r) out.add_torsion(j, t);
            for (const auto& t : pa.torsion)
                for (std::size_t r = 0; r < pb.free_rank; ++r) out.add_torsion(j, t);
            for (const auto& s : pa.torsion)
                for (const auto& t : pb.torsion) out.add_torsion(j, gcd(s, t));
        }
    return out;
}

GroupInvariant group_tor(const GroupInvariant& a, const GroupInvariant& b) {
    GroupInvariant out;
    for (const auto& [ja, pa] : a.parts())
        for (const auto& [jb, pb] : b.parts())
            for (const auto& s : pa.torsion)
                for (const auto& t : pb.torsion) out.add_torsion(ja + jb, gcd(s, t));
    return out;
}

Cohomology kunneth_predict(const Cohomology& h1, const Cohomology& h2) {
    if (h1.empty() || h2.empty()) return {};
    const std::size_t len = h1.size() + h2.size() - 1;
    Cohomology out(len);
    for (std::size_t p = 0; p < h1.size(); ++p)
        for (std::size_t q = 0; q < h2.size(); ++q) {
            out[p + q] += group_tensor(h1[p], h2[q]);
            if (p + q >= 1) out[p + q - 1] += group_tor(h1[p], h2[q]);
        }
    return out;
}

Cohomology trimmed(Cohomology h) {
    while (!h.empty() && h.back().is_zero()) h.pop_back();
    return h;
}

bool same_cohomology(const Cohomology& a, const Cohomology& b) { return trimmed(a) == trimmed(b); }

std::string render_cohomology(const Cohomology& h) {
    std::ostringstream out;
    for (std::size_t i = 0; i < h.size(); ++i) out << "H^" << i << " = " << h[i].to_string() << '\n';
    return out.str();
}

}  // namespace chromcoh
