#include "chromcoh/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace chromcoh {

GradedAlgebra::GradedAlgebra(std::vector<int> degrees, std::vector<BigInt> mult, std::optional<Coords> unit,
                             std::string name)
    : degrees_(std::move(degrees)), mult_(std::move(mult)), unit_(std::move(unit)), name_(std::move(name)) {
    const std::size_t m = degrees_.size();
    if (m == 0) throw AlgebraError("algebra must have a nonempty basis");
    if (std::any_of(degrees_.begin(), degrees_.end(), [](int d) { return d < 0; }))
        throw AlgebraError("basis degrees must be non-negative");
    if (mult_.size() != m * m * m) throw AlgebraError("structure constants must be an m x m x m array");
    if (unit_ && unit_->size() != m) throw AlgebraError("unit must have m coordinates");
    products_.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                const BigInt& c = mult_[(i * m + j) * m + k];
                if (sgn(c) != 0) products_[i * m + j].push_back({static_cast<int>(k), c});
            }
}

int GradedAlgebra::max_degree() const { return *std::max_element(degrees_.begin(), degrees_.end()); }

std::string ValidationReport::describe() const {
    if (ok()) return "ok";
    std::ostringstream out;
    for (std::size_t v = 0; v < violations.size(); ++v) {
        const auto& x = violations[v];
        out << (v ? "; " : "") << x.axiom << " (";
        for (std::size_t k = 0; k < x.witness.size(); ++k) out << (k ? "," : "") << x.witness[k];
        out << ')';
        if (!x.detail.empty()) out << ": " << x.detail;
    }
    return out.str();
}

Coords basis_vector(const GradedAlgebra& a, int i) {
    Coords v(static_cast<std::size_t>(a.dim()));
    v[i] = 1;
    return v;
}

Coords multiply(const GradedAlgebra& a, const Coords& u, const Coords& v) {
    const auto m = static_cast<std::size_t>(a.dim());
    if (u.size() != m || v.size() != m) throw AlgebraError("coordinate vector length mismatch");
    Coords out(m);
    for (int i = 0; i < a.dim(); ++i) {
        if (sgn(u[i]) == 0) continue;
        for (int j = 0; j < a.dim(); ++j) {
            if (sgn(v[j]) == 0) continue;
            for (const auto& t : a.product(i, j)) out[t.index] += u[i] * v[j] * t.coeff;
        }
    }
    return out;
}

Coords apply_endomorphism(const Endomorphism& f, const Coords& v) {
    Coords out(f.matrix.rows());
    for (std::size_t k = 0; k < f.matrix.rows(); ++k)
        for (std::size_t i = 0; i < f.matrix.cols(); ++i) out[k] += f.matrix(k, i) * v[i];
    return out;
}

namespace {

std::string coords_str(const Coords& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].get_str();
    return s + "]";
}

}  // namespace

ValidationReport verify_algebra(const GradedAlgebra& a) {
    ValidationReport rep;
    const int m = a.dim();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool differs = false;
            for (int k = 0; k < m; ++k) differs |= a.mult(i, j, k) != a.mult(j, i, k);
            if (differs) rep.violations.push_back({"commutativity", {i, j}, "b_i*b_j != b_j*b_i"});
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                if (sgn(a.mult(i, j, k)) != 0 && a.degree(k) != a.degree(i) + a.degree(j))
                    rep.violations.push_back({"degree", {i, j, k}, "product leaves degree deg(b_i)+deg(b_j)"});
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                auto bi = basis_vector(a, i), bj = basis_vector(a, j), bk = basis_vector(a, k);
                Coords lhs = multiply(a, multiply(a, bi, bj), bk);
                Coords rhs = multiply(a, bi, multiply(a, bj, bk));
                if (lhs != rhs)
                    rep.violations.push_back(
                        {"associativity", {i, j, k}, "(b_i b_j) b_k = " + coords_str(lhs) + " but b_i (b_j b_k) = " + coords_str(rhs)});
            }
    if (a.unit()) {
        const Coords& u = *a.unit();
        for (int i = 0; i < m; ++i)
            if (sgn(u[i]) != 0 && a.degree(i) != 0) rep.violations.push_back({"unit", {i}, "unit has a component of positive degree"});
        for (int i = 0; i < m; ++i) {
            Coords bi = basis_vector(a, i);
            Coords p = multiply(a, u, bi);
            if (p != bi) rep.violations.push_back({"unit", {i}, "1*b_i = " + coords_str(p)});
        }
    }
    return rep;
}

ValidationReport verify_endomorphism(const GradedAlgebra& a, const Endomorphism& f) {
    ValidationReport rep;
    const int m = a.dim();
    if (f.matrix.rows() != static_cast<std::size_t>(m) || f.matrix.cols() != static_cast<std::size_t>(m)) {
        rep.violations.push_back({"shape", {m}, "endomorphism must be m x m"});
        return rep;
    }
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i)
            if (sgn(f.matrix(k, i)) != 0 && a.degree(k) != a.degree(i))
                rep.violations.push_back({"degree", {k, i}, "f(b_i) has a component of another degree"});
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            Coords lhs = apply_endomorphism(f, multiply(a, basis_vector(a, i), basis_vector(a, j)));
            Coords rhs = multiply(a, apply_endomorphism(f, basis_vector(a, i)), apply_endomorphism(f, basis_vector(a, j)));
            if (lhs != rhs)
                rep.violations.push_back(
                    {"multiplicativity", {i, j}, "f(b_i b_j) = " + coords_str(lhs) + " but f(b_i) f(b_j) = " + coords_str(rhs)});
        }
    return rep;
}

IntPolynomial q_dim(const GradedAlgebra& a) {
    std::vector<BigInt> c(static_cast<std::size_t>(a.max_degree()) + 1);
    for (int d : a.degrees()) c[d] += 1;
    return IntPolynomial(std::move(c));
}

UnitComplement unit_complement(const GradedAlgebra& a) {
    if (!a.unit()) throw AlgebraError("unit_complement needs a unital algebra");
    const Coords& u = *a.unit();
    const int m = a.dim();
    std::vector<int> deg0;
    for (int i = 0; i < m; ++i) {
        if (sgn(u[i]) != 0 && a.degree(i) != 0) throw AlgebraError("unit is not homogeneous of degree 0");
        if (a.degree(i) == 0) deg0.push_back(i);
    }
    const std::size_t r = deg0.size();
    // Reduce the degree-0 part of the unit to e_0 with unimodular column
    // operations on a basis matrix B (columns = new basis vectors in old
    // coordinates), keeping B * w == unit-part invariant: w starts as the
    // unit's degree-0 coordinates and B as the identity.
    Coords w(r);
    for (std::size_t k = 0; k < r; ++k) w[k] = u[deg0[k]];
    IntMatrix b = IntMatrix::identity(r);
    auto col_op = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        // w[src] += q*w[dst]; B[:,dst] -= q*B[:,src]  (keeps B*w fixed)
        w[src] += q * w[dst];
        for (std::size_t i = 0; i < r; ++i) b(i, dst) -= q * b(i, src);
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        std::swap(w[x], w[y]);
        for (std::size_t i = 0; i < r; ++i) std::swap(b(i, x), b(i, y));
    };
    for (;;) {
        std::size_t nz = 0, piv = r;
        for (std::size_t k = 0; k < r; ++k)
            if (sgn(w[k]) != 0) {
                ++nz;
                if (piv == r || abs(w[k]) < abs(w[piv])) piv = k;
            }
        if (nz == 0) throw AlgebraError("unit is zero");
        if (nz == 1) {
            swap_cols(0, piv);
            break;
        }
        for (std::size_t k = 0; k < r; ++k) {
            if (k == piv || sgn(w[k]) == 0) continue;
            BigInt q = w[k] / w[piv];
            col_op(piv, k, BigInt(-q));
        }
    }
    if (abs(w[0]) != 1) throw AlgebraError("unit coordinate vector is not primitive");
    if (w[0] < 0) {
        w[0] = -w[0];
        for (std::size_t i = 0; i < r; ++i) b(i, 0) = -b(i, 0);
    }

    UnitComplement out;
    out.basis = IntMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    std::size_t col = 0;
    for (std::size_t c = 0; c < r; ++c, ++col) {
        Coords v(static_cast<std::size_t>(m));
        for (std::size_t i = 0; i < r; ++i) v[deg0[i]] = b(i, c);
        for (int i = 0; i < m; ++i) out.basis(i, col) = v[i];
        if (c > 0) {
            out.complement.push_back(std::move(v));
            out.complement_degrees.push_back(0);
        }
    }
    for (int i = 0; i < m; ++i) {
        if (a.degree(i) == 0) continue;
        out.basis(i, col++) = 1;
        out.complement.push_back(basis_vector(a, i));
        out.complement_degrees.push_back(a.degree(i));
    }
    return out;
}

namespace {

GradedAlgebra truncated_polynomial(int n, std::string name) {
    std::vector<int> degrees(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) degrees[i] = i;
    std::vector<BigInt> mult(static_cast<std::size_t>(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j < n) mult[(static_cast<std::size_t>(i) * n + j) * n + (i + j)] = 1;
    Coords unit(static_cast<std::size_t>(n));
    unit[0] = 1;
    return GradedAlgebra(std::move(degrees), std::move(mult), std::move(unit), std::move(name));
}

long parse_long(std::string_view s, const std::string& name) {
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        throw AlgebraError("malformed parameter in algebra name '" + name + "'");
    return v;
}

}  // namespace

GradedAlgebra rank2_algebra(const RingParams& p) {
    // basis {1, x}; index 0 = 1, index 1 = x
    std::vector<BigInt> mult(8);
    auto at = [&](int i, int j, int k) -> BigInt& { return mult[(i * 2 + j) * 2 + k]; };
    at(0, 0, 0) = 1;
    at(0, 1, 1) = 1;
    at(1, 0, 1) = 1;
    at(1, 1, 0) = p.a;
    at(1, 1, 1) = p.b;
    return GradedAlgebra({0, 0}, std::move(mult), Coords{1, 0}, "rank2:" + p.a.get_str() + "," + p.b.get_str());
}

GradedAlgebra builtin_algebra(const std::string& name) {
    if (name == "zx2") return truncated_polynomial(2, name);
    if (name == "zx3") return truncated_polynomial(3, name);
    if (name == "z") return GradedAlgebra({0}, {BigInt(1)}, Coords{1}, name);
    if (name == "zx-nilpotent") return GradedAlgebra({1}, {BigInt(0)}, std::nullopt, name);
    if (name.rfind("zxn:", 0) == 0) {
        long n = parse_long(std::string_view(name).substr(4), name);
        if (n < 1 || n > 64) throw AlgebraError("zxn:<n> needs 1 <= n <= 64");
        return truncated_polynomial(static_cast<int>(n), name);
    }
    if (name.rfind("rank2:", 0) == 0) {
        std::string_view rest = std::string_view(name).substr(6);
        auto comma = rest.find(',');
        if (comma == std::string_view::npos) throw AlgebraError("rank2 needs two parameters: rank2:<a>,<b>");
        long a = parse_long(rest.substr(0, comma), name);
        long b = parse_long(rest.substr(comma + 1), name);
        return rank2_algebra({BigInt(a), BigInt(b)});
    }
    throw AlgebraError("unknown algebra '" + name + "'");
}

std::vector<std::string> builtin_algebra_names() {
    return {"z", "zx2", "zx3", "zxn:4", "rank2:0,0", "rank2:1,1", "rank2:5,-2", "rank2:-1,1", "zx-nilpotent"};
}

RingInvariant ring_invariant(const RingParams& p) {
    BigInt r = p.b % 2;
    if (r < 0) r += 2;
    return {p.b * p.b + 4 * p.a, static_cast<int>(r.get_si())};
}

bool rings_isomorphic(const RingParams& p, const RingParams& q) { return ring_invariant(p) == ring_invariant(q); }

}  // namespace chromcoh
