#include "chromcoh/snf.hpp"

#include <algorithm>
#include <optional>

namespace chromcoh {

namespace {

using std::size_t;

template <class Int>
Int abs_value(const Int& x) {
    return x < Int(0) ? Int(-x) : x;
}

/// Dense Smith reduction on a row-major buffer. When track is set, left and
/// right accumulate the row and column operations.
template <class Int>
class DenseSmith {
public:
    DenseSmith(size_t rows, size_t cols, std::vector<Int> data, bool track)
        : rows_(rows), cols_(cols), a_(std::move(data)), track_(track) {
        if (track_) {
            left_.assign(rows * rows, Int(0));
            right_.assign(cols * cols, Int(0));
            for (size_t i = 0; i < rows; ++i) left_[i * rows + i] = Int(1);
            for (size_t j = 0; j < cols; ++j) right_[j * cols + j] = Int(1);
        }
    }

    SnfResult run() {
        const size_t limit = std::min(rows_, cols_);
        size_t t = 0;
        for (; t < limit; ++t) {
            if (!select_pivot(t)) break;
            reduce(t);
            if (at(t, t) < Int(0)) negate_row(t);
        }
        SnfResult r;
        r.rank = t;
        for (size_t k = 0; k < t; ++k) r.factors.push_back(to_bigint(at(k, k)));
        return r;
    }

    const std::vector<Int>& data() const { return a_; }
    const std::vector<Int>& left() const { return left_; }
    const std::vector<Int>& right() const { return right_; }

private:
    Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }

    bool select_pivot(size_t t) {
        std::optional<std::pair<size_t, size_t>> best;
        Int best_abs(0);
        for (size_t i = t; i < rows_; ++i)
            for (size_t j = t; j < cols_; ++j) {
                const Int& v = at(i, j);
                if (is_zero(v)) continue;
                Int av = abs_value(v);
                if (!best || av < best_abs) {
                    best = {i, j};
                    best_abs = av;
                    if (is_unit(v)) goto found;
                }
            }
        if (!best) return false;
    found:
        swap_rows(t, best->first);
        swap_cols(t, best->second);
        return true;
    }

    void reduce(size_t t) {
        for (;;) {
            bool dirty = false;
            for (size_t i = t + 1; i < rows_; ++i) {
                if (is_zero(at(i, t))) continue;
                Int q = at(i, t) / at(t, t);
                if (!is_zero(q)) add_row(i, t, Int(-q));
                dirty |= !is_zero(at(i, t));
            }
            for (size_t j = t + 1; j < cols_; ++j) {
                if (is_zero(at(t, j))) continue;
                Int q = at(t, j) / at(t, t);
                if (!is_zero(q)) add_col(j, t, Int(-q));
                dirty |= !is_zero(at(t, j));
            }
            if (dirty) {
                // A nonzero remainder is strictly smaller than the pivot.
                size_t bi = t, bj = t;
                Int best = abs_value(at(t, t));
                for (size_t i = t + 1; i < rows_; ++i)
                    if (!is_zero(at(i, t)) && abs_value(at(i, t)) < best) best = abs_value(at(i, t)), bi = i, bj = t;
                for (size_t j = t + 1; j < cols_; ++j)
                    if (!is_zero(at(t, j)) && abs_value(at(t, j)) < best) best = abs_value(at(t, j)), bi = t, bj = j;
                if (bi != t) swap_rows(t, bi);
                if (bj != t) swap_cols(t, bj);
                continue;
            }
            if (is_unit(at(t, t))) return;
            bool fixed = false;
            for (size_t i = t + 1; i < rows_ && !fixed; ++i)
                for (size_t j = t + 1; j < cols_; ++j)
                    if (!is_zero(at(i, j) % at(t, t))) {
                        add_row(t, i, Int(1));
                        fixed = true;
                        break;
                    }
            if (!fixed) return;
        }
    }

    // row dst += factor * row src
    void add_row(size_t dst, size_t src, const Int& factor) {
        for (size_t j = 0; j < cols_; ++j)
            if (!is_zero(at(src, j))) at(dst, j) += factor * at(src, j);
        if (track_)
            for (size_t j = 0; j < rows_; ++j) left_[dst * rows_ + j] += factor * left_[src * rows_ + j];
    }
    // col dst += factor * col src
    void add_col(size_t dst, size_t src, const Int& factor) {
        for (size_t i = 0; i < rows_; ++i)
            if (!is_zero(at(i, src))) at(i, dst) += factor * at(i, src);
        if (track_)
            for (size_t i = 0; i < cols_; ++i) right_[i * cols_ + dst] += factor * right_[i * cols_ + src];
    }
    void swap_rows(size_t x, size_t y) {
        if (x == y) return;
        for (size_t j = 0; j < cols_; ++j) std::swap(at(x, j), at(y, j));
        if (track_)
            for (size_t j = 0; j < rows_; ++j) std::swap(left_[x * rows_ + j], left_[y * rows_ + j]);
    }
    void swap_cols(size_t x, size_t y) {
        if (x == y) return;
        for (size_t i = 0; i < rows_; ++i) std::swap(at(i, x), at(i, y));
        if (track_)
            for (size_t i = 0; i < cols_; ++i) std::swap(right_[i * cols_ + x], right_[i * cols_ + y]);
    }
    void negate_row(size_t x) {
        for (size_t j = 0; j < cols_; ++j) at(x, j) = -at(x, j);
        if (track_)
            for (size_t j = 0; j < rows_; ++j) left_[x * rows_ + j] = -left_[x * rows_ + j];
    }

    size_t rows_, cols_;
    std::vector<Int> a_;
    bool track_;
    std::vector<Int> left_, right_;
};

template <class Int>
SnfResult dense_snf(const IntMatrix& m) {
    std::vector<Int> data;
    data.reserve(m.rows() * m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) data.push_back(from_bigint<Int>(m(i, j)));
    return DenseSmith<Int>(m.rows(), m.cols(), std::move(data), false).run();
}

template <class Int>
struct SparseEntry {
    std::uint32_t col;
    Int value;
};

template <class Int>
SnfResult sparse_snf(const SparseMatrix& m) {
    using Row = std::vector<SparseEntry<Int>>;
    const size_t nrows = m.rows(), ncols = m.cols();
    std::vector<Row> rows(nrows);
    std::vector<std::vector<std::uint32_t>> col_rows(ncols);
    for (const auto& t : m.entries()) {  // sorted by (col,row) so rows stay col-sorted
        rows[t.row].push_back({static_cast<std::uint32_t>(t.col), from_bigint<Int>(t.value)});
        col_rows[t.col].push_back(static_cast<std::uint32_t>(t.row));
    }
    std::vector<char> row_alive(nrows, 1), col_alive(ncols, 1);

    auto find_in_row = [](const Row& r, std::uint32_t c) -> const SparseEntry<Int>* {
        auto it = std::lower_bound(r.begin(), r.end(), c,
                                   [](const SparseEntry<Int>& e, std::uint32_t x) { return e.col < x; });
        return (it != r.end() && it->col == c) ? &*it : nullptr;
    };

    size_t unit_pivots = 0;
    Row scratch;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::uint32_t c = 0; c < ncols; ++c) {
            if (!col_alive[c]) continue;
            auto& cr = col_rows[c];
            // Drop stale and repeated row references while searching for the best unit pivot.
            std::sort(cr.begin(), cr.end());
            cr.erase(std::unique(cr.begin(), cr.end()), cr.end());
            size_t keep = 0;
            std::optional<std::uint32_t> pivot_row;
            for (std::uint32_t r : cr) {
                if (!row_alive[r]) continue;
                const auto* e = find_in_row(rows[r], c);
                if (!e) continue;
                cr[keep++] = r;
                if (is_unit(e->value) && (!pivot_row || rows[r].size() < rows[*pivot_row].size())) pivot_row = r;
            }
            cr.resize(keep);
            if (!pivot_row) continue;

            const Row& prow = rows[*pivot_row];
            const Int p = find_in_row(prow, c)->value;
            for (std::uint32_t r : cr) {
                if (r == *pivot_row) continue;
                Row& target = rows[r];
                const Int factor = find_in_row(target, c)->value * p;  // v / p with p = +-1
                scratch.clear();
                scratch.reserve(target.size() + prow.size());
                size_t a = 0, b = 0;
                while (a < target.size() || b < prow.size()) {
                    if (b == prow.size() || (a < target.size() && target[a].col < prow[b].col)) {
                        scratch.push_back(std::move(target[a++]));
                    } else if (a == target.size() || prow[b].col < target[a].col) {
                        scratch.push_back({prow[b].col, Int(-(factor * prow[b].value))});
                        col_rows[prow[b].col].push_back(r);
                        ++b;
                    } else {
                        Int v = target[a].value - factor * prow[b].value;
                        if (!is_zero(v)) scratch.push_back({target[a].col, std::move(v)});
                        ++a, ++b;
                    }
                }
                target.swap(scratch);
            }
            row_alive[*pivot_row] = 0;
            col_alive[c] = 0;
            rows[*pivot_row].clear();
            cr.clear();
            ++unit_pivots;
            progress = true;
        }
    }

    // Residual block: live nonempty rows against live columns that still occur.
    std::vector<size_t> live_rows;
    std::vector<long> col_index(ncols, -1);
    size_t residual_cols = 0;
    for (size_t r = 0; r < nrows; ++r) {
        if (!row_alive[r] || rows[r].empty()) continue;
        live_rows.push_back(r);
        for (const auto& e : rows[r])
            if (col_index[e.col] < 0) col_index[e.col] = static_cast<long>(residual_cols++);
    }
    std::vector<Int> dense(live_rows.size() * residual_cols, Int(0));
    for (size_t i = 0; i < live_rows.size(); ++i)
        for (const auto& e : rows[live_rows[i]]) dense[i * residual_cols + static_cast<size_t>(col_index[e.col])] = e.value;
    SnfResult rest = DenseSmith<Int>(live_rows.size(), residual_cols, std::move(dense), false).run();

    SnfResult out;
    out.rank = unit_pivots + rest.rank;
    out.factors.assign(unit_pivots, BigInt(1));
    out.factors.insert(out.factors.end(), rest.factors.begin(), rest.factors.end());
    return out;
}

}  // namespace

std::vector<BigInt> SnfResult::torsion() const {
    std::vector<BigInt> t;
    for (const auto& f : factors)
        if (f > 1) t.push_back(f);
    return t;
}

SnfResult smith_normal_form(const IntMatrix& m) {
    try {
        return dense_snf<Checked64>(m);
    } catch (const IntOverflow&) {
        return dense_snf<BigInt>(m);
    }
}

SnfDecomposition smith_decomposition(const IntMatrix& m) {
    std::vector<BigInt> data;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) data.push_back(m(i, j));
    DenseSmith<BigInt> s(m.rows(), m.cols(), std::move(data), true);
    SnfDecomposition out;
    out.result = s.run();
    out.diagonal = IntMatrix(m.rows(), m.cols());
    out.left = IntMatrix(m.rows(), m.rows());
    out.right = IntMatrix(m.cols(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out.diagonal(i, j) = s.data()[i * m.cols() + j];
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.rows(); ++j) out.left(i, j) = s.left()[i * m.rows() + j];
    for (size_t i = 0; i < m.cols(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out.right(i, j) = s.right()[i * m.cols() + j];
    return out;
}

SnfResult sparse_smith_normal_form(const SparseMatrix& m) {
    try {
        return sparse_snf<Checked64>(m);
    } catch (const IntOverflow&) {
        return sparse_snf<BigInt>(m);
    }
}

std::vector<BigInt> canonical_torsion(std::vector<BigInt> orders) {
    std::erase_if(orders, [](const BigInt& x) { return abs(x) <= 1; });
    for (auto& x : orders) x = abs(x);
    // Pairwise (gcd, lcm) replacement leaves a divisibility chain.
    for (size_t i = 0; i < orders.size(); ++i)
        for (size_t j = i + 1; j < orders.size(); ++j) {
            BigInt g = gcd(orders[i], orders[j]);
            BigInt l = orders[i] / g * orders[j];
            orders[i] = g;
            orders[j] = l;
        }
    std::erase_if(orders, [](const BigInt& x) { return x == 1; });
    return orders;
}

}  // namespace chromcoh
