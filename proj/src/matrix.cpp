#include "chromcoh/matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace chromcoh {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return sgn(v) == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
        }
    return out;
}

BigInt determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> entries)
    : rows_(rows), cols_(cols) {
    for (const auto& t : entries)
        if (t.row >= rows || t.col >= cols) throw std::out_of_range("sparse entry out of range");
    std::sort(entries.begin(), entries.end(),
              [](const Triplet& x, const Triplet& y) { return x.col != y.col ? x.col < y.col : x.row < y.row; });
    for (auto& t : entries) {
        if (!entries_.empty() && entries_.back().row == t.row && entries_.back().col == t.col) {
            entries_.back().value += t.value;
        } else {
            if (!entries_.empty() && sgn(entries_.back().value) == 0) entries_.pop_back();
            entries_.push_back(std::move(t));
        }
    }
    if (!entries_.empty() && sgn(entries_.back().value) == 0) entries_.pop_back();
}

IntMatrix SparseMatrix::to_dense() const {
    IntMatrix m(rows_, cols_);
    for (const auto& t : entries_) m(t.row, t.col) = t.value;
    return m;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m) {
    std::vector<Triplet> entries;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0) entries.push_back({i, j, m(i, j)});
    return SparseMatrix(m.rows(), m.cols(), std::move(entries));
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("sparse product shape mismatch");
    // Column-major a: for each column k, the entries a(:,k).
    std::vector<std::vector<const Triplet*>> a_col(a.cols_);
    for (const auto& t : a.entries_) a_col[t.col].push_back(&t);
    std::vector<Triplet> out;
    std::map<std::size_t, BigInt> acc;
    std::size_t current_col = 0;
    auto flush = [&] {
        for (auto& [row, v] : acc)
            if (sgn(v) != 0) out.push_back({row, current_col, std::move(v)});
        acc.clear();
    };
    for (const auto& t : b.entries_) {
        if (t.col != current_col) {
            flush();
            current_col = t.col;
        }
        for (const Triplet* x : a_col[t.row]) acc[x->row] += x->value * t.value;
    }
    flush();
    return SparseMatrix(a.rows_, b.cols_, std::move(out));
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("sparse difference shape mismatch");
    std::vector<Triplet> entries = a.entries_;
    for (const auto& t : b.entries_) entries.push_back({t.row, t.col, -t.value});
    return SparseMatrix(a.rows_, a.cols_, std::move(entries));
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
        const auto &x = a.entries_[k], &y = b.entries_[k];
        if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
    }
    return true;
}

std::string render_dense(const IntMatrix& m) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "," : "") << m(i, j).get_str();
        out << ']';
    }
    out << ']';
    return out.str();
}

}  // namespace chromcoh
