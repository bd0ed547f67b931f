#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "grcm/series.hpp"

namespace grcm {

/// Sparse row over Q: (column, coefficient) pairs, columns strictly increasing,
/// no zero coefficients.
using SparseRow = std::vector<std::pair<int, Rational>>;

/// Incremental reduced row echelon form over Q.
///
/// Every stored row has a leading 1 in its pivot column and no entries in any
/// other pivot column, so a new row is reduced by a single pass over its
/// pivot columns.
class RowEchelon {
public:
    explicit RowEchelon(int columns)
        : columns_(columns), pivot_of_(static_cast<std::size_t>(columns), -1),
          scratch_(static_cast<std::size_t>(columns)), used_(static_cast<std::size_t>(columns), 0) {}

    int columns() const noexcept { return columns_; }
    int rank() const noexcept { return static_cast<int>(rows_.size()); }

    /// Adds a row; returns false when it was already in the span.
    bool add(const SparseRow& row) {
        touched_.clear();
        for (const auto& [c, a] : row) put(c, a);
        // Pivot columns present in the incoming row. Stored rows hold no other
        // pivot columns, so eliminating these cannot create new ones.
        pivots_here_.clear();
        for (const auto& [c, a] : row)
            if (pivot_of_[c] >= 0) pivots_here_.push_back(c);
        for (int c : pivots_here_) {
            if (scratch_[c] == 0) continue;
            f_ = scratch_[c];
            for (const auto& [cc, aa] : rows_[static_cast<std::size_t>(pivot_of_[c])]) {
                tmp_ = f_ * aa;
                sub(cc, tmp_);
            }
        }

        SparseRow reduced;
        std::sort(touched_.begin(), touched_.end());
        for (int c : touched_) {
            used_[c] = 0;
            if (scratch_[c] != 0) reduced.emplace_back(c, scratch_[c]);
            scratch_[c] = 0;
        }
        if (reduced.empty()) return false;

        // Pivot on the highest column so low columns stay free.
        const int pc = reduced.back().first;
        if (reduced.back().second != 1) {
            f_ = 1 / reduced.back().second;
            for (auto& [c, a] : reduced) a *= f_;
        }

        for (auto& other : rows_) {
            auto it = std::lower_bound(other.begin(), other.end(), pc,
                                       [](const auto& e, int col) { return e.first < col; });
            if (it == other.end() || it->first != pc) continue;
            f_ = it->second;
            axpy_into(other, f_, reduced);
        }
        pivot_of_[pc] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(reduced));
        return true;
    }

    /// Basis of the solution space of rows * x = 0, one vector per free column.
    std::vector<SparseRow> nullspace() const {
        // Free column f contributes -row[f] at the pivot of every row containing it.
        std::vector<std::vector<std::pair<int, const Rational*>>> hits(static_cast<std::size_t>(columns_));
        for (int c = 0; c < columns_; ++c) {
            if (pivot_of_[c] < 0) continue;
            for (const auto& [f, a] : rows_[static_cast<std::size_t>(pivot_of_[c])])
                if (f != c) hits[static_cast<std::size_t>(f)].emplace_back(c, &a);
        }
        std::vector<SparseRow> out;
        for (int f = 0; f < columns_; ++f) {
            if (pivot_of_[f] >= 0) continue;
            SparseRow x;
            x.emplace_back(f, Rational(1));
            for (const auto& [c, a] : hits[static_cast<std::size_t>(f)]) x.emplace_back(c, -*a);
            std::sort(x.begin(), x.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
            out.push_back(std::move(x));
        }
        return out;
    }

    const std::vector<SparseRow>& rows() const noexcept { return rows_; }

private:
    void put(int c, const Rational& a) {
        if (!used_[c]) {
            used_[c] = 1;
            touched_.push_back(c);
        }
        scratch_[c] += a;
    }

    void sub(int c, const Rational& a) {
        if (!used_[c]) {
            used_[c] = 1;
            touched_.push_back(c);
        }
        scratch_[c] -= a;
    }

    // x <- x - f y, reusing buffer_ so only new entries allocate.
    void axpy_into(SparseRow& x, const Rational& f, const SparseRow& y) {
        buffer_.clear();
        buffer_.reserve(x.size() + y.size());
        std::size_t i = 0, j = 0;
        while (i < x.size() || j < y.size()) {
            if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
                buffer_.push_back(std::move(x[i++]));
            } else if (i == x.size() || y[j].first < x[i].first) {
                buffer_.emplace_back(y[j].first, Rational());
                mpq_mul(buffer_.back().second.get_mpq_t(), f.get_mpq_t(), y[j].second.get_mpq_t());
                mpq_neg(buffer_.back().second.get_mpq_t(), buffer_.back().second.get_mpq_t());
                ++j;
            } else {
                tmp_ = f * y[j].second;
                x[i].second -= tmp_;
                if (x[i].second != 0) buffer_.push_back(std::move(x[i]));
                ++i, ++j;
            }
        }
        x.swap(buffer_);
    }

    int columns_;
    std::vector<int> pivot_of_;
    std::vector<SparseRow> rows_;
    std::vector<Rational> scratch_;
    std::vector<char> used_;
    std::vector<int> touched_;
    std::vector<int> pivots_here_;
    SparseRow buffer_;
    Rational f_, tmp_;
};

inline SparseRow to_sparse(const std::vector<Rational>& dense) {
    SparseRow row;
    for (std::size_t c = 0; c < dense.size(); ++c)
        if (dense[c] != 0) row.emplace_back(static_cast<int>(c), dense[c]);
    return row;
}

/// The members of `vectors` that are independent of their predecessors.
inline std::vector<SparseRow> span_basis(const std::vector<SparseRow>& vectors, int columns) {
    RowEchelon ech(columns);
    std::vector<SparseRow> out;
    for (const auto& v : vectors)
        if (ech.add(v)) out.push_back(v);
    return out;
}

} // namespace grcm
