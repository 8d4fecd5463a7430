#pragma once

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hta/rational.hpp"

namespace hta::linalg {

/// Sparse rational vector: (index, coefficient) pairs, sorted by index,
/// coefficients nonzero.
using SparseVec = std::vector<std::pair<int, Rational>>;

inline SparseVec sparse_from_map(const std::map<int, Rational>& m) {
    SparseVec v;
    v.reserve(m.size());
    for (const auto& [i, c] : m)
        if (!c.is_zero()) v.emplace_back(i, c);
    return v;
}

/// dst += c * src (sorted merge).
inline void add_scaled(SparseVec& dst, const Rational& c, const SparseVec& src) {
    if (c.is_zero()) return;
    SparseVec out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, c * src[j].second);
            if (out.back().second.is_zero()) out.pop_back();
            ++j;
        } else {
            Rational s = dst[i].second + c * src[j].second;
            if (!s.is_zero()) out.emplace_back(dst[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

inline const Rational* coeff_of(const SparseVec& v, int idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const auto& e, int i) { return e.first < i; });
    return it != v.end() && it->first == idx ? &it->second : nullptr;
}

/// Incremental exact Gaussian elimination over the rationals on sparse rows.
/// Stored rows have leading coefficient 1; insertion fully reduces the
/// incoming vector against every current pivot, so the rank is simply the
/// number of stored rows. Determinism follows from exact arithmetic.
class SparseEliminator {
public:
    /// Fully reduces v modulo the current row space.
    SparseVec reduce(SparseVec v) const {
        for (;;) {
            int hit = -1;
            Rational c;
            for (const auto& [idx, val] : v) {
                auto it = pivot_row_.find(idx);
                if (it != pivot_row_.end()) {
                    hit = it->second;
                    c = val;
                    break;
                }
            }
            if (hit < 0) return v;
            add_scaled(v, -c, rows_[static_cast<std::size_t>(hit)]);
        }
    }

    /// Returns true iff v added a new dimension to the row space.
    bool insert(SparseVec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        const Rational lead = v.front().second;
        if (lead != 1)
            for (auto& [idx, val] : v) val /= lead;
        pivot_row_.emplace(v.front().first, static_cast<int>(rows_.size()));
        rows_.push_back(std::move(v));
        return true;
    }

    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    int rank() const { return static_cast<int>(rows_.size()); }

    const std::vector<SparseVec>& rows() const { return rows_; }

private:
    std::vector<SparseVec> rows_;
    std::unordered_map<int, int> pivot_row_;
};

/// Reduced row echelon form: every row's tail is free of all pivot columns.
struct Rref {
    std::vector<SparseVec> rows;   // sorted by pivot column
    std::vector<int> pivot_cols;   // parallel to rows
};

inline Rref rref_of(const std::vector<SparseVec>& input) {
    SparseEliminator elim;
    for (const auto& v : input) elim.insert(v);

    std::vector<SparseVec> rows = elim.rows();
    std::sort(rows.begin(), rows.end(),
              [](const SparseVec& a, const SparseVec& b) { return a.front().first < b.front().first; });

    std::unordered_map<int, std::size_t> pivot_at;
    for (std::size_t r = 0; r < rows.size(); ++r) pivot_at.emplace(rows[r].front().first, r);

    // Back-substitute until every tail avoids every pivot column. Rows are
    // processed in descending pivot order; one sweep can leave stale tails
    // when an earlier row refers to a pivot cleaned later, so iterate.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t r = rows.size(); r-- > 0;) {
            SparseVec& row = rows[r];
            for (std::size_t t = 1; t < row.size();) {
                auto it = pivot_at.find(row[t].first);
                if (it == pivot_at.end() || it->second == r) {
                    ++t;
                    continue;
                }
                add_scaled(row, -row[t].second, rows[it->second]);
                changed = true;
                t = 1; // tail changed, rescan
            }
        }
    }

    Rref out;
    out.rows = std::move(rows);
    out.pivot_cols.reserve(out.rows.size());
    for (const auto& r : out.rows) out.pivot_cols.push_back(r.front().first);
    return out;
}

/// Basis of { y : row . y = 0 for every row } in ambient dimension `dim`,
/// one vector per non-pivot column.
inline std::vector<SparseVec> kernel_basis(const Rref& rref, int dim) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
    for (int c : rref.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<SparseVec> basis;
    for (int f = 0; f < dim; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::map<int, Rational> y;
        y[f] = Rational(1);
        for (const auto& row : rref.rows) {
            const Rational* c = coeff_of(row, f);
            if (c) y[row.front().first] = -*c;
        }
        basis.push_back(sparse_from_map(y));
    }
    return basis;
}

} // namespace hta::linalg
