#include "tautgm/qlinalg.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <utility>

namespace tautgm {

std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

namespace {

Int int_from_string(std::string_view s) {
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    if (pos == s.size()) throw DomainError("rat_from_string: missing digits in '" + std::string(s) + "'");
    for (std::size_t i = pos; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw DomainError("rat_from_string: invalid character in '" + std::string(s) + "'");
    }
    return Int(std::string(s));
}

}  // namespace

Rat rat_from_string(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(int_from_string(s));
    if (s.find('/', slash + 1) != std::string_view::npos)
        throw DomainError("rat_from_string: more than one '/' in '" + std::string(s) + "'");
    const Int num = int_from_string(s.substr(0, slash));
    const Int den = int_from_string(s.substr(slash + 1));
    if (den == 0) throw DomainError("rat_from_string: zero denominator in '" + std::string(s) + "'");
    return Rat(num, den);
}

namespace qlinalg {

SparseMat::SparseMat(std::size_t n_rows, std::size_t n_cols)
    : n_rows_(n_rows), n_cols_(n_cols), rows_(n_rows) {}

std::size_t SparseMat::n_entries() const noexcept {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

void SparseMat::check_index(std::size_t r, std::size_t c) const {
    if (r >= n_rows_ || c >= n_cols_)
        throw DomainError("SparseMat: index (" + std::to_string(r) + "," + std::to_string(c) +
                          ") out of range for " + std::to_string(n_rows_) + "x" + std::to_string(n_cols_));
}

void SparseMat::set(std::size_t r, std::size_t c, Rat v) {
    check_index(r, c);
    if (v == 0)
        rows_[r].erase(c);
    else
        rows_[r][c] = std::move(v);
}

void SparseMat::add(std::size_t r, std::size_t c, const Rat& v) {
    check_index(r, c);
    auto [it, inserted] = rows_[r].emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) rows_[r].erase(it);
    } else if (it->second == 0) {
        rows_[r].erase(it);
    }
}

Rat SparseMat::get(std::size_t r, std::size_t c) const {
    check_index(r, c);
    const auto it = rows_[r].find(c);
    return it == rows_[r].end() ? Rat(0) : it->second;
}

const std::map<std::size_t, Rat>& SparseMat::row(std::size_t r) const {
    if (r >= n_rows_)
        throw DomainError("SparseMat: row " + std::to_string(r) + " out of range for " +
                          std::to_string(n_rows_) + " rows");
    return rows_[r];
}

SparseMat SparseMat::transposed() const {
    SparseMat t(n_cols_, n_rows_);
    for (std::size_t r = 0; r < n_rows_; ++r)
        for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace(r, v);
    return t;
}

namespace {

using IntRow = std::map<std::size_t, Int>;

// Clears denominators and divides out the integer content. Positive row
// scaling, so row space and kernel are unchanged.
IntRow scaled_row(const std::map<std::size_t, Rat>& row) {
    Int l = 1;
    for (const auto& [c, v] : row) l = lcm(l, denominator(v));
    IntRow out;
    Int g = 0;
    for (const auto& [c, v] : row) {
        Int t = numerator(v) * (l / denominator(v));
        g = gcd(g, t);
        out.emplace_hint(out.end(), c, std::move(t));
    }
    if (g > 1)
        for (auto& [c, t] : out) t /= g;
    return out;
}

struct Echelon {
    std::vector<std::size_t> pivot_cols;  // strictly increasing
    std::vector<IntRow> rows;             // rows[k] has leading entry at pivot_cols[k]
};

// Bareiss elimination: every active row is updated at every pivot step with
// new = (pivot_val * row - row_val * pivot_row) / prev_pivot, where the
// division is exact (the entries are minors of the integer-scaled input).
Echelon echelonize(const SparseMat& m) {
    std::vector<IntRow> active;
    active.reserve(m.n_rows());
    for (std::size_t r = 0; r < m.n_rows(); ++r) {
        IntRow row = scaled_row(m.row(r));
        if (!row.empty()) active.push_back(std::move(row));
    }

    Echelon ech;
    Int prev = 1;
    for (std::size_t col = 0; col < m.n_cols() && !active.empty(); ++col) {
        // Active rows have support in [col, n_cols), so a row meets this
        // column iff its leading entry sits exactly there.
        std::size_t p = active.size();
        for (std::size_t i = 0; i < active.size(); ++i) {
            if (active[i].begin()->first == col) {
                p = i;
                break;
            }
        }
        if (p == active.size()) continue;

        IntRow pivot = std::move(active[p]);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(p));
        const Int pv = pivot.begin()->second;

        std::vector<IntRow> next;
        next.reserve(active.size());
        for (IntRow& row : active) {
            Int rc = 0;
            if (const auto it = row.find(col); it != row.end()) {
                rc = it->second;
                row.erase(it);
            }
            IntRow out;
            auto it_r = row.begin();
            auto it_p = pivot.begin();
            ++it_p;  // skip the pivot column itself
            while (it_r != row.end() || it_p != pivot.end()) {
                std::size_t c = 0;
                Int val;
                if (it_p == pivot.end() || (it_r != row.end() && it_r->first < it_p->first)) {
                    c = it_r->first;
                    val = pv * it_r->second;
                    ++it_r;
                } else if (it_r == row.end() || it_p->first < it_r->first) {
                    c = it_p->first;
                    val = -rc * it_p->second;
                    ++it_p;
                } else {
                    c = it_r->first;
                    val = pv * it_r->second - rc * it_p->second;
                    ++it_r;
                    ++it_p;
                }
                if (val != 0) {
                    assert(val % prev == 0);
                    val /= prev;
                    out.emplace_hint(out.end(), c, std::move(val));
                }
            }
            if (!out.empty()) next.push_back(std::move(out));
        }
        active = std::move(next);
        ech.pivot_cols.push_back(col);
        ech.rows.push_back(std::move(pivot));
        prev = pv;
    }
    return ech;
}

}  // namespace

std::size_t rank(const SparseMat& m) { return echelonize(m).pivot_cols.size(); }

std::vector<std::vector<Rat>> kernel_basis(const SparseMat& m) {
    const Echelon ech = echelonize(m);
    std::vector<bool> is_pivot(m.n_cols(), false);
    for (const std::size_t c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    basis.reserve(m.n_cols() - ech.pivot_cols.size());
    for (std::size_t f = 0; f < m.n_cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.n_cols(), Rat(0));
        v[f] = 1;
        // Back-substitute over the pivots below f; pivots above f stay 0
        // because every echelon row is supported in [pivot_col, n_cols).
        for (std::size_t k = ech.rows.size(); k-- > 0;) {
            const std::size_t c = ech.pivot_cols[k];
            if (c > f) continue;
            Rat s = 0;
            for (auto it = std::next(ech.rows[k].begin()); it != ech.rows[k].end(); ++it) {
                if (v[it->first] != 0) s += Rat(it->second) * v[it->first];
            }
            v[c] = -s / Rat(ech.rows[k].begin()->second);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Rat>> invert_dense(const std::vector<std::vector<Rat>>& a) {
    const std::size_t n = a.size();
    if (n == 0) throw DomainError("invert_dense: empty matrix");
    for (const auto& row : a)
        if (row.size() != n) throw DomainError("invert_dense: matrix is not square");

    // Gauss-Jordan on [A | I] with exact rationals; first nonzero pivot in
    // row order (no stability concern with exact arithmetic).
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = a[i][j];
        w[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && w[p][col] == 0) ++p;
        if (p == n) throw InternalError("invert_dense: singular matrix");
        std::swap(w[col], w[p]);
        const Rat inv = Rat(1) / w[col][col];
        for (std::size_t j = col; j < 2 * n; ++j) w[col][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w[i][col] == 0) continue;
            const Rat f = w[i][col];
            for (std::size_t j = col; j < 2 * n; ++j) w[i][j] -= f * w[col][j];
        }
    }
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = w[i][n + j];
    return inv;
}

}  // namespace qlinalg
}  // namespace tautgm
