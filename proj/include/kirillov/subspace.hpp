#pragma once
#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "kirillov/matrix.hpp"

namespace kirillov {

/// Reduced row echelon form, in place.  `order` lists the columns in the
/// sequence pivots are searched; identity order yields the canonical RREF.
/// Returns the pivot columns in the order they were claimed.
template <class E>
std::vector<int> rref_in_order(std::vector<Vec<E>>& rows, const std::vector<int>& order) {
    std::vector<int> pivots;
    std::size_t r = 0;
    for (int c : order) {
        std::size_t k = r;
        while (k < rows.size() && is_zero(rows[k][c])) ++k;
        if (k == rows.size()) continue;
        std::swap(rows[r], rows[k]);
        E piv_inv = inv(rows[r][c]);
        for (auto& x : rows[r]) x = piv_inv * x;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || is_zero(rows[i][c])) continue;
            E f = rows[i][c];
            for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        if (++r == rows.size()) break;
    }
    rows.resize(r);
    return pivots;
}

template <class E>
std::vector<int> rref(std::vector<Vec<E>>& rows) {
    if (rows.empty()) return {};
    std::vector<int> order(rows[0].size());
    std::iota(order.begin(), order.end(), 0);
    return rref_in_order(rows, order);
}

/// Linear subspace held by its canonical RREF basis; equality of the stored
/// rows is equality of subspaces.
template <class E>
struct Subspace {
    int ambient = 0;
    std::vector<Vec<E>> rows; // RREF, pivots ascending
    std::vector<int> pivots;

    int dim() const { return static_cast<int>(rows.size()); }

    /// residual of v after eliminating along the basis; zero iff v is a member
    Vec<E> reduce(const Vec<E>& v) const {
        if (static_cast<int>(v.size()) != ambient)
            throw DimensionMismatch("vector/ambient size");
        Vec<E> w = v;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            E c = w[pivots[i]];
            if (is_zero(c)) continue;
            for (int j = 0; j < ambient; ++j) w[j] -= c * rows[i][j];
        }
        return w;
    }

    bool contains(const Vec<E>& v) const { return vec_is_zero(reduce(v)); }
    bool contains(const Subspace& s) const {
        for (const auto& r : s.rows)
            if (!contains(r)) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient == b.ambient && a.rows == b.rows;
    }
};

template <class E>
Subspace<E> span(int ambient, std::vector<Vec<E>> vectors) {
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != ambient)
            throw DimensionMismatch("spanning vector has wrong length");
    Subspace<E> s;
    s.ambient = ambient;
    s.pivots = rref(vectors);
    s.rows = std::move(vectors);
    return s;
}

template <class E>
Subspace<E> zero_subspace(int ambient) { return span<E>(ambient, {}); }

template <class E>
Subspace<E> full_space(int ambient, const E& one) {
    std::vector<Vec<E>> rows;
    for (int i = 0; i < ambient; ++i) {
        Vec<E> v = zero_vec<E>(ambient);
        v[i] = one;
        rows.push_back(std::move(v));
    }
    return span(ambient, std::move(rows));
}

/// Sum and intersection in one pass (Zassenhaus block trick): rref the rows
/// [a|a] for a in A and [b|0] for b in B; left halves give the sum, rows with
/// zero left half carry the intersection in their right half.
template <class E>
std::pair<Subspace<E>, Subspace<E>> sum_intersect(const Subspace<E>& A, const Subspace<E>& B) {
    if (A.ambient != B.ambient) throw DimensionMismatch("sum_intersect: ambient dims differ");
    int n = A.ambient;
    std::vector<Vec<E>> block;
    for (const auto& a : A.rows) {
        Vec<E> row = zero_vec<E>(2 * n);
        for (int j = 0; j < n; ++j) { row[j] = a[j]; row[n + j] = a[j]; }
        block.push_back(std::move(row));
    }
    for (const auto& b : B.rows) {
        Vec<E> row = zero_vec<E>(2 * n);
        for (int j = 0; j < n; ++j) row[j] = b[j];
        block.push_back(std::move(row));
    }
    rref(block);
    std::vector<Vec<E>> sum_rows, int_rows;
    for (auto& row : block) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j) left_zero = is_zero(row[j]);
        Vec<E> half(row.begin() + (left_zero ? n : 0), row.begin() + (left_zero ? 2 * n : n));
        (left_zero ? int_rows : sum_rows).push_back(std::move(half));
    }
    return {span(n, std::move(sum_rows)), span(n, std::move(int_rows))};
}

/// Null space {v : m v = 0}, canonical.  The field context supplies the unit
/// placed at each free coordinate.
template <class F>
Subspace<typename F::Elem> kernel(const Mat<typename F::Elem>& m, const F& K) {
    using E = typename F::Elem;
    std::vector<Vec<E>> rows;
    rows.reserve(static_cast<std::size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i)
        rows.emplace_back(m.a.begin() + static_cast<std::size_t>(i) * m.cols,
                          m.a.begin() + static_cast<std::size_t>(i + 1) * m.cols);
    std::vector<int> piv = rref(rows);
    std::vector<bool> is_piv(static_cast<std::size_t>(m.cols), false);
    for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;

    std::vector<Vec<E>> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_piv[static_cast<std::size_t>(f)]) continue;
        Vec<E> v = zero_vec<E>(m.cols);
        for (std::size_t i = 0; i < rows.size(); ++i) v[piv[i]] = -rows[i][f];
        v[f] = K.one();
        basis.push_back(std::move(v));
    }
    return span(m.cols, std::move(basis));
}

/// Particular solution of m x = rhs, or nothing if inconsistent.
template <class E>
std::optional<Vec<E>> solve(const Mat<E>& m, const Vec<E>& rhs) {
    if (m.rows != static_cast<int>(rhs.size())) throw DimensionMismatch("solve: rhs length");
    std::vector<Vec<E>> rows;
    for (int i = 0; i < m.rows; ++i) {
        Vec<E> row(m.a.begin() + static_cast<std::size_t>(i) * m.cols,
                   m.a.begin() + static_cast<std::size_t>(i + 1) * m.cols);
        row.push_back(rhs[i]);
        rows.push_back(std::move(row));
    }
    std::vector<int> order(static_cast<std::size_t>(m.cols) + 1);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> piv = rref_in_order(rows, order);
    Vec<E> x = zero_vec<E>(m.cols);
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == m.cols) return std::nullopt; // pivot in the rhs column
        x[piv[i]] = rows[i].back();
    }
    return x;
}

/// All p^dim vectors of a subspace over F_p, in lexicographic order of the
/// coefficient tuple on the RREF basis.
inline std::vector<Vec<Fp>> all_vectors(const Subspace<Fp>& s, const FpField& K) {
    std::size_t total = 1;
    for (int i = 0; i < s.dim(); ++i) total *= K.p;
    std::vector<Vec<Fp>> out;
    out.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        Vec<Fp> v(static_cast<std::size_t>(s.ambient), K.zero());
        std::size_t rem = idx;
        for (int i = s.dim() - 1; i >= 0; --i) {
            std::uint64_t c = rem % K.p;
            rem /= K.p;
            if (c) vec_add_scaled(v, Fp{c, K.p}, s.rows[static_cast<std::size_t>(i)]);
        }
        out.push_back(std::move(v));
    }
    return out;
}

/// All vectors of F_p^n in lexicographic coordinate order.
inline std::vector<Vec<Fp>> all_coord_vectors(int n, const FpField& K) {
    return all_vectors(full_space(n, K.one()), K);
}

/// Every subspace of F_p^n, generated directly in RREF shape (pivot-column
/// subsets x free entries), each exactly once.
inline std::vector<Subspace<Fp>> enumerate_subspaces(int n, const FpField& K) {
    std::vector<Subspace<Fp>> out;
    for (int k = 0; k <= n; ++k) {
        std::vector<int> comb(static_cast<std::size_t>(k));
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            std::vector<bool> is_piv(static_cast<std::size_t>(n), false);
            for (int c : comb) is_piv[static_cast<std::size_t>(c)] = true;
            std::vector<std::pair<int, int>> free_pos;
            for (int i = 0; i < k; ++i)
                for (int j = comb[static_cast<std::size_t>(i)] + 1; j < n; ++j)
                    if (!is_piv[static_cast<std::size_t>(j)]) free_pos.emplace_back(i, j);
            std::size_t total = 1;
            for (std::size_t i = 0; i < free_pos.size(); ++i) total *= K.p;
            for (std::size_t idx = 0; idx < total; ++idx) {
                Subspace<Fp> s;
                s.ambient = n;
                s.pivots.assign(comb.begin(), comb.end());
                s.rows.assign(static_cast<std::size_t>(k), Vec<Fp>(static_cast<std::size_t>(n), K.zero()));
                for (int i = 0; i < k; ++i)
                    s.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(comb[static_cast<std::size_t>(i)])] = K.one();
                std::size_t rem = idx;
                for (const auto& [i, j] : free_pos) {
                    s.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Fp{rem % K.p, K.p};
                    rem /= K.p;
                }
                out.push_back(std::move(s));
            }
            // next k-combination of {0..n-1}
            int i = k - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

} // namespace kirillov
