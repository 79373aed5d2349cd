#pragma once
#include <string>
#include <vector>

#include "kirillov/ch_group.hpp"

namespace kirillov {

/// The strictly-upper-triangular matrices form the reference nilpotent
/// algebra: exp/log are polynomial there, so exp(X)exp(Y) = exp(ch(X,Y)) can
/// be checked against honest matrix products with no series truncation error.

template <class E>
void require_strictly_upper(const Mat<E>& x) {
    if (x.rows != x.cols) throw NotStrictlyUpperTriangular("matrix is not square");
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j <= i; ++j)
            if (!is_zero(x.at(i, j)))
                throw NotStrictlyUpperTriangular("nonzero entry at (" + std::to_string(i) + "," +
                                                 std::to_string(j) + ")");
}

template <class F>
void require_unipotent(const Mat<typename F::Elem>& x, const F& K) {
    if (x.rows != x.cols) throw NotUnipotent("matrix is not square");
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < i; ++j)
            if (!is_zero(x.at(i, j)))
                throw NotUnipotent("nonzero entry below the diagonal at (" + std::to_string(i) +
                                   "," + std::to_string(j) + ")");
    for (int i = 0; i < x.rows; ++i)
        if (!(x.at(i, i) == K.one()))
            throw NotUnipotent("diagonal entry at (" + std::to_string(i) + "," +
                               std::to_string(i) + ") is not 1");
}

/// exp(X) = sum_{k=0}^{n-1} X^k / k!; the series stops by itself because X^n = 0.
template <class F>
Mat<typename F::Elem> matrix_exp(const Mat<typename F::Elem>& x, const F& K) {
    using E = typename F::Elem;
    require_strictly_upper(x);
    Mat<E> acc = Mat<E>::identity(x.rows, K.one());
    Mat<E> term = Mat<E>::identity(x.rows, K.one());
    for (int k = 1; k < x.rows; ++k) {
        term = mat_scale(inv(K.from_int(k)), mat_mul(term, x));
        acc = mat_add(acc, term);
    }
    return acc;
}

/// log(u) = sum_{k=1}^{n-1} (-1)^{k+1} (u - 1)^k / k, the standard alternating
/// series; (u - 1)^n = 0 makes it polynomial.  matrix_exp is its two-sided
/// inverse (covered by roundtrip tests).
template <class F>
Mat<typename F::Elem> matrix_log(const Mat<typename F::Elem>& u, const F& K) {
    using E = typename F::Elem;
    require_unipotent(u, K);
    Mat<E> nil = mat_sub(u, Mat<E>::identity(u.rows, K.one()));
    Mat<E> acc(u.rows, u.rows);
    Mat<E> pw = Mat<E>::identity(u.rows, K.one());
    for (int k = 1; k < u.rows; ++k) {
        pw = mat_mul(pw, nil);
        E c = inv(K.from_int(k));
        if (k % 2 == 0) c = -c;
        acc = mat_add(acc, mat_scale(c, pw));
    }
    return acc;
}

/// Tr0(n): basis E_ab for a < b in lexicographic order, with
/// [E_ab, E_cd] = delta(b,c) E_ad - delta(d,a) E_cb.
template <class F>
LieAlgebra<F> tr0_algebra(int n, const F& K) {
    using E = typename F::Elem;
    std::vector<std::pair<int, int>> pos;
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            pos.emplace_back(a, b);
            labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
        }
    int dim = static_cast<int>(pos.size());
    auto index_of = [&](int a, int b) {
        for (int i = 0; i < dim; ++i)
            if (pos[static_cast<std::size_t>(i)] == std::make_pair(a, b)) return i;
        return -1;
    };
    std::vector<std::tuple<int, int, Vec<E>>> entries;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            auto [a, b] = pos[static_cast<std::size_t>(i)];
            auto [c, d] = pos[static_cast<std::size_t>(j)];
            Vec<E> v(static_cast<std::size_t>(dim), K.zero());
            if (b == c) v[static_cast<std::size_t>(index_of(a, d))] += K.one();
            if (d == a) v[static_cast<std::size_t>(index_of(c, b))] -= K.one();
            if (!vec_is_zero(v)) entries.emplace_back(i, j, v);
        }
    return make_algebra(K, "tr0_" + std::to_string(n), labels, entries);
}

/// coordinate vector (on the E_ab basis) -> strictly upper matrix
template <class F>
Mat<typename F::Elem> tr0_vec_to_mat(int n, const F& K, const Vec<typename F::Elem>& v) {
    Mat<typename F::Elem> m(n, n);
    for (auto& e : m.a) e = K.zero();
    std::size_t idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) m.at(a, b) = v[idx++];
    return m;
}

template <class F>
Vec<typename F::Elem> tr0_mat_to_vec(int n, const F& K, const Mat<typename F::Elem>& m) {
    require_strictly_upper(m);
    (void)K;
    Vec<typename F::Elem> v;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) v.push_back(m.at(a, b));
    return v;
}

} // namespace kirillov
