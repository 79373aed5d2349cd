#pragma once
#include <vector>

#include "kirillov/error.hpp"
#include "kirillov/scalar.hpp"

namespace kirillov {

template <class E>
using Vec = std::vector<E>;

template <class E>
Vec<E> zero_vec(int n) { return Vec<E>(static_cast<std::size_t>(n)); }

template <class E>
Vec<E> zero_vec(int n, const E& zero) { return Vec<E>(static_cast<std::size_t>(n), zero); }

template <class E>
bool vec_is_zero(const Vec<E>& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

template <class E>
Vec<E> vec_add(const Vec<E>& a, const Vec<E>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vec<E> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <class E>
Vec<E> vec_sub(const Vec<E>& a, const Vec<E>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vec<E> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

template <class E>
Vec<E> vec_scale(const E& c, const Vec<E>& v) {
    Vec<E> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

template <class E>
void vec_add_scaled(Vec<E>& acc, const E& c, const Vec<E>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c * v[i];
}

/// Dense row-major matrix.  Every in-scope algebra has dim <= 15, so dense
/// storage is the right trade.
template <class E>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<E> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    E& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const E& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static Mat identity(int n, const E& one) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

template <class E>
Mat<E> mat_mul(const Mat<E>& x, const Mat<E>& y) {
    if (x.cols != y.rows) throw DimensionMismatch("matrix product shapes");
    Mat<E> r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const E& xik = x.at(i, k);
            if (is_zero(xik)) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

template <class E>
Mat<E> mat_add(const Mat<E>& x, const Mat<E>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw DimensionMismatch("matrix sum shapes");
    Mat<E> r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

template <class E>
Mat<E> mat_sub(const Mat<E>& x, const Mat<E>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw DimensionMismatch("matrix diff shapes");
    Mat<E> r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

template <class E>
Mat<E> mat_scale(const E& c, const Mat<E>& x) {
    Mat<E> r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = c * x.a[i];
    return r;
}

template <class E>
Vec<E> mat_apply(const Mat<E>& m, const Vec<E>& v) {
    if (m.cols != static_cast<int>(v.size())) throw DimensionMismatch("matrix-vector shapes");
    Vec<E> r(static_cast<std::size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (!is_zero(m.at(i, j))) r[i] += m.at(i, j) * v[j];
    return r;
}

template <class E>
Mat<E> mat_transpose(const Mat<E>& m) {
    Mat<E> r(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

} // namespace kirillov
