#pragma once
#include <vector>

#include "kirillov/lie_algebra.hpp"

namespace kirillov {

/// All homogeneous layers Z_1..Z_l of log(exp x * exp y), from one pass over
/// the algebra's cached word table.  Word vectors are built suffix-first, so
/// each of the <= 2^(l+1) ad-words costs exactly one bracket.
template <class F>
std::vector<Vec<typename F::Elem>> ch_components(const LieAlgebra<F>& g,
                                                 const Vec<typename F::Elem>& x,
                                                 const Vec<typename F::Elem>& y) {
    using E = typename F::Elem;
    if (static_cast<int>(x.size()) != g.n || static_cast<int>(y.size()) != g.n)
        throw DimensionMismatch("ch operand length vs algebra dim");
    int l = g.nclass;
    // node (root, len, bits) -> evaluated vector; level len stored densely
    std::vector<std::vector<Vec<E>>> val[2];
    for (int root = 0; root < 2; ++root) {
        val[root].resize(static_cast<std::size_t>(l));
        val[root][0].push_back(root == 0 ? x : y);
        for (int len = 1; len < l; ++len) {
            auto& lvl = val[root][static_cast<std::size_t>(len)];
            lvl.resize(std::size_t{1} << len);
            for (std::size_t bits = 0; bits < lvl.size(); ++bits) {
                int o1 = static_cast<int>(bits >> (len - 1)) & 1;
                std::size_t suffix = bits & ((std::size_t{1} << (len - 1)) - 1);
                const Vec<E>& prev = val[root][static_cast<std::size_t>(len - 1)][suffix];
                lvl[bits] = vec_is_zero(prev) ? prev : g.bracket(o1 == 0 ? x : y, prev);
            }
        }
    }
    std::vector<Vec<E>> layers(static_cast<std::size_t>(l),
                               Vec<E>(static_cast<std::size_t>(g.n), g.field.zero()));
    for (const auto& [w, coeff] : g.ch.entries) {
        const Vec<E>& v = val[w.root][w.len][w.bits];
        if (vec_is_zero(v)) continue;
        vec_add_scaled(layers[static_cast<std::size_t>(w.degree - 1)], coeff, v);
    }
    return layers;
}

/// Z = log(exp x * exp y), truncated at the nilpotency class.
template <class F>
Vec<typename F::Elem> ch_series(const LieAlgebra<F>& g, const Vec<typename F::Elem>& x,
                                const Vec<typename F::Elem>& y) {
    using E = typename F::Elem;
    Vec<E> z(static_cast<std::size_t>(g.n), g.field.zero());
    for (const auto& layer : ch_components(g, x, y)) z = vec_add(z, layer);
    return z;
}

/// The CH group lives on log coordinates: an element is the vector X with
/// x = exp X, multiplication is the CH series, inversion is negation, and
/// powers are scalar multiples of the logarithm.
template <class F>
Vec<typename F::Elem> group_mul(const LieAlgebra<F>& g, const Vec<typename F::Elem>& x,
                                const Vec<typename F::Elem>& y) {
    return ch_series(g, x, y);
}

template <class F>
Vec<typename F::Elem> group_inv(const LieAlgebra<F>& g, const Vec<typename F::Elem>& x) {
    Vec<typename F::Elem> r(x.size(), g.field.zero());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
    return r;
}

template <class F>
Vec<typename F::Elem> group_pow(const LieAlgebra<F>& g, const Vec<typename F::Elem>& x,
                                const typename F::Elem& lambda) {
    (void)g;
    return vec_scale(lambda, x);
}

template <class F>
Vec<typename F::Elem> group_identity(const LieAlgebra<F>& g) {
    return Vec<typename F::Elem>(static_cast<std::size_t>(g.n), g.field.zero());
}

/// x y x^-1 y^-1, via the group law.
template <class F>
Vec<typename F::Elem> group_commutator(const LieAlgebra<F>& g, const Vec<typename F::Elem>& x,
                                       const Vec<typename F::Elem>& y) {
    return group_mul(g, group_mul(g, group_mul(g, x, y), group_inv(g, x)), group_inv(g, y));
}

/// Ad(exp x)(y) = sum_{k=0}^{l} ad(x)^k(y) / k!
template <class F>
Vec<typename F::Elem> ad_exp(const LieAlgebra<F>& g, const Vec<typename F::Elem>& x,
                             const Vec<typename F::Elem>& y) {
    using E = typename F::Elem;
    Vec<E> acc = y;
    Vec<E> term = y; // holds ad(x)^k(y) / k!
    for (int k = 1; k <= g.nclass; ++k) {
        term = g.bracket(x, term);
        if (vec_is_zero(term)) break;
        E invk = inv(g.field.from_int(k));
        for (auto& c : term) c = invk * c;
        acc = vec_add(acc, term);
    }
    return acc;
}

/// Matrix of Ad(exp x) on the chosen basis (columns are ad_exp images).
template <class F>
Mat<typename F::Elem> ad_exp_matrix(const LieAlgebra<F>& g, const Vec<typename F::Elem>& x) {
    using E = typename F::Elem;
    Mat<E> m(g.n, g.n);
    for (int j = 0; j < g.n; ++j) {
        Vec<E> col = ad_exp(g, x, g.basis_vector(j));
        for (int i = 0; i < g.n; ++i) m.at(i, j) = col[static_cast<std::size_t>(i)];
    }
    return m;
}

} // namespace kirillov
