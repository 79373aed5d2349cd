#pragma once
#include <numeric>
#include <string>
#include <vector>

#include "kirillov/lie_algebra.hpp"

namespace kirillov {

/// Functionals f in g* are row vectors on the chosen basis; f(v) is the plain
/// dot product.  Characters apply e^{2 pi i .} to these values only at the
/// finite-group boundary, so everything here stays in the coefficient field.
template <class E>
E functional_eval(const Vec<E>& f, const Vec<E>& v) {
    if (f.size() != v.size()) throw DimensionMismatch("functional/vector length");
    E acc{};
    for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * v[i];
    return acc;
}

/// B_f[i][j] = f([e_i, e_j]); antisymmetric, and its kernel is the radical
/// {X : f([X, g]) = 0}.
template <class F>
Mat<typename F::Elem> bilinear_form(const LieAlgebra<F>& g, const Vec<typename F::Elem>& f) {
    using E = typename F::Elem;
    Mat<E> B(g.n, g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            E v = functional_eval(f, g.bracket_basis(i, j));
            B.at(i, j) = v;
            B.at(j, i) = -v;
        }
    return B;
}

template <class F>
Subspace<typename F::Elem> form_radical(const LieAlgebra<F>& g, const Vec<typename F::Elem>& f) {
    return kernel(bilinear_form(g, f), g.field);
}

template <class F>
int form_rank(const LieAlgebra<F>& g, const Vec<typename F::Elem>& f) {
    return g.n - form_radical(g, f).dim();
}

template <class F>
bool is_subordinate(const LieAlgebra<F>& g, const Vec<typename F::Elem>& f,
                    const Subspace<typename F::Elem>& h) {
    for (std::size_t a = 0; a < h.rows.size(); ++a)
        for (std::size_t b = a + 1; b < h.rows.size(); ++b)
            if (!is_zero(functional_eval(f, g.bracket(h.rows[a], h.rows[b])))) return false;
    return true;
}

/// {w in g* : w(s) = 0}, in dual coordinates.
template <class F>
Subspace<typename F::Elem> annihilator(const F& K, const Subspace<typename F::Elem>& s) {
    using E = typename F::Elem;
    Mat<E> m(s.dim(), s.ambient);
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.ambient; ++j) m.at(i, j) = s.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return kernel(m, K);
}

enum class PolarizingMode { dimension, exhaustive };

/// dimension mode: r is maximal isotropic iff dim r = dim g - rank(B_f)/2.
/// exhaustive mode (finite fields, dim <= 5): no subalgebra strictly above r
/// is subordinate to f.  The test suite certifies the dimension criterion
/// against the exhaustive one on every finite case before the Q backend
/// leans on it.
template <class F>
bool is_polarizing(const LieAlgebra<F>& g, const Vec<typename F::Elem>& f,
                   const Subspace<typename F::Elem>& r, PolarizingMode mode) {
    if (!is_subalgebra(g, r) || !is_subordinate(g, f, r)) return false;
    if (mode == PolarizingMode::dimension)
        return 2 * r.dim() == 2 * g.n - form_rank(g, f);
    if constexpr (!F::finite) {
        throw ExhaustiveTooLarge("exhaustive polarizing certification needs a finite field");
    } else {
        if (g.n > 5)
            throw ExhaustiveTooLarge("exhaustive polarizing certification capped at dim 5, got " +
                                     std::to_string(g.n));
        for (const auto& s : enumerate_subspaces(g.n, g.field)) {
            if (s.dim() <= r.dim() || !s.contains(r)) continue;
            if (is_subalgebra(g, s) && is_subordinate(g, f, s)) return false;
        }
        return true;
    }
}

/// One level of the polarization recursion: the subalgebra g_i it started
/// from, the largest ideal j_i of g_i inside ker f, and the maximal abelian
/// a_i (all as subspaces of the original algebra; j_i <= a_i <= g_i).
template <class E>
struct PolarizationLevel {
    Subspace<E> g, j, a;
};

template <class E>
struct PolarizationChain {
    std::vector<PolarizationLevel<E>> levels; // levels 0..m-1
    Subspace<E> r;                            // = g_m, the polarization
    Subspace<E> final_j;                      // j_m, where the quotient went abelian
    int grade = 0;                            // = levels.size()
    std::vector<int> perm;                    // tie-break order used
};

/// The recursion: j_i = largest ideal of g_i in ker f; stop with r = g_i once
/// g_i/j_i is abelian; otherwise take the maximal abelian a_i of the second
/// center of g_i/j_i and pass to g_{i+1} = the preimage of its centralizer.
/// All the quotient steps are carried out relative to j_i inside the original
/// coordinates, which keeps every recorded subspace directly comparable.
/// The loop is memoryless in g_i, so restarting it at any recorded level of a
/// chain reproduces that chain's tail; the grade drops by exactly 1 per level.
template <class F>
PolarizationChain<typename F::Elem> standard_polarization_at(
    const LieAlgebra<F>& g, const Vec<typename F::Elem>& f,
    const Subspace<typename F::Elem>& start, const std::vector<int>& perm) {
    using E = typename F::Elem;
    if (static_cast<int>(f.size()) != g.n)
        throw DimensionMismatch("functional length vs algebra dim");
    if (!is_subalgebra(g, start))
        throw InvalidAlgebra("polarization recursion started from a non-subalgebra");
    PolarizationChain<E> chain;
    chain.perm = perm;

    Mat<E> frow(1, g.n);
    for (int j = 0; j < g.n; ++j) frow.at(0, j) = f[static_cast<std::size_t>(j)];
    Subspace<E> kerf = kernel(frow, g.field);

    Subspace<E> gi = start;
    while (true) {
        Subspace<E> ji = largest_ideal_in(g, gi, sum_intersect(gi, kerf).second);
        bool abelian = true;
        for (std::size_t a = 0; a < gi.rows.size() && abelian; ++a)
            for (std::size_t b = a + 1; b < gi.rows.size() && abelian; ++b)
                abelian = ji.contains(g.bracket(gi.rows[a], gi.rows[b]));
        if (abelian) {
            chain.r = gi;
            chain.final_j = ji;
            chain.grade = static_cast<int>(chain.levels.size());
            return chain;
        }
        Subspace<E> z1 = relative_centralizer(g, gi, gi, ji);
        Subspace<E> z2 = relative_centralizer(g, gi, gi, z1);
        Subspace<E> ai = maximal_abelian_rel(g, ji, z1, z2, perm);
        Subspace<E> gnext = relative_centralizer(g, gi, ai, ji);
        chain.levels.push_back(PolarizationLevel<E>{gi, ji, ai});
        gi = gnext;
    }
}

template <class F>
PolarizationChain<typename F::Elem> standard_polarization(const LieAlgebra<F>& g,
                                                          const Vec<typename F::Elem>& f,
                                                          const std::vector<int>& perm) {
    return standard_polarization_at(g, f, g.full(), perm);
}

template <class F>
PolarizationChain<typename F::Elem> standard_polarization(const LieAlgebra<F>& g,
                                                          const Vec<typename F::Elem>& f) {
    std::vector<int> perm(static_cast<std::size_t>(g.n));
    std::iota(perm.begin(), perm.end(), 0);
    return standard_polarization(g, f, perm);
}

} // namespace kirillov
