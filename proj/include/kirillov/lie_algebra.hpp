#pragma once
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kirillov/ch_table.hpp"
#include "kirillov/subspace.hpp"

namespace kirillov {

/// Nilpotent Lie algebra over Q or F_p, fixed by structure constants on a
/// chosen basis.  Immutable once built: construct through make_algebra, which
/// validates antisymmetry (by construction), Jacobi, nilpotency, and the
/// class < p bound for prime fields, then caches the nilpotency class and the
/// CH coefficient table truncated at that class.
template <class F>
struct LieAlgebra {
    using E = typename F::Elem;

    F field;
    std::string name;
    int n = 0;
    std::vector<std::string> labels;
    /// sc[i][j], for i < j only, lists the nonzero (k, c) of [e_i, e_j].
    std::vector<std::vector<std::vector<std::pair<int, E>>>> sc;
    int nclass = 1;
    ChTable<F> ch;

    Vec<E> bracket_basis(int i, int j) const {
        Vec<E> v(static_cast<std::size_t>(n), field.zero());
        if (i == j) return v;
        bool flip = i > j;
        if (flip) std::swap(i, j);
        for (const auto& [k, c] : sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
            v[static_cast<std::size_t>(k)] = flip ? -c : c;
        return v;
    }

    Vec<E> bracket(const Vec<E>& x, const Vec<E>& y) const {
        if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
            throw DimensionMismatch("bracket operand length vs algebra dim");
        Vec<E> v(static_cast<std::size_t>(x.size()), field.zero());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const auto& terms = sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (terms.empty()) continue;
                E coef = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)] -
                         x[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(i)];
                if (is_zero(coef)) continue;
                for (const auto& [k, c] : terms) v[static_cast<std::size_t>(k)] += coef * c;
            }
        return v;
    }

    /// matrix of ad(x): column j is [x, e_j]
    Mat<E> ad_matrix(const Vec<E>& x) const {
        Mat<E> m(n, n);
        for (int j = 0; j < n; ++j) {
            Vec<E> ej(static_cast<std::size_t>(n), field.zero());
            ej[static_cast<std::size_t>(j)] = field.one();
            Vec<E> col = bracket(x, ej);
            for (int i = 0; i < n; ++i) m.at(i, j) = col[static_cast<std::size_t>(i)];
        }
        return m;
    }

    Vec<E> basis_vector(int i) const {
        Vec<E> v(static_cast<std::size_t>(n), field.zero());
        v[static_cast<std::size_t>(i)] = field.one();
        return v;
    }

    Subspace<E> full() const { return full_space(n, field.one()); }
};

/// Span of [S, T] (all pairwise brackets of basis vectors).
template <class F>
Subspace<typename F::Elem> bracket_span(const LieAlgebra<F>& g,
                                        const Subspace<typename F::Elem>& S,
                                        const Subspace<typename F::Elem>& T) {
    std::vector<Vec<typename F::Elem>> vs;
    for (const auto& a : S.rows)
        for (const auto& b : T.rows) vs.push_back(g.bracket(a, b));
    return span(g.n, std::move(vs));
}

namespace detail {

template <class F>
void validate_algebra(LieAlgebra<F>& g) {
    using E = typename F::Elem;
    // Jacobi on basis triples; antisymmetry holds by construction
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            for (int k = j + 1; k < g.n; ++k) {
                Vec<E> s = g.bracket(g.bracket_basis(i, j), g.basis_vector(k));
                s = vec_add(s, g.bracket(g.bracket_basis(j, k), g.basis_vector(i)));
                s = vec_add(s, g.bracket(g.bracket_basis(k, i), g.basis_vector(j)));
                if (!vec_is_zero(s))
                    throw InvalidAlgebra("Jacobi identity fails on basis triple (" +
                                         g.labels[static_cast<std::size_t>(i)] + ", " +
                                         g.labels[static_cast<std::size_t>(j)] + ", " +
                                         g.labels[static_cast<std::size_t>(k)] + ") in " + g.name);
            }
    // nilpotency: the descending series g >= [g,g] >= [g,[g,g]] >= ... must
    // hit zero, and must shrink strictly until it does
    Subspace<E> full = g.full();
    Subspace<E> cur = full;
    int cls = 0;
    while (cur.dim() > 0) {
        Subspace<E> next = bracket_span(g, full, cur);
        // series terms are ideals (Jacobi holds by now), so next <= cur and
        // equal dimension means the series stalled
        if (next.dim() == cur.dim())
            throw InvalidAlgebra(g.name + " is not nilpotent: lower central series stalls at dim " +
                                 std::to_string(cur.dim()));
        cur = next;
        ++cls;
    }
    g.nclass = cls == 0 ? 1 : cls; // dim-0 algebra counts as class 1
    if constexpr (F::finite) {
        if (static_cast<std::uint64_t>(g.nclass) >= g.field.p)
            throw InvalidAlgebra(g.name + ": nilpotency class " + std::to_string(g.nclass) +
                                 " needs all of 1.." + std::to_string(g.nclass) +
                                 " invertible, impossible in F_" + std::to_string(g.field.p));
    }
    g.ch = make_ch_table(g.field, g.nclass);
}

} // namespace detail

/// entries hold (i, j, coefficient vector of [e_i, e_j]) with 0-based i < j;
/// everything else is filled in by antisymmetry.
template <class F>
LieAlgebra<F> make_algebra(const F& K, std::string name, std::vector<std::string> labels,
                           const std::vector<std::tuple<int, int, Vec<typename F::Elem>>>& entries) {
    using E = typename F::Elem;
    LieAlgebra<F> g{K};
    g.name = std::move(name);
    g.n = static_cast<int>(labels.size());
    g.labels = std::move(labels);
    g.sc.assign(static_cast<std::size_t>(g.n),
                std::vector<std::vector<std::pair<int, E>>>(static_cast<std::size_t>(g.n)));
    std::vector<std::vector<bool>> seen(static_cast<std::size_t>(g.n),
                                        std::vector<bool>(static_cast<std::size_t>(g.n), false));
    for (const auto& [i, j, coeffs] : entries) {
        if (i < 0 || j >= g.n || i >= j)
            throw InvalidAlgebra(g.name + ": bracket indices must satisfy 0 <= i < j < dim");
        if (static_cast<int>(coeffs.size()) != g.n)
            throw InvalidAlgebra(g.name + ": coefficient vector length differs from dim");
        if (seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
            throw InvalidAlgebra(g.name + ": duplicate bracket entry");
        seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        for (int k = 0; k < g.n; ++k)
            if (!is_zero(coeffs[static_cast<std::size_t>(k)]))
                g.sc[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].emplace_back(
                    k, coeffs[static_cast<std::size_t>(k)]);
    }
    detail::validate_algebra(g);
    return g;
}

/// [g = L_1, L_2 = [g,g], ...] down to the last nonzero term; its length is
/// the nilpotency class.
template <class F>
std::vector<Subspace<typename F::Elem>> lower_central_series(const LieAlgebra<F>& g) {
    using E = typename F::Elem;
    std::vector<Subspace<E>> out;
    Subspace<E> full = g.full();
    Subspace<E> cur = full;
    while (cur.dim() > 0) {
        out.push_back(cur);
        cur = bracket_span(g, full, cur);
    }
    if (out.empty()) out.push_back(cur); // dim-0 algebra
    return out;
}

template <class F>
Subspace<typename F::Elem> derived_subalgebra(const LieAlgebra<F>& g) {
    return bracket_span(g, g.full(), g.full());
}

/// {x in `within` : [x, b] in `mod` for every basis vector b of `of`}.
/// This one kernel computation carries every centralizer/center/ideal
/// calculation below; `mod` = 0 gives honest centralizers, other `mod` values
/// give their images in the quotient by `mod`.
template <class F>
Subspace<typename F::Elem> relative_centralizer(const LieAlgebra<F>& g,
                                                const Subspace<typename F::Elem>& within,
                                                const Subspace<typename F::Elem>& of,
                                                const Subspace<typename F::Elem>& mod) {
    using E = typename F::Elem;
    int k = within.dim();
    if (k == 0) return within;
    // columns a: parameter along within.rows[a]; block rows per basis b of `of`
    std::vector<Vec<E>> sys;
    for (const auto& b : of.rows) {
        std::vector<Vec<E>> cols;
        for (const auto& u : within.rows) cols.push_back(mod.reduce(g.bracket(u, b)));
        for (int r = 0; r < g.n; ++r) {
            Vec<E> row(static_cast<std::size_t>(k), g.field.zero());
            bool nonzero = false;
            for (int a = 0; a < k; ++a) {
                row[static_cast<std::size_t>(a)] = cols[static_cast<std::size_t>(a)][static_cast<std::size_t>(r)];
                nonzero = nonzero || !is_zero(row[static_cast<std::size_t>(a)]);
            }
            if (nonzero) sys.push_back(std::move(row));
        }
    }
    Mat<E> m(static_cast<int>(sys.size()), k);
    for (std::size_t i = 0; i < sys.size(); ++i)
        for (int a = 0; a < k; ++a) m.at(static_cast<int>(i), a) = sys[i][static_cast<std::size_t>(a)];
    Subspace<E> t_space = kernel(m, g.field);
    std::vector<Vec<E>> vs;
    for (const auto& t : t_space.rows) {
        Vec<E> v(static_cast<std::size_t>(g.n), g.field.zero());
        for (int a = 0; a < k; ++a) vec_add_scaled(v, t[static_cast<std::size_t>(a)], within.rows[static_cast<std::size_t>(a)]);
        vs.push_back(std::move(v));
    }
    return span(g.n, std::move(vs));
}

template <class F>
Subspace<typename F::Elem> centralizer(const LieAlgebra<F>& g,
                                       const Subspace<typename F::Elem>& s) {
    return relative_centralizer(g, g.full(), s, zero_subspace<typename F::Elem>(g.n));
}

template <class F>
Subspace<typename F::Elem> center(const LieAlgebra<F>& g) {
    return centralizer(g, g.full());
}

/// [z_1, z_2, ..., z_class = g], z_{i+1}/z_i the center of g/z_i.
template <class F>
std::vector<Subspace<typename F::Elem>> upper_central_series(const LieAlgebra<F>& g) {
    using E = typename F::Elem;
    std::vector<Subspace<E>> out;
    Subspace<E> full = g.full();
    Subspace<E> prev = zero_subspace<E>(g.n);
    while (prev.dim() < g.n) {
        Subspace<E> next = relative_centralizer(g, full, full, prev);
        if (next.dim() == prev.dim())
            throw InvalidAlgebra(g.name + ": upper central series stalls (not nilpotent?)");
        out.push_back(next);
        prev = out.back();
    }
    if (out.empty()) out.push_back(full); // dim-0 algebra
    return out;
}

template <class F>
bool is_subalgebra(const LieAlgebra<F>& g, const Subspace<typename F::Elem>& s) {
    for (std::size_t a = 0; a < s.rows.size(); ++a)
        for (std::size_t b = a + 1; b < s.rows.size(); ++b)
            if (!s.contains(g.bracket(s.rows[a], s.rows[b]))) return false;
    return true;
}

template <class F>
bool is_ideal(const LieAlgebra<F>& g, const Subspace<typename F::Elem>& s) {
    for (int i = 0; i < g.n; ++i) {
        Vec<typename F::Elem> ei = g.basis_vector(i);
        for (const auto& b : s.rows)
            if (!s.contains(g.bracket(ei, b))) return false;
    }
    return true;
}

/// Largest ideal of the subalgebra `ambient` contained in s (s must sit
/// inside ambient).  Descending fixpoint: J <- {x in J : [ambient, x] <= J}.
template <class F>
Subspace<typename F::Elem> largest_ideal_in(const LieAlgebra<F>& g,
                                            const Subspace<typename F::Elem>& ambient,
                                            const Subspace<typename F::Elem>& s) {
    using E = typename F::Elem;
    if (!ambient.contains(s))
        throw DimensionMismatch("largest_ideal_in: seed subspace not inside the ambient subalgebra");
    Subspace<E> J = s;
    while (true) {
        Subspace<E> next = relative_centralizer(g, J, ambient, J);
        if (next == J) return J;
        J = next;
    }
}

template <class F>
Subspace<typename F::Elem> largest_ideal_in(const LieAlgebra<F>& g,
                                            const Subspace<typename F::Elem>& s) {
    return largest_ideal_in(g, g.full(), s);
}

/// Quotient by an ideal: basis classes of the coordinates complementary to
/// j's pivots, with the projection (q x n) and a linear section (n x q).
template <class F>
struct QuotientResult {
    LieAlgebra<F> algebra;
    Mat<typename F::Elem> projection;
    Mat<typename F::Elem> section;
};

template <class F>
QuotientResult<F> quotient(const LieAlgebra<F>& g, const Subspace<typename F::Elem>& j) {
    using E = typename F::Elem;
    if (!is_ideal(g, j)) throw NotAnIdeal("quotient by a subspace that is not an ideal of " + g.name);
    std::vector<bool> is_piv(static_cast<std::size_t>(g.n), false);
    for (int c : j.pivots) is_piv[static_cast<std::size_t>(c)] = true;
    std::vector<int> keep;
    for (int c = 0; c < g.n; ++c)
        if (!is_piv[static_cast<std::size_t>(c)]) keep.push_back(c);
    int q = static_cast<int>(keep.size());

    // row r of proj reads off coordinate keep[r] of the reduction mod j
    Mat<E> proj(q, g.n);
    for (int c = 0; c < g.n; ++c) {
        Vec<E> red = j.reduce(g.basis_vector(c));
        for (int r = 0; r < q; ++r)
            proj.at(r, c) = red[static_cast<std::size_t>(keep[static_cast<std::size_t>(r)])];
    }
    Mat<E> sect(g.n, q);
    for (int r = 0; r < q; ++r) sect.at(keep[static_cast<std::size_t>(r)], r) = g.field.one();

    std::vector<std::string> labels;
    for (int c : keep) labels.push_back(g.labels[static_cast<std::size_t>(c)]);
    std::vector<std::tuple<int, int, Vec<E>>> entries;
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b) {
            Vec<E> br = g.bracket_basis(keep[static_cast<std::size_t>(a)], keep[static_cast<std::size_t>(b)]);
            entries.emplace_back(a, b, mat_apply(proj, br));
        }
    QuotientResult<F> out{make_algebra(g.field, g.name + "/j", labels, entries), proj, sect};
    return out;
}

/// A subalgebra reborn as an algebra in its own right, with the basis matrix
/// (rows = ambient coordinates of the new basis vectors).
template <class F>
struct SubalgebraResult {
    LieAlgebra<F> algebra;
    std::vector<Vec<typename F::Elem>> basis; // = s.rows
};

template <class F>
SubalgebraResult<F> subalgebra_as_algebra(const LieAlgebra<F>& g,
                                          const Subspace<typename F::Elem>& s) {
    using E = typename F::Elem;
    if (!is_subalgebra(g, s))
        throw InvalidAlgebra("subspace of " + g.name + " is not closed under the bracket");
    int k = s.dim();
    // RREF basis: the coefficient of row a in a member v is v[pivots[a]]
    auto coords = [&](const Vec<E>& v) {
        Vec<E> t(static_cast<std::size_t>(k), g.field.zero());
        for (int a = 0; a < k; ++a) t[static_cast<std::size_t>(a)] = v[static_cast<std::size_t>(s.pivots[static_cast<std::size_t>(a)])];
        return t;
    };
    std::vector<std::string> labels;
    for (int a = 0; a < k; ++a) labels.push_back(g.labels[static_cast<std::size_t>(s.pivots[static_cast<std::size_t>(a)])]);
    std::vector<std::tuple<int, int, Vec<E>>> entries;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            entries.emplace_back(a, b, coords(g.bracket(s.rows[static_cast<std::size_t>(a)], s.rows[static_cast<std::size_t>(b)])));
    return SubalgebraResult<F>{make_algebra(g.field, g.name + "|sub", labels, entries), s.rows};
}

/// Maximal abelian-mod-j subalgebra of z2pre, grown greedily from z1pre.
/// Candidates are taken from the echelon basis of the current relative
/// centralizer, echelonized under the column order `perm`; the first basis
/// vector outside the running subalgebra is adjoined.  At the fixpoint the
/// centralizer equals the subalgebra itself, which certifies maximality.
template <class F>
Subspace<typename F::Elem> maximal_abelian_rel(const LieAlgebra<F>& g,
                                               const Subspace<typename F::Elem>& j,
                                               const Subspace<typename F::Elem>& z1pre,
                                               const Subspace<typename F::Elem>& z2pre,
                                               const std::vector<int>& perm) {
    using E = typename F::Elem;
    Subspace<E> A = z1pre;
    while (true) {
        Subspace<E> C = relative_centralizer(g, z2pre, A, j);
        if (C == A) return A;
        std::vector<Vec<E>> cand = C.rows;
        rref_in_order(cand, perm);
        bool grew = false;
        for (const auto& v : cand) {
            if (A.contains(v)) continue;
            std::vector<Vec<E>> rows = A.rows;
            rows.push_back(v);
            A = span(g.n, std::move(rows));
            grew = true;
            break;
        }
        if (!grew) throw Error("maximal abelian growth loop failed to extend");
    }
}

template <class F>
Subspace<typename F::Elem> maximal_abelian_in_z2(const LieAlgebra<F>& g,
                                                 const std::vector<int>& perm) {
    using E = typename F::Elem;
    Subspace<E> zero = zero_subspace<E>(g.n);
    Subspace<E> z1 = center(g);
    Subspace<E> z2 = relative_centralizer(g, g.full(), g.full(), z1);
    return maximal_abelian_rel(g, zero, z1, z2, perm);
}

template <class F>
Subspace<typename F::Elem> maximal_abelian_in_z2(const LieAlgebra<F>& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.n));
    std::iota(perm.begin(), perm.end(), 0);
    return maximal_abelian_in_z2(g, perm);
}

} // namespace kirillov
