#pragma once
#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "kirillov/coadjoint.hpp"
#include "kirillov/lie_algebra.hpp"

namespace kirillov {

/// The CH group on all p^n log-vectors of an F_p algebra, fully tabulated.
/// Elements are identified with their mixed-radix indices (fp_vec_index), so
/// index order is lexicographic order on log-coordinates and index 0 is the
/// identity.  exp and log are the identity on coordinates throughout.
struct FiniteGroupTable {
    const LieAlgebra<FpField>* g = nullptr;
    std::uint64_t p = 0;
    int n = 0;
    std::uint32_t N = 0;
    std::vector<std::uint32_t> mul_table; // N*N, row-major
    std::vector<std::uint32_t> inv_table;
    std::vector<std::vector<std::uint32_t>> conjugacy_classes; // each sorted; reps ascending
    std::vector<std::uint32_t> class_of;                       // element -> class number
    std::vector<std::uint32_t> center;                         // sorted

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return mul_table[static_cast<std::size_t>(a) * N + b];
    }
    std::uint32_t inv(std::uint32_t a) const { return inv_table[a]; }
    std::uint32_t conjugate(std::uint32_t x, std::uint32_t s) const {
        return mul(mul(x, s), inv(x));
    }
    std::uint32_t representative(std::uint32_t cls) const {
        return conjugacy_classes[cls].front();
    }
    Vec<Fp> log_of(std::uint32_t i) const { return fp_vec_of_index(i, n, g->field); }
    std::string signature() const {
        return g->name + "|p=" + std::to_string(p) + "|n=" + std::to_string(n);
    }
};

inline FiniteGroupTable build_table(const LieAlgebra<FpField>& g, std::uint64_t bound) {
    FiniteGroupTable t;
    t.g = &g;
    t.p = g.field.p;
    t.n = g.n;
    std::uint64_t N = pow_u64(t.p, t.n);
    if (N > bound)
        throw EnumerationTooLarge("group order " + std::to_string(N) + " exceeds bound " +
                                  std::to_string(bound));
    t.N = static_cast<std::uint32_t>(N);

    std::vector<Vec<Fp>> logs(t.N);
    for (std::uint32_t i = 0; i < t.N; ++i) logs[i] = fp_vec_of_index(i, t.n, g.field);

    t.mul_table.resize(static_cast<std::size_t>(t.N) * t.N);
    for (std::uint32_t a = 0; a < t.N; ++a)
        for (std::uint32_t b = 0; b < t.N; ++b)
            t.mul_table[static_cast<std::size_t>(a) * t.N + b] =
                fp_vec_index(ch_series(g, logs[a], logs[b]), t.p);

    t.inv_table.resize(t.N);
    for (std::uint32_t a = 0; a < t.N; ++a)
        t.inv_table[a] = fp_vec_index(group_inv(g, logs[a]), t.p);

    // ascending sweep makes each representative the least index in its class
    t.class_of.assign(t.N, 0);
    std::vector<bool> claimed(t.N, false);
    for (std::uint32_t s = 0; s < t.N; ++s) {
        if (claimed[s]) continue;
        std::vector<bool> inClass(t.N, false);
        for (std::uint32_t x = 0; x < t.N; ++x) inClass[t.conjugate(x, s)] = true;
        std::vector<std::uint32_t> cls;
        for (std::uint32_t e = 0; e < t.N; ++e)
            if (inClass[e]) {
                cls.push_back(e);
                claimed[e] = true;
                t.class_of[e] = static_cast<std::uint32_t>(t.conjugacy_classes.size());
            }
        t.conjugacy_classes.push_back(std::move(cls));
    }
    for (const auto& cls : t.conjugacy_classes)
        if (cls.size() == 1) t.center.push_back(cls.front());
    return t;
}

/// Indices of exp(S) = {exp X : X in S}, sorted.  exp is coordinate-identity.
inline std::vector<std::uint32_t> exp_of_subspace(const FiniteGroupTable& t,
                                                  const Subspace<Fp>& s) {
    std::vector<std::uint32_t> out;
    for (const auto& v : all_vectors(s, t.g->field)) out.push_back(fp_vec_index(v, t.p));
    std::sort(out.begin(), out.end());
    return out;
}

/// Group upper central series Z_1 <= Z_2 <= ... computed purely from the
/// multiplication table: Z_(i+1) = {x : every commutator (x,y) lies in Z_i}.
/// Returned like the algebra-side series, ending at the full group.
inline std::vector<std::vector<std::uint32_t>> group_upper_central_series(
    const FiniteGroupTable& t) {
    std::vector<std::vector<std::uint32_t>> series;
    std::vector<bool> member(t.N, false);
    member[0] = true; // Z_0 = {1}
    std::size_t prev = 1;
    for (;;) {
        std::vector<bool> next(t.N, false);
        std::vector<std::uint32_t> layer;
        for (std::uint32_t x = 0; x < t.N; ++x) {
            bool ok = true;
            for (std::uint32_t y = 0; y < t.N && ok; ++y) {
                std::uint32_t c = t.mul(t.mul(x, y), t.mul(t.inv(x), t.inv(y)));
                ok = member[c];
            }
            if (ok) {
                next[x] = true;
                layer.push_back(x);
            }
        }
        if (layer.size() == prev)
            throw InvalidAlgebra("group upper central series stalled below the full group");
        prev = layer.size();
        member = std::move(next);
        series.push_back(std::move(layer));
        if (prev == t.N) return series;
    }
}

/// Commutator subgroup: closure of all (x,y) = x y x^-1 y^-1 under the group
/// operation.  Sorted indices.
inline std::vector<std::uint32_t> group_commutator_subgroup(const FiniteGroupTable& t) {
    std::vector<bool> member(t.N, false);
    std::vector<std::uint32_t> elems;
    auto add = [&](std::uint32_t e) {
        if (!member[e]) {
            member[e] = true;
            elems.push_back(e);
        }
    };
    add(0);
    for (std::uint32_t x = 0; x < t.N; ++x)
        for (std::uint32_t y = 0; y < t.N; ++y)
            add(t.mul(t.mul(x, y), t.mul(t.inv(x), t.inv(y))));
    // incremental closure: every pair is multiplied (both orders) once the
    // later of the two has become the outer element
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            add(t.mul(elems[i], elems[j]));
            add(t.mul(elems[j], elems[i]));
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

} // namespace kirillov
