#pragma once
#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "kirillov/ch_group.hpp"
#include "kirillov/polarization.hpp"
#include "kirillov/rng.hpp"

namespace kirillov {

/// Ad*(exp x)(f) = f o Ad(exp(-x)).
template <class F>
Vec<typename F::Elem> coadjoint_act(const LieAlgebra<F>& g, const Vec<typename F::Elem>& xlog,
                                    const Vec<typename F::Elem>& f) {
    using E = typename F::Elem;
    Mat<E> ad = ad_exp_matrix(g, group_inv(g, xlog));
    Vec<E> out(static_cast<std::size_t>(g.n), g.field.zero());
    for (int j = 0; j < g.n; ++j) {
        E acc = g.field.zero();
        for (int i = 0; i < g.n; ++i) acc += f[static_cast<std::size_t>(i)] * ad.at(i, j);
        out[static_cast<std::size_t>(j)] = acc;
    }
    return out;
}

/// mixed-radix index of an F_p coordinate tuple, first coordinate most
/// significant; index order is lexicographic order on tuples
inline std::uint32_t fp_vec_index(const Vec<Fp>& v, std::uint64_t p) {
    std::uint32_t idx = 0;
    for (const auto& c : v) idx = static_cast<std::uint32_t>(idx * p + c.r);
    return idx;
}

inline Vec<Fp> fp_vec_of_index(std::uint32_t idx, int n, const FpField& K) {
    Vec<Fp> v(static_cast<std::size_t>(n), K.zero());
    for (int i = n - 1; i >= 0; --i) {
        v[static_cast<std::size_t>(i)] = Fp{idx % K.p, K.p};
        idx = static_cast<std::uint32_t>(idx / K.p);
    }
    return v;
}

inline std::uint64_t pow_u64(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

/// Coadjoint orbit.  Finite backend: the full sorted point set.  Q backend:
/// representative plus the orbit's tangent dimension rank(B_f).
template <class E>
struct CoadjointOrbit {
    Vec<E> representative;
    std::vector<Vec<E>> points; // finite backend only, sorted by coordinate tuple
    int tangent_dim = 0;
    bool enumerated = false;
    std::size_t size() const { return enumerated ? points.size() : 0; }
};

inline CoadjointOrbit<Fp> orbit(const LieAlgebra<FpField>& g, const Vec<Fp>& f,
                                std::uint64_t bound) {
    std::uint64_t N = pow_u64(g.field.p, g.n);
    if (N > bound)
        throw EnumerationTooLarge("group order " + std::to_string(N) + " exceeds bound " +
                                  std::to_string(bound));
    CoadjointOrbit<Fp> o;
    o.tangent_dim = form_rank(g, f);
    o.enumerated = true;
    std::vector<bool> seen(static_cast<std::size_t>(N), false);
    for (std::uint32_t xi = 0; xi < N; ++xi) {
        Vec<Fp> im = coadjoint_act(g, fp_vec_of_index(xi, g.n, g.field), f);
        std::uint32_t ii = fp_vec_index(im, g.field.p);
        if (!seen[ii]) {
            seen[ii] = true;
            o.points.push_back(std::move(im));
        }
    }
    std::sort(o.points.begin(), o.points.end(),
              [&](const Vec<Fp>& a, const Vec<Fp>& b) {
                  return fp_vec_index(a, g.field.p) < fp_vec_index(b, g.field.p);
              });
    o.representative = o.points.front();
    return o;
}

inline CoadjointOrbit<Rat> orbit(const LieAlgebra<QField>& g, const Vec<Rat>& f,
                                 std::uint64_t /*bound*/) {
    CoadjointOrbit<Rat> o;
    o.representative = f;
    o.tangent_dim = form_rank(g, f);
    o.enumerated = false;
    return o;
}

/// Demands the full point set; over Q that is not a thing we can enumerate.
template <class F>
const std::vector<Vec<typename F::Elem>>& orbit_points(
    const CoadjointOrbit<typename F::Elem>& o) {
    if (!o.enumerated)
        throw BackendUnsupported("orbit enumeration is only available over finite fields");
    return o.points;
}

/// All of g* over F_p split into coadjoint orbits, ordered by their least
/// representatives.
inline std::vector<CoadjointOrbit<Fp>> orbit_partition(const LieAlgebra<FpField>& g,
                                                       std::uint64_t bound) {
    std::uint64_t N = pow_u64(g.field.p, g.n);
    if (N > bound)
        throw EnumerationTooLarge("dual space size " + std::to_string(N) + " exceeds bound " +
                                  std::to_string(bound));
    std::vector<CoadjointOrbit<Fp>> orbits;
    std::vector<bool> claimed(static_cast<std::size_t>(N), false);
    for (std::uint32_t fi = 0; fi < N; ++fi) {
        if (claimed[fi]) continue;
        CoadjointOrbit<Fp> o = orbit(g, fp_vec_of_index(fi, g.n, g.field), bound);
        for (const auto& pt : o.points) claimed[fp_vec_index(pt, g.field.p)] = true;
        orbits.push_back(std::move(o));
    }
    return orbits;
}

/// Exact stabilizer-set and orbit-set identities around a polarization chain:
///   {x in G : Ad*(x)f - f in r-perp} = exp(r)   and   Ad*(exp r)f = f + r-perp.
/// Finite backends check both as full set equalities; over Q the membership
/// direction is sampled on r and the violation direction on random x outside
/// exp(r).  Any failure throws IdentityViolation naming the witness.
struct OrbitIdentityReport {
    std::size_t group_checked = 0;
    std::size_t r_set_size = 0;
    std::size_t orbit_set_size = 0;
};

inline std::string fp_vec_to_text(const Vec<Fp>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i].r);
    }
    return s + ")";
}

inline OrbitIdentityReport check_orbit_identities(const LieAlgebra<FpField>& g, const Vec<Fp>& f,
                                                  const PolarizationChain<Fp>& pc,
                                                  std::uint64_t bound) {
    std::uint64_t N = pow_u64(g.field.p, g.n);
    if (N > bound)
        throw EnumerationTooLarge("group order " + std::to_string(N) + " exceeds bound " +
                                  std::to_string(bound));
    Subspace<Fp> rperp = annihilator(g.field, pc.r);
    OrbitIdentityReport rep;
    rep.group_checked = static_cast<std::size_t>(N);

    std::vector<bool> orbit_lhs(static_cast<std::size_t>(N), false); // Ad*(exp r)f
    for (std::uint32_t xi = 0; xi < N; ++xi) {
        Vec<Fp> xlog = fp_vec_of_index(xi, g.n, g.field);
        Vec<Fp> moved = coadjoint_act(g, xlog, f);
        bool in_R = pc.r.contains(xlog);
        bool diff_in_perp = rperp.contains(vec_sub(moved, f));
        if (in_R != diff_in_perp)
            throw IdentityViolation("x = exp" + fp_vec_to_text(xlog) +
                                    (in_R ? " lies in exp(r) but Ad*(x)f - f escapes r-perp"
                                          : " lies outside exp(r) yet Ad*(x)f - f lands in r-perp"));
        if (in_R) {
            ++rep.r_set_size;
            orbit_lhs[fp_vec_index(moved, g.field.p)] = true;
        }
    }
    // Ad*(R)f must equal f + r-perp pointwise
    std::size_t rhs = 0;
    for (const auto& w : all_vectors(rperp, g.field)) {
        ++rhs;
        std::uint32_t ii = fp_vec_index(vec_add(f, w), g.field.p);
        if (!orbit_lhs[ii])
            throw IdentityViolation("f + " + fp_vec_to_text(w) + " missed by Ad*(exp r)f");
        orbit_lhs[ii] = false;
    }
    for (std::uint32_t i = 0; i < N; ++i)
        if (orbit_lhs[i])
            throw IdentityViolation("Ad*(exp r)f contains a point outside f + r-perp at index " +
                                    std::to_string(i));
    rep.orbit_set_size = rhs;
    return rep;
}

inline OrbitIdentityReport check_orbit_identities(const LieAlgebra<QField>& g, const Vec<Rat>& f,
                                                  const PolarizationChain<Rat>& pc,
                                                  std::size_t samples, Rng& rng) {
    Subspace<Rat> rperp = annihilator(g.field, pc.r);
    OrbitIdentityReport rep;
    auto rand_rat = [&]() { return Rat(rng.range(-9, 9), rng.range(1, 4)); };
    for (std::size_t s = 0; s < samples; ++s) {
        // membership direction: X in r
        Vec<Rat> xlog(static_cast<std::size_t>(g.n), Rat(0));
        for (const auto& row : pc.r.rows) vec_add_scaled(xlog, rand_rat(), row);
        Vec<Rat> moved = coadjoint_act(g, xlog, f);
        if (!rperp.contains(vec_sub(moved, f)))
            throw IdentityViolation("X in r but Ad*(exp X)f - f escapes r-perp (sample " +
                                    std::to_string(s) + ")");
        ++rep.r_set_size;
        // violation direction: x outside exp(r), expected to move f off f + r-perp
        if (pc.r.dim() == g.n) continue; // r = g: no outside to sample
        Vec<Rat> ylog;
        do {
            ylog.assign(static_cast<std::size_t>(g.n), Rat(0));
            for (std::size_t i = 0; i < ylog.size(); ++i) ylog[i] = rand_rat();
        } while (pc.r.contains(ylog));
        Vec<Rat> moved2 = coadjoint_act(g, ylog, f);
        if (rperp.contains(vec_sub(moved2, f)))
            throw IdentityViolation("x outside exp(r) with Ad*(x)f - f still in r-perp (sample " +
                                    std::to_string(s) + ")");
        ++rep.group_checked;
    }
    rep.orbit_set_size = rep.r_set_size;
    return rep;
}

} // namespace kirillov
