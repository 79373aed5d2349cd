#pragma once
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "kirillov/algebra_io.hpp"
#include "kirillov/characters.hpp"
#include "kirillov/config.hpp"
#include "kirillov/format.hpp"
#include "kirillov/unipotent.hpp"

namespace kirillov {

inline Rat random_scalar(const QField&, Rng& rng) {
    return Rat(rng.range(-9, 9), rng.range(1, 4));
}
inline Fp random_scalar(const FpField& K, Rng& rng) { return Fp{rng.below(K.p), K.p}; }

template <class F>
Vec<typename F::Elem> random_vec(const F& K, int n, Rng& rng) {
    Vec<typename F::Elem> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v.push_back(random_scalar(K, rng));
    return v;
}

/// Fixed corpus order; every verification sweep walks this list.
inline const std::vector<std::string>& corpus_keys() {
    static const std::vector<std::string> keys = {
        "heisenberg_q", "heisenberg_f3", "heisenberg_f5", "n4_q",      "n4_f5",  "abelian2_q",
        "abelian2_f3",  "tr0_3_q",       "tr0_4_q",       "tr0_5_q",   "dim6_class3_q"};
    return keys;
}

struct VerifyContext {
    std::vector<std::pair<std::string, AnyAlgebra>> algebras;
    std::map<std::string, FiniteGroupTable> tables;

    const AnyAlgebra& get(const std::string& key) const {
        for (const auto& [k, a] : algebras)
            if (k == key) return a;
        throw Error("corpus is missing '" + key + "'");
    }
    const LieAlgebra<QField>& q(const std::string& key) const {
        return std::get<LieAlgebra<QField>>(get(key));
    }
    const LieAlgebra<FpField>& fp(const std::string& key) const {
        return std::get<LieAlgebra<FpField>>(get(key));
    }
    const FiniteGroupTable& table(const std::string& key, std::uint64_t bound) {
        auto it = tables.find(key);
        if (it == tables.end()) it = tables.emplace(key, build_table(fp(key), bound)).first;
        return it->second;
    }
};

inline VerifyContext load_corpus(const Config& cfg) {
    VerifyContext ctx;
    for (const auto& key : corpus_keys())
        ctx.algebras.emplace_back(key, load_algebra(cfg.corpus_dir + "/" + key + ".json"));
    return ctx;
}

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

/// Deterministic per-(check, algebra) stream so corpus order changes in one
/// check never reshuffle another.
inline Rng check_rng(const Config& cfg, int check_id, std::size_t algebra_index) {
    return Rng(cfg.seed + 1000003u * static_cast<std::uint64_t>(check_id) +
               9176u * static_cast<std::uint64_t>(algebra_index));
}

template <class F>
bool ch_component_sweep(const LieAlgebra<F>& g, std::size_t samples, Rng& rng,
                        std::string& witness) {
    using E = typename F::Elem;
    for (std::size_t s = 0; s < samples; ++s) {
        Vec<E> x = random_vec(g.field, g.n, rng);
        Vec<E> y = random_vec(g.field, g.n, rng);
        std::vector<Vec<E>> layers = ch_components(g, x, y);
        Vec<E> sum = zero_vec(g.n, g.field.zero());
        for (const auto& l : layers) sum = vec_add(sum, l);
        if (!(sum == ch_series(g, x, y))) {
            witness = g.name + ": component sum differs from the series";
            return false;
        }
        if (!(layers[0] == vec_add(x, y))) {
            witness = g.name + ": Z1 != X+Y at sample " + std::to_string(s);
            return false;
        }
        if (layers.size() >= 2) {
            Vec<E> z2 = vec_scale(g.field.inv_factorial(2), g.bracket(x, y));
            if (!(layers[1] == z2)) {
                witness = g.name + ": Z2 != (1/2)[X,Y] at sample " + std::to_string(s);
                return false;
            }
        }
        if (layers.size() >= 3) {
            E inv12 = inv(g.field.from_int(12));
            Vec<E> z3 = vec_scale(inv12, vec_add(g.bracket(x, g.bracket(x, y)),
                                                 g.bracket(y, g.bracket(y, x))));
            if (!(layers[2] == z3)) {
                witness = g.name + ": Z3 mismatch at sample " + std::to_string(s);
                return false;
            }
        }
    }
    return true;
}

template <class F>
bool assoc_sweep(const LieAlgebra<F>& g, std::size_t triples, Rng& rng, std::string& witness) {
    using E = typename F::Elem;
    for (std::size_t s = 0; s < triples; ++s) {
        Vec<E> x = random_vec(g.field, g.n, rng);
        Vec<E> y = random_vec(g.field, g.n, rng);
        Vec<E> z = random_vec(g.field, g.n, rng);
        if (!(group_mul(g, group_mul(g, x, y), z) == group_mul(g, x, group_mul(g, y, z)))) {
            witness = g.name + ": associativity fails at sample " + std::to_string(s);
            return false;
        }
    }
    return true;
}

} // namespace detail

inline CheckResult check_ch_components(VerifyContext& ctx, const Config& cfg) {
    CheckResult r{1, "ch-components", true, ""};
    for (std::size_t i = 0; i < ctx.algebras.size(); ++i) {
        Rng rng = detail::check_rng(cfg, 1, i);
        bool ok = with_algebra(ctx.algebras[i].second, [&](const auto& g) {
            return detail::ch_component_sweep(g, cfg.samples, rng, r.detail);
        });
        if (!ok) {
            r.pass = false;
            return r;
        }
    }
    r.detail = std::to_string(cfg.samples) + " pairs x " + std::to_string(ctx.algebras.size()) +
               " algebras, exact";
    return r;
}

inline CheckResult check_ch_associativity(VerifyContext& ctx, const Config& cfg,
                                          std::size_t triples = 50) {
    CheckResult r{2, "ch-associativity", true, ""};
    for (std::size_t i = 0; i < ctx.algebras.size(); ++i) {
        Rng rng = detail::check_rng(cfg, 2, i);
        bool ok = with_algebra(ctx.algebras[i].second, [&](const auto& g) {
            return detail::assoc_sweep(g, triples, rng, r.detail);
        });
        if (!ok) {
            r.pass = false;
            return r;
        }
    }
    r.detail = std::to_string(triples) + " triples per algebra, exact";
    return r;
}

inline CheckResult check_matrix_oracle(VerifyContext& ctx, const Config& cfg,
                                       std::size_t pairs = 100) {
    CheckResult r{3, "matrix-oracle", true, ""};
    const std::string keys[] = {"tr0_3_q", "tr0_4_q", "tr0_5_q"};
    const int sizes[] = {3, 4, 5};
    for (int t = 0; t < 3; ++t) {
        const auto& g = ctx.q(keys[t]);
        int n = sizes[t];
        Rng rng = detail::check_rng(cfg, 3, static_cast<std::size_t>(t));
        for (std::size_t s = 0; s < pairs; ++s) {
            Vec<Rat> x = random_vec(g.field, g.n, rng);
            Vec<Rat> y = random_vec(g.field, g.n, rng);
            Mat<Rat> X = tr0_vec_to_mat(n, g.field, x);
            Mat<Rat> Y = tr0_vec_to_mat(n, g.field, y);
            Mat<Rat> lhs = matrix_exp(tr0_vec_to_mat(n, g.field, ch_series(g, x, y)), g.field);
            Mat<Rat> rhs = mat_mul(matrix_exp(X, g.field), matrix_exp(Y, g.field));
            if (!(lhs == rhs)) {
                r.pass = false;
                r.detail = g.name + ": exp(ch(X,Y)) != exp(X)exp(Y) at sample " +
                           std::to_string(s);
                return r;
            }
            if (!(matrix_log(matrix_exp(X, g.field), g.field) == X)) {
                r.pass = false;
                r.detail = g.name + ": log(exp(X)) != X at sample " + std::to_string(s);
                return r;
            }
            // unipotent built directly, not through exp
            Mat<Rat> U = mat_add(Mat<Rat>::identity(n, g.field.one()), Y);
            if (!(matrix_exp(matrix_log(U, g.field), g.field) == U)) {
                r.pass = false;
                r.detail = g.name + ": exp(log(U)) != U at sample " + std::to_string(s);
                return r;
            }
        }
    }
    r.detail = std::to_string(pairs) + " pairs on Tr0(3),Tr0(4),Tr0(5), exact";
    return r;
}

inline CheckResult check_group_correspondences(VerifyContext& ctx, const Config& cfg) {
    CheckResult r{4, "group-correspondences", true, ""};
    for (const std::string key : {"heisenberg_f3", "n4_f5"}) {
        const auto& g = ctx.fp(key);
        const auto& t = ctx.table(key, cfg.enumeration_bound);
        auto group_ucs = group_upper_central_series(t);
        auto alg_ucs = upper_central_series(g);
        if (group_ucs.size() != alg_ucs.size()) {
            r.pass = false;
            r.detail = key + ": central series lengths differ";
            return r;
        }
        for (std::size_t i = 0; i < group_ucs.size(); ++i)
            if (group_ucs[i] != exp_of_subspace(t, alg_ucs[i])) {
                r.pass = false;
                r.detail = key + ": Z_" + std::to_string(i + 1) + " != exp of the algebra term";
                return r;
            }
        if (group_commutator_subgroup(t) != exp_of_subspace(t, derived_subalgebra(g))) {
            r.pass = false;
            r.detail = key + ": commutator subgroup != exp of the derived subalgebra";
            return r;
        }
    }
    r.detail = "central series and commutator subgroups match exp images";
    return r;
}

namespace detail {

template <class F>
std::vector<Vec<typename F::Elem>> bundled_functionals(const LieAlgebra<F>& g, Rng& rng,
                                                       std::size_t extra = 5) {
    using E = typename F::Elem;
    std::vector<Vec<E>> fs;
    fs.push_back(zero_vec(g.n, g.field.zero()));
    for (int i = 0; i < g.n; ++i) fs.push_back(g.basis_vector(i)); // dual basis coords
    for (std::size_t s = 0; s < extra; ++s) fs.push_back(random_vec(g.field, g.n, rng));
    return fs;
}

template <class F>
bool polarization_sweep(const LieAlgebra<F>& g, const Vec<typename F::Elem>& f,
                        std::string& witness) {
    PolarizationChain<typename F::Elem> pc = standard_polarization(g, f);
    if (!is_subordinate(g, f, pc.r)) {
        witness = g.name + ": r is not subordinate";
        return false;
    }
    if (!is_polarizing(g, f, pc.r, PolarizingMode::dimension)) {
        witness = g.name + ": 2 dim r != 2n - rank B_f";
        return false;
    }
    for (std::size_t i = 0; i < pc.levels.size(); ++i) {
        if (!pc.levels[i].g.contains(pc.r)) {
            witness = g.name + ": r escapes chain level " + std::to_string(i);
            return false;
        }
        PolarizationChain<typename F::Elem> again =
            standard_polarization_at(g, f, pc.levels[i].g, pc.perm);
        if (again.grade != pc.grade - static_cast<int>(i) || !(again.r == pc.r)) {
            witness = g.name + ": grade fails to decrement at level " + std::to_string(i);
            return false;
        }
    }
    if constexpr (F::finite) {
        if (g.n <= 5 && !is_polarizing(g, f, pc.r, PolarizingMode::exhaustive)) {
            witness = g.name + ": a strictly larger subordinate subalgebra exists";
            return false;
        }
    }
    return true;
}

} // namespace detail

inline CheckResult check_polarizations(VerifyContext& ctx, const Config& cfg) {
    CheckResult r{5, "polarization-recursion", true, ""};
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < ctx.algebras.size(); ++i) {
        Rng rng = detail::check_rng(cfg, 5, i);
        bool ok = with_algebra(ctx.algebras[i].second, [&](const auto& g) {
            for (const auto& f : detail::bundled_functionals(g, rng)) {
                ++pairs;
                if (!detail::polarization_sweep(g, f, r.detail)) return false;
            }
            return true;
        });
        if (!ok) {
            r.pass = false;
            return r;
        }
    }
    r.detail = std::to_string(pairs) + " (algebra, f) pairs: subordinate, polarizing, grades exact";
    return r;
}

inline CheckResult check_orbit_identities_all(VerifyContext& ctx, const Config& cfg,
                                              std::uint64_t small_bound = 243) {
    CheckResult r{6, "orbit-identities", true, ""};
    std::size_t functionals = 0;
    for (const auto& [key, any] : ctx.algebras) {
        if (!std::holds_alternative<LieAlgebra<FpField>>(any)) continue;
        const auto& g = std::get<LieAlgebra<FpField>>(any);
        if (pow_u64(g.field.p, g.n) > small_bound) continue;
        std::uint64_t N = pow_u64(g.field.p, g.n);
        for (std::uint32_t fi = 0; fi < N; ++fi) {
            Vec<Fp> f = fp_vec_of_index(fi, g.n, g.field);
            PolarizationChain<Fp> pc = standard_polarization(g, f);
            try {
                check_orbit_identities(g, f, pc, cfg.enumeration_bound);
            } catch (const IdentityViolation& e) {
                r.pass = false;
                r.detail = key + ", f #" + std::to_string(fi) + ": " + e.what();
                return r;
            }
            ++functionals;
        }
    }
    r.detail = std::to_string(functionals) + " functionals, both set identities exact";
    return r;
}

inline CheckResult check_kirillov_audits(VerifyContext& ctx, const Config& cfg) {
    CheckResult r{7, "kirillov-audit", true, ""};
    struct Expect {
        std::string key;
        std::size_t orbits;
        std::uint64_t sumsq;
    };
    const std::vector<Expect> want = {{"abelian2_f3", 9, 9},
                                      {"heisenberg_f3", 11, 27},
                                      {"heisenberg_f5", 29, 125},
                                      {"n4_f5", 49, 625}};
    for (const auto& w : want) {
        AuditReport rep = kirillov_audit(ctx.fp(w.key), cfg.enumeration_bound);
        for (const auto& c : rep.clauses)
            if (!c.informational && !c.pass) {
                r.pass = false;
                r.detail = w.key + ": clause " + c.name + ": " + c.detail;
                return r;
            }
        if (rep.orbit_count != w.orbits) {
            r.pass = false;
            r.detail = w.key + ": expected " + std::to_string(w.orbits) + " orbits, got " +
                       std::to_string(rep.orbit_count);
            return r;
        }
        std::uint64_t s = 0;
        for (auto d : rep.degrees) s += d * d;
        if (s != w.sumsq) {
            r.pass = false;
            r.detail = w.key + ": sum of squared degrees " + std::to_string(s) + " != " +
                       std::to_string(w.sumsq);
            return r;
        }
    }
    r.detail = "audits pass: 9/27, 11/27, 29/125, 49/625 orbits over |G|";
    return r;
}

inline CheckResult check_orbit_constancy(VerifyContext& ctx, const Config& cfg) {
    CheckResult r{8, "orbit-constancy", true, ""};
    const auto& g = ctx.fp("heisenberg_f3");
    const auto& t = ctx.table("heisenberg_f3", cfg.enumeration_bound);
    std::uint64_t N = pow_u64(g.field.p, g.n);
    std::vector<ClassFunction> chi(N);
    std::vector<bool> have(N, false);
    auto character_of = [&](std::uint32_t fi) -> const ClassFunction& {
        if (!have[fi]) {
            Vec<Fp> f = fp_vec_of_index(fi, g.n, g.field);
            chi[fi] = induced_character(f, standard_polarization(g, f), t);
            have[fi] = true;
        }
        return chi[fi];
    };
    for (std::uint32_t fi = 0; fi < N; ++fi) {
        Vec<Fp> f = fp_vec_of_index(fi, g.n, g.field);
        for (std::uint32_t xi = 0; xi < N; ++xi) {
            Vec<Fp> moved = coadjoint_act(g, fp_vec_of_index(xi, g.n, g.field), f);
            if (!(character_of(fp_vec_index(moved, g.field.p)) == character_of(fi))) {
                r.pass = false;
                r.detail = "f #" + std::to_string(fi) + " moved by x #" + std::to_string(xi) +
                           " changes the induced character";
                return r;
            }
        }
    }
    r.detail = "all " + std::to_string(N) + " functionals x " + std::to_string(N) +
               " group elements, characters constant on orbits";
    return r;
}

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool pass = true;
};

inline VerifyReport run_verify_all(const Config& cfg) {
    VerifyContext ctx = load_corpus(cfg);
    VerifyReport rep;
    rep.checks.push_back(check_ch_components(ctx, cfg));
    rep.checks.push_back(check_ch_associativity(ctx, cfg));
    rep.checks.push_back(check_matrix_oracle(ctx, cfg));
    rep.checks.push_back(check_group_correspondences(ctx, cfg));
    rep.checks.push_back(check_polarizations(ctx, cfg));
    rep.checks.push_back(check_orbit_identities_all(ctx, cfg));
    rep.checks.push_back(check_kirillov_audits(ctx, cfg));
    rep.checks.push_back(check_orbit_constancy(ctx, cfg));
    for (const auto& c : rep.checks)
        if (!c.pass) rep.pass = false;
    return rep;
}

inline void render_verify_text(const VerifyReport& rep, std::ostream& os) {
    for (const auto& c : rep.checks)
        os << "check " << c.id << " " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " ("
           << c.detail << ")\n";
    os << (rep.pass ? "verify-all: PASS" : "verify-all: FAIL") << "\n";
}

} // namespace kirillov
