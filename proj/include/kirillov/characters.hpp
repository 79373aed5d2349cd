#pragma once
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "kirillov/cyclotomic.hpp"
#include "kirillov/finite_group.hpp"

namespace kirillov {

/// Exact complex-valued class function on a tabulated group, one Q(zeta_p)
/// value per conjugacy class in table order.
struct ClassFunction {
    std::string table_sig;
    std::uint64_t p = 0;
    std::vector<CycQ> values;

    bool operator==(const ClassFunction& o) const {
        return table_sig == o.table_sig && values == o.values;
    }
    bool operator!=(const ClassFunction& o) const { return !(*this == o); }
};

inline ClassFunction trivial_character(const FiniteGroupTable& t) {
    ClassFunction c;
    c.table_sig = t.signature();
    c.p = t.p;
    c.values.assign(t.conjugacy_classes.size(), CycQ::from_rational(t.p, Rat(1)));
    return c;
}

/// chi = ind_R^G of eps(f(log .)) on R = exp(r), by the Frobenius formula
///   chi(s) = (1/|R|) * sum over x in G with x^-1 s x in R of eps(f(log(x^-1 s x))).
/// eps(a) = zeta_p^a, so the sum per class collapses to p residue counters.
inline ClassFunction induced_character(const Vec<Fp>& f, const PolarizationChain<Fp>& pc,
                                       const FiniteGroupTable& t) {
    if (pc.r.ambient != t.n)
        throw NotASubgroup("polarization chain ambient dimension does not match the table");
    std::vector<std::uint32_t> R = exp_of_subspace(t, pc.r);
    std::vector<bool> inR(t.N, false);
    for (std::uint32_t e : R) inR[e] = true;
    for (std::uint32_t a : R)
        for (std::uint32_t b : R)
            if (!inR[t.mul(a, b)])
                throw NotASubgroup("exp(r) is not closed under the table's multiplication");

    std::vector<std::uint32_t> fres(t.N, 0);
    for (std::uint32_t u = 0; u < t.N; ++u)
        fres[u] = static_cast<std::uint32_t>(functional_eval(f, t.log_of(u)).r);

    ClassFunction chi;
    chi.table_sig = t.signature();
    chi.p = t.p;
    chi.values.reserve(t.conjugacy_classes.size());
    for (const auto& cls : t.conjugacy_classes) {
        std::uint32_t s = cls.front();
        std::vector<std::uint64_t> cnt(t.p, 0);
        for (std::uint32_t x = 0; x < t.N; ++x) {
            std::uint32_t u = t.mul(t.mul(t.inv(x), s), x);
            if (inR[u]) ++cnt[fres[u]];
        }
        std::vector<Rat> coords(t.p, Rat(0));
        for (std::uint64_t r = 0; r < t.p; ++r)
            if (cnt[r]) coords[r] = Rat(cnt[r], R.size());
        chi.values.emplace_back(t.p, std::move(coords));
    }
    return chi;
}

/// (1/|G|) sum over s of chi(s) * conj(psi(s)); exact, and rational for the
/// character pairs this library produces.
inline Rat inner_product(const ClassFunction& a, const ClassFunction& b,
                         const FiniteGroupTable& t) {
    if (a.table_sig != t.signature() || b.table_sig != t.signature())
        throw TableMismatch("class functions come from a different table");
    CycQ acc = CycQ::zero(t.p);
    for (std::size_t c = 0; c < t.conjugacy_classes.size(); ++c)
        acc += (a.values[c] * b.values[c].conj()).scaled(Rat(t.conjugacy_classes[c].size()));
    acc = acc.scaled(Rat(1, t.N));
    return acc.to_rational();
}

inline std::uint64_t character_degree(const ClassFunction& chi) {
    // class 0 is the identity's class; the degree is a positive integer
    Rat d = chi.values[0].to_rational();
    return static_cast<std::uint64_t>(numerator(d));
}

struct CharacterTable {
    std::vector<Vec<Fp>> orbit_reps;
    std::vector<PolarizationChain<Fp>> chains;
    std::vector<ClassFunction> chars;
};

inline CharacterTable character_table(const LieAlgebra<FpField>& g, const FiniteGroupTable& t,
                                      std::uint64_t bound) {
    CharacterTable ct;
    for (const auto& o : orbit_partition(g, bound)) {
        ct.orbit_reps.push_back(o.representative);
        ct.chains.push_back(standard_polarization(g, o.representative));
        ct.chars.push_back(induced_character(o.representative, ct.chains.back(), t));
    }
    return ct;
}

struct ClauseResult {
    std::string name;
    bool pass = false;
    bool informational = false;
    std::string detail;
};

struct AuditReport {
    std::string algebra;
    std::uint64_t p = 0;
    std::size_t orbit_count = 0;
    std::size_t class_count = 0;
    std::vector<std::uint64_t> degrees;
    std::vector<ClauseResult> clauses;
    bool pass = false; // informational clauses do not gate
};

inline std::vector<std::vector<int>> tie_break_perms(int n) {
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> out;
    if (n <= 4) {
        do out.push_back(base);
        while (std::next_permutation(base.begin(), base.end()));
        return out;
    }
    out.push_back(base);
    std::reverse(base.begin(), base.end());
    out.push_back(base);
    Rng rng(7);
    for (int k = 0; k < 10; ++k) {
        std::vector<int> s(out.front());
        for (std::size_t i = s.size(); i > 1; --i)
            std::swap(s[i - 1], s[rng.below(i)]);
        out.push_back(std::move(s));
    }
    return out;
}

/// The full orbit-method cross-examination on one F_p algebra.  Clauses:
///   i    #coadjoint orbits = #conjugacy classes
///   ii   every induced character has <chi,chi> = 1
///   iii  characters from distinct orbits are pairwise distinct
///   iv   sum of chi(1)^2 = |G|
///   v    every maximal-abelian tie-break order yields the same character
///   vi   chi(1) = [G:R] and |orbit| = [G:R]^2
///   vii  chi(z) = chi(1) * eps(f(log z)) on the center
/// plus an informational comparison against the flat-orbit character formula
///   chi(1) * chi(s) = sum over h in the orbit of eps(h(log s)),
/// which is reported but never gates the audit.
inline AuditReport kirillov_audit(const LieAlgebra<FpField>& g, std::uint64_t bound) {
    FiniteGroupTable t = build_table(g, bound);
    std::vector<CoadjointOrbit<Fp>> orbits = orbit_partition(g, bound);
    AuditReport rep;
    rep.algebra = g.name;
    rep.p = t.p;
    rep.orbit_count = orbits.size();
    rep.class_count = t.conjugacy_classes.size();

    std::vector<PolarizationChain<Fp>> chains;
    std::vector<ClassFunction> chars;
    for (const auto& o : orbits) {
        chains.push_back(standard_polarization(g, o.representative));
        chars.push_back(induced_character(o.representative, chains.back(), t));
        rep.degrees.push_back(character_degree(chars.back()));
    }

    auto clause = [&](const std::string& name, bool pass, const std::string& detail,
                      bool info = false) {
        rep.clauses.push_back({name, pass, info, detail});
    };

    clause("i:orbits=classes", rep.orbit_count == rep.class_count,
           std::to_string(rep.orbit_count) + " orbits vs " + std::to_string(rep.class_count) +
               " classes");

    {
        bool ok = true;
        std::string w;
        for (std::size_t i = 0; i < chars.size() && ok; ++i) {
            Rat ip = inner_product(chars[i], chars[i], t);
            if (ip != 1) {
                ok = false;
                w = "orbit " + std::to_string(i) + " has <chi,chi> = " + ip.str();
            }
        }
        clause("ii:irreducible", ok, ok ? "all norms 1" : w);
    }

    {
        bool ok = true;
        std::string w;
        for (std::size_t i = 0; i < chars.size() && ok; ++i)
            for (std::size_t j = i + 1; j < chars.size() && ok; ++j)
                if (chars[i] == chars[j]) {
                    ok = false;
                    w = "orbits " + std::to_string(i) + " and " + std::to_string(j) +
                        " induce the same character";
                }
        clause("iii:injective", ok, ok ? "all characters distinct" : w);
    }

    {
        std::uint64_t s = 0;
        for (std::uint64_t d : rep.degrees) s += d * d;
        clause("iv:complete", s == t.N,
               "sum of squares " + std::to_string(s) + " vs |G| = " + std::to_string(t.N));
    }

    {
        bool ok = true;
        std::string w;
        auto perms = tie_break_perms(g.n);
        for (std::size_t i = 0; i < orbits.size() && ok; ++i)
            for (const auto& perm : perms) {
                PolarizationChain<Fp> pc = standard_polarization(g, orbits[i].representative, perm);
                if (induced_character(orbits[i].representative, pc, t) != chars[i]) {
                    ok = false;
                    w = "orbit " + std::to_string(i) + " changes character under a tie-break";
                    break;
                }
            }
        clause("v:polarization-independent", ok,
               ok ? std::to_string(perms.size()) + " tie-break orders agree" : w);
    }

    {
        bool ok = true;
        std::string w;
        for (std::size_t i = 0; i < orbits.size() && ok; ++i) {
            std::uint64_t index = t.N / pow_u64(t.p, static_cast<int>(chains[i].r.dim()));
            if (rep.degrees[i] != index) {
                ok = false;
                w = "orbit " + std::to_string(i) + " has chi(1) != [G:R]";
            } else if (orbits[i].points.size() != index * index) {
                ok = false;
                w = "orbit " + std::to_string(i) + " has size != [G:R]^2";
            }
        }
        clause("vi:degree=index", ok, ok ? "chi(1) = [G:R], |orbit| = [G:R]^2" : w);
    }

    {
        bool ok = true;
        std::string w;
        for (std::size_t i = 0; i < orbits.size() && ok; ++i) {
            CycQ deg = chars[i].values[0];
            for (std::uint32_t z : t.center) {
                CycQ want = deg * CycQ::zeta_power(
                                      t.p, static_cast<std::int64_t>(
                                               functional_eval(orbits[i].representative,
                                                               t.log_of(z))
                                                   .r));
                if (chars[i].values[t.class_of[z]] != want) {
                    ok = false;
                    w = "orbit " + std::to_string(i) + " breaks the central character at z=" +
                        std::to_string(z);
                    break;
                }
            }
        }
        clause("vii:central-character", ok, ok ? "central character is eps(f(log z))" : w);
    }

    {
        // informational only; not a claim the audit enforces
        bool ok = true;
        std::string w;
        for (std::size_t i = 0; i < orbits.size() && ok; ++i) {
            CycQ deg = chars[i].values[0];
            for (std::size_t c = 0; c < t.conjugacy_classes.size() && ok; ++c) {
                Vec<Fp> logv = t.log_of(t.conjugacy_classes[c].front());
                CycQ rhs = CycQ::zero(t.p);
                for (const auto& h : orbits[i].points)
                    rhs += CycQ::zeta_power(
                        t.p, static_cast<std::int64_t>(functional_eval(h, logv).r));
                if (deg * chars[i].values[c] != rhs) {
                    ok = false;
                    w = "orbit " + std::to_string(i) + ", class " + std::to_string(c) +
                        ": d*chi(s) != orbit exponential sum";
                }
            }
        }
        clause("kirillov-formula", ok, ok ? "d*chi matches the orbit exponential sum" : w, true);
    }

    rep.pass = true;
    for (const auto& c : rep.clauses)
        if (!c.informational && !c.pass) rep.pass = false;
    return rep;
}

inline void require_audit_pass(const AuditReport& rep) {
    for (const auto& c : rep.clauses)
        if (!c.informational && !c.pass)
            throw AuditFailure("clause " + c.name + " failed on " + rep.algebra + ": " + c.detail);
}

/// Column orthogonality of the assembled table: for classes c, d
///   sum over chi of chi(c) * conj(chi(d)) = |G|/|class c| if c = d else 0.
inline ClauseResult column_orthogonality(const CharacterTable& ct, const FiniteGroupTable& t) {
    for (std::size_t c = 0; c < t.conjugacy_classes.size(); ++c)
        for (std::size_t d = 0; d < t.conjugacy_classes.size(); ++d) {
            CycQ acc = CycQ::zero(t.p);
            for (const auto& chi : ct.chars) acc += chi.values[c] * chi.values[d].conj();
            CycQ want = c == d ? CycQ::from_rational(
                                     t.p, Rat(t.N, t.conjugacy_classes[c].size()))
                               : CycQ::zero(t.p);
            if (acc != want)
                return {"column-orthogonality", false, false,
                        "classes " + std::to_string(c) + "," + std::to_string(d)};
        }
    return {"column-orthogonality", true, false, "exact"};
}

} // namespace kirillov
