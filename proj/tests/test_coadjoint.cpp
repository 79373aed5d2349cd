#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "kirillov/coadjoint.hpp"
#include "kirillov/rng.hpp"

using namespace kirillov;

namespace {

const QField Q{};
const FpField F3{3};
const FpField F5{5};

template <class F>
Vec<typename F::Elem> qv(const F& K, std::vector<long long> coords) {
    Vec<typename F::Elem> v;
    for (long long c : coords) v.push_back(K.from_int(c));
    return v;
}

template <class F>
LieAlgebra<F> heisenberg(const F& K) {
    return make_algebra(K, "h3", {"X", "Y", "Z"}, {{0, 1, qv(K, {0, 0, 1})}});
}

template <class F>
LieAlgebra<F> filiform4(const F& K) {
    return make_algebra(K, "n4", {"e1", "e2", "e3", "e4"},
                        {{0, 1, qv(K, {0, 0, 1, 0})}, {0, 2, qv(K, {0, 0, 0, 1})}});
}

template <class F>
LieAlgebra<F> abelian2(const F& K) {
    return make_algebra(K, "a2", {"e1", "e2"}, {});
}

template <class F>
Vec<typename F::Elem> rand_vec(const F& K, int n, Rng& rng) {
    Vec<typename F::Elem> v;
    for (int i = 0; i < n; ++i) {
        if constexpr (F::finite)
            v.push_back(K.from_int(static_cast<long long>(rng.range(0, static_cast<int>(K.p) - 1))));
        else
            v.push_back(Rat(rng.range(-9, 9)) / Rat(rng.range(1, 4)));
    }
    return v;
}

} // namespace

TEST_CASE("coadjoint action on the Heisenberg dual") {
    auto h = heisenberg(Q);
    Vec<Rat> zstar = qv(Q, {0, 0, 1});
    Rat t = Rat(3) / Rat(2);

    // Ad*(exp(tY)) Z* = Z* + t X*, Ad*(exp(tX)) Z* = Z* - t Y*
    REQUIRE(coadjoint_act(h, vec_scale(t, h.basis_vector(1)), zstar) ==
            Vec<Rat>{t, Rat(0), Rat(1)});
    REQUIRE(coadjoint_act(h, vec_scale(t, h.basis_vector(0)), zstar) ==
            Vec<Rat>{Rat(0), -t, Rat(1)});

    // functionals vanishing on the derived subalgebra are fixed points
    REQUIRE(coadjoint_act(h, qv(Q, {5, 7, 2}), qv(Q, {1, 4, 0})) == qv(Q, {1, 4, 0}));
}

TEST_CASE("coadjoint action is a linear left group action") {
    Rng rng(120);
    auto sweep = [&](const auto& g, const auto& K) {
        for (int t = 0; t < 40; ++t) {
            auto x = rand_vec(K, g.n, rng);
            auto y = rand_vec(K, g.n, rng);
            auto f = rand_vec(K, g.n, rng);
            auto f2 = rand_vec(K, g.n, rng);
            auto c = K.from_int(rng.range(-4, 4));

            REQUIRE(coadjoint_act(g, group_identity(g), f) == f);
            REQUIRE(coadjoint_act(g, x, coadjoint_act(g, y, f)) ==
                    coadjoint_act(g, ch_series(g, x, y), f));
            REQUIRE(coadjoint_act(g, x, vec_add(f, vec_scale(c, f2))) ==
                    vec_add(coadjoint_act(g, x, f), vec_scale(c, coadjoint_act(g, x, f2))));

            // action by inverse undoes the action
            REQUIRE(coadjoint_act(g, group_inv(g, x), coadjoint_act(g, x, f)) == f);

            // values on the center never move
            for (const auto& z : center(g).rows)
                REQUIRE(functional_eval(coadjoint_act(g, x, f), z) == functional_eval(f, z));
        }
    };
    sweep(filiform4(Q), Q);
    sweep(filiform4(F5), F5);
    sweep(heisenberg(F3), F3);
}

TEST_CASE("coordinate tuples index the dual space lexicographically") {
    REQUIRE(fp_vec_index(qv(F3, {0, 0, 0}), 3) == 0);
    REQUIRE(fp_vec_index(qv(F3, {0, 1, 2}), 3) == 5);
    REQUIRE(fp_vec_index(qv(F3, {1, 0, 0}), 3) == 9);
    for (std::uint32_t idx = 0; idx < 27; ++idx)
        REQUIRE(fp_vec_index(fp_vec_of_index(idx, 3, F3), 3) == idx);
    REQUIRE(fp_vec_to_text(qv(F3, {0, 1, 2})) == "(0,1,2)");
    REQUIRE(pow_u64(5, 4) == 625);
    REQUIRE(pow_u64(7, 0) == 1);
}

TEST_CASE("single orbits over F_3") {
    auto g = heisenberg(F3);

    SECTION("generic functional fills an affine plane") {
        auto o = orbit(g, qv(F3, {0, 0, 1}), 27);
        REQUIRE(o.enumerated);
        REQUIRE(o.points.size() == 9);
        REQUIRE(o.tangent_dim == 2);
        REQUIRE(o.representative == qv(F3, {0, 0, 1}));
        // exactly the functionals with Z-coordinate 1
        for (const auto& pt : o.points) {
            REQUIRE(pt[2] == F3.one());
            REQUIRE(form_rank(g, pt) == 2); // rank is constant along the orbit
        }
        // points sorted strictly by index
        for (std::size_t i = 0; i + 1 < o.points.size(); ++i)
            REQUIRE(fp_vec_index(o.points[i], 3) < fp_vec_index(o.points[i + 1], 3));
    }

    SECTION("flat functionals sit alone") {
        auto o = orbit(g, qv(F3, {1, 2, 0}), 27);
        REQUIRE(o.points.size() == 1);
        REQUIRE(o.tangent_dim == 0);
        REQUIRE(o.representative == qv(F3, {1, 2, 0}));
        auto z = orbit(g, qv(F3, {0, 0, 0}), 27);
        REQUIRE(z.points.size() == 1);
    }
}

TEST_CASE("orbit sizes are powers of p with even exponent") {
    auto g = filiform4(F5);
    for (const auto& o : orbit_partition(g, 625)) {
        REQUIRE(o.points.size() == pow_u64(5, o.tangent_dim));
        REQUIRE(o.tangent_dim % 2 == 0);
    }
}

TEST_CASE("orbit partitions of the full dual") {
    SECTION("Heisenberg over F_3: 9 singletons and 2 planes") {
        auto orbits = orbit_partition(heisenberg(F3), 27);
        REQUIRE(orbits.size() == 11);
        std::size_t total = 0;
        int singles = 0, planes = 0;
        for (const auto& o : orbits) {
            total += o.points.size();
            if (o.points.size() == 1) ++singles;
            if (o.points.size() == 9) ++planes;
        }
        REQUIRE(total == 27);
        REQUIRE(singles == 9);
        REQUIRE(planes == 2);
        // ordered by least representative; the zero functional comes first
        REQUIRE(orbits[0].representative == qv(F3, {0, 0, 0}));
        for (std::size_t i = 0; i + 1 < orbits.size(); ++i)
            REQUIRE(fp_vec_index(orbits[i].representative, 3) <
                    fp_vec_index(orbits[i + 1].representative, 3));
        // representative is the least point of its orbit
        for (const auto& o : orbits)
            REQUIRE(fp_vec_index(o.representative, 3) == fp_vec_index(o.points.front(), 3));
    }

    SECTION("Heisenberg over F_5") {
        auto orbits = orbit_partition(heisenberg(F5), 125);
        REQUIRE(orbits.size() == 29);
    }

    SECTION("abelian algebras: every functional is fixed") {
        auto orbits = orbit_partition(abelian2(F3), 9);
        REQUIRE(orbits.size() == 9);
        for (const auto& o : orbits) REQUIRE(o.points.size() == 1);
    }

    SECTION("filiform over F_5: 25 singletons and 24 planes") {
        auto orbits = orbit_partition(filiform4(F5), 625);
        REQUIRE(orbits.size() == 49);
        int singles = 0, planes = 0;
        for (const auto& o : orbits) {
            if (o.points.size() == 1) ++singles;
            if (o.points.size() == 25) ++planes;
        }
        REQUIRE(singles == 25);
        REQUIRE(planes == 24);
    }

    SECTION("orbits are pairwise disjoint") {
        auto orbits = orbit_partition(heisenberg(F3), 27);
        std::vector<bool> seen(27, false);
        for (const auto& o : orbits)
            for (const auto& pt : o.points) {
                REQUIRE_FALSE(seen[fp_vec_index(pt, 3)]);
                seen[fp_vec_index(pt, 3)] = true;
            }
    }
}

TEST_CASE("rational backend keeps the tangent data but not the points") {
    auto g = filiform4(Q);
    auto o = orbit(g, qv(Q, {0, 0, 0, 1}), 0);
    REQUIRE_FALSE(o.enumerated);
    REQUIRE(o.representative == qv(Q, {0, 0, 0, 1}));
    REQUIRE(o.tangent_dim == 2);
    REQUIRE(o.size() == 0);
    REQUIRE_THROWS_AS(orbit_points<QField>(o), BackendUnsupported);

    auto gf = heisenberg(F3);
    auto of = orbit(gf, qv(F3, {0, 0, 1}), 27);
    REQUIRE(orbit_points<FpField>(of).size() == 9);
}

TEST_CASE("enumeration bounds are enforced") {
    auto g = filiform4(F5);
    REQUIRE_THROWS_AS(orbit(g, qv(F5, {0, 0, 0, 1}), 100), EnumerationTooLarge);
    REQUIRE_THROWS_AS(orbit_partition(g, 100), EnumerationTooLarge);
    REQUIRE_NOTHROW(orbit(g, qv(F5, {0, 0, 0, 1}), 625));
}

TEST_CASE("stabilizer and orbit set identities hold exactly over F_p") {
    auto g = heisenberg(F3);
    for (const auto& f : all_coord_vectors(3, F3)) {
        auto pc = standard_polarization(g, f);
        auto rep = check_orbit_identities(g, f, pc, 27);
        REQUIRE(rep.group_checked == 27);
        // |exp(r)| = 3^dim r and |f + r-perp| = 3^(3 - dim r)
        REQUIRE(rep.r_set_size == pow_u64(3, pc.r.dim()));
        REQUIRE(rep.orbit_set_size == pow_u64(3, 3 - pc.r.dim()));
    }

    auto g5 = filiform4(F5);
    Vec<Fp> f5 = qv(F5, {0, 0, 0, 1});
    auto rep5 = check_orbit_identities(g5, f5, standard_polarization(g5, f5), 625);
    REQUIRE(rep5.group_checked == 625);
    REQUIRE(rep5.r_set_size == 125);
    REQUIRE(rep5.orbit_set_size == 5); // |f + r-perp| = 5^(4 - dim r)
}

TEST_CASE("non-polarizing subalgebras are caught as identity violations") {
    auto g = heisenberg(F3);
    Vec<Fp> f = qv(F3, {0, 0, 1});
    // the center is subordinate but too small: every group element then
    // satisfies the membership test, including ones outside exp(r)
    PolarizationChain<Fp> fake;
    fake.r = span<Fp>(3, {qv(F3, {0, 0, 1})});
    REQUIRE_THROWS_MATCHES(check_orbit_identities(g, f, fake, 27), IdentityViolation,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::ContainsSubstring("outside exp(r)")));

    // the whole algebra is not subordinate: members of exp(r) move f too far
    auto gq = heisenberg(Q);
    PolarizationChain<Rat> fakeq;
    fakeq.r = gq.full();
    Rng rng(5);
    REQUIRE_THROWS_MATCHES(
        check_orbit_identities(gq, qv(Q, {0, 0, 1}), fakeq, 50, rng), IdentityViolation,
        Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("escapes")));
}

TEST_CASE("sampled identities over the rationals") {
    auto g = filiform4(Q);
    Rng rng(64);

    Vec<Rat> f = qv(Q, {0, 0, 0, 1});
    auto rep = check_orbit_identities(g, f, standard_polarization(g, f), 50, rng);
    REQUIRE(rep.r_set_size == 50);
    REQUIRE(rep.group_checked == 50); // violation direction sampled every round

    // zero functional: r = g, so there is no outside direction to sample
    Vec<Rat> zero = qv(Q, {0, 0, 0, 0});
    auto rep0 = check_orbit_identities(g, zero, standard_polarization(g, zero), 20, rng);
    REQUIRE(rep0.r_set_size == 20);
    REQUIRE(rep0.group_checked == 0);
}
