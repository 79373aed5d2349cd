#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "kirillov/algebra_io.hpp"
#include "kirillov/config.hpp"
#include "kirillov/format.hpp"
#include "kirillov/unipotent.hpp"

using namespace kirillov;

namespace {

const QField Q{};
const FpField F3{3};

std::string corpus_path(const std::string& stem) {
    return std::string(KIRILLOV_CORPUS_DIR) + "/" + stem + ".json";
}

template <class F>
Vec<typename F::Elem> qv(const F& K, std::vector<long long> coords) {
    Vec<typename F::Elem> v;
    for (long long c : coords) v.push_back(K.from_int(c));
    return v;
}

nlohmann::json minimal_json() {
    return nlohmann::json{{"name", "t"},
                          {"field", "Q"},
                          {"dim", 3},
                          {"basis", {"a", "b", "c"}},
                          {"brackets", {{{"i", 1}, {"j", 2}, {"coeffs", {{"3", "1"}}}}}}};
}

} // namespace

TEST_CASE("the bundled corpus loads with the advertised shapes") {
    struct Expect {
        std::string stem;
        bool rational;
        int dim;
        int nclass;
    };
    const std::vector<Expect> expects = {
        {"heisenberg_q", true, 3, 2},  {"heisenberg_f3", false, 3, 2},
        {"heisenberg_f5", false, 3, 2}, {"n4_q", true, 4, 3},
        {"n4_f5", false, 4, 3},         {"abelian2_q", true, 2, 1},
        {"abelian2_f3", false, 2, 1},   {"tr0_3_q", true, 3, 2},
        {"tr0_4_q", true, 6, 3},        {"tr0_5_q", true, 10, 4},
        {"dim6_class3_q", true, 6, 3},
    };
    for (const auto& e : expects) {
        AnyAlgebra a = load_algebra(corpus_path(e.stem));
        REQUIRE(std::holds_alternative<LieAlgebra<QField>>(a) == e.rational);
        with_algebra(a, [&](const auto& g) {
            INFO(e.stem);
            REQUIRE(g.n == e.dim);
            REQUIRE(g.nclass == e.nclass);
            REQUIRE(static_cast<int>(g.labels.size()) == e.dim);
        });
    }
}

TEST_CASE("corpus files match their in-code constructions") {
    SECTION("heisenberg over F_3") {
        AnyAlgebra a = load_algebra(corpus_path("heisenberg_f3"));
        const auto& g = std::get<LieAlgebra<FpField>>(a);
        REQUIRE(g.field.p == 3);
        REQUIRE(g.labels == std::vector<std::string>{"X", "Y", "Z"});
        auto ref = make_algebra(F3, "heisenberg", {"X", "Y", "Z"}, {{0, 1, qv(F3, {0, 0, 1})}});
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                REQUIRE(g.bracket_basis(i, j) == ref.bracket_basis(i, j));
    }

    SECTION("strictly-upper-triangular algebras") {
        for (int n : {3, 4, 5}) {
            AnyAlgebra a = load_algebra(corpus_path("tr0_" + std::to_string(n) + "_q"));
            const auto& g = std::get<LieAlgebra<QField>>(a);
            auto ref = tr0_algebra(n, Q);
            REQUIRE(g.n == ref.n);
            REQUIRE(g.labels == ref.labels);
            for (int i = 0; i < g.n; ++i)
                for (int j = i + 1; j < g.n; ++j)
                    REQUIRE(g.bracket_basis(i, j) == ref.bracket_basis(i, j));
        }
    }
}

TEST_CASE("algebra JSON rejects malformed input") {
    SECTION("unreadable file") {
        REQUIRE_THROWS_MATCHES(load_algebra("corpus/no_such_algebra.json"), ParseError,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::ContainsSubstring("cannot read")));
    }

    SECTION("reversed bracket indices") {
        auto j = minimal_json();
        j["brackets"][0]["i"] = 2;
        j["brackets"][0]["j"] = 1;
        REQUIRE_THROWS_MATCHES(algebra_from_json(j), ParseError,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::ContainsSubstring("i < j")));
        j["brackets"][0]["j"] = 2;
        REQUIRE_THROWS_AS(algebra_from_json(j), ParseError); // i == j
    }

    SECTION("indices out of range") {
        auto j = minimal_json();
        j["brackets"][0]["j"] = 4;
        REQUIRE_THROWS_AS(algebra_from_json(j), ParseError);
        j = minimal_json();
        j["brackets"][0]["coeffs"] = {{"9", "1"}};
        REQUIRE_THROWS_MATCHES(algebra_from_json(j), ParseError,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::ContainsSubstring("out of range")));
        j["brackets"][0]["coeffs"] = {{"zzz", "1"}};
        REQUIRE_THROWS_MATCHES(algebra_from_json(j), ParseError,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::ContainsSubstring("not an index")));
    }

    SECTION("field specification") {
        auto j = minimal_json();
        j["field"] = "R";
        REQUIRE_THROWS_MATCHES(algebra_from_json(j), ParseError,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::ContainsSubstring("unknown field")));
        j["field"] = nlohmann::json::object({{"GF", 9}});
        REQUIRE_THROWS_AS(algebra_from_json(j), ParseError);
        j["field"] = nlohmann::json::object({{"Fp", 4}});
        REQUIRE_THROWS_MATCHES(algebra_from_json(j), ParseError,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::ContainsSubstring("not prime")));
    }

    SECTION("dim and basis consistency") {
        auto j = minimal_json();
        j["dim"] = 0;
        REQUIRE_THROWS_AS(algebra_from_json(j), ParseError);
        j = minimal_json();
        j["basis"] = {"a", "b"};
        REQUIRE_THROWS_AS(algebra_from_json(j), ParseError);
        j = minimal_json();
        j.erase("brackets");
        REQUIRE_THROWS_MATCHES(algebra_from_json(j), ParseError,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::ContainsSubstring("malformed")));
    }

    SECTION("structure constant validation still applies") {
        // [a, b] = b is not nilpotent; the loader lets make_algebra complain
        nlohmann::json j{{"name", "aff"},
                         {"field", "Q"},
                         {"dim", 2},
                         {"basis", {"a", "b"}},
                         {"brackets", {{{"i", 1}, {"j", 2}, {"coeffs", {{"2", "1"}}}}}}};
        REQUIRE_THROWS_AS(algebra_from_json(j), InvalidAlgebra);
    }
}

TEST_CASE("coefficient strings go through the field parser") {
    auto j = minimal_json();
    j["field"] = nlohmann::json::object({{"Fp", 5}});

    SECTION("plain, negative, fractional, and tagged residues") {
        j["brackets"][0]["coeffs"] = {{"3", "7"}};
        REQUIRE(std::get<LieAlgebra<FpField>>(algebra_from_json(j)).bracket_basis(0, 1)[2] ==
                Fp{2, 5});
        j["brackets"][0]["coeffs"] = {{"3", "-1"}};
        REQUIRE(std::get<LieAlgebra<FpField>>(algebra_from_json(j)).bracket_basis(0, 1)[2] ==
                Fp{4, 5});
        j["brackets"][0]["coeffs"] = {{"3", "1/2"}};
        REQUIRE(std::get<LieAlgebra<FpField>>(algebra_from_json(j)).bracket_basis(0, 1)[2] ==
                Fp{3, 5});
        j["brackets"][0]["coeffs"] = {{"3", "2 mod 5"}};
        REQUIRE(std::get<LieAlgebra<FpField>>(algebra_from_json(j)).bracket_basis(0, 1)[2] ==
                Fp{2, 5});
    }

    SECTION("a residue tagged with the wrong modulus is a field mismatch") {
        j["brackets"][0]["coeffs"] = {{"3", "2 mod 7"}};
        REQUIRE_THROWS_AS(algebra_from_json(j), FieldMismatch);
    }

    SECTION("rational coefficients over Q") {
        auto jq = minimal_json();
        jq["brackets"][0]["coeffs"] = {{"3", "-5/3"}};
        REQUIRE(std::get<LieAlgebra<QField>>(algebra_from_json(jq)).bracket_basis(0, 1)[2] ==
                Rat(-5) / Rat(3));
    }
}

TEST_CASE("vectors render as signed label combinations") {
    auto g = make_algebra(Q, "n4", {"e1", "e2", "e3", "e4"},
                          {{0, 1, qv(Q, {0, 0, 1, 0})}, {0, 2, qv(Q, {0, 0, 0, 1})}});
    REQUIRE(vec_to_text(g, Vec<Rat>{Rat(1), Rat(1), Rat(1, 2), Rat(1, 12)}) ==
            "e1+e2+1/2 e3+1/12 e4");
    REQUIRE(vec_to_text(g, qv(Q, {0, 0, 0, 0})) == "0");
    REQUIRE(vec_to_text(g, qv(Q, {-1, 0, 0, 0})) == "-e1");
    REQUIRE(vec_to_text(g, qv(Q, {0, -2, 0, 3})) == "-2 e2+3 e4");

    auto h = make_algebra(F3, "h3", {"X", "Y", "Z"}, {{0, 1, qv(F3, {0, 0, 1})}});
    // residues print bare in 0..p-1, never signed
    REQUIRE(vec_to_text(h, qv(F3, {1, 2, 0})) == "X+2 Y");
    REQUIRE(vec_to_text(h, qv(F3, {0, -1, 0})) == "2 Y");

    REQUIRE_THROWS_AS(vec_to_text(Vec<Rat>{Rat(1)}, {"a", "b"}), DimensionMismatch);
}

TEST_CASE("functionals render with dual labels") {
    auto h = make_algebra(Q, "h3", {"X", "Y", "Z"}, {{0, 1, qv(Q, {0, 0, 1})}});
    REQUIRE(dual_labels({"X", "Y", "Z"}) == std::vector<std::string>{"X*", "Y*", "Z*"});
    REQUIRE(functional_to_text(h, qv(Q, {0, 0, 1})) == "Z*");
    REQUIRE(functional_to_text(h, Vec<Rat>{Rat(3, 2), Rat(0), Rat(-1)}) == "3/2 X*-Z*");
    REQUIRE(functional_to_text(h, qv(Q, {0, 0, 0})) == "0");
}

TEST_CASE("vector parsing accepts tuples, labels, and zero") {
    auto h = make_algebra(Q, "h3", {"X", "Y", "Z"}, {{0, 1, qv(Q, {0, 0, 1})}});

    REQUIRE(parse_vector(h, "Y") == h.basis_vector(1));
    REQUIRE(parse_vector(h, "0") == qv(Q, {0, 0, 0}));
    REQUIRE(parse_vector(h, "1,0,1/2") == Vec<Rat>{Rat(1), Rat(0), Rat(1, 2)});
    REQUIRE(parse_vector(h, " 1 , -2 , 3 ") == qv(Q, {1, -2, 3}));

    REQUIRE_THROWS_MATCHES(parse_vector(h, "W"), ParseError,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::ContainsSubstring("unknown basis label")));
    REQUIRE_THROWS_MATCHES(parse_vector(h, "1,2"), ParseError,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::ContainsSubstring("expected 3 coordinates")));
    REQUIRE_THROWS_AS(parse_vector(h, "1,x,0"), ParseError);

    auto hf = make_algebra(F3, "h3", {"X", "Y", "Z"}, {{0, 1, qv(F3, {0, 0, 1})}});
    REQUIRE(parse_vector(hf, "2,1,0") == qv(F3, {2, 1, 0}));
    REQUIRE(parse_vector(hf, "-1,4,0") == qv(F3, {2, 1, 0}));

    // single basis vectors roundtrip through their labels
    for (int i = 0; i < 3; ++i)
        REQUIRE(parse_vector(h, vec_to_text(h, h.basis_vector(i))) == h.basis_vector(i));
}

TEST_CASE("functional parsing also accepts starred labels") {
    auto h = make_algebra(Q, "h3", {"X", "Y", "Z"}, {{0, 1, qv(Q, {0, 0, 1})}});
    REQUIRE(parse_functional(h, "Z*") == qv(Q, {0, 0, 1}));
    REQUIRE(parse_functional(h, "Z") == qv(Q, {0, 0, 1}));
    REQUIRE(parse_functional(h, "0,1,0") == qv(Q, {0, 1, 0}));
    REQUIRE(parse_functional(h, "0") == qv(Q, {0, 0, 0}));
    REQUIRE_THROWS_AS(parse_functional(h, "W*"), ParseError);
}

TEST_CASE("with_algebra dispatches on the stored backend") {
    AnyAlgebra q = load_algebra(corpus_path("n4_q"));
    AnyAlgebra f = load_algebra(corpus_path("n4_f5"));
    auto dim = [](const auto& g) { return g.n; };
    REQUIRE(with_algebra(q, dim) == 4);
    REQUIRE(with_algebra(f, dim) == 4);
    bool finite = with_algebra(f, [](const auto& g) {
        return std::decay_t<decltype(g.field)>::finite;
    });
    REQUIRE(finite);
}
