#pragma once
#include <fstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "kirillov/lie_algebra.hpp"

namespace kirillov {

/// On-disk algebra description (JSON):
///   {
///     "name": "heisenberg",
///     "field": "Q"            or  {"Fp": 3},
///     "dim": 3,
///     "basis": ["X", "Y", "Z"],
///     "brackets": [ {"i": 1, "j": 2, "coeffs": {"3": "1"}} ]
///   }
/// Indices are 1-based and every bracket entry must have i < j; the omitted
/// half follows by antisymmetry and unlisted pairs commute.  Coefficient
/// strings go through the field's parser, so "1/2" works over Q and "2" or
/// "2 mod 3" over F_3.
using AnyAlgebra = std::variant<LieAlgebra<QField>, LieAlgebra<FpField>>;

namespace detail {

template <class F>
LieAlgebra<F> algebra_from_json(const F& field, const nlohmann::json& j) {
    std::string name = j.at("name").get<std::string>();
    int n = j.at("dim").get<int>();
    if (n <= 0) throw ParseError("dim must be positive");
    std::vector<std::string> labels = j.at("basis").get<std::vector<std::string>>();
    if (static_cast<int>(labels.size()) != n)
        throw ParseError("basis has " + std::to_string(labels.size()) + " labels but dim is " +
                         std::to_string(n));
    std::vector<std::tuple<int, int, Vec<typename F::Elem>>> entries;
    for (const auto& b : j.at("brackets")) {
        int i = b.at("i").get<int>();
        int jj = b.at("j").get<int>();
        if (i < 1 || jj < 1 || i > n || jj > n)
            throw ParseError("bracket index out of range: i=" + std::to_string(i) +
                             " j=" + std::to_string(jj));
        if (i >= jj)
            throw ParseError("bracket entries require i < j (1-based); got i=" +
                             std::to_string(i) + " j=" + std::to_string(jj));
        Vec<typename F::Elem> v = zero_vec(n, field.zero());
        for (const auto& [key, val] : b.at("coeffs").items()) {
            int k = 0;
            try {
                k = std::stoi(key);
            } catch (const std::exception&) {
                throw ParseError("coefficient key '" + key + "' is not an index");
            }
            if (k < 1 || k > n)
                throw ParseError("coefficient index " + key + " out of range");
            v[static_cast<std::size_t>(k - 1)] = field.parse(val.template get<std::string>());
        }
        entries.emplace_back(i - 1, jj - 1, std::move(v));
    }
    return make_algebra(field, name, labels, entries);
}

} // namespace detail

inline AnyAlgebra algebra_from_json(const nlohmann::json& j) {
    try {
        const auto& f = j.at("field");
        if (f.is_string()) {
            if (f.get<std::string>() != "Q")
                throw ParseError("unknown field '" + f.get<std::string>() + "' (want \"Q\" or {\"Fp\": p})");
            return detail::algebra_from_json(QField{}, j);
        }
        if (f.is_object() && f.contains("Fp")) {
            std::uint64_t p = f.at("Fp").get<std::uint64_t>();
            try {
                return detail::algebra_from_json(FpField(p), j);
            } catch (const FieldMismatch&) {
                throw; // coefficient tagged with a different modulus
            } catch (const InvalidAlgebra&) {
                throw; // structure constants are the file's problem, not the field's
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                // non-prime or undersized modulus: bad file, not a bad theorem
                throw ParseError(e.what());
            }
        }
        throw ParseError("field must be \"Q\" or {\"Fp\": p}");
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed algebra description: ") + e.what());
    }
}

inline AnyAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
    }
    return algebra_from_json(j);
}

/// Apply fn to whichever backend the file declared.
template <class Fn>
decltype(auto) with_algebra(AnyAlgebra& a, Fn&& fn) {
    return std::visit(std::forward<Fn>(fn), a);
}
template <class Fn>
decltype(auto) with_algebra(const AnyAlgebra& a, Fn&& fn) {
    return std::visit(std::forward<Fn>(fn), a);
}

} // namespace kirillov
