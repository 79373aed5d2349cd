#pragma once
#include <cctype>
#include <string>
#include <vector>

#include "kirillov/lie_algebra.hpp"

namespace kirillov {

namespace detail {
inline bool rat_negative(const Rat& r) { return r < 0; }
inline bool rat_negative(const Fp&) { return false; } // residues print as 0..p-1
inline std::string coeff_text(const Rat& r) {
    Rat a = r < 0 ? Rat(-r) : r;
    return a.str();
}
inline std::string coeff_text(const Fp& c) { return std::to_string(c.r); }
} // namespace detail

/// "e1+e2+1/2 e3+1/12 e4": coefficient 1 is omitted, other coefficients are
/// separated from the label by one space, terms joined with +/-.
template <class E>
std::string vec_to_text(const Vec<E>& v, const std::vector<std::string>& labels) {
    if (v.size() != labels.size()) throw DimensionMismatch("vector/label count mismatch");
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (is_zero(v[i])) continue;
        bool neg = detail::rat_negative(v[i]);
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? "-" : "+";
        }
        std::string mag = detail::coeff_text(v[i]);
        if (mag == "1")
            s += labels[i];
        else
            s += mag + " " + labels[i];
    }
    return s.empty() ? "0" : s;
}

template <class F>
std::string vec_to_text(const LieAlgebra<F>& g, const Vec<typename F::Elem>& v) {
    return vec_to_text(v, g.labels);
}

inline std::vector<std::string> dual_labels(const std::vector<std::string>& labels) {
    std::vector<std::string> out(labels);
    for (auto& s : out) s += "*";
    return out;
}

template <class F>
std::string functional_to_text(const LieAlgebra<F>& g, const Vec<typename F::Elem>& f) {
    return vec_to_text(f, dual_labels(g.labels));
}

namespace detail {
inline std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}
} // namespace detail

/// Accepts either a full coordinate tuple "1,0,1/2" (length n, entries via the
/// field's parser) or a bare basis label "e3".  "0" is the zero vector.
template <class F>
Vec<typename F::Elem> parse_vector(const LieAlgebra<F>& g, const std::string& text) {
    if (text.find(',') != std::string::npos) {
        auto parts = detail::split_commas(text);
        if (static_cast<int>(parts.size()) != g.n)
            throw ParseError("expected " + std::to_string(g.n) + " coordinates, got " +
                             std::to_string(parts.size()));
        Vec<typename F::Elem> v;
        for (const auto& p : parts) v.push_back(g.field.parse(p));
        return v;
    }
    if (text == "0") return zero_vec(g.n, g.field.zero());
    for (int i = 0; i < g.n; ++i)
        if (text == g.labels[static_cast<std::size_t>(i)]) return g.basis_vector(i);
    throw ParseError("unknown basis label '" + text + "'");
}

/// Functionals additionally accept a starred label "e3*" for the dual basis
/// vector; a bare label works too.
template <class F>
Vec<typename F::Elem> parse_functional(const LieAlgebra<F>& g, const std::string& text) {
    std::string t = text;
    if (t.size() > 1 && t.back() == '*' && t.find(',') == std::string::npos)
        t.pop_back();
    return parse_vector(g, t);
}

} // namespace kirillov
