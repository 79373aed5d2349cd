#pragma once
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "kirillov/scalar.hpp"

namespace kirillov {

/// One term of the truncated Campbell-Hausdorff series, written as an
/// iterated adjoint word: coeff * ad(o_1) ad(o_2) ... ad(o_len) (root),
/// where each o_k and the root are X (0) or Y (1).  `bits` packs o_1..o_len
/// with o_1 in the most significant position, so a word shares its evaluated
/// suffix with every other word ending the same way.  degree = len + 1; the
/// 1/n normalization of the degree-n layer is already folded into coeff.
struct ChWord {
    std::uint8_t root;
    std::uint8_t len;
    std::uint16_t bits;
    std::uint8_t degree;
    Rat coeff;
};

namespace detail {

/// All compositions of `total` into `parts` nonnegative summands.
inline void compositions(int total, int parts, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int first = 0; first <= total; ++first) {
        cur.push_back(first);
        compositions(total - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    compositions(total, parts, cur, out);
    return out;
}

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Builds the degree <= l table from the grouped double-sum presentation of
/// the series.  Each degree-n layer is (1/n) sum over s+t=n of two sums:
///
///   A-sum (words ending in Y): over m >= 1, compositions s_1..s_m >= 0 of s
///   and t_1..t_{m-1} >= 0 of t-1 with s_i + t_i >= 1 for i < m (the final
///   exponent s_m may be 0), contributing
///     (-1)^{m+1} / (m * prod s_i! * prod t_i!) *
///     ad(X)^{s_1} ad(Y)^{t_1} ... ad(X)^{s_m} (Y).
///
///   B-sum (words ending in X): over m >= 1, compositions s_1..s_{m-1} of
///   s-1 and t_1..t_{m-1} of t with s_i + t_i >= 1 for all i, contributing
///     (-1)^{m+1} / (m * prod s_i! * prod t_i!) *
///     ad(X)^{s_1} ad(Y)^{t_1} ... ad(Y)^{t_{m-1}} (X).
///
/// The trailing lone letter carries one unit of degree, hence the s-1 in the
/// B-sum and the t-1 in the A-sum.  With these index ranges the first layers
/// come out as X+Y, (1/2)[X,Y], (1/12)([X,[X,Y]] + [Y,[Y,X]]), and the whole
/// truncation passes the unipotent-matrix oracle (see tests); dropping the
/// s_m = 0 terms or summing the B compositions to s instead provably breaks
/// both, which is why the ranges are pinned here.
inline std::vector<ChWord> build_master_table(int l) {
    // key: (root, len, bits)
    std::map<std::tuple<int, int, int>, Rat> acc;
    auto add = [&](int root, const std::vector<int>& svec, const std::vector<int>& tvec,
                   int m, int degree) {
        Int denom = m;
        for (int a : svec) denom *= factorial(a);
        for (int a : tvec) denom *= factorial(a);
        Rat coeff(Int((m % 2 == 1) ? 1 : -1), denom * degree);
        int len = 0, bits = 0;
        auto push = [&](int letter, int count) {
            for (int k = 0; k < count; ++k) { bits = (bits << 1) | letter; ++len; }
        };
        for (std::size_t i = 0; i < svec.size(); ++i) {
            push(0, svec[i]);
            if (i < tvec.size()) push(1, tvec[i]);
        }
        if (len != degree - 1) throw Error("CH table: word length bookkeeping broken");
        acc[{root, len, bits}] += coeff;
    };

    for (int n = 1; n <= l; ++n) {
        for (int s = 0; s <= n; ++s) {
            int t = n - s;
            if (t >= 1) { // A-sum, root Y
                for (int m = 1; m <= n; ++m) {
                    for (const auto& sv : compositions(s, m)) {
                        for (const auto& tv : compositions(t - 1, m - 1)) {
                            bool ok = true;
                            for (int i = 0; i + 1 < m && ok; ++i)
                                ok = sv[static_cast<std::size_t>(i)] + tv[static_cast<std::size_t>(i)] >= 1;
                            if (ok) add(1, sv, tv, m, n);
                        }
                    }
                }
            }
            if (s >= 1) { // B-sum, root X
                for (int m = 1; m <= n; ++m) {
                    for (const auto& sv : compositions(s - 1, m - 1)) {
                        for (const auto& tv : compositions(t, m - 1)) {
                            bool ok = true;
                            for (int i = 0; i < m - 1 && ok; ++i)
                                ok = sv[static_cast<std::size_t>(i)] + tv[static_cast<std::size_t>(i)] >= 1;
                            if (ok) add(0, sv, tv, m, n);
                        }
                    }
                }
            }
        }
    }

    std::vector<ChWord> out;
    for (const auto& [key, coeff] : acc) {
        if (coeff.is_zero()) continue;
        auto [root, len, bits] = key;
        out.push_back(ChWord{static_cast<std::uint8_t>(root), static_cast<std::uint8_t>(len),
                             static_cast<std::uint16_t>(bits), static_cast<std::uint8_t>(len + 1),
                             coeff});
    }
    return out;
}

} // namespace detail

/// Cached master table for a given truncation degree, over Q.
inline const std::vector<ChWord>& master_ch_table(int l) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<ChWord>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[l];
    if (!slot) slot = std::make_unique<std::vector<ChWord>>(detail::build_master_table(l));
    return *slot;
}

/// Master table with coefficients mapped into the target field.  For F_p the
/// denominators involve only integers <= l < p, so the conversion is total.
template <class F>
struct ChTable {
    int truncation = 0;
    std::vector<std::pair<ChWord, typename F::Elem>> entries;
};

template <class F>
ChTable<F> make_ch_table(const F& K, int l) {
    ChTable<F> t;
    t.truncation = l;
    for (const ChWord& w : master_ch_table(l)) {
        // route through strings so the conversion stays exact for any size
        typename F::Elem num = K.parse(numerator(w.coeff).str());
        typename F::Elem den = K.parse(denominator(w.coeff).str());
        t.entries.emplace_back(w, num * inv(den));
    }
    return t;
}

} // namespace kirillov
