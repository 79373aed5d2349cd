#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "kirillov/error.hpp"
#include "kirillov/scalar.hpp"

namespace kirillov {

/// Element of Q(zeta_p), p prime, as rational coordinates in the power basis
/// 1, z, ..., z^(p-1) of Q[x]/(x^p - 1), canonicalized so the last coordinate
/// is zero (subtract c[p-1] * (1 + z + ... + z^(p-1)), which vanishes).  With
/// that normal form equality is plain coordinate equality.
class CycQ {
public:
    CycQ() : p_(0) {}
    CycQ(std::uint64_t p, std::vector<Rat> coords) : p_(p), c_(std::move(coords)) {
        if (c_.size() != p_) throw DimensionMismatch("cyclotomic coordinate count != p");
        canonicalize();
    }
    static CycQ zero(std::uint64_t p) { return CycQ(p, std::vector<Rat>(p, Rat(0))); }
    static CycQ from_rational(std::uint64_t p, const Rat& r) {
        std::vector<Rat> c(p, Rat(0));
        c[0] = r;
        return CycQ(p, std::move(c));
    }
    static CycQ zeta_power(std::uint64_t p, std::int64_t k) {
        std::int64_t m = k % static_cast<std::int64_t>(p);
        if (m < 0) m += static_cast<std::int64_t>(p);
        std::vector<Rat> c(p, Rat(0));
        c[static_cast<std::size_t>(m)] = Rat(1);
        return CycQ(p, std::move(c));
    }

    std::uint64_t modulus() const { return p_; }
    const std::vector<Rat>& coords() const { return c_; }

    CycQ& operator+=(const CycQ& o) {
        match(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        canonicalize();
        return *this;
    }
    CycQ& operator-=(const CycQ& o) {
        match(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        canonicalize();
        return *this;
    }
    friend CycQ operator+(CycQ a, const CycQ& b) { return a += b; }
    friend CycQ operator-(CycQ a, const CycQ& b) { return a -= b; }
    friend CycQ operator*(const CycQ& a, const CycQ& b) {
        a.match(b);
        // cyclic convolution: z^p = 1
        std::vector<Rat> out(a.p_, Rat(0));
        for (std::size_t i = 0; i < a.p_; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < a.p_; ++j) {
                if (b.c_[j] == 0) continue;
                out[(i + j) % a.p_] += a.c_[i] * b.c_[j];
            }
        }
        return CycQ(a.p_, std::move(out));
    }
    CycQ scaled(const Rat& r) const {
        std::vector<Rat> out(c_);
        for (auto& x : out) x *= r;
        return CycQ(p_, std::move(out));
    }
    /// complex conjugation: z -> z^(-1), an index permutation
    CycQ conj() const {
        std::vector<Rat> out(p_, Rat(0));
        for (std::size_t i = 0; i < p_; ++i) out[(p_ - i) % p_] = c_[i];
        return CycQ(p_, std::move(out));
    }

    bool operator==(const CycQ& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const CycQ& o) const { return !(*this == o); }
    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < p_; ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    Rat to_rational() const {
        if (!is_rational()) throw Error("cyclotomic value is not rational");
        return c_[0];
    }

    /// power-basis text, z standing for the primitive p-th root: "3", "-1+2z", "z^2"
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < p_; ++i) {
            if (c_[i] == 0) continue;
            Rat a = c_[i];
            bool neg = a < 0;
            if (neg) a = -a;
            if (s.empty()) {
                if (neg) s += "-";
            } else {
                s += neg ? "-" : "+";
            }
            std::string mag = a.str();
            if (i == 0) {
                s += mag;
            } else {
                if (mag != "1") s += mag;
                s += "z";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

private:
    void match(const CycQ& o) const {
        if (p_ != o.p_) throw FieldMismatch("mixing cyclotomic fields of different p");
    }
    void canonicalize() {
        if (c_.empty()) return;
        Rat last = c_[c_.size() - 1];
        if (last != 0)
            for (auto& x : c_) x -= last;
    }

    std::uint64_t p_;
    std::vector<Rat> c_;
};

} // namespace kirillov
