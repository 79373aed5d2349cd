#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "kirillov/error.hpp"

namespace kirillov {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Element of F_p.  The modulus travels with the value; a default-constructed
/// element is the "indeterminate zero" (p = 0), the additive identity of every
/// prime field.  That convention lets generic code accumulate sums starting
/// from Fp{} without knowing p.  Combining two nonzero moduli that disagree is
/// a FieldMismatch, never a coercion.
struct Fp {
    std::uint64_t r = 0; // residue, 0 <= r < p when p > 0
    std::uint64_t p = 0; // 0 marks the indeterminate zero (then r == 0)

    Fp() = default;
    Fp(std::uint64_t residue, std::uint64_t modulus) : r(residue % modulus), p(modulus) {}

    bool is_zero() const { return r == 0; }

    friend std::uint64_t merged_mod(const Fp& a, const Fp& b) {
        if (a.p == b.p) return a.p;
        if (a.p == 0) return b.p;
        if (b.p == 0) return a.p;
        throw FieldMismatch("F_" + std::to_string(a.p) + " element combined with F_" +
                            std::to_string(b.p) + " element");
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t m = merged_mod(a, b);
        if (m == 0) return Fp{};
        return Fp{(a.r + b.r) % m, m};
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t m = merged_mod(a, b);
        if (m == 0) return Fp{};
        return Fp{(a.r + m - b.r % m) % m, m};
    }
    friend Fp operator-(const Fp& a) {
        if (a.p == 0) return a;
        return Fp{(a.p - a.r) % a.p, a.p};
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t m = merged_mod(a, b);
        if (m == 0) return Fp{};
        return Fp{a.r * b.r % m, m};
    }
    Fp inv() const {
        if (r == 0) throw Error("division by zero in F_" + std::to_string(p));
        // extended Euclid; p prime so every nonzero residue is a unit
        std::int64_t a = static_cast<std::int64_t>(r), m = static_cast<std::int64_t>(p);
        std::int64_t x0 = 1, x1 = 0, b = m;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        if (a != 1) throw Error("non-invertible residue " + std::to_string(r) +
                                " mod " + std::to_string(p));
        std::int64_t v = x0 % m;
        if (v < 0) v += m;
        return Fp{static_cast<std::uint64_t>(v), p};
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.r == 0 && b.r == 0) return true; // zeros of any moduli agree
        merged_mod(a, b);
        return a.r == b.r;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    friend bool operator<(const Fp& a, const Fp& b) { return a.r < b.r; }
};

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline Rat inv(const Rat& x) {
    if (x.is_zero()) throw Error("division by zero in Q");
    return Rat(1) / x;
}
inline Fp inv(const Fp& x) { return x.inv(); }

/// Descriptor of Q.  Stateless; exists so that algebra code can be generic
/// over the coefficient field and still mint constants and parse literals.
struct QField {
    using Elem = Rat;
    static constexpr bool finite = false;

    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
    Rat from_int(long long v) const { return Rat(v); }

    Rat inv_factorial(int n) const {
        Int f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return Rat(Int(1), f);
    }

    /// accepts "a", "-a", "a/b"
    Rat parse(const std::string& s) const {
        try {
            auto slash = s.find('/');
            if (slash == std::string::npos) return Rat(Int(s));
            Int num(s.substr(0, slash)), den(s.substr(slash + 1));
            if (den == 0) throw Error("zero denominator");
            return Rat(num, den);
        } catch (const std::exception& e) {
            throw ParseError("bad rational literal \"" + s + "\": " + e.what());
        }
    }

    std::string to_string(const Rat& x) const {
        if (denominator(x) == 1) return numerator(x).str();
        return numerator(x).str() + "/" + denominator(x).str();
    }

    std::string name() const { return "Q"; }
    bool operator==(const QField&) const { return true; }
};

/// Descriptor of F_p.
struct FpField {
    std::uint64_t p = 0;
    using Elem = Fp;
    static constexpr bool finite = true;

    explicit FpField(std::uint64_t prime) : p(prime) {
        if (p < 2) throw Error("modulus must be a prime >= 2");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw Error(std::to_string(p) + " is not prime");
    }

    Fp zero() const { return Fp{0, p}; }
    Fp one() const { return Fp{1, p}; }
    Fp from_int(long long v) const {
        long long m = static_cast<long long>(p);
        long long r = v % m;
        if (r < 0) r += m;
        return Fp{static_cast<std::uint64_t>(r), p};
    }

    Fp inv_factorial(int n) const {
        if (n >= static_cast<int>(p))
            throw FactorialNotInvertible(std::to_string(n) + "! is divisible by " +
                                         std::to_string(p));
        Fp f = one();
        for (int i = 2; i <= n; ++i) f *= from_int(i);
        return f.inv();
    }

    /// accepts "r", "-r", "a/b", and the canonical display form "r mod p"
    Fp parse(const std::string& s) const {
        try {
            auto mod = s.find(" mod ");
            if (mod != std::string::npos) {
                std::uint64_t q = std::stoull(s.substr(mod + 5));
                if (q != p)
                    throw FieldMismatch("literal \"" + s + "\" names modulus " +
                                        std::to_string(q) + ", field is F_" + std::to_string(p));
                return from_int(std::stoll(s.substr(0, mod)));
            }
            auto slash = s.find('/');
            if (slash == std::string::npos) return from_int(std::stoll(s));
            Fp num = from_int(std::stoll(s.substr(0, slash)));
            Fp den = from_int(std::stoll(s.substr(slash + 1)));
            return num / den;
        } catch (const FieldMismatch&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError("bad F_" + std::to_string(p) + " literal \"" + s + "\": " + e.what());
        }
    }

    std::string to_string(const Fp& x) const {
        return std::to_string(x.r) + " mod " + std::to_string(p);
    }

    std::string name() const { return "F_" + std::to_string(p); }
    bool operator==(const FpField& o) const { return p == o.p; }
};

} // namespace kirillov
