#pragma once
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>

#include "jct/error.hpp"

namespace jct {

// Exact rational on int64 with 128-bit intermediates.  Everything that must
// be bit-reproducible (class entries, affine IFS coefficients, closed-form
// measures, pixel boxes, growth counting) runs on these; doubles only appear
// where a tolerance is part of the contract.
struct Rat {
    long long n = 0; // numerator
    long long d = 1; // denominator, always > 0, gcd(|n|, d) == 1

    Rat() = default;
    Rat(long long v) : n(v), d(1) {}
    Rat(long long num, long long den) { assign(num, den); }

    static Rat from128(__int128 num, __int128 den) {
        if (den == 0) fail(Err::NumericalFailure, "rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        __int128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
            fail(Err::NumericalFailure, "rational overflow");
        Rat r;
        r.n = (long long)num;
        r.d = (long long)den;
        return r;
    }

    void assign(long long num, long long den) {
        Rat r = from128(num, den);
        n = r.n;
        d = r.d;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }

    double to_double() const { return (double)n / (double)d; }
    bool is_integer() const { return d == 1; }
    bool is_zero() const { return n == 0; }

    friend Rat operator+(Rat a, Rat b) {
        return from128((__int128)a.n * b.d + (__int128)b.n * a.d, (__int128)a.d * b.d);
    }
    friend Rat operator-(Rat a, Rat b) {
        return from128((__int128)a.n * b.d - (__int128)b.n * a.d, (__int128)a.d * b.d);
    }
    friend Rat operator*(Rat a, Rat b) {
        return from128((__int128)a.n * b.n, (__int128)a.d * b.d);
    }
    friend Rat operator/(Rat a, Rat b) {
        if (b.n == 0) fail(Err::NumericalFailure, "rational division by zero");
        return from128((__int128)a.n * b.d, (__int128)a.d * b.n);
    }
    Rat operator-() const { Rat r; r.n = -n; r.d = d; return r; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.n == b.n && a.d == b.d; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.n * b.d < (__int128)b.n * a.d;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    Rat abs() const { return n < 0 ? -*this : *this; }

    // Largest integer <= value.
    long long floor() const {
        long long q = n / d;
        if (n % d != 0 && n < 0) --q;
        return q;
    }

    std::string str() const {
        if (d == 1) return std::to_string(n);
        return std::to_string(n) + "/" + std::to_string(d);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }
};

// Gaussian rational: exact point of Q(i).
struct GRat {
    Rat re, im;

    GRat() = default;
    GRat(Rat r) : re(r) {}
    GRat(Rat r, Rat i) : re(r), im(i) {}
    GRat(long long r, long long i = 0) : re(r), im(i) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_gaussian_integer() const { return re.is_integer() && im.is_integer(); }

    friend GRat operator+(const GRat& a, const GRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend GRat operator-(const GRat& a, const GRat& b) { return {a.re - b.re, a.im - b.im}; }
    GRat operator-() const { return {-re, -im}; }
    friend GRat operator*(const GRat& a, const GRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GRat operator/(const GRat& a, const GRat& b) {
        Rat nn = b.norm();
        if (nn.is_zero()) fail(Err::NumericalFailure, "gaussian division by zero");
        GRat c = a * b.conj();
        return {c.re / nn, c.im / nn};
    }
    GRat conj() const { return {re, -im}; }
    // Squared modulus |z|^2, exact.
    Rat norm() const { return re * re + im * im; }

    friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }

    std::string str() const {
        if (im.is_zero()) return re.str();
        std::string s = re.is_zero() ? "" : re.str();
        if (!s.empty() && !(im < Rat(0))) s += "+";
        if (im == Rat(1)) s += "i";
        else if (im == Rat(-1)) s += "-i";
        else s += im.str() + "i";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const GRat& z) { return os << z.str(); }
};

// Multiplication by i, used for quarter-turn deck rotations.
inline GRat times_i(const GRat& z) { return {-z.im, z.re}; }
inline GRat ipow(int k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

struct GRatHash {
    size_t operator()(const GRat& z) const {
        auto mix = [](size_t h, long long v) {
            h ^= std::hash<long long>()(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            return h;
        };
        size_t h = 0;
        h = mix(h, z.re.n);
        h = mix(h, z.re.d);
        h = mix(h, z.im.n);
        h = mix(h, z.im.d);
        return h;
    }
};

} // namespace jct
