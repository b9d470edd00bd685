#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "contspec/errors.hpp"

namespace contspec {

// Exact rational on 64-bit words: denominator positive, fraction fully
// reduced, so operator== is field-wise. Arithmetic and comparisons run
// through __int128 intermediates; everything this library produces stays
// far below the narrowing limit (interval endpoints live in [0,3], dyadic
// probe denominators are at most 2^40).
class Rat {
  public:
    constexpr Rat() = default;
    constexpr Rat(long long n) : num_(n) {}
    Rat(long long n, long long d) {
        if (d == 0)
            throw input_error("rational with zero denominator");
        assign(n, d);
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    bool operator==(const Rat&) const = default;
    std::strong_ordering operator<=>(const Rat& o) const {
        const __int128 l = static_cast<__int128>(num_) * o.den_;
        const __int128 r = static_cast<__int128>(o.num_) * den_;
        if (l < r)
            return std::strong_ordering::less;
        if (l > r)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rat operator+(const Rat& o) const {
        return make(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                    static_cast<__int128>(den_) * o.den_);
    }
    Rat operator-(const Rat& o) const { return *this + (-o); }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    // 2^-k, exact; k in [0, 62]
    static Rat dyadic(int k) {
        if (k < 0 || k > 62)
            throw input_error("dyadic exponent out of range");
        Rat r;
        r.num_ = 1;
        r.den_ = 1LL << k;
        return r;
    }

  private:
    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0)
            a = -a;
        if (b < 0)
            b = -b;
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rat make(__int128 n, __int128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const __int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("rational exceeds 64-bit range");
        Rat r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    void assign(long long n, long long d) { *this = make(n, d); }

    long long num_ = 0;
    long long den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace contspec
