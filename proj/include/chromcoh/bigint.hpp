#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chromcoh {

/// Arbitrary-precision integer used for every structure constant, matrix
/// entry and polynomial coefficient.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline bool fits_int64(const BigInt& v) { return v.fits_slong_p() && sizeof(long) == 8; }

/// Thrown by Checked64 when an operation leaves the int64 range.
struct IntOverflow : std::overflow_error {
    IntOverflow() : std::overflow_error("int64 overflow") {}
};

/// int64 arithmetic that throws instead of wrapping. The elimination kernels
/// run on this first and retry with BigInt on IntOverflow.
struct Checked64 {
    std::int64_t v = 0;

    constexpr Checked64() = default;
    constexpr Checked64(std::int64_t x) : v(x) {}  // NOLINT(google-explicit-constructor)

    friend Checked64 operator+(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw IntOverflow();
        return r;
    }
    friend Checked64 operator-(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw IntOverflow();
        return r;
    }
    friend Checked64 operator*(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw IntOverflow();
        return r;
    }
    friend Checked64 operator/(Checked64 a, Checked64 b) {
        if (a.v == INT64_MIN && b.v == -1) throw IntOverflow();
        return a.v / b.v;
    }
    friend Checked64 operator%(Checked64 a, Checked64 b) {
        if (b.v == -1) return 0;
        return a.v % b.v;
    }
    Checked64 operator-() const {
        if (v == INT64_MIN) throw IntOverflow();
        return -v;
    }
    Checked64& operator+=(Checked64 o) { return *this = *this + o; }
    Checked64& operator-=(Checked64 o) { return *this = *this - o; }
    Checked64& operator*=(Checked64 o) { return *this = *this * o; }

    friend bool operator==(Checked64 a, Checked64 b) { return a.v == b.v; }
    friend auto operator<=>(Checked64 a, Checked64 b) { return a.v <=> b.v; }
};

inline Checked64 abs(Checked64 a) { return a.v < 0 ? -a : a; }
inline BigInt to_bigint(Checked64 a) { return BigInt(static_cast<long>(a.v)); }
inline BigInt to_bigint(const BigInt& a) { return a; }

template <class Int> Int from_bigint(const BigInt& v);
template <> inline BigInt from_bigint<BigInt>(const BigInt& v) { return v; }
template <> inline Checked64 from_bigint<Checked64>(const BigInt& v) {
    if (!fits_int64(v)) throw IntOverflow();
    return Checked64(v.get_si());
}

inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }
inline bool is_zero(Checked64 v) { return v.v == 0; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }
inline bool is_unit(Checked64 v) { return v.v == 1 || v.v == -1; }

}  // namespace chromcoh
