// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "triad/error.hpp"

namespace triad {

/// Exact rational scalar.
///
/// Every coordinate produced by repeated trisection (denominators 3^d) and
/// halving (denominators 2^p) is stored exactly, so coincident trial points
/// are bit-identical and can key an associative index. The representation is
/// always normalized:
///
///   - denominator > 0 (sign lives in the numerator),
///   - gcd(|numerator|, denominator) = 1,
///   - zero is 0/1.
///
/// Arithmetic is performed in 128-bit intermediates and re-normalized; any
/// result whose normalized fields do not fit in 64 bits throws OverflowError.
/// There is no silent wraparound anywhere.
class Rational {
public:
    constexpr Rational() noexcept : num_(0), den_(1) {}
    Rational(std::int64_t value) noexcept : num_(value), den_(1) {}

    /// Normalizing constructor. Throws DomainError if den == 0 and
    /// OverflowError if the reduced value does not fit.
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_negative() const noexcept { return num_ < 0; }

    /// Nearest double approximation; exactness is for identity, not output.
    double to_double() const noexcept;

    /// Canonical form "num/den", e.g. "2/3", "-1/2", "0/1".
    std::string str() const;

    /// Strict inverse of str(). Also accepts a bare integer ("4" == 4/1)
    /// and non-canonical fractions ("6/18" == 1/3). Throws FormatError on
    /// malformed input, DomainError on a zero denominator.
    static Rational parse(std::string_view text);

    Rational operator-() const;
    Rational operator+(const Rational& rhs) const;
    Rational operator-(const Rational& rhs) const;
    Rational operator*(const Rational& rhs) const;

    Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
    Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
    Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }

    /// Total order consistent with the real numbers; exact.
    std::strong_ordering operator<=>(const Rational& rhs) const;

    /// Normalized fields compare directly.
    bool operator==(const Rational& rhs) const noexcept
    {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }

private:
    std::int64_t num_;
    std::int64_t den_;
};

inline Rational abs(const Rational& x)
{
    return x.is_negative() ? -x : x;
}

/// a + k*(b - a)/3 with k in {1, 2}: the shared kernel of the trisection cut
/// coordinates. Computed with a single normalization pass.
Rational affine_third(const Rational& a, const Rational& b, int k);

/// Exact (a + b)/2.
Rational midpoint(const Rational& a, const Rational& b);

} // namespace triad

template <>
struct std::hash<triad::Rational> {
    std::size_t operator()(const triad::Rational& x) const noexcept
    {
        const std::uint64_t n = static_cast<std::uint64_t>(x.numerator());
        const std::uint64_t d = static_cast<std::uint64_t>(x.denominator());
        std::uint64_t h = n * 0x9e3779b97f4a7c15ULL;
        h ^= d + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};
