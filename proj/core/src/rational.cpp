// SPDX-License-Identifier: Apache-2.0

#include "triad/rational.hpp"

#include <charconv>
#include <limits>

namespace triad {

namespace {

using Int128 = __int128;

constexpr std::int64_t kMax64 = std::numeric_limits<std::int64_t>::max();

Int128 checked_mul(Int128 a, Int128 b)
{
    Int128 r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("rational arithmetic exceeded 128-bit intermediate range");
    }
    return r;
}

Int128 checked_add(Int128 a, Int128 b)
{
    Int128 r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("rational arithmetic exceeded 128-bit intermediate range");
    }
    return r;
}

Int128 abs128(Int128 x)
{
    return x < 0 ? -x : x;
}

Int128 gcd128(Int128 a, Int128 b)
{
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Normalized {
    std::int64_t num;
    std::int64_t den;
};

// Reduce n/d to canonical form and range-check the result. |num| is capped at
// INT64_MAX (INT64_MIN is rejected so negation can never overflow).
Normalized normalize(Int128 n, Int128 d)
{
    if (d == 0) {
        throw DomainError("rational with zero denominator");
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        return {0, 1};
    }
    const Int128 g = gcd128(abs128(n), d);
    n /= g;
    d /= g;
    if (n > static_cast<Int128>(kMax64) || n < -static_cast<Int128>(kMax64) ||
        d > static_cast<Int128>(kMax64)) {
        throw OverflowError("rational value exceeds 64-bit capacity");
    }
    return {static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
}

Rational from_parts(Int128 n, Int128 d)
{
    const Normalized r = normalize(n, d);
    return Rational(r.num, r.den);
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    const Normalized r = normalize(num, den);
    num_ = r.num;
    den_ = r.den;
}

double Rational::to_double() const noexcept
{
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text)
{
    const auto parse_int = [](std::string_view s) -> std::int64_t {
        std::int64_t value = 0;
        const char* first = s.data();
        const char* last = s.data() + s.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) {
            throw FormatError("malformed rational literal: '" + std::string(s) + "'");
        }
        return value;
    };

    if (text.empty()) {
        throw FormatError("empty rational literal");
    }
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    const std::int64_t num = parse_int(text.substr(0, slash));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    return Rational(num, den);
}

Rational Rational::operator-() const
{
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::operator+(const Rational& rhs) const
{
    const Int128 n = checked_add(checked_mul(num_, rhs.den_), checked_mul(rhs.num_, den_));
    const Int128 d = checked_mul(den_, rhs.den_);
    return from_parts(n, d);
}

Rational Rational::operator-(const Rational& rhs) const
{
    return *this + (-rhs);
}

Rational Rational::operator*(const Rational& rhs) const
{
    return from_parts(checked_mul(num_, rhs.num_), checked_mul(den_, rhs.den_));
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const
{
    // Denominators are positive, so cross multiplication preserves order.
    const Int128 lhs_scaled = static_cast<Int128>(num_) * rhs.den_;
    const Int128 rhs_scaled = static_cast<Int128>(rhs.num_) * den_;
    if (lhs_scaled < rhs_scaled) {
        return std::strong_ordering::less;
    }
    if (lhs_scaled > rhs_scaled) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Rational affine_third(const Rational& a, const Rational& b, int k)
{
    if (k != 1 && k != 2) {
        throw DomainError("affine_third requires k in {1, 2}");
    }
    // a + k*(b - a)/3 == (3*an*bd + k*(bn*ad - an*bd)) / (3*ad*bd), one pass.
    const Int128 an_bd = checked_mul(a.numerator(), b.denominator());
    const Int128 bn_ad = checked_mul(b.numerator(), a.denominator());
    const Int128 n = checked_add(checked_mul(3, an_bd),
                                 checked_mul(k, checked_add(bn_ad, -an_bd)));
    const Int128 d = checked_mul(3, checked_mul(a.denominator(), b.denominator()));
    return from_parts(n, d);
}

Rational midpoint(const Rational& a, const Rational& b)
{
    const Int128 n = checked_add(checked_mul(a.numerator(), b.denominator()),
                                 checked_mul(b.numerator(), a.denominator()));
    const Int128 d = checked_mul(2, checked_mul(a.denominator(), b.denominator()));
    return from_parts(n, d);
}

} // namespace triad
