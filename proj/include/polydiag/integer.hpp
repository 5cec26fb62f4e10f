#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polydiag {

#ifdef POLYDIAG_WIDE_INT
using Int = __int128;
#else
using Int = std::int64_t;
#endif

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised whenever an exact integer operation would wrap around.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what);
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

Int gcd(Int a, Int b);
/// Least common multiple of |a| and |b|; lcm(0, x) = |x|.
Int lcm(Int a, Int b);

std::string to_string(Int value);
/// Parses an optionally signed decimal integer; the whole string must be consumed.
Int parse_int(std::string_view text);

/// Exact rational with a positive denominator, always kept in lowest terms.
class Rational {
public:
    Rational() = default;
    Rational(Int value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(Int numerator, Int denominator);

    Int num() const { return num_; }
    Int den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }

    friend bool operator==(const Rational&, const Rational&) = default;

    std::string str() const;

private:
    Int num_ = 0;
    Int den_ = 1;
};

}  // namespace polydiag
