#include "polydiag/integer.hpp"

#include <algorithm>
#include <limits>

namespace polydiag {

namespace {

#ifdef POLYDIAG_WIDE_INT
constexpr const char* kOverflowHint = "integer overflow even with 128-bit arithmetic";
#else
constexpr const char* kOverflowHint =
    "integer overflow in 64-bit arithmetic; reconfigure with -DPOLYDIAG_WIDE_INT=ON";
#endif

Int abs_checked(Int a) { return a < 0 ? checked_neg(a) : a; }

}  // namespace

OverflowError::OverflowError(const std::string& what)
    : std::overflow_error(what + ": " + kOverflowHint) {}

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("multiplication");
    return r;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

Int gcd(Int a, Int b) {
    a = abs_checked(a);
    b = abs_checked(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm(Int a, Int b) {
    if (a == 0) return abs_checked(b);
    if (b == 0) return abs_checked(a);
    return checked_mul(abs_checked(a) / gcd(a, b), abs_checked(b));
}

std::string to_string(Int value) {
    if (value == 0) return "0";
    std::string out;
    bool negative = value < 0;
    // Negative remainders keep the minimum value in range.
    while (value != 0) {
        Int digit = value % 10;
        out.push_back(static_cast<char>('0' + (digit < 0 ? -digit : digit)));
        value /= 10;
    }
    if (negative) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

Int parse_int(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) throw InvalidArgument("not an integer: '" + std::string(text) + "'");
    Int value = 0;
    for (; pos < text.size(); ++pos) {
        char ch = text[pos];
        if (ch < '0' || ch > '9') throw InvalidArgument("not an integer: '" + std::string(text) + "'");
        value = checked_mul(value, 10);
        value = negative ? checked_sub(value, ch - '0') : checked_add(value, ch - '0');
    }
    return value;
}

Rational::Rational(Int numerator, Int denominator) {
    if (denominator == 0) throw InvalidArgument("zero denominator");
    if (denominator < 0) {
        numerator = checked_neg(numerator);
        denominator = checked_neg(denominator);
    }
    Int g = gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

Rational operator+(const Rational& a, const Rational& b) {
    Int g = gcd(a.den_, b.den_);
    Int left = checked_mul(a.num_, b.den_ / g);
    Int right = checked_mul(b.num_, a.den_ / g);
    return {checked_add(left, right), checked_mul(a.den_ / g, b.den_)};
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    Int g1 = gcd(a.num_, b.den_);
    Int g2 = gcd(b.num_, a.den_);
    return {checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1)};
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InvalidArgument("division by zero");
    return a * Rational(b.den_, b.num_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked_neg(num_);
    r.den_ = den_;
    return r;
}

std::string Rational::str() const {
    return den_ == 1 ? to_string(num_) : to_string(num_) + "/" + to_string(den_);
}

}  // namespace polydiag
