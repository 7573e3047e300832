#pragma once

// Exact arithmetic on exponent pairs (a,b) of monomials x^a y^b and on the
// slopes b/a attached to them. Everything is arbitrary precision; slopes are
// compared by cross-multiplication and never converted to floating point.

#include <compare>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace monosub {

using BigInt = boost::multiprecision::cpp_int;

/// Parses a decimal integer with an optional leading sign. Throws ParseError.
BigInt parse_bigint(const std::string& text);

/// Exponent vector of an arbitrary monomial x^a y^b with a, b >= 0.
///
/// Used for polynomial supports and membership targets, where (0,0) and
/// pure powers of y are legitimate.
struct Degree {
    BigInt a;
    BigInt b;

    Degree() = default;
    /// Throws std::invalid_argument on a negative coordinate.
    Degree(BigInt a_, BigInt b_);

    bool is_zero() const { return a == 0 && b == 0; }

    friend bool operator==(const Degree&, const Degree&) = default;
    friend std::strong_ordering operator<=>(const Degree& l, const Degree& r);
};

Degree operator+(const Degree& p, const Degree& q);

/// Exact rational b/a with b >= 0 and a >= 1, kept unreduced.
class Slope {
public:
    /// Throws std::invalid_argument if numerator < 0 or denominator < 1.
    Slope(BigInt numerator, BigInt denominator);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    /// Lowest-terms copy, for display.
    Slope reduced() const;

    /// Equality and ordering are those of the rationals, not of the stored pair.
    friend bool operator==(const Slope& s, const Slope& t);
    friend std::strong_ordering operator<=>(const Slope& s, const Slope& t);

private:
    BigInt num_;
    BigInt den_;
};

std::strong_ordering compare_slopes(const Slope& s, const Slope& t);

/// A point (a,b) of N x N0; the exponent of a monomial in M(Lambda).
class ExponentPair {
public:
    /// Throws std::invalid_argument unless a >= 1 and b >= 0.
    ExponentPair(BigInt a, BigInt b);

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }

    Degree degree() const { return Degree{a_, b_}; }
    operator Degree() const { return degree(); }

    /// Canonical order: increasing a, then increasing b.
    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
    friend std::strong_ordering operator<=>(const ExponentPair& l, const ExponentPair& r);

private:
    BigInt a_;
    BigInt b_;
};

Slope slope_of(const ExponentPair& p);
ExponentPair add(const ExponentPair& p, const ExponentPair& q);
inline ExponentPair operator+(const ExponentPair& p, const ExponentPair& q) { return add(p, q); }

/// "(a,b)"
std::string to_string(const Degree& d);
std::string to_string(const ExponentPair& p);
/// "b/a", exactly as stored.
std::string to_string(const Slope& s);

std::ostream& operator<<(std::ostream& os, const Degree& d);
std::ostream& operator<<(std::ostream& os, const ExponentPair& p);
std::ostream& operator<<(std::ostream& os, const Slope& s);

}  // namespace monosub
