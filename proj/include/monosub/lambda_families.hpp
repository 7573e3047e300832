#pragma once

// Finitely described exponent sets Lambda with (1,0) in Lambda.
//
// Three kinds exist: an explicit finite list, the vertical ray
// {(1,n) : n >= 0}, and the Fibonacci pairs {(f(2n-1), f(2n)) : n >= 0}.
// Each has a fixed canonical enumeration order; every downstream choice
// (witnesses, certificate indices) is made with respect to that order.
//
// The supremum of slopes over an infinite family is never materialized.
// For the Fibonacci family it is the golden ratio; the code only ever asks
// "is this rational below it", which has an exact integer answer.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monosub/exponents.hpp"

namespace monosub {

enum class FamilyKind { Finite, Vertical, Fibonacci };

std::string to_string(FamilyKind kind);

class LambdaFamily {
public:
    static LambdaFamily vertical();
    static LambdaFamily fibonacci();
    /// Deduplicates (keeping first occurrences) and throws InvalidFamily if
    /// (1,0) is absent.
    static LambdaFamily finite(std::vector<ExponentPair> elements);

    FamilyKind kind() const { return kind_; }
    bool is_finite() const { return kind_ == FamilyKind::Finite; }
    /// Only meaningful for Finite; empty otherwise.
    const std::vector<ExponentPair>& elements() const { return elements_; }

    /// Element at a position of the canonical enumeration; nullopt past the
    /// end of a finite family.
    std::optional<ExponentPair> element_at(const BigInt& index) const;

    /// Position of p in the canonical enumeration, or nullopt if p is not in
    /// the family.
    std::optional<BigInt> index_of(const ExponentPair& p) const;
    bool contains(const ExponentPair& p) const { return index_of(p).has_value(); }

    friend bool operator==(const LambdaFamily&, const LambdaFamily&) = default;

private:
    LambdaFamily(FamilyKind kind, std::vector<ExponentPair> elements)
        : kind_(kind), elements_(std::move(elements)) {}

    FamilyKind kind_;
    std::vector<ExponentPair> elements_;
};

/// Fibonacci numbers with f(-1) = 1, f(0) = 0, f(1) = 1.
/// Throws std::invalid_argument for n < -1.
BigInt fibonacci(std::int64_t n);

/// First min(k, |Lambda|) elements in canonical order. Throws
/// std::invalid_argument for k < 1.
std::vector<ExponentPair> enumerate(const LambdaFamily& fam, std::size_t k);

/// Every (a,b) in Lambda with a <= max_a and b <= max_b, in canonical order.
std::vector<ExponentPair> elements_within(const LambdaFamily& fam, const BigInt& max_a,
                                          const BigInt& max_b);

struct IndexedElement {
    BigInt index;
    ExponentPair element;
};

/// First element in canonical order whose slope strictly exceeds beta.
///
/// Throws NoSuchElement when there is none: a finite family whose slopes
/// are all <= beta, or a bound at or above the golden ratio for the
/// Fibonacci family.
IndexedElement first_exceeding(const LambdaFamily& fam, const Slope& beta);
ExponentPair exceed_slope(const LambdaFamily& fam, const Slope& beta);

/// Exact test of p/q < (1 + sqrt 5)/2, i.e. 2p - q < 0 or (2p - q)^2 < 5q^2.
bool below_golden_ratio(const Slope& s);

enum class Truth { False, True, Unknown };

std::string to_string(Truth t);

struct HypothesisReport {
    bool contains_origin_generator = false;
    Truth sup_is_attained = Truth::Unknown;
    Truth strict_inequality_holds = Truth::Unknown;
    bool theorem_applies = false;
};

/// Largest Fibonacci element index checked for strictly increasing slopes.
inline constexpr int kFibonacciMonotoneCheckDepth = 25;

/// True when slopes of Fibonacci elements 0..last_index strictly increase.
bool fibonacci_slopes_strictly_increase(int last_index);

HypothesisReport hypothesis_check(const LambdaFamily& fam);

}  // namespace monosub
