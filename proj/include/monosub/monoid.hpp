#pragma once

// Membership and factorization in the additive submonoid of N0 x N0
// generated by a finite set of exponent pairs.
//
// A monomial x^A y^B lies in the subring R[x^a1 y^b1, ..., x^ak y^bk] iff
// (A,B) is a sum of generator exponents: monomials are linearly independent
// over any coefficient ring, so an R-combination of products of generators
// can only produce x^A y^B if some single product equals it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monosub/exponents.hpp"

namespace monosub {

/// Nonempty set of distinct exponent pairs, held in canonical order
/// (increasing a, then increasing b). Duplicates in the input are dropped.
class GeneratorSet {
public:
    /// Throws InvalidGenerators if the list is empty.
    explicit GeneratorSet(std::vector<ExponentPair> generators);

    const std::vector<ExponentPair>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    const ExponentPair& operator[](std::size_t i) const { return gens_[i]; }
    auto begin() const { return gens_.begin(); }
    auto end() const { return gens_.end(); }
    bool contains(const ExponentPair& p) const;

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
    std::vector<ExponentPair> gens_;
};

struct Factor {
    std::size_t index;  // position in the GeneratorSet
    ExponentPair generator;
    std::uint64_t count;

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Multiplicities of generators, listed by increasing generator index.
/// The empty factorization is the empty product and sums to (0,0).
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    /// Total number of generator occurrences.
    std::uint64_t length() const;
    /// Weighted sum of the generators.
    Degree total() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<Factor> factors_;
};

/// "(1,1)^1*(1,4)^1", or "1" for the empty product.
std::string to_string(const Factorization& f);

/// Upper bound on (A+1)(B+1) times the number of participating generators
/// for the reachability grid behind member() and factorizations().
inline constexpr std::uint64_t kMaxGridBits = std::uint64_t{1} << 32;

/// Decides whether target is a sum of generators and, if so, returns the
/// canonical factorization: the one whose factor word (generator indices in
/// nondecreasing order) is lexicographically smallest. Equivalently the
/// multiplicity vector that uses the earliest generators as heavily as
/// possible. (0,0) always succeeds with the empty product.
///
/// Throws SearchSpaceTooLarge when the grid would exceed kMaxGridBits.
std::optional<Factorization> member(const GeneratorSet& gens, const Degree& target);

/// Up to `limit` distinct factorizations of target, in the canonical order
/// used by member(). Throws std::invalid_argument for limit < 1.
std::vector<Factorization> factorizations(const GeneratorSet& gens, const Degree& target,
                                          std::size_t limit);

/// Largest target x-degree member_bruteforce() accepts.
inline constexpr int kBruteforceMaxA = 20;

/// Exhaustive oracle: tries every multiset of at most target.a generators.
/// Shares no search code with member(). Throws BoundExceeded if
/// target.a > kBruteforceMaxA.
bool member_bruteforce(const GeneratorSet& gens, const Degree& target);

/// beta = max b/a over the generators.
Slope max_slope(const GeneratorSet& gens);

}  // namespace monosub
