#pragma once

#include <concepts>
#include <string>

#include "monosub/exponents.hpp"

namespace monosub {

/// A commutative ring with identity, given as a stateless-or-small object
/// that performs the operations on its element type.
template <typename R>
concept CoefficientRing = requires(const R& ring, const typename R::value_type& x,
                                   const typename R::value_type& y, const BigInt& n) {
    { ring.zero() } -> std::same_as<typename R::value_type>;
    { ring.one() } -> std::same_as<typename R::value_type>;
    { ring.add(x, y) } -> std::same_as<typename R::value_type>;
    { ring.neg(x) } -> std::same_as<typename R::value_type>;
    { ring.mul(x, y) } -> std::same_as<typename R::value_type>;
    { ring.equal(x, y) } -> std::convertible_to<bool>;
    { ring.from_integer(n) } -> std::same_as<typename R::value_type>;
    { ring.to_string(x) } -> std::same_as<std::string>;
    { ring == ring } -> std::convertible_to<bool>;
};

/// The integers Z.
struct IntegerRing {
    using value_type = BigInt;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type add(const value_type& x, const value_type& y) const { return x + y; }
    value_type neg(const value_type& x) const { return -x; }
    value_type mul(const value_type& x, const value_type& y) const { return x * y; }
    bool equal(const value_type& x, const value_type& y) const { return x == y; }
    value_type from_integer(const BigInt& n) const { return n; }
    std::string to_string(const value_type& x) const { return x.str(); }

    friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

/// Z/mZ for m >= 2, elements held as representatives in [0, m).
class ModularRing {
public:
    using value_type = BigInt;

    /// Throws std::invalid_argument for m < 2.
    explicit ModularRing(BigInt modulus);

    const BigInt& modulus() const { return m_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type add(const value_type& x, const value_type& y) const { return reduce(x + y); }
    value_type neg(const value_type& x) const { return reduce(-x); }
    value_type mul(const value_type& x, const value_type& y) const { return reduce(x * y); }
    bool equal(const value_type& x, const value_type& y) const { return reduce(x) == reduce(y); }
    value_type from_integer(const BigInt& n) const { return reduce(n); }
    std::string to_string(const value_type& x) const { return reduce(x).str(); }

    friend bool operator==(const ModularRing&, const ModularRing&) = default;

private:
    value_type reduce(const value_type& x) const {
        value_type r = x % m_;
        return r < 0 ? value_type(r + m_) : r;
    }

    BigInt m_;
};

static_assert(CoefficientRing<IntegerRing>);
static_assert(CoefficientRing<ModularRing>);

}  // namespace monosub
