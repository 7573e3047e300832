#pragma once

// Sparse polynomials in R[x,y] and membership in monomial subalgebras
// R[M(Lambda)].
//
// Membership is decided term by term. Distinct monomials are linearly
// independent over any coefficient ring, so f lies in the subring generated
// by a set of monomials iff every monomial in its support does, and a
// monomial does iff its exponent is a sum of generator exponents.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monosub/coefficient_ring.hpp"
#include "monosub/errors.hpp"
#include "monosub/exponents.hpp"
#include "monosub/lambda_families.hpp"
#include "monosub/monoid.hpp"

namespace monosub {

template <CoefficientRing Ring>
class SparsePoly {
public:
    using coefficient_type = typename Ring::value_type;
    using term_map = std::map<Degree, coefficient_type>;

    explicit SparsePoly(Ring ring = Ring{}) : ring_(std::move(ring)) {}

    static SparsePoly monomial(Ring ring, Degree d, const coefficient_type& c) {
        SparsePoly p(std::move(ring));
        p.add_term(std::move(d), c);
        return p;
    }

    const Ring& ring() const { return ring_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * x^d.a * y^d.b, dropping the term if it cancels.
    void add_term(Degree d, const coefficient_type& c) {
        auto it = terms_.find(d);
        coefficient_type sum = it == terms_.end() ? c : ring_.add(it->second, c);
        if (ring_.equal(sum, ring_.zero())) {
            if (it != terms_.end()) terms_.erase(it);
        } else if (it == terms_.end()) {
            terms_.emplace(std::move(d), ring_.add(ring_.zero(), sum));
        } else {
            it->second = std::move(sum);
        }
    }

    friend bool operator==(const SparsePoly& f, const SparsePoly& g) {
        if (!(f.ring_ == g.ring_) || f.terms_.size() != g.terms_.size()) return false;
        for (auto i = f.terms_.begin(), j = g.terms_.begin(); i != f.terms_.end(); ++i, ++j) {
            if (i->first != j->first || !f.ring_.equal(i->second, j->second)) return false;
        }
        return true;
    }

private:
    Ring ring_;
    term_map terms_;
};

using IntPoly = SparsePoly<IntegerRing>;
using ModPoly = SparsePoly<ModularRing>;

namespace detail {
template <CoefficientRing Ring>
void require_same_ring(const SparsePoly<Ring>& f, const SparsePoly<Ring>& g) {
    if (!(f.ring() == g.ring())) throw std::invalid_argument("polynomials over different coefficient rings");
}
}  // namespace detail

template <CoefficientRing Ring>
SparsePoly<Ring> poly_add(const SparsePoly<Ring>& f, const SparsePoly<Ring>& g) {
    detail::require_same_ring(f, g);
    SparsePoly<Ring> out = f;
    for (const auto& [d, c] : g.terms()) out.add_term(d, c);
    return out;
}

template <CoefficientRing Ring>
SparsePoly<Ring> poly_scale(const typename Ring::value_type& c, const SparsePoly<Ring>& f) {
    SparsePoly<Ring> out(f.ring());
    for (const auto& [d, fc] : f.terms()) out.add_term(d, f.ring().mul(c, fc));
    return out;
}

template <CoefficientRing Ring>
SparsePoly<Ring> poly_mul(const SparsePoly<Ring>& f, const SparsePoly<Ring>& g) {
    detail::require_same_ring(f, g);
    SparsePoly<Ring> out(f.ring());
    for (const auto& [df, cf] : f.terms()) {
        for (const auto& [dg, cg] : g.terms()) out.add_term(df + dg, f.ring().mul(cf, cg));
    }
    return out;
}

template <CoefficientRing Ring>
SparsePoly<Ring> operator+(const SparsePoly<Ring>& f, const SparsePoly<Ring>& g) { return poly_add(f, g); }
template <CoefficientRing Ring>
SparsePoly<Ring> operator*(const SparsePoly<Ring>& f, const SparsePoly<Ring>& g) { return poly_mul(f, g); }

/// Support of f in increasing (a,b) order.
template <CoefficientRing Ring>
std::vector<Degree> monomials_of(const SparsePoly<Ring>& f) {
    std::vector<Degree> out;
    out.reserve(f.terms().size());
    for (const auto& term : f.terms()) out.push_back(term.first);
    return out;
}

// Text format: terms "c*x^a*y^b" joined by '+'. A coefficient may carry a
// sign; "*x^a" and "*y^b" may be omitted (exponent 0) and "x", "y" stand
// for exponent 1. Exponents are nonnegative decimal integers.

struct ParsedTerm {
    BigInt coefficient;
    Degree degree;
};

/// Throws ParseError on malformed text or negative exponents.
std::vector<ParsedTerm> parse_terms(const std::string& text);

template <CoefficientRing Ring>
SparsePoly<Ring> parse_polynomial(const std::string& text, Ring ring = Ring{}) {
    SparsePoly<Ring> p(std::move(ring));
    for (auto& t : parse_terms(text)) p.add_term(std::move(t.degree), p.ring().from_integer(t.coefficient));
    return p;
}

/// Canonical rendering: terms in increasing (a,b) order, "c*x^a*y^b" joined
/// by " + "; the zero polynomial is "0".
template <CoefficientRing Ring>
std::string to_string(const SparsePoly<Ring>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [d, c] : f.terms()) {
        if (!out.empty()) out += " + ";
        out += f.ring().to_string(c) + "*x^" + d.a.str() + "*y^" + d.b.str();
    }
    return out;
}

struct TermFactorization {
    Degree term;
    Factorization factorization;
};

/// Outcome of a subalgebra membership test, with the chosen M*(f).
struct MStarResult {
    bool inside = false;
    /// Union of the generators used by the recorded factorizations, sorted.
    std::vector<ExponentPair> generating_monomials;
    /// One canonical factorization per non-constant support term.
    std::vector<TermFactorization> factorizations;
    /// Support terms with no factorization over Lambda.
    std::vector<Degree> failing_terms;
};

/// Membership of a polynomial with the given support in R[M(Lambda)].
MStarResult in_subalgebra_support(const std::vector<Degree>& support, const LambdaFamily& fam);

template <CoefficientRing Ring>
MStarResult in_subalgebra(const SparsePoly<Ring>& f, const LambdaFamily& fam) {
    return in_subalgebra_support(monomials_of(f), fam);
}

/// Raised by extract_mstar for a polynomial outside R[M(Lambda)].
class NotInSubalgebra : public Error {
public:
    NotInSubalgebra(std::size_t polynomial_index, Degree term);

    std::size_t polynomial_index() const { return index_; }
    const Degree& term() const { return term_; }

private:
    std::size_t index_;
    Degree term_;
};

/// Union of the chosen M*(f) over the supports. An empty union, including
/// the case of no polynomials at all, becomes {(1,0)}.
GeneratorSet extract_mstar_supports(const std::vector<std::vector<Degree>>& supports,
                                    const LambdaFamily& fam);

template <CoefficientRing Ring>
GeneratorSet extract_mstar(const std::vector<SparsePoly<Ring>>& polys, const LambdaFamily& fam) {
    std::vector<std::vector<Degree>> supports;
    supports.reserve(polys.size());
    for (const auto& f : polys) supports.push_back(monomials_of(f));
    return extract_mstar_supports(supports, fam);
}

}  // namespace monosub
