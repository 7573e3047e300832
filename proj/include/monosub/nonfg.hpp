#pragma once

// Executable form of the non-finite-generation argument.
//
// Given finitely many elements F of R[M(Lambda)], collect the monomials
// M*(F) of Lambda used to write them, add x for the base ring R[x], and let
// beta be the largest slope b/a among them. Every product of those
// monomials has slope <= beta (a sum of pairs has slope at most the largest
// summand slope), while Lambda contains elements of slope above beta because
// its supremum is not attained. The first such element, in canonical order,
// is a monomial of R[M(Lambda)] outside R[x][F].
//
// A certificate records that argument. Its verifier checks slopes only:
// that is already a complete proof of non-membership.

#include <optional>
#include <string>
#include <vector>

#include "monosub/exponents.hpp"
#include "monosub/lambda_families.hpp"
#include "monosub/monoid.hpp"
#include "monosub/polynomials.hpp"

namespace monosub {

inline constexpr const char* kCertificateVersion = "nonfg-cert/1";

struct Certificate {
    LambdaFamily family;
    GeneratorSet generators;
    Slope beta;
    ExponentPair witness;
    BigInt witness_in_family_index;
    std::optional<std::vector<std::string>> created_from;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Certificate against an explicit generator set. Every generator must be an
/// element of the family; (1,0) is added if absent.
///
/// Throws TheoremNotApplicable if hypothesis_check(fam) fails and
/// InvalidGenerators if a generator lies outside the family.
Certificate construct_witness_from_generators(const LambdaFamily& fam, const GeneratorSet& gens);

namespace detail {
Certificate construct_witness_from_supports(const LambdaFamily& fam,
                                            const std::vector<std::vector<Degree>>& supports,
                                            std::vector<std::string> sources);
void require_theorem_applies(const LambdaFamily& fam);
}  // namespace detail

/// Certificate against the polynomials F. Throws TheoremNotApplicable, or
/// NotInSubalgebra if some f is outside R[M(Lambda)].
template <CoefficientRing Ring>
Certificate construct_witness(const LambdaFamily& fam, const std::vector<SparsePoly<Ring>>& polys) {
    detail::require_theorem_applies(fam);
    std::vector<std::vector<Degree>> supports;
    std::vector<std::string> sources;
    for (const auto& f : polys) {
        supports.push_back(monomials_of(f));
        sources.push_back(to_string(f));
    }
    return detail::construct_witness_from_supports(fam, supports, std::move(sources));
}

/// Certificates against the prefixes of length 1..k of the canonical
/// enumeration. Throws TheoremNotApplicable.
std::vector<Certificate> escalation_chain(const LambdaFamily& fam, std::size_t k);

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct VerificationReport {
    bool passed = true;
    std::vector<CheckResult> checks;

    void record(std::string name, bool ok, std::string detail);
    /// First failing check, if any.
    const CheckResult* first_failure() const;
};

struct VerifyOptions {
    /// Also run the reachability search and require that the witness is not
    /// a sum of generators. Implied by the slope checks; a consistency test.
    bool deep_membership = false;
};

VerificationReport verify_certificate(const Certificate& cert, const VerifyOptions& opts = {});

}  // namespace monosub
