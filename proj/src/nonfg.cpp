#include "monosub/nonfg.hpp"

#include <algorithm>

#include "monosub/errors.hpp"

namespace monosub {

namespace detail {

void require_theorem_applies(const LambdaFamily& fam) {
    HypothesisReport h = hypothesis_check(fam);
    if (h.theorem_applies) return;
    if (h.sup_is_attained == Truth::True) throw TheoremNotApplicable("theorem not applicable: sup attained");
    throw TheoremNotApplicable("theorem not applicable: hypotheses on the family are not established");
}

namespace {

Certificate assemble(const LambdaFamily& fam, std::vector<ExponentPair> gens,
                     std::optional<std::vector<std::string>> sources) {
    gens.emplace_back(1, 0);
    GeneratorSet set(std::move(gens));
    Slope beta = max_slope(set);
    IndexedElement w = first_exceeding(fam, beta);
    return Certificate{fam, std::move(set), std::move(beta), std::move(w.element), std::move(w.index),
                       std::move(sources)};
}

}  // namespace

Certificate construct_witness_from_supports(const LambdaFamily& fam,
                                            const std::vector<std::vector<Degree>>& supports,
                                            std::vector<std::string> sources) {
    require_theorem_applies(fam);
    GeneratorSet mstar = extract_mstar_supports(supports, fam);
    return assemble(fam, mstar.generators(), std::move(sources));
}

}  // namespace detail

Certificate construct_witness_from_generators(const LambdaFamily& fam, const GeneratorSet& gens) {
    detail::require_theorem_applies(fam);
    for (const auto& g : gens) {
        if (!fam.contains(g)) {
            throw InvalidGenerators("generator " + to_string(g) + " is not an element of the " +
                                    to_string(fam.kind()) + " family");
        }
    }
    return detail::assemble(fam, gens.generators(), std::nullopt);
}

std::vector<Certificate> escalation_chain(const LambdaFamily& fam, std::size_t k) {
    detail::require_theorem_applies(fam);
    std::vector<Certificate> chain;
    if (k == 0) return chain;
    std::vector<ExponentPair> prefix = enumerate(fam, k);
    chain.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) {
        std::vector<ExponentPair> gens(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(i));
        chain.push_back(construct_witness_from_generators(fam, GeneratorSet(std::move(gens))));
    }
    return chain;
}

void VerificationReport::record(std::string name, bool ok, std::string detail) {
    passed = passed && ok;
    checks.push_back({std::move(name), ok, std::move(detail)});
}

const CheckResult* VerificationReport::first_failure() const {
    auto it = std::find_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; });
    return it == checks.end() ? nullptr : &*it;
}

namespace {

// Every element strictly before position `index` has slope <= beta.
bool no_earlier_element_exceeds(const LambdaFamily& fam, const BigInt& index, const Slope& beta) {
    if (fam.kind() == FamilyKind::Vertical) {
        // Earlier elements are (1,0), ..., (1,index-1); the largest slope is index-1.
        return index == 0 || Slope(index - 1, 1) <= beta;
    }
    for (BigInt i = 0; i < index; ++i) {
        std::optional<ExponentPair> e = fam.element_at(i);
        if (!e) return false;
        if (slope_of(*e) > beta) return false;
    }
    return true;
}

}  // namespace

VerificationReport verify_certificate(const Certificate& cert, const VerifyOptions& opts) {
    VerificationReport report;
    const LambdaFamily& fam = cert.family;
    const Slope& beta = cert.beta;

    HypothesisReport h = hypothesis_check(fam);
    report.record("theorem_applies", h.theorem_applies,
                  h.theorem_applies ? "" : to_string(fam.kind()) + " family does not satisfy the hypotheses");

    std::optional<BigInt> index = fam.index_of(cert.witness);
    bool index_ok = index && *index == cert.witness_in_family_index;
    report.record("witness_index", index_ok,
                  index_ok ? ""
                  : index  ? "witness " + to_string(cert.witness) + " is at index " + index->str() +
                                ", certificate claims " + cert.witness_in_family_index.str()
                           : "witness " + to_string(cert.witness) + " is not an element of the family");

    std::string outside;
    for (const auto& g : cert.generators) {
        if (!fam.contains(g)) outside += (outside.empty() ? "" : ", ") + to_string(g);
    }
    report.record("generators_in_family", outside.empty(), outside.empty() ? "" : "not in family: " + outside);

    bool has_x = cert.generators.contains(ExponentPair(1, 0));
    report.record("generators_include_x", has_x, has_x ? "" : "(1,0) missing from generators");

    std::string too_steep;
    bool attained = false;
    for (const auto& g : cert.generators) {
        Slope s = slope_of(g);
        if (s > beta) too_steep += (too_steep.empty() ? "" : ", ") + to_string(g);
        if (s == beta) attained = true;
    }
    report.record("generator_slopes_bounded", too_steep.empty(),
                  too_steep.empty() ? "" : "slope above " + to_string(beta) + ": " + too_steep);
    report.record("beta_is_max_slope", attained,
                  attained ? "" : "no generator has slope " + to_string(beta));

    Slope ws = slope_of(cert.witness);
    bool exceeds = ws > beta;
    report.record("witness_exceeds_beta", exceeds,
                  exceeds ? "" : "witness slope " + to_string(ws) + " does not exceed " + to_string(beta));

    if (index_ok) {
        bool first = no_earlier_element_exceeds(fam, *index, beta);
        report.record("witness_first_exceeding", first,
                      first ? "" : "an earlier family element already exceeds " + to_string(beta));
    } else {
        report.record("witness_first_exceeding", false, "skipped: witness index is wrong");
    }

    if (opts.deep_membership) {
        try {
            bool outside_monoid = !member(cert.generators, cert.witness).has_value();
            report.record("deep_membership", outside_monoid,
                          outside_monoid ? "" : "witness is a sum of generators");
        } catch (const SearchSpaceTooLarge& e) {
            report.record("deep_membership", false, e.what());
        }
    }
    return report;
}

}  // namespace monosub
