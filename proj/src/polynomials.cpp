#include "monosub/polynomials.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace monosub {

namespace {

class TermParser {
public:
    explicit TermParser(const std::string& text) {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
        }
    }

    std::vector<ParsedTerm> parse() {
        if (s_.empty()) fail("empty polynomial");
        std::vector<ParsedTerm> terms;
        bool negate = false;
        for (;;) {
            bool sign_negative = accept('-');
            if (!sign_negative) accept('+');
            ParsedTerm t = term();
            if (negate != sign_negative) t.coefficient = -t.coefficient;
            terms.push_back(std::move(t));
            if (pos_ == s_.size()) break;
            if (accept('+')) {
                negate = false;
            } else if (accept('-')) {
                negate = true;
            } else {
                fail("expected '+' between terms");
            }
        }
        return terms;
    }

private:
    ParsedTerm term() {
        ParsedTerm t{1, Degree{0, 0}};
        bool need_factor = true;
        if (peek_digit()) {
            t.coefficient = digits();
            need_factor = false;
            if (!accept('*')) return t;
            need_factor = true;
        }
        while (need_factor) {
            char var = pos_ < s_.size() ? s_[pos_] : '\0';
            if (var != 'x' && var != 'y') fail("expected 'x' or 'y'");
            ++pos_;
            BigInt e = 1;
            if (accept('^')) {
                if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponent");
                if (!peek_digit()) fail("expected exponent after '^'");
                e = digits();
            }
            (var == 'x' ? t.degree.a : t.degree.b) += e;
            need_factor = accept('*');
        }
        return t;
    }

    BigInt digits() {
        BigInt v = 0;
        while (peek_digit()) v = v * 10 + (s_[pos_++] - '0');
        return v;
    }

    bool peek_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial: " + what + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<ParsedTerm> parse_terms(const std::string& text) { return TermParser(text).parse(); }

ModularRing::ModularRing(BigInt modulus) : m_(std::move(modulus)) {
    if (m_ < 2) throw std::invalid_argument("modulus must be at least 2, got " + m_.str());
}

NotInSubalgebra::NotInSubalgebra(std::size_t polynomial_index, Degree term)
    : Error("polynomial " + std::to_string(polynomial_index) + " is outside the subalgebra: term " +
            to_string(term) + " has no factorization"),
      index_(polynomial_index),
      term_(std::move(term)) {}

MStarResult in_subalgebra_support(const std::vector<Degree>& support, const LambdaFamily& fam) {
    MStarResult result;
    std::set<ExponentPair> used;
    for (const Degree& term : support) {
        if (term.is_zero()) continue;  // constants of R
        if (term.a == 0) {
            result.failing_terms.push_back(term);
            continue;
        }
        // Bound the truncation before materializing it; Vertical has B+1
        // elements inside the box.
        if ((term.a + 1) * (term.b + 1) > kMaxGridBits) {
            throw SearchSpaceTooLarge("term " + to_string(term) + " is too large to decide");
        }
        GeneratorSet truncation(elements_within(fam, term.a, term.b));
        std::optional<Factorization> f = member(truncation, term);
        if (!f) {
            result.failing_terms.push_back(term);
            continue;
        }
        for (const Factor& factor : f->factors()) used.insert(factor.generator);
        result.factorizations.push_back({term, std::move(*f)});
    }
    result.inside = result.failing_terms.empty();
    result.generating_monomials.assign(used.begin(), used.end());
    return result;
}

GeneratorSet extract_mstar_supports(const std::vector<std::vector<Degree>>& supports,
                                    const LambdaFamily& fam) {
    std::vector<ExponentPair> all;
    for (std::size_t i = 0; i < supports.size(); ++i) {
        MStarResult r = in_subalgebra_support(supports[i], fam);
        if (!r.inside) throw NotInSubalgebra(i, r.failing_terms.front());
        all.insert(all.end(), r.generating_monomials.begin(), r.generating_monomials.end());
    }
    if (all.empty()) all.emplace_back(1, 0);
    return GeneratorSet(std::move(all));
}

}  // namespace monosub
