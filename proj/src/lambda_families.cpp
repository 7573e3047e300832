#include "monosub/lambda_families.hpp"

#include <algorithm>
#include <stdexcept>

#include "monosub/errors.hpp"

namespace monosub {

namespace {

// Steps through (f(2n-1), f(2n)) for n = 0, 1, 2, ...
class FibonacciWalk {
public:
    const BigInt& index() const { return index_; }
    ExponentPair current() const { return ExponentPair(odd_, even_); }

    void advance() {
        // f(2n+1) = f(2n) + f(2n-1), f(2n+2) = f(2n+1) + f(2n)
        BigInt next_odd = even_ + odd_;
        BigInt next_even = next_odd + even_;
        odd_ = std::move(next_odd);
        even_ = std::move(next_even);
        ++index_;
    }

private:
    BigInt index_ = 0;
    BigInt odd_ = 1;
    BigInt even_ = 0;
};

}  // namespace

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Finite: return "finite";
        case FamilyKind::Vertical: return "vertical";
        case FamilyKind::Fibonacci: return "fibonacci";
    }
    return "unknown";
}

std::string to_string(Truth t) {
    switch (t) {
        case Truth::False: return "false";
        case Truth::True: return "true";
        case Truth::Unknown: return "unknown";
    }
    return "unknown";
}

LambdaFamily LambdaFamily::vertical() { return LambdaFamily(FamilyKind::Vertical, {}); }

LambdaFamily LambdaFamily::fibonacci() { return LambdaFamily(FamilyKind::Fibonacci, {}); }

LambdaFamily LambdaFamily::finite(std::vector<ExponentPair> elements) {
    std::vector<ExponentPair> unique;
    unique.reserve(elements.size());
    for (auto& e : elements) {
        if (std::find(unique.begin(), unique.end(), e) == unique.end()) {
            unique.push_back(std::move(e));
        }
    }
    const ExponentPair origin(1, 0);
    if (std::find(unique.begin(), unique.end(), origin) == unique.end()) {
        throw InvalidFamily("family must contain (1,0)");
    }
    return LambdaFamily(FamilyKind::Finite, std::move(unique));
}

std::optional<ExponentPair> LambdaFamily::element_at(const BigInt& index) const {
    if (index < 0) return std::nullopt;
    switch (kind_) {
        case FamilyKind::Finite:
            if (index >= elements_.size()) return std::nullopt;
            return elements_[static_cast<std::size_t>(index)];
        case FamilyKind::Vertical:
            return ExponentPair(1, index);
        case FamilyKind::Fibonacci: {
            FibonacciWalk walk;
            while (walk.index() < index) walk.advance();
            return walk.current();
        }
    }
    return std::nullopt;
}

std::optional<BigInt> LambdaFamily::index_of(const ExponentPair& p) const {
    switch (kind_) {
        case FamilyKind::Finite: {
            auto it = std::find(elements_.begin(), elements_.end(), p);
            if (it == elements_.end()) return std::nullopt;
            return BigInt(it - elements_.begin());
        }
        case FamilyKind::Vertical:
            if (p.a() != 1) return std::nullopt;
            return p.b();
        case FamilyKind::Fibonacci: {
            // The x-exponents are nondecreasing, so the walk stops once they pass p.a.
            for (FibonacciWalk walk;; walk.advance()) {
                ExponentPair e = walk.current();
                if (e == p) return walk.index();
                if (e.a() > p.a()) return std::nullopt;
            }
        }
    }
    return std::nullopt;
}

BigInt fibonacci(std::int64_t n) {
    if (n < -1) throw std::invalid_argument("fibonacci index must be >= -1");
    BigInt prev = 1;  // f(-1)
    BigInt cur = 0;   // f(0)
    for (std::int64_t i = 0; i < n; ++i) {
        BigInt next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return n == -1 ? prev : cur;
}

std::vector<ExponentPair> enumerate(const LambdaFamily& fam, std::size_t k) {
    if (k < 1) throw std::invalid_argument("enumeration count must be positive");
    std::vector<ExponentPair> out;
    switch (fam.kind()) {
        case FamilyKind::Finite: {
            const auto& els = fam.elements();
            out.assign(els.begin(), els.begin() + static_cast<std::ptrdiff_t>(std::min(k, els.size())));
            break;
        }
        case FamilyKind::Vertical:
            out.reserve(k);
            for (std::size_t n = 0; n < k; ++n) out.emplace_back(1, n);
            break;
        case FamilyKind::Fibonacci: {
            out.reserve(k);
            FibonacciWalk walk;
            for (std::size_t n = 0; n < k; ++n, walk.advance()) out.push_back(walk.current());
            break;
        }
    }
    return out;
}

std::vector<ExponentPair> elements_within(const LambdaFamily& fam, const BigInt& max_a,
                                          const BigInt& max_b) {
    std::vector<ExponentPair> out;
    auto fits = [&](const ExponentPair& p) { return p.a() <= max_a && p.b() <= max_b; };
    switch (fam.kind()) {
        case FamilyKind::Finite:
            std::copy_if(fam.elements().begin(), fam.elements().end(), std::back_inserter(out), fits);
            break;
        case FamilyKind::Vertical:
            if (max_a >= 1) {
                for (BigInt b = 0; b <= max_b; ++b) out.emplace_back(1, b);
            }
            break;
        case FamilyKind::Fibonacci:
            // Both coordinates are nondecreasing along the enumeration.
            for (FibonacciWalk walk; fits(walk.current()); walk.advance()) {
                out.push_back(walk.current());
            }
            break;
    }
    return out;
}

bool below_golden_ratio(const Slope& s) {
    const BigInt& p = s.numerator();
    const BigInt& q = s.denominator();
    BigInt d = 2 * p - q;
    return d < 0 || d * d < 5 * q * q;
}

IndexedElement first_exceeding(const LambdaFamily& fam, const Slope& beta) {
    switch (fam.kind()) {
        case FamilyKind::Finite: {
            const auto& els = fam.elements();
            for (std::size_t i = 0; i < els.size(); ++i) {
                if (slope_of(els[i]) > beta) return {BigInt(i), els[i]};
            }
            throw NoSuchElement("no element of the finite family has slope above " + to_string(beta));
        }
        case FamilyKind::Vertical: {
            // (1,n) has slope n, so the first hit is n = floor(beta) + 1.
            BigInt n = beta.numerator() / beta.denominator() + 1;
            return {n, ExponentPair(1, n)};
        }
        case FamilyKind::Fibonacci: {
            if (!below_golden_ratio(beta)) {
                throw NoSuchElement("slope " + to_string(beta) +
                                    " is not below the supremum of the Fibonacci family");
            }
            for (FibonacciWalk walk;; walk.advance()) {
                ExponentPair e = walk.current();
                if (slope_of(e) > beta) return {walk.index(), e};
            }
        }
    }
    throw NoSuchElement("unknown family kind");
}

ExponentPair exceed_slope(const LambdaFamily& fam, const Slope& beta) {
    return first_exceeding(fam, beta).element;
}

bool fibonacci_slopes_strictly_increase(int last_index) {
    FibonacciWalk walk;
    Slope previous = slope_of(walk.current());
    for (int n = 1; n <= last_index; ++n) {
        walk.advance();
        Slope s = slope_of(walk.current());
        if (!(s > previous)) return false;
        previous = s;
    }
    return true;
}

HypothesisReport hypothesis_check(const LambdaFamily& fam) {
    HypothesisReport report;
    report.contains_origin_generator = fam.contains(ExponentPair(1, 0));
    switch (fam.kind()) {
        case FamilyKind::Finite:
            // A nonempty finite set attains its maximum slope, and that
            // element violates the strict inequality.
            report.sup_is_attained = Truth::True;
            report.strict_inequality_holds = Truth::False;
            break;
        case FamilyKind::Vertical:
            // Slopes n are unbounded: the supremum is infinite, never attained,
            // and every slope lies strictly below it.
            report.sup_is_attained = Truth::False;
            report.strict_inequality_holds = Truth::True;
            break;
        case FamilyKind::Fibonacci: {
            bool increasing = fibonacci_slopes_strictly_increase(kFibonacciMonotoneCheckDepth);
            report.sup_is_attained = increasing ? Truth::False : Truth::Unknown;
            report.strict_inequality_holds = increasing ? Truth::True : Truth::Unknown;
            break;
        }
    }
    report.theorem_applies = report.contains_origin_generator &&
                             report.sup_is_attained == Truth::False &&
                             report.strict_inequality_holds == Truth::True;
    return report;
}

}  // namespace monosub
