#include "monosub/exponents.hpp"

#include <stdexcept>

#include "monosub/errors.hpp"

namespace monosub {

BigInt parse_bigint(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) {
        throw ParseError("expected a decimal integer, got '" + text + "'");
    }
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') {
            throw ParseError("expected a decimal integer, got '" + text + "'");
        }
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

Degree::Degree(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a < 0 || b < 0) {
        throw std::invalid_argument("exponents must be nonnegative");
    }
}

std::strong_ordering operator<=>(const Degree& l, const Degree& r) {
    if (l.a != r.a) return l.a < r.a ? std::strong_ordering::less : std::strong_ordering::greater;
    if (l.b != r.b) return l.b < r.b ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Degree operator+(const Degree& p, const Degree& q) { return Degree{p.a + q.a, p.b + q.b}; }

Slope::Slope(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (num_ < 0) throw std::invalid_argument("slope numerator must be nonnegative");
    if (den_ < 1) throw std::invalid_argument("slope denominator must be positive");
}

Slope Slope::reduced() const {
    BigInt g = gcd(num_, den_);
    return Slope(num_ / g, den_ / g);
}

bool operator==(const Slope& s, const Slope& t) { return s.num_ * t.den_ == t.num_ * s.den_; }

std::strong_ordering operator<=>(const Slope& s, const Slope& t) {
    BigInt lhs = s.num_ * t.den_;
    BigInt rhs = t.num_ * s.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering compare_slopes(const Slope& s, const Slope& t) { return s <=> t; }

ExponentPair::ExponentPair(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ < 1) throw std::invalid_argument("exponent pair needs a >= 1, got a = " + a_.str());
    if (b_ < 0) throw std::invalid_argument("exponent pair needs b >= 0, got b = " + b_.str());
}

std::strong_ordering operator<=>(const ExponentPair& l, const ExponentPair& r) {
    return l.degree() <=> r.degree();
}

Slope slope_of(const ExponentPair& p) { return Slope(p.b(), p.a()); }

ExponentPair add(const ExponentPair& p, const ExponentPair& q) {
    return ExponentPair(p.a() + q.a(), p.b() + q.b());
}

std::string to_string(const Degree& d) { return "(" + d.a.str() + "," + d.b.str() + ")"; }
std::string to_string(const ExponentPair& p) { return "(" + p.a().str() + "," + p.b().str() + ")"; }
std::string to_string(const Slope& s) { return s.numerator().str() + "/" + s.denominator().str(); }

std::ostream& operator<<(std::ostream& os, const Degree& d) { return os << to_string(d); }
std::ostream& operator<<(std::ostream& os, const ExponentPair& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << to_string(s); }

}  // namespace monosub
