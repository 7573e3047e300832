#include "monosub/monoid.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "monosub/errors.hpp"

namespace monosub {

GeneratorSet::GeneratorSet(std::vector<ExponentPair> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw InvalidGenerators("generator set must be nonempty");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

bool GeneratorSet::contains(const ExponentPair& p) const {
    return std::binary_search(gens_.begin(), gens_.end(), p);
}

Factorization::Factorization(std::vector<Factor> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& l, const Factor& r) { return l.index < r.index; });
}

std::uint64_t Factorization::length() const {
    std::uint64_t n = 0;
    for (const auto& f : factors_) n += f.count;
    return n;
}

Degree Factorization::total() const {
    Degree sum{0, 0};
    for (const auto& f : factors_) {
        sum.a += f.generator.a() * f.count;
        sum.b += f.generator.b() * f.count;
    }
    return sum;
}

std::string to_string(const Factorization& f) {
    if (f.empty()) return "1";
    std::string out;
    for (const auto& factor : f.factors()) {
        if (!out.empty()) out += "*";
        out += to_string(factor.generator) + "^" + std::to_string(factor.count);
    }
    return out;
}

namespace {

// Subset of the box [0..A] x [0..B], one bit row of width B+1 per x-degree.
class Grid {
public:
    Grid(std::size_t rows, std::size_t cols)
        : rows_(rows), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

    bool test(std::size_t a, std::size_t b) const {
        return (bits_[a * words_ + b / 64] >> (b % 64)) & 1u;
    }
    void set(std::size_t a, std::size_t b) { bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64); }

    // Closes the set under adding (ga, gb). Rows are visited in increasing a,
    // so row a - ga already holds every multiple that can reach row a.
    // Bits shifted past column B land in the padding of the last word and
    // are masked off.
    void close_under(std::size_t ga, std::size_t gb, std::size_t cols) {
        const std::size_t word_shift = gb / 64;
        const unsigned bit_shift = static_cast<unsigned>(gb % 64);
        for (std::size_t a = ga; a < rows_; ++a) {
            const std::uint64_t* src = &bits_[(a - ga) * words_];
            std::uint64_t* dst = &bits_[a * words_];
            for (std::size_t w = words_; w-- > word_shift;) {
                std::size_t from = w - word_shift;
                std::uint64_t v = src[from] << bit_shift;
                if (bit_shift != 0 && from > 0) v |= src[from - 1] >> (64 - bit_shift);
                dst[w] |= v;
            }
            if (cols % 64 != 0) dst[words_ - 1] &= (std::uint64_t{1} << (cols % 64)) - 1;
        }
    }

private:
    std::size_t rows_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

struct Participant {
    std::size_t index;  // into the GeneratorSet
    std::size_t a;
    std::size_t b;
};

// suffix[j] = points reachable using participants j..k-1 only;
// suffix[k] = {(0,0)}.
struct SuffixReachability {
    std::size_t target_a = 0;
    std::size_t target_b = 0;
    std::vector<Participant> participants;
    std::vector<Grid> suffix;

    bool reachable_from(std::size_t j, std::size_t a, std::size_t b) const { return suffix[j].test(a, b); }
};

std::size_t checked_size(const BigInt& v) {
    if (v > std::numeric_limits<std::uint32_t>::max()) {
        throw SearchSpaceTooLarge("exponent " + v.str() + " is too large for the reachability grid");
    }
    return static_cast<std::size_t>(v);
}

SuffixReachability build_reachability(const GeneratorSet& gens, const Degree& target) {
    SuffixReachability r;
    r.target_a = checked_size(target.a);
    r.target_b = checked_size(target.b);
    // Only generators inside the target box can occur in a factorization.
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].a() <= target.a && gens[i].b() <= target.b) {
            r.participants.push_back({i, static_cast<std::size_t>(gens[i].a()),
                                      static_cast<std::size_t>(gens[i].b())});
        }
    }
    const std::uint64_t cells = static_cast<std::uint64_t>(r.target_a + 1) * (r.target_b + 1);
    const std::uint64_t tables = r.participants.size() + 1;
    if (cells > kMaxGridBits / tables) {
        throw SearchSpaceTooLarge("membership grid for target " + to_string(target) + " exceeds " +
                                  std::to_string(kMaxGridBits) + " bits");
    }
    const std::size_t k = r.participants.size();
    const std::size_t rows = r.target_a + 1;
    const std::size_t cols = r.target_b + 1;
    r.suffix.assign(k + 1, Grid(rows, cols));
    r.suffix[k].set(0, 0);
    for (std::size_t j = k; j-- > 0;) {
        r.suffix[j] = r.suffix[j + 1];
        r.suffix[j].close_under(r.participants[j].a, r.participants[j].b, cols);
    }
    return r;
}

Factorization word_to_factorization(const GeneratorSet& gens, const SuffixReachability& r,
                                    const std::vector<std::size_t>& word) {
    std::vector<Factor> factors;
    for (std::size_t j : word) {
        const Participant& p = r.participants[j];
        if (!factors.empty() && factors.back().index == p.index) {
            ++factors.back().count;
        } else {
            factors.push_back({p.index, gens[p.index], 1});
        }
    }
    return Factorization(std::move(factors));
}

}  // namespace

std::optional<Factorization> member(const GeneratorSet& gens, const Degree& target) {
    if (target.is_zero()) return Factorization{};
    if (target.a == 0) return std::nullopt;  // every generator has a >= 1
    SuffixReachability r = build_reachability(gens, target);
    if (!r.reachable_from(0, r.target_a, r.target_b)) return std::nullopt;

    // Greedy on the word: at each step take the earliest participant whose
    // removal leaves a remainder reachable from that participant onward.
    std::vector<std::size_t> word;
    std::size_t a = r.target_a;
    std::size_t b = r.target_b;
    std::size_t j = 0;
    while (a != 0 || b != 0) {
        for (;; ++j) {
            const Participant& p = r.participants.at(j);
            if (p.a <= a && p.b <= b && r.reachable_from(j, a - p.a, b - p.b)) break;
        }
        word.push_back(j);
        a -= r.participants[j].a;
        b -= r.participants[j].b;
    }
    return word_to_factorization(gens, r, word);
}

std::vector<Factorization> factorizations(const GeneratorSet& gens, const Degree& target,
                                          std::size_t limit) {
    if (limit < 1) throw std::invalid_argument("factorization limit must be positive");
    std::vector<Factorization> out;
    if (target.is_zero()) {
        out.emplace_back();
        return out;
    }
    if (target.a == 0) return out;
    SuffixReachability r = build_reachability(gens, target);
    if (!r.reachable_from(0, r.target_a, r.target_b)) return out;

    // Depth-first over factor words in lexicographic order. Each frame holds
    // the remainder before its letter and the next letter to try.
    struct Frame {
        std::size_t a;
        std::size_t b;
        std::size_t next;
    };
    const std::size_t k = r.participants.size();
    std::vector<Frame> stack{{r.target_a, r.target_b, 0}};
    std::vector<std::size_t> word;
    while (!stack.empty() && out.size() < limit) {
        Frame& top = stack.back();
        if (top.a == 0 && top.b == 0) {
            out.push_back(word_to_factorization(gens, r, word));
            stack.pop_back();
            if (!word.empty()) word.pop_back();
            continue;
        }
        std::size_t j = top.next;
        while (j < k) {
            const Participant& p = r.participants[j];
            if (p.a <= top.a && p.b <= top.b && r.reachable_from(j, top.a - p.a, top.b - p.b)) break;
            ++j;
        }
        if (j == k) {
            stack.pop_back();
            if (!word.empty()) word.pop_back();
            continue;
        }
        top.next = j + 1;
        word.push_back(j);
        Frame child{top.a - r.participants[j].a, top.b - r.participants[j].b, j};
        stack.push_back(child);
    }
    return out;
}

bool member_bruteforce(const GeneratorSet& gens, const Degree& target) {
    if (target.a > kBruteforceMaxA) {
        throw BoundExceeded("brute-force membership is limited to x-degree " +
                            std::to_string(kBruteforceMaxA) + ", got " + target.a.str());
    }
    const std::vector<ExponentPair>& g = gens.generators();
    const long max_factors = static_cast<long>(target.a);

    // Choose a multiplicity for generator i, then recurse on i + 1. Partial
    // sums only grow, so a branch that overshoots the target is dead.
    auto search = [&](auto&& self, std::size_t i, long used, const BigInt& sa, const BigInt& sb) -> bool {
        if (sa == target.a && sb == target.b) return true;
        if (i == g.size()) return false;
        BigInt ca = sa;
        BigInt cb = sb;
        for (long m = 0; used + m <= max_factors; ++m) {
            if (ca > target.a || cb > target.b) break;
            if (self(self, i + 1, used + m, ca, cb)) return true;
            ca += g[i].a();
            cb += g[i].b();
        }
        return false;
    };
    return search(search, 0, 0, BigInt(0), BigInt(0));
}

Slope max_slope(const GeneratorSet& gens) {
    Slope best = slope_of(gens[0]);
    for (const auto& g : gens) {
        Slope s = slope_of(g);
        if (s > best) best = s;
    }
    return best;
}

}  // namespace monosub
