#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "doctest.h"
#include "monosub/errors.hpp"
#include "monosub/lambda_families.hpp"
#include "oracles.hpp"

using namespace monosub;

namespace {

std::vector<ExponentPair> pairs(std::initializer_list<std::pair<int, int>> list) {
    std::vector<ExponentPair> out;
    for (auto [a, b] : list) out.emplace_back(a, b);
    return out;
}

std::vector<LambdaFamily> sample_families() {
    return {LambdaFamily::vertical(), LambdaFamily::fibonacci(),
            LambdaFamily::finite(pairs({{3, 1}, {1, 0}, {2, 2}, {7, 30}, {4, 0}}))};
}

}  // namespace

TEST_CASE("fibonacci uses the f(-1) = 1, f(0) = 0 seeds") {
    CHECK(fibonacci(-1) == 1);
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(8) == 21);
    auto table = oracle::fibonacci_table(300);
    for (int n = -1; n <= 300; ++n) CHECK(fibonacci(n) == table[static_cast<std::size_t>(n + 1)]);
    // past 64 bits
    CHECK(fibonacci(100).str() == "354224848179261915075");
    CHECK_THROWS_AS(fibonacci(-2), std::invalid_argument);
}

TEST_CASE("enumerate") {
    CHECK(enumerate(LambdaFamily::vertical(), 4) == pairs({{1, 0}, {1, 1}, {1, 2}, {1, 3}}));
    CHECK(enumerate(LambdaFamily::fibonacci(), 5) == pairs({{1, 0}, {1, 1}, {2, 3}, {5, 8}, {13, 21}}));
    CHECK(enumerate(LambdaFamily::finite(pairs({{1, 0}, {3, 1}})), 10) == pairs({{1, 0}, {3, 1}}));
    CHECK_THROWS_AS(enumerate(LambdaFamily::vertical(), 0), std::invalid_argument);

    // Fibonacci element n is (f(2n-1), f(2n)) per the recurrence oracle.
    auto fib = enumerate(LambdaFamily::fibonacci(), 60);
    for (int n = 0; n < 60; ++n) {
        CHECK(fib[static_cast<std::size_t>(n)].a() == oracle::fib(2 * n - 1));
        CHECK(fib[static_cast<std::size_t>(n)].b() == oracle::fib(2 * n));
    }
}

TEST_CASE("finite families") {
    auto fam = LambdaFamily::finite(pairs({{2, 1}, {1, 0}, {2, 1}, {5, 5}, {1, 0}}));
    CHECK(fam.elements() == pairs({{2, 1}, {1, 0}, {5, 5}}));
    CHECK(fam.index_of(ExponentPair(5, 5)) == BigInt(2));
    CHECK_FALSE(fam.index_of(ExponentPair(5, 6)));
    CHECK_THROWS_WITH_AS(LambdaFamily::finite(pairs({{2, 1}})), "family must contain (1,0)", InvalidFamily);
    CHECK_THROWS_AS(LambdaFamily::finite({}), InvalidFamily);
}

TEST_CASE("elements_within") {
    CHECK(elements_within(LambdaFamily::vertical(), 1, 2) == pairs({{1, 0}, {1, 1}, {1, 2}}));
    CHECK(elements_within(LambdaFamily::fibonacci(), 5, 8) == pairs({{1, 0}, {1, 1}, {2, 3}, {5, 8}}));
    CHECK(elements_within(LambdaFamily::finite(pairs({{1, 0}, {2, 5}})), 1, 9) == pairs({{1, 0}}));
    CHECK(elements_within(LambdaFamily::fibonacci(), 5, 7) == pairs({{1, 0}, {1, 1}, {2, 3}}));
    CHECK(elements_within(LambdaFamily::vertical(), 0, 5).empty());
    CHECK(elements_within(LambdaFamily::fibonacci(), 1, 0) == pairs({{1, 0}}));
}

TEST_CASE("enumerate and elements_within agree") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> bound(1, 10000);
    for (const auto& fam : sample_families()) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t k = 1 + rng() % 20;
            BigInt A = bound(rng);
            BigInt B = bound(rng) - 1;
            if (fam.kind() == FamilyKind::Vertical) B = B % 200;  // keep the list small
            auto prefix = enumerate(fam, k);
            auto within = elements_within(fam, A, B);
            for (const auto& e : prefix) {
                bool fits = e.a() <= A && e.b() <= B;
                CHECK(fits == (std::find(within.begin(), within.end(), e) != within.end()));
            }
            for (const auto& e : within) {
                CHECK(e.a() <= A);
                CHECK(e.b() <= B);
                CHECK(fam.contains(e));
            }
        }
    }
}

TEST_CASE("index_of and element_at are inverse") {
    for (const auto& fam : sample_families()) {
        auto prefix = enumerate(fam, 30);
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            CHECK(fam.index_of(prefix[i]) == BigInt(i));
            CHECK(fam.element_at(i) == prefix[i]);
        }
        CHECK(*fam.index_of(ExponentPair(1, 0)) < 2);
    }
    CHECK_FALSE(LambdaFamily::fibonacci().index_of(ExponentPair(3, 5)));
    CHECK_FALSE(LambdaFamily::fibonacci().index_of(ExponentPair(1, 2)));
    CHECK_FALSE(LambdaFamily::vertical().index_of(ExponentPair(2, 1)));
    CHECK_FALSE(LambdaFamily::finite(pairs({{1, 0}})).element_at(1));
}

TEST_CASE("exceed_slope") {
    CHECK(exceed_slope(LambdaFamily::vertical(), Slope(2, 1)) == ExponentPair(1, 3));
    CHECK(exceed_slope(LambdaFamily::fibonacci(), Slope(8, 5)) == ExponentPair(13, 21));
    CHECK_THROWS_AS(exceed_slope(LambdaFamily::finite(pairs({{1, 0}, {1, 1}})), Slope(5, 1)), NoSuchElement);
    CHECK(first_exceeding(LambdaFamily::fibonacci(), Slope(8, 5)).index == 4);
    CHECK(exceed_slope(LambdaFamily::vertical(), Slope(7, 2)) == ExponentPair(1, 4));
    // Bounds at or above the golden ratio would never be exceeded.
    CHECK_THROWS_AS(exceed_slope(LambdaFamily::fibonacci(), Slope(2, 1)), NoSuchElement);
    CHECK_THROWS_AS(exceed_slope(LambdaFamily::fibonacci(), Slope(13, 8)), NoSuchElement);
}

TEST_CASE("below_golden_ratio matches floating point away from the boundary") {
    const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
    for (int q = 1; q <= 200; ++q) {
        for (int p = 0; p <= 400; ++p) {
            long double v = static_cast<long double>(p) / q;
            if (std::fabs(v - phi) < 1e-9L) continue;
            CHECK(below_golden_ratio(Slope(p, q)) == (v < phi));
        }
    }
    // Fibonacci ratios alternate around phi.
    for (int n = 2; n < 80; ++n) {
        bool even_over_odd_below = below_golden_ratio(Slope(fibonacci(2 * n), fibonacci(2 * n - 1)));
        bool odd_over_even_below = below_golden_ratio(Slope(fibonacci(2 * n + 1), fibonacci(2 * n)));
        CHECK(even_over_odd_below);
        CHECK_FALSE(odd_over_even_below);
    }
}

TEST_CASE("exceed_slope hits first in canonical order") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        BigInt den = 1 + rng() % 1000;
        BigInt num = rng() % 1600;
        Slope beta(num, den);
        for (const auto& fam : sample_families()) {
            if (fam.kind() == FamilyKind::Fibonacci && !below_golden_ratio(beta)) continue;
            std::optional<IndexedElement> hit;
            try {
                hit = first_exceeding(fam, beta);
            } catch (const NoSuchElement&) {
                REQUIRE(fam.is_finite());
                for (const auto& e : fam.elements()) CHECK(slope_of(e) <= beta);
                continue;
            }
            CHECK(slope_of(hit->element) > beta);
            CHECK(fam.element_at(hit->index) == hit->element);
            for (BigInt i = 0; i < hit->index; ++i) CHECK(slope_of(*fam.element_at(i)) <= beta);
        }
    }
}

TEST_CASE("vertical slopes are unbounded") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 1000; ++trial) {
        BigInt num = rng() % 100000;
        BigInt den = 1 + rng() % 97;
        IndexedElement hit = first_exceeding(LambdaFamily::vertical(), Slope(num, den));
        CHECK(hit.index <= num / den + 2);
    }
}

TEST_CASE("fibonacci slopes strictly increase") {
    auto prefix = enumerate(LambdaFamily::fibonacci(), 27);
    for (std::size_t n = 1; n < 26; ++n) CHECK(slope_of(prefix[n + 1]) > slope_of(prefix[n]));
    CHECK(fibonacci_slopes_strictly_increase(kFibonacciMonotoneCheckDepth));
    CHECK(fibonacci_slopes_strictly_increase(200));
}

TEST_CASE("hypothesis_check") {
    auto v = hypothesis_check(LambdaFamily::vertical());
    CHECK(v.theorem_applies);
    CHECK(v.contains_origin_generator);
    CHECK(v.sup_is_attained == Truth::False);
    CHECK(v.strict_inequality_holds == Truth::True);

    auto f = hypothesis_check(LambdaFamily::fibonacci());
    CHECK(f.theorem_applies);
    CHECK(f.sup_is_attained == Truth::False);

    auto fin = hypothesis_check(LambdaFamily::finite(pairs({{1, 0}, {2, 3}})));
    CHECK_FALSE(fin.theorem_applies);
    CHECK(fin.sup_is_attained == Truth::True);
    CHECK(fin.strict_inequality_holds == Truth::False);
    CHECK(fin.contains_origin_generator);
}
