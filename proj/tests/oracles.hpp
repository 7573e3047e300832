#pragma once

// Reference computations used only by tests. None of these call into the
// search or enumeration code they are compared against.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using Pair = std::pair<long, long>;

/// f(-1) = 1, f(0) = 0, f(n+1) = f(n) + f(n-1); returns f(-1), ..., f(last).
inline std::vector<BigInt> fibonacci_table(int last) {
    std::vector<BigInt> f{1, 0};
    while (static_cast<int>(f.size()) - 2 < last) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    return f;
}

inline BigInt fib(int n) { return fibonacci_table(std::max(n, 0))[static_cast<std::size_t>(n + 1)]; }

/// All multiplicity vectors m (indexed like gens) with sum m_i * gens_i == target.
/// Plain nested enumeration over bounded multiplicities.
inline std::vector<std::vector<long>> all_factorizations(const std::vector<Pair>& gens, Pair target) {
    std::vector<std::vector<long>> out;
    std::vector<long> m(gens.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, long sa, long sb) -> void {
        if (i == gens.size()) {
            if (sa == target.first && sb == target.second) out.push_back(m);
            return;
        }
        for (long c = 0;; ++c) {
            long na = sa + c * gens[i].first;
            long nb = sb + c * gens[i].second;
            if (na > target.first || nb > target.second) break;
            m[i] = c;
            self(self, i + 1, na, nb);
            if (gens[i].first == 0 && gens[i].second == 0) break;
        }
        m[i] = 0;
    };
    rec(rec, 0, 0, 0);
    return out;
}

/// Factor word of a multiplicity vector: indices repeated by multiplicity.
inline std::vector<std::size_t> word_of(const std::vector<long>& m) {
    std::vector<std::size_t> w;
    for (std::size_t i = 0; i < m.size(); ++i) w.insert(w.end(), static_cast<std::size_t>(m[i]), i);
    return w;
}

/// Random subset of [1..max_a] x [0..max_b] of size in [1, max_size], sorted
/// by (a,b) and distinct.
inline std::vector<Pair> random_generators(std::mt19937_64& rng, long max_a, long max_b, std::size_t max_size) {
    std::uniform_int_distribution<long> da(1, max_a), db(0, max_b);
    std::uniform_int_distribution<std::size_t> dn(1, max_size);
    std::set<Pair> s;
    std::size_t n = dn(rng);
    while (s.size() < n) s.insert({da(rng), db(rng)});
    return {s.begin(), s.end()};
}

}  // namespace oracle
