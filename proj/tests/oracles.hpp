#pragma once

// Independent brute-force oracles for the test suites. These deliberately
// avoid the library's enumeration and series machinery: the box scan uses
// plain nested integer loops with a Cauchy-Schwarz coordinate bound, and
// the colored partition count recurses over part sizes with binomial
// color multiplicities.

#include "latorb/lattice.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracles {

using latorb::Int;
using latorb::IntVec;
using latorb::Lattice;
using latorb::Rat;

// |x_i| <= sqrt(max_norm * (G^{-1})_ii) for any x with <x,x> <= max_norm.
inline std::vector<long long> box_bounds(const Lattice& lattice, long long max_norm) {
    std::vector<long long> b(lattice.rank());
    for (size_t i = 0; i < lattice.rank(); ++i) {
        Rat limit = Rat(max_norm) * lattice.gram_inv()(i, i);
        long long v = 0;
        while (Rat((v + 1)) * Rat((v + 1)) <= limit) ++v;
        b[i] = v;
    }
    return b;
}

/// Counts of lattice vectors per norm <= max_norm by scanning the full box.
inline std::map<long long, long long> box_norm_counts(const Lattice& lattice,
                                                      long long max_norm) {
    size_t n = lattice.rank();
    std::vector<long long> bounds = box_bounds(lattice, max_norm);
    std::vector<std::vector<long long>> g(n, std::vector<long long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) g[i][j] = lattice.gram()(i, j).convert_to<long long>();

    std::map<long long, long long> counts;
    std::vector<long long> x(n, 0);
    // partial[k] = contribution of coordinates < k (diagonal + cross terms)
    std::vector<long long> partial(n + 1, 0);
    // rowdot[k] = sum_{j<k} g[k][j] * x_j, maintained on descent
    std::vector<long long> rowdot(n, 0);

    // Recursive scan written iteratively to keep stack use flat.
    std::vector<long long> pos(n);
    size_t k = 0;
    pos[0] = -bounds[0];
    while (true) {
        if (pos[k] > bounds[k]) {
            if (k == 0) break;
            --k;
            ++pos[k];
            continue;
        }
        x[k] = pos[k];
        long long rd = 0;
        for (size_t j = 0; j < k; ++j) rd += g[k][j] * x[j];
        long long contrib = g[k][k] * x[k] * x[k] + 2 * rd * x[k];
        partial[k + 1] = partial[k] + contrib;
        if (k + 1 == n) {
            if (partial[n] <= max_norm) counts[partial[n]] += 1;
            ++pos[k];
        } else {
            ++k;
            pos[k] = -bounds[k];
        }
    }
    return counts;
}

/// Partitions of n with `colors` colors: recursion over the largest part,
/// choosing a color multiset for each multiplicity.
inline Int colored_partitions(long long n, long long colors) {
    if (n < 0) return Int(0);
    auto binom = [](long long a, long long b) {
        Int r(1);
        for (long long i = 0; i < b; ++i) {
            r *= Int(a - i);
            r /= Int(i + 1);
        }
        return r;
    };
    std::map<std::pair<long long, long long>, Int> memo;
    std::function<Int(long long, long long)> rec = [&](long long rem, long long maxpart) -> Int {
        if (rem == 0) return Int(1);
        if (maxpart == 0) return Int(0);
        auto key = std::make_pair(rem, maxpart);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Int total(0);
        for (long long m = 0; m * maxpart <= rem; ++m)
            total += binom(m + colors - 1, colors - 1) * rec(rem - m * maxpart, maxpart - 1);
        memo[key] = total;
        return total;
    };
    return rec(n, n);
}

}  // namespace oracles
