#pragma once

#include "latorb/lattice.hpp"

#include <vector>

namespace latorb {

/// Truncated q-expansion: one rational leading exponent, then integer
/// coefficients at unit exponent steps. coeffs[k] multiplies
/// q^(leading_exponent + k).
struct QSeries {
    Rat leading_exponent;
    std::vector<Int> coeffs;

    size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    const Int& coeff(size_t k) const { return coeffs.at(k); }
};

/// theta_{coset+Q}(q) = sum over the coset of q^{<a,a>/2}, truncated so
/// that coefficients 0..order are present. coset must lie in the dual.
QSeries theta_series(const Lattice& lattice, const RatVec& coset, size_t order,
                     size_t cap = 10000000);

/// Number of partitions with `colors` colors, n = 0..order
/// (coefficients of prod (1-q^n)^{-colors}).
std::vector<Int> colored_partition_series(size_t colors, size_t order);

/// Graded character theta_{Q+lambda}(q) / eta(q)^l to the given order.
/// Leading exponent is min-norm/2 - l/24.
QSeries character_series(const Lattice& lattice, const DiscElement& lambda, size_t order,
                         size_t cap = 10000000);

}  // namespace latorb
