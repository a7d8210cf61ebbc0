#pragma once

#include "latorb/lattice.hpp"

#include <map>
#include <vector>

namespace latorb {

/// All lattice vectors with <x,x> <= max_norm, grouped by norm.
/// Exact rational Cholesky recursion; includes the zero vector. Lists are
/// in a deterministic recursion order. Throws BudgetExceeded past the cap.
std::map<Int, std::vector<IntVec>> enumerate_by_norm(const Lattice& lattice,
                                                     const Int& max_norm,
                                                     size_t cap = 10000000);

/// Vector counts per norm over the coset shift + Q, for norms <= max_norm.
/// Same engine as enumerate_by_norm without materializing the vectors.
std::map<Rat, Int> coset_norm_counts(const Lattice& lattice, const RatVec& shift,
                                     const Rat& max_norm, size_t cap = 10000000);

}  // namespace latorb
