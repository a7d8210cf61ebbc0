#pragma once

#include "latorb/lattice.hpp"

#include <map>
#include <vector>

namespace latorb {

/// Finite-order lattice isometry: integral matrix with O^T G O = G.
struct Isometry {
    IntMat matrix;
    size_t order = 0;

    bool operator==(const Isometry& o) const { return matrix == o.matrix; }
    bool operator<(const Isometry& o) const { return matrix < o.matrix; }
};

/// Checks the Gram condition and computes the multiplicative order.
Isometry validate_isometry(const Lattice& lattice, const IntMat& m,
                           size_t order_cap = 10000);

/// Finite matrix group, identity first, deterministic element order.
class IsometryGroup {
public:
    IsometryGroup(const Lattice& lattice, std::vector<Isometry> elements,
                  std::vector<size_t> generator_indices);

    const Lattice& lattice() const { return lattice_; }
    const std::vector<Isometry>& elements() const { return elements_; }
    const std::vector<size_t>& generator_indices() const { return generators_; }
    size_t order() const { return elements_.size(); }

    size_t index_of(const IntMat& m) const;  // throws ElementNotInGroup
    bool contains(const IntMat& m) const;
    size_t multiply(size_t i, size_t j) const;
    size_t inverse(size_t i) const;

private:
    Lattice lattice_;
    std::vector<Isometry> elements_;
    std::vector<size_t> generators_;
    std::map<IntMat, size_t> index_;
};

/// Orbit closure of the generators under multiplication. The empty
/// generator list yields the trivial group.
IsometryGroup close_group(const Lattice& lattice, const std::vector<Isometry>& generators,
                          size_t cap = 100000);

struct ConjugacyClass {
    size_t representative;       // index of the lexicographically least member
    std::vector<size_t> members; // sorted indices
};

/// Partition into conjugacy classes, deterministic representatives.
std::vector<ConjugacyClass> conjugacy_classes(const IsometryGroup& g);

/// Subgroup commuting with sigma, as its own IsometryGroup.
IsometryGroup centralizer(const IsometryGroup& g, const Isometry& sigma);

/// Permutation of the discriminant group induced by lifting sigma,
/// indexed against d.all_elements() order.
std::vector<size_t> disc_action(const DiscriminantGroup& d, const Isometry& sigma,
                                size_t cap = 1000000);

/// P0 projector, fixed subgroup, Q_sigma data, and the Lemma-id indices.
struct FixedPointData {
    Isometry sigma;
    RatMat p0;
    std::vector<DiscElement> fixed_subgroup;
    /// Basis of Q_sigma in dual (Q*) coordinates: columns m with the
    /// actual vectors G^{-1} m.
    IntMat q_sigma_basis;
    Int index_qsigma_over_q;       // |Q_sigma / Q|
    Int index_qsigma_star_over_q;  // |Q_sigma* / Q|

    /// Ambient rational basis of Q_sigma (columns).
    RatMat q_sigma_ambient;
    /// Membership test for the dual lattice Q_sigma*.
    bool in_q_sigma_star(const Lattice& lattice, const RatVec& v) const;
};

FixedPointData fixed_point_data(const Lattice& lattice, const DiscriminantGroup& d,
                                const Isometry& sigma, size_t scan_cap = 1000000);

/// Order of the sigma-fixed subgroup computed on the invariant-factor
/// presentation (no element scan); agreement with the scan is tested.
Int fixed_subgroup_order_snf(const DiscriminantGroup& d, const Isometry& sigma);

/// delta = delta0 + (1 - sigma) delta_star with delta0 = P0 delta and
/// delta_star in the orthogonal complement of the fixed subspace.
struct StarDecomposition {
    RatVec delta0;
    RatVec delta_star;
};

StarDecomposition star_decomposition(const Lattice& lattice, const Isometry& sigma,
                                     const RatVec& delta);

struct OrbitData {
    DiscElement representative;  // lexicographically least coordinate tuple
    size_t orbit_size;
    size_t stabilizer_order;
    std::vector<DiscElement> members;
};

/// Orbits of a subgroup of isometries acting on a list of disc elements
/// (typically the sigma-fixed subgroup under the centralizer).
std::vector<OrbitData> orbits_with_stabilizers(const DiscriminantGroup& d,
                                               const std::vector<Isometry>& subgroup,
                                               const std::vector<DiscElement>& set);

}  // namespace latorb
