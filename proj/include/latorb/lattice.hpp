#pragma once

#include "latorb/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latorb {

/// Positive definite even lattice, fixed basis, integral Gram matrix.
class Lattice {
public:
    size_t rank() const { return gram_.rows(); }
    const IntMat& gram() const { return gram_; }
    const Int& det() const { return det_; }
    const RatMat& gram_inv() const { return gram_inv_; }

    /// <u, v> = u^T G v.
    Rat pairing(const RatVec& u, const RatVec& v) const;
    Int pairing(const IntVec& u, const IntVec& v) const;
    Rat norm(const RatVec& u) const { return pairing(u, u); }
    Int norm(const IntVec& u) const { return pairing(u, u); }

    bool operator==(const Lattice& o) const { return gram_ == o.gram_; }

private:
    friend Lattice validate_lattice(const IntMat& gram);
    Lattice(IntMat gram, Int d, RatMat inv)
        : gram_(std::move(gram)), det_(std::move(d)), gram_inv_(std::move(inv)) {}

    IntMat gram_;
    Int det_;
    RatMat gram_inv_;
};

/// Checks symmetry, positive definiteness (leading principal minors) and
/// even diagonal. Error messages name the first offending cell or minor.
Lattice validate_lattice(const IntMat& gram);

/// Compiled-in catalog: A1, A2, A3, D4, E8, A1+A1.
Lattice catalog_lattice(const std::string& name);
std::vector<std::string> catalog_names();

class DiscriminantGroup;

/// Element of Q*/Q: residue coordinates in the invariant-factor
/// presentation plus the canonical rational lift in basis coordinates.
class DiscElement {
public:
    const IntVec& coords() const { return coords_; }
    const RatVec& lift() const { return lift_; }
    bool is_zero() const { return is_zero_vec(coords_); }

    bool operator==(const DiscElement& o) const { return coords_ == o.coords_; }
    bool operator!=(const DiscElement& o) const { return coords_ != o.coords_; }
    bool operator<(const DiscElement& o) const { return coords_ < o.coords_; }

private:
    friend class DiscriminantGroup;
    IntVec coords_;
    RatVec lift_;
};

/// Q*/Q presented through the Smith normal form of the Gram matrix.
class DiscriminantGroup {
public:
    explicit DiscriminantGroup(const Lattice& lattice);

    const Lattice& lattice() const { return lattice_; }
    /// Invariant factors d_1 | d_2 | ... (each >= 2).
    const std::vector<Int>& invariant_factors() const { return factors_; }
    const std::vector<RatVec>& generator_lifts() const { return lifts_; }
    const Int& order() const { return order_; }
    size_t num_generators() const { return factors_.size(); }

    DiscElement zero() const;
    DiscElement element(const IntVec& coords) const;
    /// Class of an arbitrary dual vector; throws CosetNotInDual if the
    /// vector does not pair integrally with the lattice.
    DiscElement element_from_lift(const RatVec& mu) const;

    DiscElement add(const DiscElement& a, const DiscElement& b) const;
    DiscElement neg(const DiscElement& a) const;
    /// Image under an integer matrix acting on lifts (used for isometries).
    DiscElement apply_matrix(const IntMat& m, const DiscElement& a) const;

    /// All elements in deterministic (odometer) order. Throws if the order
    /// exceeds the cap.
    std::vector<DiscElement> all_elements(size_t cap = 1000000) const;

    void check_element(const DiscElement& a) const;

private:
    RatVec canonical_lift(const IntVec& coords) const;

    Lattice lattice_;
    std::vector<Int> factors_;
    std::vector<RatVec> lifts_;  // one per invariant factor
    Int order_;
    // Discrete log data: coords_i = (row i of log_ of G*mu) mod diag_full_[i].
    IntMat log_;
    std::vector<Int> diag_full_;
    std::vector<size_t> nontrivial_;  // indices with diag > 1
};

DiscriminantGroup discriminant_group(const Lattice& lattice);

/// <lift a, lift b> mod 1; symmetric, bilinear, lift-independent.
Rat disc_pairing(const DiscriminantGroup& d, const DiscElement& a, const DiscElement& b);

/// mu-index of the lattice net: |Q*/Q|.
Int mu_index(const Lattice& lattice);

}  // namespace latorb
