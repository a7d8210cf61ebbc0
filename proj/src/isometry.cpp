#include "latorb/isometry.hpp"

#include <algorithm>
#include <deque>

namespace latorb {

Isometry validate_isometry(const Lattice& lattice, const IntMat& m, size_t order_cap) {
    size_t l = lattice.rank();
    if (!m.is_square() || m.rows() != l)
        throw Error(ErrorCode::BadArgument, "isometry matrix must be " + std::to_string(l) +
                                                "x" + std::to_string(l));
    if (m.transpose() * lattice.gram() * m != lattice.gram())
        throw Error(ErrorCode::NotGramPreserving, "O^T G O differs from G");
    IntMat id = IntMat::identity(l);
    IntMat p = m;
    size_t order = 1;
    while (p != id) {
        p = p * m;
        ++order;
        if (order > order_cap)
            throw Error(ErrorCode::InfiniteOrder,
                        "no power up to " + std::to_string(order_cap) + " is the identity");
    }
    return Isometry{m, order};
}

IsometryGroup::IsometryGroup(const Lattice& lattice, std::vector<Isometry> elements,
                             std::vector<size_t> generator_indices)
    : lattice_(lattice), elements_(std::move(elements)), generators_(std::move(generator_indices)) {
    for (size_t i = 0; i < elements_.size(); ++i) index_[elements_[i].matrix] = i;
    if (elements_.empty() || elements_[0].matrix != IntMat::identity(lattice.rank()))
        throw Error(ErrorCode::BadArgument, "group must list the identity first");
}

size_t IsometryGroup::index_of(const IntMat& m) const {
    auto it = index_.find(m);
    if (it == index_.end())
        throw Error(ErrorCode::ElementNotInGroup, "matrix is not a listed group element");
    return it->second;
}

bool IsometryGroup::contains(const IntMat& m) const { return index_.count(m) > 0; }

size_t IsometryGroup::multiply(size_t i, size_t j) const {
    return index_of(elements_[i].matrix * elements_[j].matrix);
}

size_t IsometryGroup::inverse(size_t i) const {
    for (size_t j = 0; j < elements_.size(); ++j)
        if (multiply(i, j) == 0) return j;
    throw Error(ErrorCode::ElementNotInGroup, "inverse missing; group not closed");
}

IsometryGroup close_group(const Lattice& lattice, const std::vector<Isometry>& generators,
                          size_t cap) {
    size_t l = lattice.rank();
    for (const auto& g : generators) validate_isometry(lattice, g.matrix);

    std::vector<Isometry> elements;
    std::map<IntMat, size_t> seen;
    auto push = [&](const IntMat& m) -> bool {
        if (seen.count(m)) return false;
        if (elements.size() >= cap)
            throw Error(ErrorCode::SizeCapExceeded,
                        "group closure exceeded cap of " + std::to_string(cap));
        seen[m] = elements.size();
        elements.push_back(Isometry{m, 0});
        return true;
    };

    push(IntMat::identity(l));
    std::deque<size_t> frontier{0};
    while (!frontier.empty()) {
        size_t i = frontier.front();
        frontier.pop_front();
        for (const auto& g : generators) {
            IntMat prod = elements[i].matrix * g.matrix;
            if (push(prod)) frontier.push_back(elements.size() - 1);
        }
    }

    std::vector<size_t> gen_idx;
    for (const auto& g : generators) gen_idx.push_back(seen.at(g.matrix));
    for (auto& e : elements) e.order = validate_isometry(lattice, e.matrix).order;
    return IsometryGroup(lattice, std::move(elements), std::move(gen_idx));
}

std::vector<ConjugacyClass> conjugacy_classes(const IsometryGroup& g) {
    size_t n = g.order();
    std::vector<bool> assigned(n, false);
    std::vector<ConjugacyClass> classes;
    for (size_t i = 0; i < n; ++i) {
        if (assigned[i]) continue;
        ConjugacyClass cls;
        std::map<IntMat, size_t> members;
        for (size_t t = 0; t < n; ++t) {
            size_t inv_t = g.inverse(t);
            size_t conj = g.multiply(g.multiply(t, i), inv_t);
            members[g.elements()[conj].matrix] = conj;
        }
        for (const auto& [m, idx] : members) {
            cls.members.push_back(idx);
            assigned[idx] = true;
        }
        std::sort(cls.members.begin(), cls.members.end());
        cls.representative = members.begin()->second;  // lexicographically least matrix
        classes.push_back(std::move(cls));
    }
    return classes;
}

IsometryGroup centralizer(const IsometryGroup& g, const Isometry& sigma) {
    size_t s = g.index_of(sigma.matrix);
    std::vector<Isometry> elems;
    std::vector<size_t> gens;
    for (size_t i = 0; i < g.order(); ++i)
        if (g.multiply(i, s) == g.multiply(s, i)) elems.push_back(g.elements()[i]);
    for (size_t i = 1; i < elems.size(); ++i) gens.push_back(i);
    if (gens.empty()) gens.push_back(0);
    return IsometryGroup(g.lattice(), std::move(elems), std::move(gens));
}

std::vector<size_t> disc_action(const DiscriminantGroup& d, const Isometry& sigma,
                                size_t cap) {
    auto all = d.all_elements(cap);
    std::map<IntVec, size_t> pos;
    for (size_t i = 0; i < all.size(); ++i) pos[all[i].coords()] = i;
    std::vector<size_t> perm(all.size());
    for (size_t i = 0; i < all.size(); ++i)
        perm[i] = pos.at(d.apply_matrix(sigma.matrix, all[i]).coords());
    return perm;
}

bool FixedPointData::in_q_sigma_star(const Lattice& lattice, const RatVec& v) const {
    for (size_t j = 0; j < q_sigma_ambient.cols(); ++j) {
        RatVec col(q_sigma_ambient.rows());
        for (size_t i = 0; i < q_sigma_ambient.rows(); ++i) col[i] = q_sigma_ambient(i, j);
        if (!is_integer(lattice.pairing(v, col))) return false;
    }
    return true;
}

namespace {

// Solution basis of A x == 0 (mod m): columns v_i * (m / gcd(s_i, m)) for
// the Smith form A = U^{-1} S V^{-1} ... i.e. x = V y with s_i y_i == 0.
IntMat solve_mod_kernel(const IntMat& a, const Int& m) {
    size_t n = a.cols();
    SmithForm snf = smith_normal_form(a);
    IntMat basis(n, n);
    for (size_t j = 0; j < n; ++j) {
        Int s = j < snf.diag.size() ? snf.diag[j] : Int(0);
        Int g = gcd(s, m);
        Int scale = m / g;
        for (size_t i = 0; i < n; ++i) basis(i, j) = snf.v(i, j) * scale;
    }
    return basis;
}

}  // namespace

Int fixed_subgroup_order_snf(const DiscriminantGroup& d, const Isometry& sigma) {
    size_t k = d.num_generators();
    if (k == 0) return Int(1);
    // Action matrix on the invariant-factor presentation.
    IntMat m(k, k);
    for (size_t j = 0; j < k; ++j) {
        IntVec unit(k, Int(0));
        unit[j] = 1;
        DiscElement img = d.apply_matrix(sigma.matrix, d.element(unit));
        for (size_t i = 0; i < k; ++i) m(i, j) = img.coords()[i];
    }
    // x fixed iff (M - I) x == 0 with row i taken mod d_i. Uniformize the
    // modulus by scaling row i with T/d_i, T = lcm of the d_i.
    Int t(1);
    for (const auto& f : d.invariant_factors()) t = t / gcd(t, f) * f;
    IntMat scaled(k, k);
    for (size_t i = 0; i < k; ++i) {
        Int rowscale = t / d.invariant_factors()[i];
        for (size_t j = 0; j < k; ++j)
            scaled(i, j) = rowscale * (m(i, j) - (i == j ? Int(1) : Int(0)));
    }
    IntMat kern = solve_mod_kernel(scaled, t);
    // |fixed| = prod d_i / [Z^k : K]
    Int covol = abs(det(kern));
    Int prod(1);
    for (const auto& f : d.invariant_factors()) prod *= f;
    if (covol == 0 || prod % covol != 0)
        throw Error(ErrorCode::LemmaIdViolation, "kernel index does not divide group order");
    return prod / covol;
}

FixedPointData fixed_point_data(const Lattice& lattice, const DiscriminantGroup& d,
                                const Isometry& sigma, size_t scan_cap) {
    size_t l = lattice.rank();
    size_t n = sigma.order;

    FixedPointData out;
    out.sigma = sigma;

    // P0 = (1/N) sum sigma^i
    IntMat sum(l, l);
    IntMat p = IntMat::identity(l);
    for (size_t i = 0; i < n; ++i) {
        p = p * sigma.matrix;
        sum = sum + p;
    }
    out.p0 = RatMat(l, l);
    for (size_t i = 0; i < l; ++i)
        for (size_t j = 0; j < l; ++j) out.p0(i, j) = Rat(sum(i, j), Int(n));

    // Fixed subgroup by exhaustive scan.
    for (const auto& e : d.all_elements(scan_cap))
        if (d.apply_matrix(sigma.matrix, e) == e) out.fixed_subgroup.push_back(e);

    // Q_sigma = {G^{-1} m : (1 - sigma) G^{-1} m in Z^l}, i.e.
    // (1 - sigma) adj(G) m == 0 (mod det) with adj(G) = det * G^{-1}.
    IntMat one_minus = IntMat::identity(l) - sigma.matrix;
    IntMat adjugate(l, l);
    for (size_t i = 0; i < l; ++i)
        for (size_t j = 0; j < l; ++j) {
            Rat v = lattice.gram_inv()(i, j) * Rat(lattice.det());
            if (!is_integer(v)) throw Error(ErrorCode::LemmaIdViolation, "adjugate not integral");
            adjugate(i, j) = rat_num(v);
        }
    IntMat a = one_minus * adjugate;
    IntMat kern = solve_mod_kernel(a, lattice.det());
    out.q_sigma_basis = hermite_column_basis(kern);
    if (out.q_sigma_basis.cols() != l)
        throw Error(ErrorCode::LemmaIdViolation, "Q_sigma basis is not full rank");

    Int covol = abs(det(out.q_sigma_basis));  // [Z^l : L_m]
    if (covol == 0 || lattice.det() % covol != 0)
        throw Error(ErrorCode::LemmaIdViolation, "Q_sigma index fails to divide det");
    out.index_qsigma_over_q = lattice.det() / covol;
    out.index_qsigma_star_over_q = covol;

    // Ambient basis B = G^{-1} H and the duality cross-check
    // det(B^T G B) = (det H)^2 / det(G).
    out.q_sigma_ambient = lattice.gram_inv() * to_rat(out.q_sigma_basis);
    RatMat gram_sub =
        out.q_sigma_ambient.transpose() * to_rat(lattice.gram()) * out.q_sigma_ambient;
    if (det(gram_sub) != Rat(covol * covol, lattice.det()))
        throw Error(ErrorCode::LemmaIdViolation, "restricted Gram determinant mismatch");

    // Lemma id: |Q*/Q| = |Q_sigma*/Q| * |(Q*/Q)^sigma|.
    if (Int(out.fixed_subgroup.size()) * out.index_qsigma_star_over_q != d.order())
        throw Error(ErrorCode::LemmaIdViolation,
                    "|Q*/Q| != |Q_sigma*/Q| * |(Q*/Q)^sigma|");
    if (Int(out.fixed_subgroup.size()) != out.index_qsigma_over_q)
        throw Error(ErrorCode::LemmaIdViolation, "|Q_sigma/Q| != |(Q*/Q)^sigma|");

    return out;
}

StarDecomposition star_decomposition(const Lattice& lattice, const Isometry& sigma,
                                     const RatVec& delta) {
    size_t l = lattice.rank();
    if (delta.size() != l) throw Error(ErrorCode::BadArgument, "delta dimension mismatch");
    size_t n = sigma.order;
    IntMat sum(l, l);
    IntMat p = IntMat::identity(l);
    for (size_t i = 0; i < n; ++i) {
        p = p * sigma.matrix;
        sum = sum + p;
    }
    RatMat p0(l, l);
    for (size_t i = 0; i < l; ++i)
        for (size_t j = 0; j < l; ++j) p0(i, j) = Rat(sum(i, j), Int(n));

    RatVec delta0 = p0.apply(delta);
    // (1 - sigma) + P0 is invertible: identity on the fixed space, 1-sigma
    // on its complement.
    RatMat op = RatMat::identity(l) - to_rat(sigma.matrix) + p0;
    RatVec delta_star = solve(op, vec_sub(delta, delta0));
    return StarDecomposition{delta0, delta_star};
}

std::vector<OrbitData> orbits_with_stabilizers(const DiscriminantGroup& d,
                                               const std::vector<Isometry>& subgroup,
                                               const std::vector<DiscElement>& set) {
    std::vector<OrbitData> out;
    std::map<IntVec, bool> used;
    for (const auto& e : set) used[e.coords()] = false;

    for (const auto& e : set) {
        if (used.at(e.coords())) continue;
        std::map<IntVec, DiscElement> orbit;
        size_t stabilizer = 0;
        for (const auto& g : subgroup) {
            DiscElement img = d.apply_matrix(g.matrix, e);
            orbit.emplace(img.coords(), img);
            if (img == e) ++stabilizer;
        }
        OrbitData data;
        data.stabilizer_order = stabilizer;
        data.orbit_size = orbit.size();
        data.representative = orbit.begin()->second;  // least coordinate tuple
        for (auto& [c, el] : orbit) {
            data.members.push_back(el);
            used.at(c) = true;
        }
        out.push_back(std::move(data));
    }

    // orbit-stabilizer consistency
    for (const auto& o : out)
        if (o.orbit_size * o.stabilizer_order != subgroup.size())
            throw Error(ErrorCode::LemmaIdViolation, "orbit-stabilizer identity failed");
    return out;
}

}  // namespace latorb
