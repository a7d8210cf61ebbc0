#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latorb/isometry.hpp"

using namespace latorb;

namespace {

Isometry neg_id(const Lattice& l) {
    return validate_isometry(l, -IntMat::identity(l.rank()));
}

Isometry a2_rot3() {
    return validate_isometry(catalog_lattice("A2"), IntMat{{0, -1}, {1, -1}});
}

Isometry a2_swap() {
    return validate_isometry(catalog_lattice("A2"), IntMat{{0, 1}, {1, 0}});
}

Isometry coord_swap() {
    return validate_isometry(catalog_lattice("A1+A1"), IntMat{{0, 1}, {1, 0}});
}

}  // namespace

TEST_CASE("validate_isometry orders and rejection") {
    Lattice a2 = catalog_lattice("A2");
    CHECK(neg_id(a2).order == 2);
    CHECK(a2_rot3().order == 3);
    CHECK(a2_swap().order == 2);
    CHECK(validate_isometry(a2, IntMat::identity(2)).order == 1);

    try {
        validate_isometry(a2, IntMat{{1, 1}, {0, 1}});
        FAIL("shear accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotGramPreserving);
    }
    CHECK_THROWS_AS(validate_isometry(a2, IntMat{{1}}), Error);
}

TEST_CASE("close_group sizes") {
    Lattice a2 = catalog_lattice("A2");
    CHECK(close_group(a2, {neg_id(a2)}).order() == 2);
    CHECK(close_group(a2, {a2_rot3(), neg_id(a2)}).order() == 6);
    CHECK(close_group(a2, {a2_rot3(), a2_swap()}).order() == 6);
    CHECK(close_group(a2, {}).order() == 1);
    // full hexagonal point group
    CHECK(close_group(a2, {a2_rot3(), a2_swap(), neg_id(a2)}).order() == 12);

    try {
        close_group(a2, {a2_rot3(), a2_swap()}, 3);
        FAIL("cap ignored");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SizeCapExceeded);
    }
}

TEST_CASE("group closure invariants") {
    Lattice a2 = catalog_lattice("A2");
    IsometryGroup g = close_group(a2, {a2_rot3(), a2_swap()});
    CHECK(g.elements()[0].matrix == IntMat::identity(2));
    // closed under product and inverse, no duplicates
    for (size_t i = 0; i < g.order(); ++i) {
        CHECK_NOTHROW(g.inverse(i));
        for (size_t j = 0; j < g.order(); ++j) CHECK_NOTHROW(g.multiply(i, j));
    }
}

TEST_CASE("conjugacy classes") {
    Lattice a2 = catalog_lattice("A2");

    IsometryGroup z2 = close_group(a2, {neg_id(a2)});
    auto classes2 = conjugacy_classes(z2);
    CHECK(classes2.size() == 2);
    for (const auto& c : classes2) CHECK(c.members.size() == 1);

    IsometryGroup s3 = close_group(a2, {a2_rot3(), a2_swap()});
    auto classes3 = conjugacy_classes(s3);
    CHECK(classes3.size() == 3);
    std::vector<size_t> sizes;
    for (const auto& c : classes3) sizes.push_back(c.members.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 2, 3});

    IsometryGroup triv = close_group(a2, {});
    CHECK(conjugacy_classes(triv).size() == 1);

    // class equation: sum |G| / |centralizer(rep)| = |G|
    size_t total = 0;
    for (const auto& c : classes3) {
        IsometryGroup cent = centralizer(s3, s3.elements()[c.representative]);
        CHECK(c.members.size() * cent.order() == s3.order());
        total += s3.order() / cent.order();
    }
    CHECK(total == s3.order());
}

TEST_CASE("centralizer") {
    Lattice a2 = catalog_lattice("A2");
    IsometryGroup z2 = close_group(a2, {neg_id(a2)});
    CHECK(centralizer(z2, neg_id(a2)).order() == z2.order());

    IsometryGroup s3 = close_group(a2, {a2_rot3(), a2_swap()});
    CHECK(centralizer(s3, a2_swap()).order() == 2);
    CHECK(centralizer(s3, validate_isometry(a2, IntMat::identity(2))).order() == 6);

    try {
        centralizer(s3, neg_id(a2));
        FAIL("accepted element outside the group");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ElementNotInGroup);
    }
}

TEST_CASE("disc_action examples") {
    Lattice a2 = catalog_lattice("A2");
    DiscriminantGroup d(a2);

    auto id_perm = disc_action(d, validate_isometry(a2, IntMat::identity(2)));
    for (size_t i = 0; i < id_perm.size(); ++i) CHECK(id_perm[i] == i);

    // -I on Z/3 swaps gen and 2 gen
    DiscElement g1 = d.element({Int(1)});
    DiscElement g2 = d.element({Int(2)});
    CHECK(d.apply_matrix(neg_id(a2).matrix, g1) == g2);
    CHECK(d.apply_matrix(neg_id(a2).matrix, g2) == g1);

    Lattice aa = catalog_lattice("A1+A1");
    DiscriminantGroup dd(aa);
    DiscElement e10 = dd.element({Int(1), Int(0)});
    DiscElement e01 = dd.element({Int(0), Int(1)});
    DiscElement e11 = dd.element({Int(1), Int(1)});
    IntMat sw = coord_swap().matrix;
    CHECK(dd.apply_matrix(sw, e10) == e01);
    CHECK(dd.apply_matrix(sw, e01) == e10);
    CHECK(dd.apply_matrix(sw, e11) == e11);
}

TEST_CASE("disc_action is a homomorphism") {
    Lattice a2 = catalog_lattice("A2");
    DiscriminantGroup d(a2);
    IsometryGroup s3 = close_group(a2, {a2_rot3(), a2_swap()});
    for (size_t i = 0; i < s3.order(); ++i)
        for (size_t j = 0; j < s3.order(); ++j) {
            auto pi = disc_action(d, s3.elements()[i]);
            auto pj = disc_action(d, s3.elements()[j]);
            auto pij = disc_action(d, s3.elements()[s3.multiply(i, j)]);
            // sigma_i then sigma_j applied to lifts: note matrices act on
            // the left, (sigma_i sigma_j) x = sigma_i (sigma_j x)
            for (size_t k = 0; k < pi.size(); ++k) CHECK(pij[k] == pi[pj[k]]);
        }
}

TEST_CASE("fixed_point_data frozen examples") {
    Lattice a2 = catalog_lattice("A2");
    DiscriminantGroup d(a2);

    FixedPointData f = fixed_point_data(a2, d, neg_id(a2));
    CHECK(f.fixed_subgroup.size() == 1);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) CHECK(f.p0(i, j) == 0);
    CHECK(f.index_qsigma_star_over_q == 3);

    FixedPointData fi = fixed_point_data(a2, d, validate_isometry(a2, IntMat::identity(2)));
    CHECK(fi.fixed_subgroup.size() == 3);
    CHECK(fi.p0 == RatMat::identity(2));
    CHECK(fi.index_qsigma_star_over_q == 1);  // Q_sigma = Q*

    Lattice aa = catalog_lattice("A1+A1");
    DiscriminantGroup dd(aa);
    FixedPointData fs = fixed_point_data(aa, dd, coord_swap());
    CHECK(fs.fixed_subgroup.size() == 2);
    CHECK(fs.index_qsigma_star_over_q == 2);
}

TEST_CASE("P0 is the Gram-orthogonal projector") {
    Lattice a2 = catalog_lattice("A2");
    DiscriminantGroup d(a2);
    for (const auto& sigma : {a2_rot3(), a2_swap(), neg_id(a2)}) {
        FixedPointData f = fixed_point_data(a2, d, sigma);
        CHECK(f.p0 * f.p0 == f.p0);
        CHECK(f.p0 * to_rat(sigma.matrix) == f.p0);
        CHECK(to_rat(sigma.matrix) * f.p0 == f.p0);
    }
}

TEST_CASE("lemma id over whole groups") {
    struct Case {
        Lattice lattice;
        IsometryGroup group;
    };
    Lattice a2 = catalog_lattice("A2");
    Lattice aa = catalog_lattice("A1+A1");
    std::vector<Case> cases;
    cases.push_back({a2, close_group(a2, {neg_id(a2)})});
    cases.push_back({aa, close_group(aa, {coord_swap()})});
    cases.push_back({a2, close_group(a2, {a2_rot3(), a2_swap()})});
    cases.push_back({a2, close_group(a2, {a2_rot3(), neg_id(a2)})});

    for (const auto& c : cases) {
        DiscriminantGroup d(c.lattice);
        for (const auto& sigma : c.group.elements()) {
            FixedPointData f = fixed_point_data(c.lattice, d, sigma);
            CHECK(Int(f.fixed_subgroup.size()) * f.index_qsigma_star_over_q == d.order());
            // SNF route agrees with the scan
            CHECK(fixed_subgroup_order_snf(d, sigma) == Int(f.fixed_subgroup.size()));
        }
    }
}

TEST_CASE("star decomposition") {
    Lattice a2 = catalog_lattice("A2");
    RatVec delta{Rat(1, 3), Rat(-2, 5)};
    StarDecomposition s = star_decomposition(a2, neg_id(a2), delta);
    CHECK(s.delta0 == RatVec{Rat(0), Rat(0)});
    CHECK(s.delta_star == RatVec{Rat(1, 6), Rat(-1, 5)});

    // fixed vector decomposes as (delta, 0)
    Lattice aa = catalog_lattice("A1+A1");
    StarDecomposition sf = star_decomposition(aa, coord_swap(), RatVec{Rat(2), Rat(2)});
    CHECK(sf.delta0 == RatVec{Rat(2), Rat(2)});
    CHECK(sf.delta_star == RatVec{Rat(0), Rat(0)});

    StarDecomposition sw = star_decomposition(aa, coord_swap(), RatVec{Rat(1), Rat(0)});
    CHECK(sw.delta0 == RatVec{Rat(1, 2), Rat(1, 2)});
    CHECK(sw.delta_star == RatVec{Rat(1, 4), Rat(-1, 4)});
}

TEST_CASE("star decomposition recomposes on random input") {
    Lattice a2 = catalog_lattice("A2");
    std::vector<Isometry> sigmas{a2_rot3(), a2_swap(), neg_id(a2)};
    int counter = 1;
    for (const auto& sigma : sigmas) {
        FixedPointData f =
            fixed_point_data(a2, DiscriminantGroup(a2), sigma);
        for (int trial = 0; trial < 12; ++trial) {
            RatVec delta{Rat(counter % 7 - 3, 1 + counter % 4),
                         Rat((counter * 3) % 11 - 5, 1 + (counter * 7) % 5)};
            ++counter;
            StarDecomposition s = star_decomposition(a2, sigma, delta);
            RatVec recomposed =
                vec_add(s.delta0,
                        vec_sub(s.delta_star, mat_apply(sigma.matrix, s.delta_star)));
            CHECK(recomposed == delta);
            CHECK(is_zero_vec(f.p0.apply(s.delta_star)));
            CHECK(f.p0.apply(s.delta0) == s.delta0);
        }
    }
}

TEST_CASE("orbits with stabilizers") {
    Lattice a2 = catalog_lattice("A2");
    DiscriminantGroup d(a2);
    IsometryGroup z2 = close_group(a2, {neg_id(a2)});

    // Z2 acting on Z/3: orbits {0}, {1,2}
    auto orbits = orbits_with_stabilizers(d, z2.elements(), d.all_elements());
    CHECK(orbits.size() == 2);
    CHECK(orbits[0].orbit_size + orbits[1].orbit_size == 3);
    for (const auto& o : orbits) {
        if (o.orbit_size == 1) CHECK(o.stabilizer_order == 2);
        if (o.orbit_size == 2) CHECK(o.stabilizer_order == 1);
    }

    // trivial group: all singletons
    IsometryGroup triv = close_group(a2, {});
    auto singletons = orbits_with_stabilizers(d, triv.elements(), d.all_elements());
    CHECK(singletons.size() == 3);

    // swap acting on its own fixed subgroup {00, 11}
    Lattice aa = catalog_lattice("A1+A1");
    DiscriminantGroup dd(aa);
    IsometryGroup sw = close_group(aa, {coord_swap()});
    FixedPointData f = fixed_point_data(aa, dd, coord_swap());
    auto fixed_orbits = orbits_with_stabilizers(dd, sw.elements(), f.fixed_subgroup);
    CHECK(fixed_orbits.size() == 2);
    for (const auto& o : fixed_orbits) {
        CHECK(o.orbit_size == 1);
        CHECK(o.stabilizer_order == 2);
    }
}

TEST_CASE("orbit-stabilizer sums match the fixed subgroup size") {
    Lattice a2 = catalog_lattice("A2");
    DiscriminantGroup d(a2);
    IsometryGroup s3 = close_group(a2, {a2_rot3(), a2_swap()});
    for (const auto& cls : conjugacy_classes(s3)) {
        const Isometry& sigma = s3.elements()[cls.representative];
        FixedPointData f = fixed_point_data(a2, d, sigma);
        IsometryGroup cent = centralizer(s3, sigma);
        auto orbits = orbits_with_stabilizers(d, cent.elements(), f.fixed_subgroup);
        size_t total = 0;
        for (const auto& o : orbits) total += cent.order() / o.stabilizer_order;
        CHECK(total == f.fixed_subgroup.size());
    }
}
