#include "latorb/lattice.hpp"

#include <algorithm>

namespace latorb {

Rat Lattice::pairing(const RatVec& u, const RatVec& v) const {
    if (u.size() != rank() || v.size() != rank())
        throw Error(ErrorCode::BadArgument, "pairing dimension mismatch");
    Rat s(0);
    for (size_t i = 0; i < rank(); ++i) {
        if (u[i] == 0) continue;
        Rat row(0);
        for (size_t j = 0; j < rank(); ++j) row += Rat(gram_(i, j)) * v[j];
        s += u[i] * row;
    }
    return s;
}

Int Lattice::pairing(const IntVec& u, const IntVec& v) const {
    if (u.size() != rank() || v.size() != rank())
        throw Error(ErrorCode::BadArgument, "pairing dimension mismatch");
    Int s(0);
    for (size_t i = 0; i < rank(); ++i) {
        if (u[i] == 0) continue;
        Int row(0);
        for (size_t j = 0; j < rank(); ++j) row += gram_(i, j) * v[j];
        s += u[i] * row;
    }
    return s;
}

Lattice validate_lattice(const IntMat& gram) {
    if (!gram.is_square() || gram.rows() == 0)
        throw Error(ErrorCode::BadArgument, "Gram matrix must be square and nonempty");
    size_t l = gram.rows();
    for (size_t i = 0; i < l; ++i)
        for (size_t j = i + 1; j < l; ++j)
            if (gram(i, j) != gram(j, i))
                throw Error(ErrorCode::NotSymmetric,
                            "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") differs from its transpose");
    for (size_t i = 0; i < l; ++i)
        if (gram(i, i) % 2 != 0)
            throw Error(ErrorCode::NotEven,
                        "diagonal entry (" + std::to_string(i) + "," + std::to_string(i) +
                            ") is odd");
    // Sylvester criterion with exact minors.
    for (size_t k = 1; k <= l; ++k) {
        IntMat sub(k, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) sub(i, j) = gram(i, j);
        if (det(sub) <= 0)
            throw Error(ErrorCode::NotPositiveDefinite,
                        "leading principal minor of order " + std::to_string(k) +
                            " is not positive");
    }
    Int d = det(gram);
    return Lattice(gram, d, inverse(to_rat(gram)));
}

namespace {

IntMat gram_a_series(size_t n) {
    IntMat g(n, n);
    for (size_t i = 0; i < n; ++i) {
        g(i, i) = 2;
        if (i + 1 < n) {
            g(i, i + 1) = -1;
            g(i + 1, i) = -1;
        }
    }
    return g;
}

IntMat gram_d4() {
    return IntMat{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
}

IntMat gram_e8() {
    IntMat g(8, 8);
    for (size_t i = 0; i < 8; ++i) g(i, i) = 2;
    auto edge = [&](size_t a, size_t b) {
        g(a, b) = -1;
        g(b, a) = -1;
    };
    // Bourbaki numbering: chain 1-3-4-5-6-7-8, node 2 attached to 4.
    edge(0, 2);
    edge(2, 3);
    edge(3, 4);
    edge(4, 5);
    edge(5, 6);
    edge(6, 7);
    edge(1, 3);
    return g;
}

}  // namespace

Lattice catalog_lattice(const std::string& name) {
    std::string n = name;
    std::transform(n.begin(), n.end(), n.begin(), ::toupper);
    if (n == "A1") return validate_lattice(gram_a_series(1));
    if (n == "A2") return validate_lattice(gram_a_series(2));
    if (n == "A3") return validate_lattice(gram_a_series(3));
    if (n == "D4") return validate_lattice(gram_d4());
    if (n == "E8") return validate_lattice(gram_e8());
    if (n == "A1+A1" || n == "A1XA1")
        return validate_lattice(IntMat{{2, 0}, {0, 2}});
    throw Error(ErrorCode::BadArgument, "unknown catalog lattice '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"A1", "A2", "A3", "D4", "E8", "A1+A1"};
}

DiscriminantGroup::DiscriminantGroup(const Lattice& lattice) : lattice_(lattice) {
    size_t l = lattice.rank();
    SmithForm snf = smith_normal_form(lattice.gram());
    // Z^l / G Z^l with U G V = D: classes of U^{-1} e_i have order d_i.
    // Lifts into Q* are G^{-1} U^{-1} e_i.
    log_ = snf.u;
    diag_full_ = snf.diag;
    order_ = 1;
    RatMat ginv_uinv = lattice.gram_inv() * to_rat(snf.u_inv);
    for (size_t i = 0; i < l; ++i) {
        order_ *= snf.diag[i];
        if (snf.diag[i] > 1) {
            nontrivial_.push_back(i);
            factors_.push_back(snf.diag[i]);
            RatVec lift(l);
            for (size_t r = 0; r < l; ++r) lift[r] = rat_frac(ginv_uinv(r, i));
            lifts_.push_back(lift);
        }
    }
}

DiscriminantGroup discriminant_group(const Lattice& lattice) {
    return DiscriminantGroup(lattice);
}

void DiscriminantGroup::check_element(const DiscElement& a) const {
    if (a.coords_.size() != factors_.size())
        throw Error(ErrorCode::ElementNotInGroup, "coordinate count mismatch");
    for (size_t i = 0; i < factors_.size(); ++i)
        if (a.coords_[i] < 0 || a.coords_[i] >= factors_[i])
            throw Error(ErrorCode::ElementNotInGroup, "coordinate out of range");
}

RatVec DiscriminantGroup::canonical_lift(const IntVec& coords) const {
    size_t l = lattice_.rank();
    RatVec lift(l, Rat(0));
    for (size_t k = 0; k < coords.size(); ++k)
        for (size_t r = 0; r < l; ++r) lift[r] += Rat(coords[k]) * lifts_[k][r];
    for (auto& x : lift) x = rat_frac(x);
    return lift;
}

DiscElement DiscriminantGroup::zero() const { return element(IntVec(factors_.size(), Int(0))); }

DiscElement DiscriminantGroup::element(const IntVec& coords) const {
    if (coords.size() != factors_.size())
        throw Error(ErrorCode::ElementNotInGroup, "coordinate count mismatch");
    DiscElement e;
    e.coords_.resize(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) {
        Int c = coords[i] % factors_[i];
        if (c < 0) c += factors_[i];
        e.coords_[i] = c;
    }
    e.lift_ = canonical_lift(e.coords_);
    return e;
}

DiscElement DiscriminantGroup::element_from_lift(const RatVec& mu) const {
    if (mu.size() != lattice_.rank())
        throw Error(ErrorCode::CosetNotInDual, "dimension mismatch");
    size_t l = lattice_.rank();
    // m = G mu must be integral for mu in Q*.
    IntVec m(l);
    for (size_t i = 0; i < l; ++i) {
        Rat s(0);
        for (size_t j = 0; j < l; ++j) s += Rat(lattice_.gram()(i, j)) * mu[j];
        if (!is_integer(s))
            throw Error(ErrorCode::CosetNotInDual,
                        "vector pairs non-integrally with basis vector " + std::to_string(i));
        m[i] = rat_num(s);
    }
    IntVec x = log_.apply(m);
    IntVec coords(factors_.size());
    for (size_t k = 0; k < nontrivial_.size(); ++k) {
        Int c = x[nontrivial_[k]] % factors_[k];
        if (c < 0) c += factors_[k];
        coords[k] = c;
    }
    return element(coords);
}

DiscElement DiscriminantGroup::add(const DiscElement& a, const DiscElement& b) const {
    check_element(a);
    check_element(b);
    IntVec c(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
    return element(c);
}

DiscElement DiscriminantGroup::neg(const DiscElement& a) const {
    check_element(a);
    IntVec c(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) c[i] = -a.coords_[i];
    return element(c);
}

DiscElement DiscriminantGroup::apply_matrix(const IntMat& m, const DiscElement& a) const {
    check_element(a);
    return element_from_lift(mat_apply(m, a.lift_));
}

std::vector<DiscElement> DiscriminantGroup::all_elements(size_t cap) const {
    if (order_ > Int(cap))
        throw Error(ErrorCode::SizeCapExceeded, "discriminant group of order " + order_.str());
    std::vector<DiscElement> out;
    out.reserve(static_cast<size_t>(order_.convert_to<long long>()));
    IntVec coords(factors_.size(), Int(0));
    while (true) {
        out.push_back(element(coords));
        size_t k = 0;
        while (k < factors_.size()) {
            coords[k] += 1;
            if (coords[k] < factors_[k]) break;
            coords[k] = 0;
            ++k;
        }
        if (k == factors_.size()) break;
    }
    return out;
}

Rat disc_pairing(const DiscriminantGroup& d, const DiscElement& a, const DiscElement& b) {
    d.check_element(a);
    d.check_element(b);
    return rat_frac(d.lattice().pairing(a.lift(), b.lift()));
}

Int mu_index(const Lattice& lattice) { return DiscriminantGroup(lattice).order(); }

}  // namespace latorb
