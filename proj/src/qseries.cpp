#include "latorb/qseries.hpp"

#include "latorb/enumerate.hpp"

namespace latorb {

QSeries theta_series(const Lattice& lattice, const RatVec& coset, size_t order, size_t cap) {
    if (coset.size() != lattice.rank())
        throw Error(ErrorCode::CosetNotInDual, "coset dimension mismatch");
    // Membership in Q*: integral pairing with every basis vector.
    for (size_t i = 0; i < lattice.rank(); ++i) {
        Rat s(0);
        for (size_t j = 0; j < lattice.rank(); ++j)
            s += Rat(lattice.gram()(i, j)) * coset[j];
        if (!is_integer(s))
            throw Error(ErrorCode::CosetNotInDual,
                        "coset pairs non-integrally with basis vector " + std::to_string(i));
    }

    // The coset vector itself bounds the minimal norm.
    Rat min_bound = lattice.norm(coset);
    auto head = coset_norm_counts(lattice, coset, min_bound, cap);
    Rat min_norm = head.begin()->first;

    Rat max_norm = min_norm + Rat(2 * order);
    auto counts = coset_norm_counts(lattice, coset, max_norm, cap);

    QSeries s;
    s.leading_exponent = min_norm / 2;
    s.coeffs.assign(order + 1, Int(0));
    for (const auto& [norm, count] : counts) {
        Rat step = (norm - min_norm) / 2;
        if (!is_integer(step))
            throw Error(ErrorCode::BadArgument, "coset norms not aligned to integer steps");
        Int k = rat_num(step);
        if (k <= Int(order)) s.coeffs[k.convert_to<size_t>()] = count;
    }
    return s;
}

std::vector<Int> colored_partition_series(size_t colors, size_t order) {
    std::vector<Int> c(order + 1, Int(0));
    c[0] = 1;
    // One geometric-series pass per part size per color.
    for (size_t n = 1; n <= order; ++n)
        for (size_t rep = 0; rep < colors; ++rep)
            for (size_t k = n; k <= order; ++k) c[k] += c[k - n];
    return c;
}

QSeries character_series(const Lattice& lattice, const DiscElement& lambda, size_t order,
                         size_t cap) {
    QSeries theta = theta_series(lattice, lambda.lift(), order, cap);
    std::vector<Int> osc = colored_partition_series(lattice.rank(), order);

    QSeries s;
    s.leading_exponent = theta.leading_exponent - Rat(lattice.rank(), 24);
    s.coeffs.assign(order + 1, Int(0));
    for (size_t n = 0; n <= order; ++n)
        for (size_t m = 0; m <= n; ++m) s.coeffs[n] += theta.coeffs[m] * osc[n - m];
    return s;
}

}  // namespace latorb
