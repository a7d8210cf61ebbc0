#include "latorb/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace latorb {

Int det(const IntMat& a) {
    if (!a.is_square()) throw Error(ErrorCode::BadArgument, "det of non-square matrix");
    size_t n = a.rows();
    if (n == 0) return Int(1);
    IntMat m = a;
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return Int(0);
            for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

Rat det(const RatMat& a) {
    if (!a.is_square()) throw Error(ErrorCode::BadArgument, "det of non-square matrix");
    size_t n = a.rows();
    RatMat m = a;
    Rat d(1);
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != k) {
            for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            d = -d;
        }
        d *= m(k, k);
        Rat inv = Rat(1) / m(k, k);
        for (size_t i = k + 1; i < n; ++i) {
            Rat f = m(i, k) * inv;
            if (f == 0) continue;
            for (size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return d;
}

RatMat inverse(const RatMat& a) {
    if (!a.is_square()) throw Error(ErrorCode::BadArgument, "inverse of non-square matrix");
    size_t n = a.rows();
    RatMat m = a, inv = RatMat::identity(n);
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) throw Error(ErrorCode::BadArgument, "singular matrix");
        if (p != k)
            for (size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        Rat piv = Rat(1) / m(k, k);
        for (size_t j = 0; j < n; ++j) {
            m(k, j) *= piv;
            inv(k, j) *= piv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k) == 0) continue;
            Rat f = m(i, k);
            for (size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

RatVec solve(const RatMat& a, const RatVec& b) {
    RatMat inv = inverse(a);
    return inv.apply(b);
}

namespace {

// Elementary operations applied simultaneously to the working matrix and
// the accumulated unimodular transforms with their inverses.
struct SnfState {
    IntMat a, u, v, ui, vi;

    void row_swap(size_t i, size_t j) {
        for (size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        for (size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
        for (size_t r = 0; r < ui.rows(); ++r) std::swap(ui(r, i), ui(r, j));
    }
    void col_swap(size_t i, size_t j) {
        for (size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        for (size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
        for (size_t c = 0; c < vi.cols(); ++c) std::swap(vi(i, c), vi(j, c));
    }
    // row i += f * row j
    void row_add(size_t i, size_t j, const Int& f) {
        for (size_t c = 0; c < a.cols(); ++c) a(i, c) += f * a(j, c);
        for (size_t c = 0; c < u.cols(); ++c) u(i, c) += f * u(j, c);
        for (size_t r = 0; r < ui.rows(); ++r) ui(r, j) -= f * ui(r, i);
    }
    // col i += f * col j
    void col_add(size_t i, size_t j, const Int& f) {
        for (size_t r = 0; r < a.rows(); ++r) a(r, i) += f * a(r, j);
        for (size_t r = 0; r < v.rows(); ++r) v(r, i) += f * v(r, j);
        for (size_t c = 0; c < vi.cols(); ++c) vi(j, c) -= f * vi(i, c);
    }
    void row_negate(size_t i) {
        for (size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        for (size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
        for (size_t r = 0; r < ui.rows(); ++r) ui(r, i) = -ui(r, i);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMat& a0) {
    size_t m = a0.rows(), n = a0.cols();
    SnfState s{a0, IntMat::identity(m), IntMat::identity(n), IntMat::identity(m),
               IntMat::identity(n)};

    size_t t = 0;
    const size_t rank_bound = std::min(m, n);
    while (t < rank_bound) {
        // Pivot: smallest nonzero absolute value in the trailing block,
        // which keeps coefficient growth mild.
        size_t pi = t, pj = t;
        Int best(0);
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j) {
                Int v = abs(s.a(i, j));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        if (pi != t) s.row_swap(t, pi);
        if (pj != t) s.col_swap(t, pj);
        if (s.a(t, t) < 0) s.row_negate(t);

        bool clean = true;
        for (size_t i = t + 1; i < m; ++i) {
            if (s.a(i, t) == 0) continue;
            Int q = s.a(i, t) / s.a(t, t);
            if (q != 0) s.row_add(i, t, -q);
            if (s.a(i, t) != 0) clean = false;
        }
        for (size_t j = t + 1; j < n; ++j) {
            if (s.a(t, j) == 0) continue;
            Int q = s.a(t, j) / s.a(t, t);
            if (q != 0) s.col_add(j, t, -q);
            if (s.a(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainder became the new pivot candidate

        // Divisibility fixup: pivot must divide every trailing entry.
        bool fixed = true;
        for (size_t i = t + 1; i < m && fixed; ++i)
            for (size_t j = t + 1; j < n && fixed; ++j)
                if (s.a(i, j) % s.a(t, t) != 0) {
                    s.row_add(t, i, Int(1));
                    fixed = false;
                }
        if (fixed) ++t;
    }

    SmithForm out;
    out.u = s.u;
    out.v = s.v;
    out.u_inv = s.ui;
    out.v_inv = s.vi;
    out.diag.resize(rank_bound);
    for (size_t i = 0; i < rank_bound; ++i) out.diag[i] = s.a(i, i);
    return out;
}

IntMat hermite_column_basis(const IntMat& a0) {
    size_t m = a0.rows(), n = a0.cols();
    IntMat a = a0;
    size_t c = 0;  // next column to place a pivot in
    std::vector<size_t> pivot_rows;
    for (size_t r = 0; r < m && c < n; ++r) {
        // gcd-reduce row r across columns c..n-1
        while (true) {
            size_t p = n;
            Int best(0);
            for (size_t j = c; j < n; ++j) {
                Int v = abs(a(r, j));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    p = j;
                }
            }
            if (p == n) break;
            if (p != c)
                for (size_t i = 0; i < m; ++i) std::swap(a(i, c), a(i, p));
            if (a(r, c) < 0)
                for (size_t i = 0; i < m; ++i) a(i, c) = -a(i, c);
            bool zeroed = true;
            for (size_t j = c + 1; j < n; ++j) {
                Int q = a(r, j) / a(r, c);
                if (q != 0)
                    for (size_t i = 0; i < m; ++i) a(i, j) -= q * a(i, c);
                if (a(r, j) != 0) zeroed = false;
            }
            if (zeroed) break;
        }
        if (a(r, c) != 0) {
            // reduce earlier pivot columns against this one
            for (size_t k = 0; k < c; ++k) {
                Int q = a(r, k) / a(r, c);
                Int rem = a(r, k) - q * a(r, c);
                if (rem < 0) q -= 1;
                if (q != 0)
                    for (size_t i = 0; i < m; ++i) a(i, k) -= q * a(i, c);
            }
            pivot_rows.push_back(r);
            ++c;
        }
    }
    IntMat h(m, c);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < c; ++j) h(i, j) = a(i, j);
    return h;
}

}  // namespace latorb
