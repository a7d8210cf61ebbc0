#include "latorb/enumerate.hpp"

#include <cstdint>
#include <functional>

namespace latorb {

namespace {

struct Frac64Overflow {};

// Exact fraction on int64 for the enumeration hot path. Intermediate
// products run through __int128; anything that would not fit back into
// int64 raises Frac64Overflow and the caller retries with big rationals.
struct Frac64 {
    long long n = 0;
    long long d = 1;  // > 0, gcd(|n|, d) == 1

    static long long fit(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw Frac64Overflow{};
        return static_cast<long long>(v);
    }

    static Frac64 make(__int128 num, __int128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 a = num < 0 ? -num : num, b = den;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
        Frac64 f;
        f.n = fit(num);
        f.d = fit(den);
        return f;
    }

    static Frac64 from_ll(long long v) {
        Frac64 f;
        f.n = v;
        return f;
    }

    static Frac64 from_rat(const Rat& r) {
        Int num = rat_num(r), den = rat_den(r);
        if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX) throw Frac64Overflow{};
        Frac64 f;
        f.n = num.convert_to<long long>();
        f.d = den.convert_to<long long>();
        return f;
    }

    Rat to_rat() const { return Rat(Int(n), Int(d)); }

    Frac64 operator+(const Frac64& o) const {
        return make(static_cast<__int128>(n) * o.d + static_cast<__int128>(o.n) * d,
                    static_cast<__int128>(d) * o.d);
    }
    Frac64 operator-(const Frac64& o) const {
        return make(static_cast<__int128>(n) * o.d - static_cast<__int128>(o.n) * d,
                    static_cast<__int128>(d) * o.d);
    }
    Frac64 operator*(const Frac64& o) const {
        return make(static_cast<__int128>(n) * o.n, static_cast<__int128>(d) * o.d);
    }
    bool operator<=(const Frac64& o) const {
        return static_cast<__int128>(n) * o.d <= static_cast<__int128>(o.n) * d;
    }
    long long floor_ll() const { return n >= 0 ? n / d : -((-n + d - 1) / d); }
    static Frac64 half() { return make(1, 2); }
};

struct RatF {
    Rat v;
    static RatF from_ll(long long x) { return {Rat(x)}; }
    static RatF from_rat(const Rat& r) { return {r}; }
    Rat to_rat() const { return v; }
    RatF operator+(const RatF& o) const { return {v + o.v}; }
    RatF operator-(const RatF& o) const { return {v - o.v}; }
    RatF operator*(const RatF& o) const { return {v * o.v}; }
    bool operator<=(const RatF& o) const { return v <= o.v; }
    long long floor_ll() const { return rat_floor(v).convert_to<long long>(); }
    static RatF half() { return {Rat(1, 2)}; }
};

// Fincke-Pohst data: Q(y) = sum_i q[i][i] * (y_i + sum_{j>i} q[i][j] y_j)^2.
RatMat cholesky_q(const Lattice& lattice) {
    size_t n = lattice.rank();
    RatMat q = to_rat(lattice.gram());
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            q(j, i) = q(i, j);  // stash the undivided value
            q(i, j) = q(i, j) / q(i, i);
        }
        for (size_t k = i + 1; k < n; ++k)
            for (size_t l = k; l < n; ++l) q(k, l) = q(k, l) - q(k, i) * q(i, l);
    }
    return q;
}

// Enumerates x in Z^n with Q(x + shift) <= bound, deepest coordinate last.
template <class F>
class Recursion {
public:
    using Emit = std::function<void(const std::vector<long long>&, const Rat&)>;

    Recursion(const RatMat& q, const RatVec& shift, const Rat& bound, size_t cap, Emit emit)
        : n_(shift.size()), cap_(cap), emit_(std::move(emit)), x_(n_, 0), y_(n_) {
        q_.assign(n_, std::vector<F>(n_));
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = i; j < n_; ++j) q_[i][j] = F::from_rat(q(i, j));
        shift_.reserve(n_);
        for (const auto& s : shift) shift_.push_back(F::from_rat(s));
        bound_ = F::from_rat(bound);
    }

    void run() {
        if (n_ == 0) return;
        descend(static_cast<int>(n_) - 1, bound_);
    }

private:
    void descend(int level, F remaining) {
        F c = shift_[level];
        for (size_t j = level + 1; j < n_; ++j) c = c + q_[level][j] * y_[j];
        const F& qd = q_[level][level];
        auto term = [&](long long x) {
            F t = F::from_ll(x) + c;
            return qd * t * t;
        };
        // (x + c)^2 is minimized over the integers at -round(c).
        long long x0 = ((F::from_ll(0) - c) + F::half()).floor_ll();
        long long lo = x0, hi = x0 - 1;
        while (term(lo) <= remaining) --lo;
        ++lo;
        while (term(hi + 1) <= remaining) ++hi;

        for (long long x = lo; x <= hi; ++x) {
            F t = term(x);
            x_[level] = x;
            y_[level] = F::from_ll(x) + shift_[level];
            if (level == 0) {
                if (++count_ > cap_)
                    throw Error(ErrorCode::BudgetExceeded,
                                "enumeration exceeded cap of " + std::to_string(cap_));
                emit_(x_, (bound_ - (remaining - t)).to_rat());
            } else {
                descend(level - 1, remaining - t);
            }
        }
    }

    size_t n_;
    size_t cap_;
    Emit emit_;
    std::vector<std::vector<F>> q_;
    std::vector<F> shift_;
    F bound_;
    std::vector<long long> x_;
    std::vector<F> y_;  // y_j = x_j + shift_j for already-fixed levels
    size_t count_ = 0;
};

void enumerate_core(const Lattice& lattice, const RatVec& shift, const Rat& max_norm,
                    size_t cap,
                    const std::function<void(const std::vector<long long>&, const Rat&)>& emit) {
    if (max_norm < 0) return;
    RatMat q = cholesky_q(lattice);
    try {
        Recursion<Frac64>(q, shift, max_norm, cap, emit).run();
    } catch (const Frac64Overflow&) {
        Recursion<RatF>(q, shift, max_norm, cap, emit).run();
    }
}

}  // namespace

std::map<Int, std::vector<IntVec>> enumerate_by_norm(const Lattice& lattice,
                                                     const Int& max_norm, size_t cap) {
    if (max_norm < 0) throw Error(ErrorCode::BadArgument, "max_norm must be nonnegative");
    std::map<Int, std::vector<IntVec>> out;
    RatVec shift(lattice.rank(), Rat(0));
    enumerate_core(lattice, shift, Rat(max_norm), cap,
                   [&](const std::vector<long long>& x, const Rat& norm) {
                       IntVec v(x.size());
                       for (size_t i = 0; i < x.size(); ++i) v[i] = Int(x[i]);
                       out[rat_num(norm)].push_back(std::move(v));
                   });
    return out;
}

std::map<Rat, Int> coset_norm_counts(const Lattice& lattice, const RatVec& shift,
                                     const Rat& max_norm, size_t cap) {
    if (shift.size() != lattice.rank())
        throw Error(ErrorCode::BadArgument, "shift dimension mismatch");
    std::map<Rat, Int> out;
    enumerate_core(lattice, shift, max_norm, cap,
                   [&](const std::vector<long long>&, const Rat& norm) { out[norm] += 1; });
    return out;
}

}  // namespace latorb
