#ifndef SYMPROD_IND_DIVISORS_HPP
#define SYMPROD_IND_DIVISORS_HPP

#include "symprod/common.hpp"

namespace symprod {

/// An (r, n)-divisor class on a curve: rank r >= 1, degree n.
struct DivisorClassIndex {
    int rank = 1;
    long long degree = 0;
};

/// n / r in lowest terms, denominator positive.
struct Slope {
    long long num = 0;
    long long den = 1;
    bool is_integral() const { return den == 1; }
    bool operator==(const Slope&) const = default;
};

/// Constituent Quot scheme of the ind-variety of (r, n)-divisors: torsion
/// quotients of O_C^r of the given degree. Only the degree bookkeeping is
/// modelled; the flags record when the known existence results apply.
struct QuotIndex {
    int rank = 1;
    long long torsion_degree = 0;

    bool is_nonempty() const { return torsion_degree >= 0; }
    /// Quot^d over O_C^r has the weak point property when d > 0 and r | d.
    bool has_wpp() const;
    /// Quot^d over O_C is Sym^d(C), which has the diagonal property for d > 0.
    bool has_dp() const { return rank == 1 && torsion_degree >= 1; }

    bool operator==(const QuotIndex&) const = default;
};

/// Degree shifts of the kernel/quotient in the structure map that tensors
/// submodules of O_C^r by O(-D), for deg D_2 >= deg D_1.
struct StructureMapDegrees {
    long long kernel_before = 0;   // -n - r deg D_1
    long long kernel_after = 0;    // -n - r deg D_2
    long long quotient_after = 0;  // n + r deg D_2
    bool operator==(const StructureMapDegrees&) const = default;
};

Slope slope(const DivisorClassIndex& idx);

/// Torsion degree n + r * deg D of the constituent Q^{r,n}(D).
long long quot_degree(int r, long long n, long long deg_d);

QuotIndex quot_constituent(int r, long long n, long long deg_d);

/// Throws InvalidInput when deg_d2 < deg_d1 (the map needs D2 >= D1).
StructureMapDegrees structure_map_degrees(int r, long long n,
                                          long long deg_d1, long long deg_d2);

/// Common torsion degree r d - n on both sides of
/// Div^{r,n}(D) -> Q^{r,-n}(D); equals quot_degree(r, -n, d).
long long quasi_iso_degree(int r, long long n, long long d);

/// Least effective-divisor degree d0 with d0 > k: beyond it every
/// constituent of the integral-slope ind-variety Q^{r,-rk} has torsion
/// degree r(d - k) > 0 divisible by r. Clamped at 0.
long long wpp_threshold(int r, long long k);

/// Least effective-divisor degree d1 with d1 > n: beyond it the rank-one
/// constituent is Sym^{d-n}(C) with d - n > 0. Clamped at 0.
long long dp_threshold(long long n);

/// Hypotheses under which Quot^d over O_C^r is known to have the weak
/// point property: d positive and divisible by r.
bool wpp_hypothesis(int r, long long d);

} // namespace symprod

#endif
