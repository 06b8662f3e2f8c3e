#include "symprod/ind_divisors.hpp"

#include <numeric>

namespace symprod {

bool QuotIndex::has_wpp() const { return wpp_hypothesis(rank, torsion_degree); }

Slope slope(const DivisorClassIndex& idx) {
    if (idx.rank < 1)
        throw InvalidInput("slope: rank must be positive");
    // gcd(0, r) = r, so degree 0 reduces to 0/1 like everything else.
    const long long g = std::gcd(idx.degree < 0 ? -idx.degree : idx.degree,
                                 static_cast<long long>(idx.rank));
    return {idx.degree / g, idx.rank / g};
}

long long quot_degree(int r, long long n, long long deg_d) {
    if (r < 1)
        throw InvalidInput("quot_degree: rank must be positive");
    if (deg_d < 0)
        throw InvalidInput("quot_degree: effective divisors have non-negative degree");
    return n + static_cast<long long>(r) * deg_d;
}

QuotIndex quot_constituent(int r, long long n, long long deg_d) {
    return {r, quot_degree(r, n, deg_d)};
}

StructureMapDegrees structure_map_degrees(int r, long long n, long long deg_d1,
                                          long long deg_d2) {
    if (r < 1)
        throw InvalidInput("structure_map_degrees: rank must be positive");
    if (deg_d1 < 0)
        throw InvalidInput("structure_map_degrees: degrees must be non-negative");
    if (deg_d2 < deg_d1)
        throw InvalidInput("structure_map_degrees: requires deg D2 >= deg D1");
    StructureMapDegrees out;
    out.kernel_before = -n - static_cast<long long>(r) * deg_d1;
    out.kernel_after = -n - static_cast<long long>(r) * deg_d2;
    out.quotient_after = n + static_cast<long long>(r) * deg_d2;
    return out;
}

long long quasi_iso_degree(int r, long long n, long long d) {
    if (r < 1)
        throw InvalidInput("quasi_iso_degree: rank must be positive");
    if (d < 0)
        throw InvalidInput("quasi_iso_degree: effective divisors have non-negative degree");
    return static_cast<long long>(r) * d - n;
}

long long wpp_threshold(int r, long long k) {
    if (r < 1)
        throw InvalidInput("wpp_threshold: rank must be positive");
    return k + 1 > 0 ? k + 1 : 0;
}

long long dp_threshold(long long n) { return n + 1 > 0 ? n + 1 : 0; }

bool wpp_hypothesis(int r, long long d) {
    if (r < 1)
        throw InvalidInput("wpp_hypothesis: rank must be positive");
    return d > 0 && d % r == 0;
}

} // namespace symprod
