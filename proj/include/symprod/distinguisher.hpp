#ifndef SYMPROD_DISTINGUISHER_HPP
#define SYMPROD_DISTINGUISHER_HPP

#include <variant>
#include <vector>

#include "symprod/common.hpp"
#include "symprod/partitions.hpp"
#include "symprod/poincare.hpp"

namespace symprod {

/// Sym^{n_1}(C) x ... x Sym^{n_r}(C) for a curve of the given genus.
struct MultiSymProduct {
    Partition partition;
    int genus = 0;

    bool operator==(const MultiSymProduct&) const = default;
};

inline PoincarePolynomial poincare_polynomial(const MultiSymProduct& x) {
    return multi_sym_poincare(x.partition, x.genus);
}

enum class CertKind {
    EqualPartitions,   // inputs are the same multiset; nothing to separate
    FirstBettiDiffers, // B_1 = 2 * length * g differs
    BettiDiffers,      // a specific Betti number differs
    FiberMultiproj,    // Abel-Jacobi fiber dimension multisets differ
    PicardRankDiffers, // genus 0, Picard ranks (= lengths) differ
    PolynomialDiffers, // full Poincare polynomials differ
};

struct EqualPartitionsPayload {
    bool operator==(const EqualPartitionsPayload&) const = default;
};
struct FirstBettiPayload {
    long long first_betti_a = 0; // 2 r g
    long long first_betti_b = 0; // 2 s g
    bool operator==(const FirstBettiPayload&) const = default;
};
struct BettiPayload {
    long long degree = 0;
    Integer betti_a;
    Integer betti_b;
    bool operator==(const BettiPayload&) const = default;
};
struct FiberPayload {
    std::vector<int> dims_a; // n_i - g, non-increasing
    std::vector<int> dims_b; // m_i - g, non-increasing
    bool operator==(const FiberPayload&) const = default;
};
struct PicardPayload {
    int rank_a = 0;
    int rank_b = 0;
    bool operator==(const PicardPayload&) const = default;
};
struct PolyDiffPayload {
    long long degree = 0; // smallest degree where the coefficients differ
    Integer coeff_a;
    Integer coeff_b;
    bool operator==(const PolyDiffPayload&) const = default;
};

/* A machine-checkable witness that two multi symmetric products (or
 * multiprojective spaces) are non-isomorphic: a named invariant together
 * with its two differing values. Recomputing the invariant from the inputs
 * must reproduce the payload (EqualPartitions excepted).
 */
struct NonIsoCertificate {
    CertKind kind = CertKind::EqualPartitions;
    std::variant<EqualPartitionsPayload, FirstBettiPayload, BettiPayload,
                 FiberPayload, PicardPayload, PolyDiffPayload>
        payload;

    bool operator==(const NonIsoCertificate&) const = default;
};

const char* cert_kind_name(CertKind kind);

/// Pairwise certificate inside a classification report; i < j index into
/// the report's partition list.
struct PairCertificate {
    int i = 0;
    int j = 0;
    NonIsoCertificate cert;

    bool operator==(const PairCertificate&) const = default;
};

/// Outcome of sweeping all partitions of n: the count of pairwise
/// non-isomorphic products Sym^{n_1} x ... x Sym^{n_r} (one per partition)
/// together with every pairwise witness for audit.
struct ClassificationReport {
    int n = 0;
    int genus = 0;
    Integer count;
    std::vector<Partition> partitions;
    std::vector<PairCertificate> certificates;

    bool operator==(const ClassificationReport&) const = default;
};

/// First Betti number of a length-r multi symmetric product: 2 r g.
long long first_betti_multi(int length, int g);

/// h^0(C, O(D)) = d - g + 1 for deg D = d >= 2g - 1 (h^1 vanishes there);
/// the Abel-Jacobi fiber over a line bundle is P^{d-g}. Throws OutOfRegime
/// for d < 2g - 1.
long long riemann_roch_h0(long long d, int g);

/* Decide non-isomorphism of the multi symmetric products attached to two
 * partitions of the same n over a genus-g curve:
 *   - equal multisets            -> EqualPartitions
 *   - g = 0, lengths differ      -> PicardRankDiffers
 *   - g = 0, same length         -> PolynomialDiffers (multiprojective spaces)
 *   - g >= 1, lengths differ     -> FirstBettiDiffers (2rg vs 2sg)
 *   - g >= 1, same length        -> strip common parts; with m the smallest
 *     remaining part, BettiDiffers at degree m+1 when m <= 2g-1 (values of
 *     the full products), else FiberMultiproj with dimensions n_i - g.
 * Whenever the primary invariant fails to differ the full Poincare
 * polynomials are compared instead; if those agree too, the pair is
 * reported Indistinguishable (thrown), never silently "isomorphic".
 * Throws InvalidInput when the two sums differ.
 */
NonIsoCertificate distinguish(const Partition& a, const Partition& b, int g);

/// Witness for two multiprojective spaces of the same dimension count and
/// total dimension: EqualPartitions when the dimension multisets coincide,
/// otherwise PolynomialDiffers at the smallest differing degree.
/// Inputs must be non-increasing, same length, same sum.
NonIsoCertificate multiproj_distinct(const std::vector<int>& dims_a,
                                     const std::vector<int>& dims_b);

/// Enumerate partitions of n, certify every unordered pair, and report the
/// class count (= p(n) when every pair is separated, which the sweep
/// verifies). Pair evaluations are independent; with Exec::Parallel they
/// run under OpenMP and the report is still assembled in pair-index order.
ClassificationReport classify_hilbert_schemes(int n, int g,
                                              Exec exec = Exec::Parallel);

} // namespace symprod

#endif
