#include "symprod/distinguisher.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace symprod {

const char* cert_kind_name(CertKind kind) {
    switch (kind) {
    case CertKind::EqualPartitions:
        return "EqualPartitions";
    case CertKind::FirstBettiDiffers:
        return "FirstBettiDiffers";
    case CertKind::BettiDiffers:
        return "BettiDiffers";
    case CertKind::FiberMultiproj:
        return "FiberMultiproj";
    case CertKind::PicardRankDiffers:
        return "PicardRankDiffers";
    case CertKind::PolynomialDiffers:
        return "PolynomialDiffers";
    }
    return "?";
}

long long first_betti_multi(int length, int g) {
    if (length <= 0)
        throw InvalidInput("first_betti_multi: length must be positive");
    if (g < 0)
        throw InvalidInput("first_betti_multi: genus must be non-negative");
    return 2LL * length * g;
}

long long riemann_roch_h0(long long d, int g) {
    if (g < 0)
        throw InvalidInput("riemann_roch_h0: genus must be non-negative");
    if (d < 2LL * g - 1)
        throw OutOfRegime("riemann_roch_h0: requires d >= 2g-1 (h^1 = 0)");
    return d - g + 1;
}

namespace {

std::optional<long long> first_differing_degree(const PoincarePolynomial& p,
                                                const PoincarePolynomial& q) {
    const long long top = std::max(p.degree(), q.degree());
    for (long long k = 0; k <= top; ++k)
        if (p.coeff(k) != q.coeff(k))
            return k;
    return std::nullopt;
}

NonIsoCertificate poly_diff_cert(const PoincarePolynomial& p,
                                 const PoincarePolynomial& q) {
    const auto k = first_differing_degree(p, q);
    if (!k)
        throw Indistinguishable(
            "no implemented invariant separates the pair (equal Poincare polynomials)");
    return {CertKind::PolynomialDiffers,
            PolyDiffPayload{*k, p.coeff(*k), q.coeff(*k)}};
}

std::vector<int> fiber_dims(const Partition& p, int g) {
    std::vector<int> dims;
    dims.reserve(p.parts().size());
    for (int part : p.parts())
        dims.push_back(part - g);
    return dims; // parts are non-increasing, so dims are too
}

} // namespace

NonIsoCertificate distinguish(const Partition& a, const Partition& b, int g) {
    if (g < 0)
        throw InvalidInput("distinguish: genus must be non-negative");
    if (a.sum() != b.sum())
        throw InvalidInput("distinguish: partitions of different integers");
    if (a == b)
        return {CertKind::EqualPartitions, EqualPartitionsPayload{}};

    if (g == 0) {
        if (a.length() != b.length())
            return {CertKind::PicardRankDiffers,
                    PicardPayload{a.length(), b.length()}};
        // Genus 0: Sym^m is P^m, so compare the multiprojective spaces.
        return poly_diff_cert(multiproj_poincare(a.parts()),
                              multiproj_poincare(b.parts()));
    }

    if (a.length() != b.length())
        return {CertKind::FirstBettiDiffers,
                FirstBettiPayload{first_betti_multi(a.length(), g),
                                  first_betti_multi(b.length(), g)}};

    // Same length, same sum, distinct: drop shared parts, then branch on the
    // smallest remaining part m. For m <= 2g-1 the Betti numbers at degree
    // m+1 separate the full products; otherwise every remaining part is
    // >= 2g, the Abel-Jacobi maps are projective bundles there, and the
    // fiber dimension multisets n_i - g separate.
    const auto [ra, rb] = strip_common_parts(a, b);
    const int min_remaining = std::min(ra.back(), rb.back());
    if (min_remaining <= 2 * g - 1) {
        const long long k = min_remaining + 1;
        Integer va = multi_sym_poincare(a, g).coeff(k);
        Integer vb = multi_sym_poincare(b, g).coeff(k);
        if (va != vb)
            return {CertKind::BettiDiffers,
                    BettiPayload{k, std::move(va), std::move(vb)}};
    } else {
        std::vector<int> da = fiber_dims(a, g);
        std::vector<int> db = fiber_dims(b, g);
        if (da != db)
            return {CertKind::FiberMultiproj,
                    FiberPayload{std::move(da), std::move(db)}};
    }
    // The primary invariant failed to differ; fall back to the full
    // polynomials before declaring a gap.
    return poly_diff_cert(multi_sym_poincare(a, g), multi_sym_poincare(b, g));
}

NonIsoCertificate multiproj_distinct(const std::vector<int>& dims_a,
                                     const std::vector<int>& dims_b) {
    if (dims_a.empty() || dims_b.empty())
        throw InvalidInput("multiproj_distinct: empty dimension list");
    if (dims_a.size() != dims_b.size())
        throw InvalidInput("multiproj_distinct: lengths differ");
    long long sum_a = 0, sum_b = 0;
    for (std::size_t i = 0; i < dims_a.size(); ++i) {
        if (dims_a[i] < 0 || dims_b[i] < 0)
            throw InvalidInput("multiproj_distinct: negative dimension");
        if (i > 0 && (dims_a[i - 1] < dims_a[i] || dims_b[i - 1] < dims_b[i]))
            throw InvalidInput("multiproj_distinct: dimensions must be non-increasing");
        sum_a += dims_a[i];
        sum_b += dims_b[i];
    }
    if (sum_a != sum_b)
        throw InvalidInput("multiproj_distinct: total dimensions differ");
    if (dims_a == dims_b)
        return {CertKind::EqualPartitions, EqualPartitionsPayload{}};
    return poly_diff_cert(multiproj_poincare(dims_a), multiproj_poincare(dims_b));
}

namespace {

struct PairOutcome {
    NonIsoCertificate cert;
    std::string error; // non-empty when distinguish raised Indistinguishable
};

ClassificationReport assemble(int n, int g, std::vector<Partition> partitions,
                              std::vector<PairOutcome>& outcomes,
                              const std::vector<std::pair<int, int>>& pairs) {
    ClassificationReport report;
    report.n = n;
    report.genus = g;
    report.partitions = std::move(partitions);
    report.certificates.reserve(pairs.size());
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        if (!outcomes[t].error.empty())
            throw Indistinguishable(
                "classify: pair (" + std::to_string(pairs[t].first) + ", " +
                std::to_string(pairs[t].second) + ") of n=" + std::to_string(n) +
                ", g=" + std::to_string(g) + ": " + outcomes[t].error);
        report.certificates.push_back(
            {pairs[t].first, pairs[t].second, std::move(outcomes[t].cert)});
    }
    // Every unordered pair carries a non-isomorphism witness, so the
    // partitions are pairwise non-isomorphic and the count is p(n).
    report.count = static_cast<long>(report.partitions.size());
    return report;
}

} // namespace

ClassificationReport classify_hilbert_schemes(int n, int g, Exec exec) {
    if (g < 0)
        throw InvalidInput("classify_hilbert_schemes: genus must be non-negative");
    std::vector<Partition> partitions = enumerate_partitions(n);
    const int m = static_cast<int>(partitions.size());

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            pairs.emplace_back(i, j);

    std::vector<PairOutcome> outcomes(pairs.size());
    if (exec == Exec::Serial) {
        for (std::size_t t = 0; t < pairs.size(); ++t) {
            outcomes[t].cert =
                distinguish(partitions[pairs[t].first], partitions[pairs[t].second], g);
        }
    } else {
        // Pair evaluations are independent and each writes only its own
        // slot; exceptions must not cross the parallel region, so they are
        // recorded per pair and rethrown in pair-index order afterwards.
        const long long total = static_cast<long long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16)
        for (long long t = 0; t < total; ++t) {
            const auto [i, j] = pairs[static_cast<std::size_t>(t)];
            try {
                outcomes[static_cast<std::size_t>(t)].cert =
                    distinguish(partitions[i], partitions[j], g);
            } catch (const Indistinguishable& e) {
                outcomes[static_cast<std::size_t>(t)].error = e.what();
            }
        }
    }
    return assemble(n, g, std::move(partitions), outcomes, pairs);
}

} // namespace symprod
