// Acceptance suite: one line per criterion, PASS/FAIL with elapsed time.
// Every assertion is exact integer equality; the runtime budgets are part
// of the criteria and are enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cert_check.hpp"
#include "symprod/distinguisher.hpp"
#include "symprod/ind_divisors.hpp"
#include "symprod/partitions.hpp"
#include "symprod/poincare.hpp"

using namespace symprod;
using symprod::testing::audit_certificate;

namespace {

struct Criterion {
    int id;
    const char* label;
    double seconds_limit;
    std::function<bool(std::string&)> body;
};

bool expect(bool cond, std::string& detail, const std::string& msg) {
    if (!cond && detail.empty())
        detail = msg;
    return cond;
}

// Schoolbook convolution, independent of poly_mul.
std::vector<Integer> convolve(const std::vector<Integer>& a,
                              const std::vector<Integer>& b) {
    std::vector<Integer> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// ---- criterion 1: golden coefficients, symbolic in g, evaluated at 1..3 ---

bool golden_coefficients(std::string& detail) {
    bool ok = true;
    for (int g = 1; g <= 3; ++g) {
        const Integer c2g2 = binomial(2 * g, 2);
        const Integer c2g3 = binomial(2 * g, 3);
        const Integer g3 = Integer(g) * g * g;

        ok &= expect(multi_sym_poincare(Partition({4, 1}), g).coeff(2) ==
                         2 + 4 * g * g + c2g2,
                     detail, "x^2 of (4,1) at g=" + std::to_string(g));
        ok &= expect(multi_sym_poincare(Partition({3, 2}), g).coeff(2) ==
                         2 + 4 * g * g + 2 * c2g2,
                     detail, "x^2 of (3,2) at g=" + std::to_string(g));
        ok &= expect(multi_sym_poincare(Partition({5, 4, 2}), g).coeff(3) ==
                         18 * g + 8 * g3 + 12 * g * c2g2 + 2 * c2g3,
                     detail, "x^3 of (5,4,2) at g=" + std::to_string(g));
        ok &= expect(multi_sym_poincare(Partition({4, 4, 3}), g).coeff(3) ==
                         18 * g + 8 * g3 + 12 * g * c2g2 + 3 * c2g3,
                     detail, "x^3 of (4,4,3) at g=" + std::to_string(g));
        ok &= expect(multi_sym_poincare(Partition({12, 2}), g).coeff(3) ==
                         8 * g + 4 * g * c2g2 + c2g3,
                     detail, "x^3 of (12,2) at g=" + std::to_string(g));

        // (8,6): the convolution oracle gives 8g + 4g C(2g,2) + 2 C(2g,3).
        // The widely quoted closed form with 2g C(2g,3) disagrees for
        // g >= 2; the oracle is authoritative and ships.
        const auto conv = convolve(sym_poincare(8, g).coeffs(),
                                   sym_poincare(6, g).coeffs());
        const Integer oracle86 = conv[3];
        ok &= expect(oracle86 == 8 * g + 4 * g * c2g2 + 2 * c2g3, detail,
                     "x^3 of (8,6) oracle form at g=" + std::to_string(g));
        ok &= expect(multi_sym_poincare(Partition({8, 6}), g).coeff(3) == oracle86,
                     detail, "x^3 of (8,6) vs oracle at g=" + std::to_string(g));
        if (g >= 2)
            ok &= expect(oracle86 != 8 * g + 4 * g * c2g2 + 2 * g * c2g3, detail,
                         "(8,6) discrepant closed form not matched at g=" +
                             std::to_string(g));
        // Downstream separation: (8,6) vs (12,2) differ at x^3 by C(2g,3).
        ok &= expect(oracle86 - multi_sym_poincare(Partition({12, 2}), g).coeff(3) ==
                         c2g3,
                     detail, "(8,6)-(12,2) x^3 difference at g=" + std::to_string(g));
    }
    return ok;
}

// ---- criterion 2: classification sweep with certificate audit ------------

bool classification_sweep(std::string& detail) {
    bool ok = true;
    for (int n = 1; n <= 12; ++n)
        for (int g = 0; g <= 3; ++g) {
            const auto report = classify_hilbert_schemes(n, g);
            ok &= expect(report.count == partition_count(n), detail,
                         "count != p(n) at n=" + std::to_string(n) +
                             ", g=" + std::to_string(g));
            for (const auto& pc : report.certificates) {
                const auto audit = audit_certificate(report.partitions[pc.i],
                                                     report.partitions[pc.j], g,
                                                     pc.cert);
                ok &= expect(audit.ok && pc.cert.kind != CertKind::EqualPartitions,
                             detail,
                             "unsound certificate at n=" + std::to_string(n) +
                                 ", g=" + std::to_string(g) + ": " + audit.detail);
            }
        }
    return ok;
}

// ---- criterion 3: n = 1, 2, 3 for any genus -------------------------------

bool small_n_any_genus(std::string& detail) {
    bool ok = true;
    for (int n = 1; n <= 3; ++n)
        for (int g = 0; g <= 5; ++g) {
            const auto report = classify_hilbert_schemes(n, g);
            ok &= expect(report.count == partition_count(n), detail,
                         "count != p(n) at n=" + std::to_string(n));
            // No two partitions of 1, 2, 3 share a length.
            for (std::size_t i = 0; i < report.partitions.size(); ++i)
                for (std::size_t j = i + 1; j < report.partitions.size(); ++j)
                    ok &= expect(report.partitions[i].length() !=
                                     report.partitions[j].length(),
                                 detail, "equal lengths at n=" + std::to_string(n));
        }
    return ok;
}

// ---- criterion 4: palindromy and equal summands ---------------------------

bool macdonald_properties(std::string& detail) {
    bool ok = true;
    for (int n = 1; n <= 20 && ok; ++n)
        for (int g = 0; g <= 5 && ok; ++g)
            for (long long r = 0; r <= 2 * n; ++r)
                ok &= expect(macdonald_betti(n, g, r) ==
                                 macdonald_betti(n, g, 2 * n - r),
                             detail, "palindromy fails");
    for (int n = 1; n <= 20 && ok; ++n)
        for (int m = n + 1; m <= 20 && ok; ++m)
            for (int g = 0; g <= 5 && ok; ++g)
                for (long long i = 0; i <= n; ++i)
                    ok &= expect(macdonald_betti(m, g, i) ==
                                     macdonald_betti(n, g, i),
                                 detail, "equal summands fail");
    return ok;
}

// ---- criterion 5: genus-0 collapse + certificate routing ------------------

bool genus_zero_collapse(std::string& detail) {
    bool ok = true;
    for (int n = 1; n <= 30; ++n) {
        const auto p = sym_poincare(n, 0);
        ok &= expect(p.degree() == 2 * n, detail, "genus-0 degree");
        for (long long k = 0; k <= 2 * n; ++k)
            ok &= expect(p.coeff(k) == (k % 2 == 0 ? 1 : 0), detail,
                         "genus-0 coefficient");
    }
    for (int n = 1; n <= 12; ++n) {
        const auto report = classify_hilbert_schemes(n, 0);
        for (const auto& pc : report.certificates)
            ok &= expect(pc.cert.kind == CertKind::PicardRankDiffers ||
                             pc.cert.kind == CertKind::PolynomialDiffers,
                         detail, "non genus-0 certificate kind at n=" +
                                     std::to_string(n));
    }
    return ok;
}

// ---- criterion 6: projective-bundle factorization -------------------------

bool projective_bundle_check(std::string& detail) {
    bool ok = true;
    for (int g = 0; g <= 4; ++g) {
        std::vector<Integer> row(static_cast<std::size_t>(2 * g) + 1);
        for (int i = 0; i <= 2 * g; ++i)
            row[static_cast<std::size_t>(i)] = binomial(2 * g, i);
        for (int d = std::max(1, 2 * g - 1); d <= 30; ++d) {
            std::vector<Integer> series(static_cast<std::size_t>(2 * (d - g)) + 1);
            for (int i = 0; i <= d - g; ++i)
                series[static_cast<std::size_t>(2 * i)] = 1;
            ok &= expect(PoincarePolynomial(convolve(row, series)) ==
                             sym_poincare(d, g),
                         detail,
                         "factorization fails at g=" + std::to_string(g) +
                             ", d=" + std::to_string(d));
        }
    }
    return ok;
}

// ---- criterion 7: multiprojective separation ------------------------------

bool multiproj_separation(std::string& detail) {
    bool ok = true;
    for (int n = 1; n <= 18; ++n) {
        const auto partitions = enumerate_partitions(n);
        for (std::size_t i = 0; i < partitions.size(); ++i)
            for (std::size_t j = i + 1; j < partitions.size(); ++j) {
                if (partitions[i].length() != partitions[j].length())
                    continue;
                ok &= expect(multiproj_poincare(partitions[i].parts()) !=
                                 multiproj_poincare(partitions[j].parts()),
                             detail,
                             "equal polynomials at n=" + std::to_string(n));
            }
    }
    return ok;
}

// ---- criterion 8: divisor degree bookkeeping ------------------------------

bool divisor_bookkeeping(std::string& detail) {
    bool ok = true;
    for (int r = 1; r <= 5; ++r) {
        for (long long k = -10; k <= 10; ++k) {
            const long long d0 = wpp_threshold(r, k);
            for (long long d = d0; d <= d0 + 20; ++d) {
                const long long torsion = quot_degree(r, -r * k, d);
                ok &= expect(torsion == r * (d - k) && torsion > 0 &&
                                 wpp_hypothesis(r, torsion),
                             detail, "wpp threshold fails");
            }
            if (k >= 0)
                ok &= expect(!wpp_hypothesis(r, quot_degree(r, -r * k, k)), detail,
                             "degree-0 constituent accepted");
        }
        for (long long n = -10; n <= 10; ++n)
            for (long long d1 = 0; d1 <= 6; ++d1)
                for (long long d2 = d1; d2 <= 6; ++d2)
                    ok &= expect(quot_degree(r, n, d2) - quot_degree(r, n, d1) ==
                                     r * (d2 - d1),
                                 detail, "linearity fails");
    }
    for (long long n = -10; n <= 10; ++n)
        for (long long d = dp_threshold(n); d <= dp_threshold(n) + 20; ++d)
            ok &= expect(quot_degree(1, -n, d) >= 1, detail, "dp constituent fails");
    for (int r = 1; r <= 10; ++r)
        for (long long n = -30; n <= 30; ++n)
            ok &= expect(slope({r, n}).is_integral() == (n % r == 0), detail,
                         "slope integrality fails");
    for (int r = 1; r <= 5; ++r)
        for (long long n = -10; n <= 10; ++n)
            for (long long d = 0; d <= 12; ++d)
                ok &= expect(quasi_iso_degree(r, n, d) == quot_degree(r, -n, d),
                             detail, "quasi-isomorphism degree mismatch");
    for (int r = 1; r <= 5; ++r)
        for (long long d = -12; d <= 12; ++d)
            ok &= expect(wpp_hypothesis(r, d) == (d > 0 && d % r == 0), detail,
                         "wpp hypothesis mismatch");
    return ok;
}

// ---- criterion 9: composition sums vs convolution -------------------------

bool convolution_consistency(std::string& detail) {
    bool ok = true;
    for (int n = 1; n <= 10; ++n)
        for (int g = 0; g <= 3; ++g)
            for (const Partition& p : enumerate_partitions(n)) {
                const auto poly = multi_sym_poincare(p, g);
                for (long long k = 0; k <= 2 * n; ++k)
                    ok &= expect(composition_coefficient(p, g, k) == poly.coeff(k),
                                 detail,
                                 "composition mismatch at n=" + std::to_string(n) +
                                     ", g=" + std::to_string(g) +
                                     ", k=" + std::to_string(k));
            }
    return ok;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "golden multi symmetric coefficients at g in {1,2,3}", 1.0,
         golden_coefficients},
        {2, "classification count p(n) with audited certificates, n <= 12, g <= 3",
         60.0, classification_sweep},
        {3, "n in {1,2,3} classified for g <= 5, lengths pairwise distinct", 1.0,
         small_n_any_genus},
        {4, "palindromy and equal-summands, n,m <= 20, g <= 5", 5.0,
         macdonald_properties},
        {5, "genus-0 collapse and certificate routing", 1.0, genus_zero_collapse},
        {6, "projective-bundle factorization, g <= 4, d <= 30", 2.0,
         projective_bundle_check},
        {7, "multiprojective separation, n <= 18", 30.0, multiproj_separation},
        {8, "divisor degree bookkeeping grids", 1.0, divisor_bookkeeping},
        {9, "composition sums match convolution, n <= 10, g <= 3", 10.0,
         convolution_consistency},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        const bool in_time = dt < c.seconds_limit;
        const bool pass = ok && in_time;
        std::printf("%s  %d  %-70s %7.3fs (limit %gs)%s%s\n", pass ? "PASS" : "FAIL",
                    c.id, c.label, dt, c.seconds_limit,
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!pass)
            ++failures;
    }
    if (failures == 0)
        std::printf("all %zu acceptance criteria pass\n", criteria.size());
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
