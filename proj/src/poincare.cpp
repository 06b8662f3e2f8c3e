#include "symprod/poincare.hpp"

#include <algorithm>

namespace symprod {

PoincarePolynomial::PoincarePolynomial(std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
    for (const Integer& c : coeffs_)
        if (c < 0)
            throw InvalidInput("poincare polynomial: negative coefficient");
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

PoincarePolynomial PoincarePolynomial::one() {
    std::vector<Integer> c(1);
    c[0] = 1;
    return PoincarePolynomial(std::move(c));
}

const Integer& PoincarePolynomial::coeff(long long k) const {
    static const Integer zero = 0;
    if (k < 0 || k >= static_cast<long long>(coeffs_.size()))
        return zero;
    return coeffs_[static_cast<std::size_t>(k)];
}

Integer binomial(long long a, long long b) {
    if (a < 0)
        throw InvalidInput("binomial: a must be non-negative");
    if (b < 0 || b > a)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
                 static_cast<unsigned long>(b));
    return r;
}

Integer macdonald_betti(int n, int g, long long r) {
    if (n <= 0)
        throw InvalidInput("macdonald_betti: n must be positive");
    if (g < 0)
        throw InvalidInput("macdonald_betti: genus must be non-negative");
    if (r < 0 || r > 2LL * n)
        return 0;
    if (r > n)
        r = 2LL * n - r; // B_r = B_{2n-r}
    // Terms above 2g vanish; start at the largest index of the right parity.
    long long t0 = r;
    if (t0 > 2LL * g)
        t0 = 2LL * g - ((r - 2LL * g) % 2);
    Integer acc = 0;
    for (long long t = t0; t >= 0; t -= 2)
        acc += binomial(2LL * g, t);
    return acc;
}

PoincarePolynomial sym_poincare(int n, int g) {
    if (n <= 0)
        throw InvalidInput("sym_poincare: n must be positive");
    if (g < 0)
        throw InvalidInput("sym_poincare: genus must be non-negative");
    std::vector<Integer> coeffs(static_cast<std::size_t>(2 * n) + 1);
    // Fill the lower half and mirror: the polynomial is palindromic.
    for (int r = 0; r <= n; ++r) {
        coeffs[static_cast<std::size_t>(r)] = macdonald_betti(n, g, r);
        coeffs[static_cast<std::size_t>(2 * n - r)] = coeffs[static_cast<std::size_t>(r)];
    }
    return PoincarePolynomial(std::move(coeffs));
}

namespace {

// Reference kernel: plain loops, no pragmas. The OpenMP kernels are
// tested for equality against it.
std::vector<Integer> convolve_serial(const std::vector<Integer>& a,
                                     const std::vector<Integer>& b) {
    std::vector<Integer> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

std::vector<Integer> convolve_parallel(const std::vector<Integer>& a,
                                       const std::vector<Integer>& b) {
    const long long na = static_cast<long long>(a.size());
    const long long nb = static_cast<long long>(b.size());
    std::vector<Integer> out(static_cast<std::size_t>(na + nb - 1));
    // Each output degree is an independent dot product, so the loop carries
    // no state across iterations and the result matches the serial kernel
    // bit for bit.
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < na + nb - 1; ++k) {
        Integer acc = 0;
        const long long lo = std::max(0LL, k - nb + 1);
        const long long hi = std::min(k, na - 1);
        for (long long i = lo; i <= hi; ++i)
            acc += a[static_cast<std::size_t>(i)] *
                   b[static_cast<std::size_t>(k - i)];
        out[static_cast<std::size_t>(k)] = std::move(acc);
    }
    return out;
}

} // namespace

PoincarePolynomial poly_mul_serial(const PoincarePolynomial& p,
                                   const PoincarePolynomial& q) {
    if (p.is_zero() || q.is_zero())
        return {};
    return PoincarePolynomial(convolve_serial(p.coeffs(), q.coeffs()));
}

PoincarePolynomial poly_mul_parallel(const PoincarePolynomial& p,
                                     const PoincarePolynomial& q) {
    if (p.is_zero() || q.is_zero())
        return {};
    return PoincarePolynomial(convolve_parallel(p.coeffs(), q.coeffs()));
}

PoincarePolynomial poly_mul(const PoincarePolynomial& p,
                            const PoincarePolynomial& q) {
    // Thread startup costs more than the whole convolution for the small
    // polynomials that dominate this library's workloads.
    constexpr std::size_t kParallelThreshold = 4096;
    if (p.coeffs().size() * q.coeffs().size() >= kParallelThreshold)
        return poly_mul_parallel(p, q);
    return poly_mul_serial(p, q);
}

PoincarePolynomial multi_sym_poincare(const Partition& p, int g) {
    if (g < 0)
        throw InvalidInput("multi_sym_poincare: genus must be non-negative");
    PoincarePolynomial acc = PoincarePolynomial::one();
    for (int part : p.parts())
        acc = poly_mul(acc, sym_poincare(part, g));
    return acc;
}

PoincarePolynomial multiproj_poincare(const std::vector<int>& dims) {
    if (dims.empty())
        throw InvalidInput("multiproj_poincare: empty dimension list");
    PoincarePolynomial acc = PoincarePolynomial::one();
    for (int m : dims) {
        if (m < 0)
            throw InvalidInput("multiproj_poincare: negative dimension");
        std::vector<Integer> factor(static_cast<std::size_t>(2 * m) + 1);
        for (int i = 0; i <= m; ++i)
            factor[static_cast<std::size_t>(2 * i)] = 1;
        acc = poly_mul(acc, PoincarePolynomial(std::move(factor)));
    }
    return acc;
}

namespace {

// Sum over (t_pos, ..., t_r) with sum `remaining` of the products of
// factor Betti numbers, times the prefix product accumulated so far.
Integer composition_sum(const std::vector<int>& parts, int g, std::size_t pos,
                        long long remaining, const Integer& prefix) {
    if (pos + 1 == parts.size())
        return prefix * macdonald_betti(parts[pos], g, remaining);
    Integer acc = 0;
    const long long cap = std::min<long long>(remaining, 2LL * parts[pos]);
    for (long long t = 0; t <= cap; ++t) {
        Integer b = macdonald_betti(parts[pos], g, t);
        if (b == 0)
            continue;
        acc += composition_sum(parts, g, pos + 1, remaining - t, prefix * b);
    }
    return acc;
}

} // namespace

Integer composition_coefficient(const Partition& p, int g, long long k) {
    if (g < 0)
        throw InvalidInput("composition_coefficient: genus must be non-negative");
    if (k < 0 || k > 2LL * p.sum())
        return 0;
    return composition_sum(p.parts(), g, 0, k, 1);
}

} // namespace symprod
