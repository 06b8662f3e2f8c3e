#ifndef SYMPROD_POINCARE_HPP
#define SYMPROD_POINCARE_HPP

#include <vector>

#include "symprod/common.hpp"
#include "symprod/partitions.hpp"

namespace symprod {

/* Poincare polynomial of a space: dense vector of Betti numbers indexed by
 * cohomological degree. Degrees stay small (2n for Sym^n of a curve) while
 * coefficients grow without bound, so the representation is a dense vector
 * of exact integers with the trailing coefficient nonzero (the zero
 * polynomial is the empty vector).
 */
class PoincarePolynomial {
public:
    PoincarePolynomial() = default; // zero polynomial

    /// Takes ownership of a coefficient vector; coefficients must be
    /// non-negative. Trailing zeros are trimmed.
    explicit PoincarePolynomial(std::vector<Integer> coeffs);

    static PoincarePolynomial one();

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the polynomial; -1 for the zero polynomial.
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

    const std::vector<Integer>& coeffs() const { return coeffs_; }

    /// Coefficient of x^k; zero outside the stored range.
    const Integer& coeff(long long k) const;

    bool operator==(const PoincarePolynomial&) const = default;

private:
    std::vector<Integer> coeffs_;
};

/// C(a, b) exactly; 0 when b < 0 or b > a. Throws InvalidInput for a < 0.
Integer binomial(long long a, long long b);

/// r-th Betti number of Sym^n(C) for a genus-g curve:
///   B_r = C(2g,r) + C(2g,r-2) + ...   for 0 <= r <= n,
/// with B_r = B_{2n-r} for r > n and B_r = 0 outside [0, 2n].
Integer macdonald_betti(int n, int g, long long r);

/// Poincare polynomial of Sym^n(C), degree 2n, palindromic.
PoincarePolynomial sym_poincare(int n, int g);

/// Exact convolution product (Kunneth: the Poincare polynomial of a product
/// of spaces is the product of their Poincare polynomials). poly_mul picks
/// the OpenMP kernel for large operands; both explicit kernels stay public
/// so tests and the benchmark can compare them.
PoincarePolynomial poly_mul(const PoincarePolynomial& p, const PoincarePolynomial& q);
PoincarePolynomial poly_mul_serial(const PoincarePolynomial& p, const PoincarePolynomial& q);
PoincarePolynomial poly_mul_parallel(const PoincarePolynomial& p, const PoincarePolynomial& q);

/// Poincare polynomial of Sym^{n_1}(C) x ... x Sym^{n_r}(C).
PoincarePolynomial multi_sym_poincare(const Partition& p, int g);

/// Poincare polynomial of P^{m_1} x ... x P^{m_s}: the product of the
/// truncated geometric series 1 + x^2 + ... + x^{2m}. Throws InvalidInput
/// for an empty list or a negative entry.
PoincarePolynomial multiproj_poincare(const std::vector<int>& dims);

/// Coefficient of x^k in the Poincare polynomial of the multi symmetric
/// product, computed by summing over compositions (t_1,...,t_r) of k the
/// products of the factor Betti numbers. Independent route checked against
/// multi_sym_poincare. Zero for k outside [0, 2n].
Integer composition_coefficient(const Partition& p, int g, long long k);

} // namespace symprod

#endif
