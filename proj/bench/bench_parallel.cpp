// Timing comparison of the serial reference kernels against the OpenMP
// ones: dense exact convolution and the pairwise classification sweep.
// Both variants produce identical results; correctness of that claim is a
// test, this binary only measures.

#include <iostream>
#include <omp.h>

#include "symprod/distinguisher.hpp"
#include "symprod/poincare.hpp"

using namespace symprod;

namespace {

double time_once(const char* label, const char* variant, auto&& fn) {
    const double t0 = omp_get_wtime();
    fn();
    const double dt = omp_get_wtime() - t0;
    std::cout << "  " << label << " [" << variant << "]: " << dt << " s\n";
    return dt;
}

} // namespace

int main() {
    std::cout << "OpenMP max threads: " << omp_get_max_threads() << "\n";

    {
        const PoincarePolynomial p = sym_poincare(1500, 9);
        const PoincarePolynomial q = sym_poincare(1200, 9);
        std::cout << "poly_mul, degrees " << p.degree() << " x " << q.degree()
                  << ":\n";
        PoincarePolynomial a, b;
        const double ts =
            time_once("convolution", "serial", [&] { a = poly_mul_serial(p, q); });
        const double tp =
            time_once("convolution", "openmp", [&] { b = poly_mul_parallel(p, q); });
        std::cout << "  equal: " << (a == b ? "yes" : "NO") << ", speedup "
                  << ts / tp << "x\n";
    }

    {
        const int n = 16, g = 2;
        std::cout << "classify n=" << n << ", g=" << g << ":\n";
        ClassificationReport ra, rb;
        const double ts = time_once("classify", "serial", [&] {
            ra = classify_hilbert_schemes(n, g, Exec::Serial);
        });
        const double tp = time_once("classify", "openmp", [&] {
            rb = classify_hilbert_schemes(n, g, Exec::Parallel);
        });
        std::cout << "  pairs: " << ra.certificates.size() << ", count " << ra.count
                  << ", speedup " << ts / tp << "x\n";
    }
    return 0;
}
