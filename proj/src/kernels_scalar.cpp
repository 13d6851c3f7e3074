#include "abflux/kernels.hpp"

// Reference kernels.  Plain loops over std::complex; the AVX2 variants are
// checked against these.

namespace abflux::kernels::scalar {

void matvec(const cplx* a, const cplx* x, cplx* y, int n) {
    for (int i = 0; i < n; ++i) {
        const cplx* row = a + static_cast<std::size_t>(i) * n;
        cplx acc = 0.0;
        for (int j = 0; j < n; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) y[i] += alpha * x[i];
}

void matmul(const cplx* a, const cplx* b, cplx* c, int n) {
    const std::size_t nn = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < nn * nn; ++i) c[i] = 0.0;
    for (int i = 0; i < n; ++i) {
        cplx* ci = c + static_cast<std::size_t>(i) * n;
        const cplx* ai = a + static_cast<std::size_t>(i) * n;
        for (int k = 0; k < n; ++k) {
            axpy(ai[k], b + static_cast<std::size_t>(k) * n, ci, nn);
        }
    }
}

cplx dot(const cplx* x, const cplx* y, std::size_t len) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < len; ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

double norm_sq(const cplx* a, std::size_t len) {
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i) acc += std::norm(a[i]);
    return acc;
}

void phase_conjugate(const cplx* a, const cplx* p, cplx* b, int n) {
    for (int i = 0; i < n; ++i) {
        const cplx* ai = a + static_cast<std::size_t>(i) * n;
        cplx* bi = b + static_cast<std::size_t>(i) * n;
        for (int j = 0; j < n; ++j) bi[j] = p[i] * std::conj(p[j]) * ai[j];
    }
}

}  // namespace abflux::kernels::scalar
