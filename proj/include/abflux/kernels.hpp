#pragma once

#include <cstddef>

#include "abflux/types.hpp"

// Data-parallel complex kernels used by the matrix builders, the norm
// estimators and the propagator inner loops.  Every kernel has a scalar
// reference implementation and (on x86-64) an AVX2/FMA variant; the active
// backend is selected once at runtime from CPU features.  The two backends
// agree to rounding (FMA contraction changes the last ulps); the equivalence
// tests pin the tolerance.

namespace abflux::kernels {

enum class Backend { scalar, avx2 };

// Backend currently used by the dispatched entry points below.
Backend active_backend();

// Force a specific backend (tests, benchmarking).  Returns false if the
// requested backend is not available on this machine.
bool force_backend(Backend b);

// Dispatched entry points.
// y = A x, A is n-by-n row-major.
void matvec(const cplx* a, const cplx* x, cplx* y, int n);
// C = A B, all n-by-n row-major.  C must not alias A or B.
void matmul(const cplx* a, const cplx* b, cplx* c, int n);
// y += alpha x
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t len);
// sum conj(x_i) y_i
cplx dot(const cplx* x, const cplx* y, std::size_t len);
// sum |a_i|^2
double norm_sq(const cplx* a, std::size_t len);
// b_mn = p_m conj(p_n) a_mn   (phase-frame conjugation, used for Q_tau)
void phase_conjugate(const cplx* a, const cplx* p, cplx* b, int n);

// Named backends, exposed for the equivalence tests.
namespace scalar {
void matvec(const cplx* a, const cplx* x, cplx* y, int n);
void matmul(const cplx* a, const cplx* b, cplx* c, int n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t len);
cplx dot(const cplx* x, const cplx* y, std::size_t len);
double norm_sq(const cplx* a, std::size_t len);
void phase_conjugate(const cplx* a, const cplx* p, cplx* b, int n);
}  // namespace scalar

#if defined(__x86_64__)
namespace avx2 {
void matvec(const cplx* a, const cplx* x, cplx* y, int n);
void matmul(const cplx* a, const cplx* b, cplx* c, int n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t len);
cplx dot(const cplx* x, const cplx* y, std::size_t len);
double norm_sq(const cplx* a, std::size_t len);
void phase_conjugate(const cplx* a, const cplx* p, cplx* b, int n);
}  // namespace avx2
#endif

// Convenience wrappers over CMatrix.
inline void matvec(const CMatrix& a, const cplx* x, cplx* y) { matvec(a.data(), x, y, a.dim()); }
inline void matmul(const CMatrix& a, const CMatrix& b, CMatrix& c) { matmul(a.data(), b.data(), c.data(), a.dim()); }

}  // namespace abflux::kernels
