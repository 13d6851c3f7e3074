#include "abflux/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

// AVX2/FMA kernels.  Layout: interleaved re/im, two complex doubles per
// __m256d.  Complex products are formed with the movedup / permute /
// fmaddsub sequence; accumulating loops keep separate "real-lane" and
// "imag-lane" partial sums so the inner loop is two FMAs per vector, and
// the addsub combine happens once at the end.

namespace abflux::kernels::avx2 {

namespace {

inline __m256d neg(__m256d v) {
    return _mm256_sub_pd(_mm256_setzero_pd(), v);
}

// [a0r*b0r - a0i*b0i, a0r*b0i + a0i*b0r, ...] for two complex pairs
inline __m256d cmul(__m256d a, __m256d b) {
    __m256d a_re = _mm256_movedup_pd(a);
    __m256d a_im = _mm256_permute_pd(a, 0xF);
    __m256d b_sw = _mm256_permute_pd(b, 0x5);
    return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_sw));
}

inline cplx reduce_pairs(__m256d v) {
    // (v0 + v2, v1 + v3)
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    alignas(16) double out[2];
    _mm_store_pd(out, s);
    return {out[0], out[1]};
}

}  // namespace

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t len) {
    const __m256d al = _mm256_setr_pd(alpha.real(), alpha.imag(), alpha.real(), alpha.imag());
    const __m256d al_re = _mm256_movedup_pd(al);
    const __m256d al_im = _mm256_permute_pd(al, 0xF);
    std::size_t i = 0;
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    for (; i + 2 <= len; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        __m256d x_sw = _mm256_permute_pd(xv, 0x5);
        __m256d prod = _mm256_fmaddsub_pd(al_re, xv, _mm256_mul_pd(al_im, x_sw));
        _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(yv, prod));
    }
    for (; i < len; ++i) y[i] += alpha * x[i];
}

void matvec(const cplx* a, const cplx* x, cplx* y, int n) {
    const double* xp = reinterpret_cast<const double*>(x);
    for (int i = 0; i < n; ++i) {
        const double* row = reinterpret_cast<const double*>(a + static_cast<std::size_t>(i) * n);
        __m256d acc_r = _mm256_setzero_pd();
        __m256d acc_i = _mm256_setzero_pd();
        int j = 0;
        for (; j + 2 <= n; j += 2) {
            __m256d av = _mm256_loadu_pd(row + 2 * j);
            __m256d xv = _mm256_loadu_pd(xp + 2 * j);
            __m256d a_re = _mm256_movedup_pd(av);
            __m256d a_im = _mm256_permute_pd(av, 0xF);
            __m256d x_sw = _mm256_permute_pd(xv, 0x5);
            acc_r = _mm256_fmadd_pd(a_re, xv, acc_r);
            acc_i = _mm256_fmadd_pd(a_im, x_sw, acc_i);
        }
        cplx acc = reduce_pairs(_mm256_addsub_pd(acc_r, acc_i));
        for (; j < n; ++j) acc += a[static_cast<std::size_t>(i) * n + j] * x[j];
        y[i] = acc;
    }
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
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    __m256d acc_r = _mm256_setzero_pd();
    __m256d acc_i = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        __m256d x_re = _mm256_movedup_pd(xv);
        __m256d x_im = _mm256_permute_pd(xv, 0xF);
        __m256d y_sw = _mm256_permute_pd(yv, 0x5);
        acc_r = _mm256_fmadd_pd(x_re, yv, acc_r);
        acc_i = _mm256_fmadd_pd(x_im, y_sw, acc_i);
    }
    // even lanes: xr yr + xi yi, odd lanes: xr yi - xi yr
    cplx acc = reduce_pairs(_mm256_addsub_pd(acc_r, neg(acc_i)));
    for (; i < len; ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

double norm_sq(const cplx* a, std::size_t len) {
    const double* ap = reinterpret_cast<const double*>(a);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        __m256d av = _mm256_loadu_pd(ap + 2 * i);
        acc = _mm256_fmadd_pd(av, av, acc);
    }
    cplx pair = reduce_pairs(acc);
    double out = pair.real() + pair.imag();
    for (; i < len; ++i) out += std::norm(a[i]);
    return out;
}

void phase_conjugate(const cplx* a, const cplx* p, cplx* b, int n) {
    const double* pp = reinterpret_cast<const double*>(p);
    for (int i = 0; i < n; ++i) {
        const double* ai = reinterpret_cast<const double*>(a + static_cast<std::size_t>(i) * n);
        double* bi = reinterpret_cast<double*>(b + static_cast<std::size_t>(i) * n);
        const __m256d w = _mm256_setr_pd(p[i].real(), p[i].imag(), p[i].real(), p[i].imag());
        const __m256d w_re = _mm256_movedup_pd(w);
        const __m256d w_im = _mm256_permute_pd(w, 0xF);
        int j = 0;
        for (; j + 2 <= n; j += 2) {
            __m256d av = _mm256_loadu_pd(ai + 2 * j);
            __m256d pv = _mm256_loadu_pd(pp + 2 * j);
            // t = conj(p_j) * a_ij
            __m256d p_re = _mm256_movedup_pd(pv);
            __m256d p_im = _mm256_permute_pd(pv, 0xF);
            __m256d a_sw = _mm256_permute_pd(av, 0x5);
            __m256d t = _mm256_addsub_pd(_mm256_mul_pd(p_re, av), neg(_mm256_mul_pd(p_im, a_sw)));
            // b = w * t
            __m256d t_sw = _mm256_permute_pd(t, 0x5);
            _mm256_storeu_pd(bi + 2 * j, _mm256_fmaddsub_pd(w_re, t, _mm256_mul_pd(w_im, t_sw)));
        }
        for (; j < n; ++j)
            b[static_cast<std::size_t>(i) * n + j] = p[i] * std::conj(p[j]) * a[static_cast<std::size_t>(i) * n + j];
    }
}

}  // namespace abflux::kernels::avx2

#endif  // __x86_64__
