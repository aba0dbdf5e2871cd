// AVX2+FMA backend. Two complex doubles per 256-bit register,
// interleaved re/im. Compiled with -mavx2 -mfma; only reached when the
// dispatcher has confirmed CPU support.

#include "qadia/kernels.hpp"

#include <immintrin.h>

namespace qadia::kernels {
namespace {

// [x0r x0i x1r x1i] * [y0r y0i y1r y1i] as two complex products
inline __m256d cmul2(__m256d x, __m256d y) {
    __m256d yre = _mm256_movedup_pd(y);          // [y0r y0r y1r y1r]
    __m256d yim = _mm256_permute_pd(y, 0xF);     // [y0i y0i y1i y1i]
    __m256d t = _mm256_mul_pd(x, yim);           // [x0r*y0i x0i*y0i ..]
    t = _mm256_permute_pd(t, 0x5);               // [x0i*y0i x0r*y0i ..]
    return _mm256_fmaddsub_pd(x, yre, t);        // [x0r*y0r - x0i*y0i, x0i*y0r + x0r*y0i, ..]
}

inline __m256d broadcast_c(Complex a) {
    return _mm256_setr_pd(a.real(), a.imag(), a.real(), a.imag());
}

void v_axpy(Complex a, const Complex* x, Complex* y, std::size_t n) {
    const __m256d va = broadcast_c(a);
    std::size_t i = 0;
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(xp + 2 * i);
        __m256d vy = _mm256_loadu_pd(yp + 2 * i);
        vy = _mm256_add_pd(vy, cmul2(vx, va));
        _mm256_storeu_pd(yp + 2 * i, vy);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void v_scale(Complex a, Complex* x, std::size_t n) {
    const __m256d va = broadcast_c(a);
    std::size_t i = 0;
    double* xp = reinterpret_cast<double*>(x);
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(xp + 2 * i);
        _mm256_storeu_pd(xp + 2 * i, cmul2(vx, va));
    }
    for (; i < n; ++i) x[i] *= a;
}

void v_cmul(const Complex* a, Complex* y, std::size_t n) {
    std::size_t i = 0;
    const double* ap = reinterpret_cast<const double*>(a);
    double* yp = reinterpret_cast<double*>(y);
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(ap + 2 * i);
        __m256d vy = _mm256_loadu_pd(yp + 2 * i);
        _mm256_storeu_pd(yp + 2 * i, cmul2(vy, va));
    }
    for (; i < n; ++i) y[i] *= a[i];
}

Complex v_dotc(const Complex* x, const Complex* y, std::size_t n) {
    // conj(x)*y: re = xr*yr + xi*yi, im = xr*yi - xi*yr
    __m256d accre = _mm256_setzero_pd();
    __m256d accim = _mm256_setzero_pd();
    std::size_t i = 0;
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(xp + 2 * i);
        __m256d vy = _mm256_loadu_pd(yp + 2 * i);
        accre = _mm256_fmadd_pd(vx, vy, accre);                    // xr*yr, xi*yi pairs
        __m256d ysw = _mm256_permute_pd(vy, 0x5);                  // [y0i y0r ..]
        accim = _mm256_fmadd_pd(vx, ysw, accim);                   // xr*yi, xi*yr pairs
    }
    alignas(32) double re4[4], im4[4];
    _mm256_store_pd(re4, accre);
    _mm256_store_pd(im4, accim);
    double re = re4[0] + re4[1] + re4[2] + re4[3];
    double im = (im4[0] - im4[1]) + (im4[2] - im4[3]);
    for (; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

double v_norm2(const Complex* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    const double* xp = reinterpret_cast<const double*>(x);
    for (; i + 2 <= n; i += 2) {
        __m256d vx = _mm256_loadu_pd(xp + 2 * i);
        acc = _mm256_fmadd_pd(vx, vx, acc);
    }
    alignas(32) double a4[4];
    _mm256_store_pd(a4, acc);
    double s = a4[0] + a4[1] + a4[2] + a4[3];
    for (; i < n; ++i)
        s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return s;
}

void v_matvec(const Complex* a, const Complex* x, Complex* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = Complex{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) v_axpy(x[j], a + j * n, y, n);
}

void v_matvec_adj(const Complex* a, const Complex* x, Complex* y, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) y[j] = v_dotc(a + j * n, x, n);
}

void v_apply_1q(Complex* state, int nq, int target, const Complex* g) {
    const std::size_t dim = std::size_t{1} << nq;
    const std::size_t mask = std::size_t{1} << (target - 1);
    if (target == 1 || dim < 4) {
        // pairs are interleaved; scalar loop
        for (std::size_t i = 0; i < dim; ++i) {
            if (i & mask) continue;
            const std::size_t j = i | mask;
            const Complex a0 = state[i], a1 = state[j];
            state[i] = g[0] * a0 + g[1] * a1;
            state[j] = g[2] * a0 + g[3] * a1;
        }
        return;
    }
    const __m256d g00 = broadcast_c(g[0]), g01 = broadcast_c(g[1]);
    const __m256d g10 = broadcast_c(g[2]), g11 = broadcast_c(g[3]);
    double* sp = reinterpret_cast<double*>(state);
    for (std::size_t base = 0; base < dim; base += 2 * mask) {
        for (std::size_t k = 0; k < mask; k += 2) {
            const std::size_t i = base + k, j = base + k + mask;
            __m256d a0 = _mm256_loadu_pd(sp + 2 * i);
            __m256d a1 = _mm256_loadu_pd(sp + 2 * j);
            __m256d r0 = _mm256_add_pd(cmul2(a0, g00), cmul2(a1, g01));
            __m256d r1 = _mm256_add_pd(cmul2(a0, g10), cmul2(a1, g11));
            _mm256_storeu_pd(sp + 2 * i, r0);
            _mm256_storeu_pd(sp + 2 * j, r1);
        }
    }
}

void v_apply_2q(Complex* state, int nq, int t1, int t2, const Complex* g) {
    // index bookkeeping dominates; reuse the scalar reference
    scalar_vtable().apply_2q(state, nq, t1, t2, g);
}

} // namespace

const Vtable& avx2_vtable() {
    static const Vtable vt{v_axpy,   v_scale,      v_cmul,     v_dotc,    v_norm2,
                           v_matvec, v_matvec_adj, v_apply_1q, v_apply_2q};
    return vt;
}

} // namespace qadia::kernels
