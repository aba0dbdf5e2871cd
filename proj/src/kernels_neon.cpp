// NEON backend, one complex double per 128-bit register. Baseline on
// aarch64 so no runtime feature probe is needed beyond the platform.

#include "qadia/kernels.hpp"

#include <arm_neon.h>

namespace qadia::kernels {
namespace {

inline float64x2_t cmul1(float64x2_t x, float64x2_t y) {
    // (xr+ixi)(yr+iyi): re = xr*yr - xi*yi, im = xr*yi + xi*yr
    float64x2_t yre = vdupq_laneq_f64(y, 0);
    float64x2_t yim = vdupq_laneq_f64(y, 1);
    float64x2_t xsw = vextq_f64(x, x, 1);            // [xi xr]
    float64x2_t t = vmulq_f64(xsw, yim);             // [xi*yi xr*yi]
    t = vsetq_lane_f64(-vgetq_lane_f64(t, 0), t, 0); // [-xi*yi xr*yi]
    return vfmaq_f64(t, x, yre);
}

void n_axpy(Complex a, const Complex* x, Complex* y, std::size_t n) {
    const float64x2_t va = {a.real(), a.imag()};
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t vx = vld1q_f64(xp + 2 * i);
        float64x2_t vy = vld1q_f64(yp + 2 * i);
        vst1q_f64(yp + 2 * i, vaddq_f64(vy, cmul1(vx, va)));
    }
}

void n_scale(Complex a, Complex* x, std::size_t n) {
    const float64x2_t va = {a.real(), a.imag()};
    double* xp = reinterpret_cast<double*>(x);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t vx = vld1q_f64(xp + 2 * i);
        vst1q_f64(xp + 2 * i, cmul1(vx, va));
    }
}

void n_cmul(const Complex* a, Complex* y, std::size_t n) {
    const double* ap = reinterpret_cast<const double*>(a);
    double* yp = reinterpret_cast<double*>(y);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t va = vld1q_f64(ap + 2 * i);
        float64x2_t vy = vld1q_f64(yp + 2 * i);
        vst1q_f64(yp + 2 * i, cmul1(vy, va));
    }
}

Complex n_dotc(const Complex* x, const Complex* y, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

double n_norm2(const Complex* x, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    const double* xp = reinterpret_cast<const double*>(x);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t vx = vld1q_f64(xp + 2 * i);
        acc = vfmaq_f64(acc, vx, vx);
    }
    return vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
}

void n_matvec(const Complex* a, const Complex* x, Complex* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = Complex{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) n_axpy(x[j], a + j * n, y, n);
}

void n_matvec_adj(const Complex* a, const Complex* x, Complex* y, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) y[j] = n_dotc(a + j * n, x, n);
}

} // namespace

const Vtable& neon_vtable() {
    static const Vtable vt{n_axpy,
                           n_scale,
                           n_cmul,
                           n_dotc,
                           n_norm2,
                           n_matvec,
                           n_matvec_adj,
                           scalar_vtable().apply_1q,
                           scalar_vtable().apply_2q};
    return vt;
}

} // namespace qadia::kernels
