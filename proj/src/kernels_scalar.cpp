#include "qadia/kernels.hpp"

namespace qadia::kernels {
namespace {

void s_axpy(Complex a, const Complex* x, Complex* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void s_scale(Complex a, Complex* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void s_cmul(const Complex* a, Complex* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] *= a[i];
}

Complex s_dotc(const Complex* x, const Complex* y, std::size_t n) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

double s_norm2(const Complex* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return acc;
}

void s_matvec(const Complex* a, const Complex* x, Complex* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = Complex{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) s_axpy(x[j], a + j * n, y, n);
}

void s_matvec_adj(const Complex* a, const Complex* x, Complex* y, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) y[j] = s_dotc(a + j * n, x, n);
}

void s_apply_1q(Complex* state, int nq, int target, const Complex* g) {
    const std::size_t dim = std::size_t{1} << nq;
    const std::size_t mask = std::size_t{1} << (target - 1);
    for (std::size_t i = 0; i < dim; ++i) {
        if (i & mask) continue;
        const std::size_t j = i | mask;
        const Complex a0 = state[i], a1 = state[j];
        state[i] = g[0] * a0 + g[1] * a1;
        state[j] = g[2] * a0 + g[3] * a1;
    }
}

void s_apply_2q(Complex* state, int nq, int t1, int t2, const Complex* g) {
    const std::size_t dim = std::size_t{1} << nq;
    const std::size_t m1 = std::size_t{1} << (t1 - 1);
    const std::size_t m2 = std::size_t{1} << (t2 - 1);
    for (std::size_t i = 0; i < dim; ++i) {
        if (i & (m1 | m2)) continue;
        const std::size_t i0 = i, i1 = i | m1, i2 = i | m2, i3 = i | m1 | m2;
        const Complex a0 = state[i0], a1 = state[i1], a2 = state[i2], a3 = state[i3];
        state[i0] = g[0] * a0 + g[1] * a1 + g[2] * a2 + g[3] * a3;
        state[i1] = g[4] * a0 + g[5] * a1 + g[6] * a2 + g[7] * a3;
        state[i2] = g[8] * a0 + g[9] * a1 + g[10] * a2 + g[11] * a3;
        state[i3] = g[12] * a0 + g[13] * a1 + g[14] * a2 + g[15] * a3;
    }
}

} // namespace

const Vtable& scalar_vtable() {
    static const Vtable vt{s_axpy,   s_scale,      s_cmul,     s_dotc,    s_norm2,
                           s_matvec, s_matvec_adj, s_apply_1q, s_apply_2q};
    return vt;
}

} // namespace qadia::kernels
