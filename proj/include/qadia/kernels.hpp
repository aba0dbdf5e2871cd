#pragma once

// Runtime-dispatched complex-double kernels for the hot inner loops:
// statevector gate application, dense matrix-vector products and the
// elementwise phase multiplies used by the spectral propagator.
//
// A scalar reference backend always exists; AVX2 (x86-64) and NEON
// (aarch64) variants are selected at startup from CPU capabilities and
// can be overridden with QADIA_KERNELS=scalar|avx2|neon or force().
// All backends are equivalence-tested against the scalar reference.

#include <complex>
#include <cstddef>

namespace qadia::kernels {

using Complex = std::complex<double>;

enum class Backend { Auto, Scalar, Avx2, Neon };

Backend active();
void force(Backend b);          // throws std::runtime_error if unsupported
const char* name(Backend b);

// y += a*x
void axpy(Complex a, const Complex* x, Complex* y, std::size_t n);
// x *= a
void scale(Complex a, Complex* x, std::size_t n);
// y[i] *= a[i]
void cmul_inplace(const Complex* a, Complex* y, std::size_t n);
// sum_i conj(x[i]) * y[i]
Complex dotc(const Complex* x, const Complex* y, std::size_t n);
// sum_i |x[i]|^2
double norm2(const Complex* x, std::size_t n);

// y = A x, A column-major n x n
void matvec(const Complex* a, const Complex* x, Complex* y, std::size_t n);
// y = A^dagger x, A column-major n x n
void matvec_adj(const Complex* a, const Complex* x, Complex* y, std::size_t n);

// In-place single-qubit gate on a 2^nq statevector. target is 1-based,
// qubit 1 = least significant bit. g is row-major 2x2.
void apply_1q(Complex* state, int nq, int target, const Complex* g);
// In-place two-qubit gate. g is row-major 4x4; gate bit 0 = t1, bit 1 = t2.
void apply_2q(Complex* state, int nq, int t1, int t2, const Complex* g);

// Backend function table. Scalar entries are always valid; SIMD
// translation units fill in their own table.
struct Vtable {
    void (*axpy)(Complex, const Complex*, Complex*, std::size_t);
    void (*scale)(Complex, Complex*, std::size_t);
    void (*cmul_inplace)(const Complex*, Complex*, std::size_t);
    Complex (*dotc)(const Complex*, const Complex*, std::size_t);
    double (*norm2)(const Complex*, std::size_t);
    void (*matvec)(const Complex*, const Complex*, Complex*, std::size_t);
    void (*matvec_adj)(const Complex*, const Complex*, Complex*, std::size_t);
    void (*apply_1q)(Complex*, int, int, const Complex*);
    void (*apply_2q)(Complex*, int, int, int, const Complex*);
};

const Vtable& scalar_vtable();
#if defined(QADIA_HAVE_AVX2_TU)
const Vtable& avx2_vtable();
#endif
#if defined(QADIA_HAVE_NEON_TU)
const Vtable& neon_vtable();
#endif

} // namespace qadia::kernels
