#include "qadia/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qadia::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

bool cpu_has_neon() {
#if defined(__aarch64__)
    return true;
#else
    return false;
#endif
}

const Vtable* table_for(Backend b) {
    switch (b) {
    case Backend::Scalar: return &scalar_vtable();
    case Backend::Avx2:
#if defined(QADIA_HAVE_AVX2_TU)
        if (cpu_has_avx2()) return &avx2_vtable();
#endif
        return nullptr;
    case Backend::Neon:
#if defined(QADIA_HAVE_NEON_TU)
        if (cpu_has_neon()) return &neon_vtable();
#endif
        return nullptr;
    case Backend::Auto: break;
    }
    return nullptr;
}

Backend resolve_auto() {
    if (const char* env = std::getenv("QADIA_KERNELS")) {
        const std::string s(env);
        if (s == "scalar") return Backend::Scalar;
        if (s == "avx2" && table_for(Backend::Avx2)) return Backend::Avx2;
        if (s == "neon" && table_for(Backend::Neon)) return Backend::Neon;
    }
    if (table_for(Backend::Avx2)) return Backend::Avx2;
    if (table_for(Backend::Neon)) return Backend::Neon;
    return Backend::Scalar;
}

struct State {
    Backend backend;
    const Vtable* vt;
    State() : backend(resolve_auto()), vt(table_for(backend)) {
        if (!vt) { backend = Backend::Scalar; vt = &scalar_vtable(); }
    }
};

State& state() {
    static State s;
    return s;
}

} // namespace

Backend active() { return state().backend; }

void force(Backend b) {
    if (b == Backend::Auto) {
        state() = State{};
        return;
    }
    const Vtable* vt = table_for(b);
    if (!vt) throw std::runtime_error(std::string("kernel backend unavailable: ") + name(b));
    state().backend = b;
    state().vt = vt;
}

const char* name(Backend b) {
    switch (b) {
    case Backend::Auto: return "auto";
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
    }
    return "?";
}

void axpy(Complex a, const Complex* x, Complex* y, std::size_t n) { state().vt->axpy(a, x, y, n); }
void scale(Complex a, Complex* x, std::size_t n) { state().vt->scale(a, x, n); }
void cmul_inplace(const Complex* a, Complex* y, std::size_t n) { state().vt->cmul_inplace(a, y, n); }
Complex dotc(const Complex* x, const Complex* y, std::size_t n) { return state().vt->dotc(x, y, n); }
double norm2(const Complex* x, std::size_t n) { return state().vt->norm2(x, n); }
void matvec(const Complex* a, const Complex* x, Complex* y, std::size_t n) { state().vt->matvec(a, x, y, n); }
void matvec_adj(const Complex* a, const Complex* x, Complex* y, std::size_t n) { state().vt->matvec_adj(a, x, y, n); }
void apply_1q(Complex* s, int nq, int t, const Complex* g) { state().vt->apply_1q(s, nq, t, g); }
void apply_2q(Complex* s, int nq, int t1, int t2, const Complex* g) { state().vt->apply_2q(s, nq, t1, t2, g); }

} // namespace qadia::kernels
