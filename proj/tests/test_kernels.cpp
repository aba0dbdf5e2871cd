#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qadia/kernels.hpp"
#include "qadia/rng.hpp"

#include <vector>

using namespace qadia;
namespace k = qadia::kernels;

namespace {

std::vector<Complex> random_array(Rng& rng, std::size_t n) {
    std::vector<Complex> v(n);
    for (auto& x : v) x = rng.cnormal();
    return v;
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

bool have_simd() { return k::active() != k::Backend::Scalar; }

} // namespace

TEST_CASE("active backend resolves") {
    CHECK(k::name(k::active()) != nullptr);
}

TEST_CASE("simd backends match the scalar reference") {
    if (!have_simd()) return; // scalar-only host
    const k::Backend simd = k::active();
    Rng rng(42);
    for (std::size_t n : {1u, 2u, 3u, 8u, 17u, 64u, 129u}) {
        const auto x = random_array(rng, n);
        auto y1 = random_array(rng, n);
        auto y2 = y1;
        const Complex alpha = rng.cnormal();

        k::force(k::Backend::Scalar);
        k::axpy(alpha, x.data(), y1.data(), n);
        const Complex dot1 = k::dotc(x.data(), y1.data(), n);
        const double n1 = k::norm2(y1.data(), n);

        k::force(simd);
        k::axpy(alpha, x.data(), y2.data(), n);
        const Complex dot2 = k::dotc(x.data(), y2.data(), n);
        const double n2 = k::norm2(y2.data(), n);

        CHECK(max_diff(y1, y2) < 1e-12);
        CHECK(std::abs(dot1 - dot2) < 1e-10 * (1.0 + std::abs(dot1)));
        CHECK(std::abs(n1 - n2) < 1e-10 * (1.0 + n1));
    }
    k::force(k::Backend::Auto);
}

TEST_CASE("matvec equivalence and correctness") {
    Rng rng(7);
    const std::size_t n = 24;
    const auto a = random_array(rng, n * n);
    const auto x = random_array(rng, n);
    std::vector<Complex> y_ref(n), y(n), yadj_ref(n), yadj(n);

    k::force(k::Backend::Scalar);
    k::matvec(a.data(), x.data(), y_ref.data(), n);
    k::matvec_adj(a.data(), x.data(), yadj_ref.data(), n);

    // hand oracle
    std::vector<Complex> oracle(n, Complex{0, 0});
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) oracle[i] += a[j * n + i] * x[j];
    CHECK(max_diff(y_ref, oracle) < 1e-12);

    if (have_simd()) {
        k::force(k::Backend::Auto);
        k::matvec(a.data(), x.data(), y.data(), n);
        k::matvec_adj(a.data(), x.data(), yadj.data(), n);
        CHECK(max_diff(y_ref, y) < 1e-11);
        CHECK(max_diff(yadj_ref, yadj) < 1e-11);
    }
}

TEST_CASE("gate kernels match dense application across backends and targets") {
    Rng rng(11);
    const int nq = 5;
    const std::size_t dim = std::size_t{1} << nq;
    const auto base = random_array(rng, dim);
    const Complex h = 1.0 / std::sqrt(2.0);
    const Complex gate1[4] = {h, h, h, -h};
    Complex gate2[16] = {};
    // CZ
    for (int i = 0; i < 4; ++i) gate2[4 * i + i] = 1.0;
    gate2[15] = -1.0;

    for (int target = 1; target <= nq; ++target) {
        auto s_scalar = base;
        k::force(k::Backend::Scalar);
        k::apply_1q(s_scalar.data(), nq, target, gate1);
        if (have_simd()) {
            auto s_simd = base;
            k::force(k::Backend::Auto);
            k::apply_1q(s_simd.data(), nq, target, gate1);
            CHECK(max_diff(s_scalar, s_simd) < 1e-12);
        }
        // norm preserved by a unitary gate
        k::force(k::Backend::Auto);
        CHECK(k::norm2(s_scalar.data(), dim) ==
              doctest::Approx(k::norm2(base.data(), dim)).epsilon(1e-12));
    }

    auto s2 = base;
    k::apply_2q(s2.data(), nq, 2, 4, gate2);
    // CZ is diagonal: only signs flip where both bits set
    for (std::size_t i = 0; i < dim; ++i) {
        const bool both = (i & 2u) && (i & 8u);
        CHECK(s2[i] == (both ? -base[i] : base[i]));
    }
}

TEST_CASE("force rejects unavailable backends gracefully") {
#if !defined(__aarch64__)
    CHECK_THROWS_AS(k::force(k::Backend::Neon), std::runtime_error);
#endif
    k::force(k::Backend::Auto);
}
