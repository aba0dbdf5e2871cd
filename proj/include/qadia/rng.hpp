#pragma once

// Deterministic, platform-independent RNG for seeded trials and suite
// reproducibility: xoshiro256++ seeded through splitmix64. std::
// distributions are avoided so byte-identical reports survive compiler
// or libstdc++ changes.

#include "qadia/types.hpp"

#include <cmath>
#include <cstdint>

namespace qadia {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : s_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        cached_ = r * std::sin(2.0 * M_PI * u2);
        have_cached_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    Complex cnormal() {
        const double re = normal();
        return {re, normal()};
    }

    Vector random_state_vector(Eigen::Index dim) {
        Vector v(dim);
        for (Eigen::Index i = 0; i < dim; ++i) v[i] = cnormal();
        v /= v.norm();
        return v;
    }

    Matrix random_hermitian(Eigen::Index dim) {
        Matrix a(dim, dim);
        for (Eigen::Index j = 0; j < dim; ++j)
            for (Eigen::Index i = 0; i < dim; ++i) a(i, j) = cnormal();
        return 0.5 * (a + Matrix(a.adjoint()));
    }

    Matrix random_unitary(Eigen::Index dim) {
        Matrix a(dim, dim);
        for (Eigen::Index j = 0; j < dim; ++j)
            for (Eigen::Index i = 0; i < dim; ++i) a(i, j) = cnormal();
        Eigen::HouseholderQR<Matrix> qr(a);
        Matrix q = qr.householderQ();
        Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (Eigen::Index i = 0; i < dim; ++i) {
            const Complex d = r(i, i);
            q.col(i) *= (d == Complex{0.0, 0.0}) ? 1.0 : d / std::abs(d);
        }
        return q;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4] = {};
    bool have_cached_ = false;
    double cached_ = 0.0;
};

} // namespace qadia
