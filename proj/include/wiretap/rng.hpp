#pragma once

// Counter-based deterministic random streams (SplitMix64). Substreams are
// derived by key mixing so each (seed, trial, role) triple owns an
// independent stream regardless of evaluation order.

#include "wiretap/types.hpp"

#include <cstdint>

namespace wiretap {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = seed;
    std::uint64_t k = splitmix64_next(s);
    s ^= a * 0xff51afd7ed558ccdULL;
    k ^= splitmix64_next(s);
    s ^= b * 0xc4ceb9fe1a85ec53ULL;
    k ^= splitmix64_next(s);
    return k;
}

class Rng {
  public:
    explicit Rng(std::uint64_t key) : state_(key) {}

    std::uint64_t next_u64() { return splitmix64_next(state_); }

    // Uniform in [0, 1) with 53 bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller (pairwise, cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    // Circularly-symmetric complex Gaussian with total variance var
    // (var/2 in each of the real and imaginary parts).
    Complex cnormal(double var = 1.0) {
        const double s = std::sqrt(0.5 * var);
        const double re = normal();
        const double im = normal();
        return {s * re, s * im};
    }

    Cmat cnormal_matrix(Eigen::Index rows, Eigen::Index cols, double var = 1.0) {
        Cmat M(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j) M(i, j) = cnormal(var);
        return M;
    }

  private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace wiretap
