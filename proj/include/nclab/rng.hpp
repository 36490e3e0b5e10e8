#pragma once
//
// rng.hpp — seeded random source with a fixed gaussian recipe, so that suite
// output is reproducible bit-for-bit for a given seed.
//

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace nclab {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0,1)
    double uniform() {
        return (eng_() >> 11) * 0x1.0p-53;
    }

    // Box-Muller, cosine branch only (keeps the stream position predictable)
    double gaussian() {
        double u1 = uniform(), u2 = uniform();
        return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(6.283185307179586477 * u2);
    }

    std::complex<double> cgaussian() {
        double u1 = uniform(), u2 = uniform();
        double r = std::sqrt(-std::log1p(-u1));
        double th = 6.283185307179586477 * u2;
        return {r * std::cos(th), r * std::sin(th)};
    }

    std::uint64_t integer(std::uint64_t n) {  // uniform in [0, n)
        return eng_() % n;
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace nclab
