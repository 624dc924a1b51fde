#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace jcs {

/// Independent random substream keyed by (seed, stream index). Two streams
/// with the same key produce the same sequence on every run and thread.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream);

    double uniform();  // in [0, 1)
    double normal();   // standard normal
    /// Circularly-symmetric complex Gaussian with E|h|^2 = variance.
    std::complex<double> complex_normal(double variance);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace jcs
