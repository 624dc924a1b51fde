#include "jcs/rng.hpp"

#include <cmath>

namespace jcs {

namespace {

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      0x6a63735fu};
    return std::mt19937_64(seq);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream) : engine_(seeded(seed, stream)) {}

double RandomStream::uniform() { return uniform_(engine_); }

double RandomStream::normal() { return normal_(engine_); }

std::complex<double> RandomStream::complex_normal(double variance) {
    const double s = std::sqrt(0.5 * variance);
    const double re = normal();
    const double im = normal();
    return {s * re, s * im};
}

}  // namespace jcs
