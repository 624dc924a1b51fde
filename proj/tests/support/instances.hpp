#pragma once

#include <jcs/channel.hpp>
#include <jcs/rng.hpp>
#include <jcs/scenario.hpp>

#include <cstdint>

namespace testing_support {

struct Instance {
    jcs::SystemParams params;
    jcs::ChannelRealization gains;
};

// Draw k of a reproducible family: default geometry, one fading draw, budget
// between 30 and 50 dB, FD and HD alternating.
inline Instance random_instance(std::uint64_t k, std::uint64_t seed = 2024) {
    jcs::RandomStream rs(seed, k);
    jcs::Scenario sc = jcs::paper_defaults();
    Instance in;
    in.params = jcs::with_mode(sc.params, k % 2 ? jcs::DuplexMode::HD : jcs::DuplexMode::FD);
    in.params.p_max = jcs::db_to_linear(30.0 + 20.0 * rs.uniform());
    in.params.p_com = in.params.p_sen = 0.5 * in.params.p_max;
    const jcs::LinkVariances v = jcs::derive_variances(in.params, sc.geometry);
    in.gains = jcs::sample(v, rs);
    return in;
}

}  // namespace testing_support
