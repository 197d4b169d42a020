#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace ojam {

/// Philox4x32-10 block function (Salmon et al., SC'11). Maps a 128-bit counter
/// and a 64-bit key to 128 pseudo-random bits.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Independent substreams of one Monte Carlo trial.
enum class Stream : std::uint32_t {
    JammerPoints = 1,
    JammerGains = 2,
    EvePoints = 3,
    EveGains = 4,
    DirectLink = 5,
    CrossGains = 6,
    User = 7,
    OuterPoints = 8,
    OuterGains = 9,
};

/// Counter-based generator addressed by (seed, trial, stream, position).
///
/// Every draw is a pure function of its address, so trials may run in any
/// order on any thread. Satisfies UniformRandomBitGenerator for use with
/// <random> distributions.
class CounterRng {
public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint64_t trial, Stream stream)
        : seed_(seed), trial_(trial), stream_(stream) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return at(position_++); }

    /// 64 bits at an arbitrary position of this stream, without advancing.
    result_type at(std::uint64_t position) const;

    /// Uniform on the open interval (0, 1).
    double uniform() { return to_open_unit(operator()()); }
    /// Unit-mean exponential variate.
    double exponential();

    static double to_open_unit(std::uint64_t bits) {
        // 52 bits keep the largest value, 1 - 2^-53, representable.
        return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
    }

private:
    std::uint64_t seed_;
    std::uint64_t trial_;
    Stream stream_;
    std::uint64_t position_ = 0;
};

} // namespace ojam
