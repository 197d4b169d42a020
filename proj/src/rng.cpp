#include "ojam/rng.hpp"

#include <cmath>

namespace ojam {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(product >> 32);
    lo = static_cast<std::uint32_t>(product);
}

} // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> c,
                                        std::array<std::uint32_t, 2> k) {
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, c[0], hi0, lo0);
        mulhilo(kMul1, c[2], hi1, lo1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
        k[0] += kWeyl0;
        k[1] += kWeyl1;
    }
    return c;
}

CounterRng::result_type CounterRng::at(std::uint64_t position) const {
    // counter = (position, trial low word, stream tag | trial high bits)
    const auto trial_hi = static_cast<std::uint32_t>(trial_ >> 32) & 0x00FFFFFFu;
    const std::array<std::uint32_t, 4> counter{
        static_cast<std::uint32_t>(position),
        static_cast<std::uint32_t>(position >> 32),
        static_cast<std::uint32_t>(trial_),
        (static_cast<std::uint32_t>(stream_) << 24) | trial_hi,
    };
    const std::array<std::uint32_t, 2> key{static_cast<std::uint32_t>(seed_),
                                           static_cast<std::uint32_t>(seed_ >> 32)};
    const auto out = philox4x32(counter, key);
    return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

double CounterRng::exponential() {
    return -std::log(uniform());
}

} // namespace ojam
