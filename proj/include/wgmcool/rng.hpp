#ifndef WGMCOOL_RNG_HPP
#define WGMCOOL_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

#include "wgmcool/constants.hpp"

namespace wgmcool {

// Philox4x32-10 (Salmon et al., SC'11): a counter-based generator. The
// output block is a pure function of (key, counter), so any draw of any
// trajectory can be produced independently of every other.
class Philox4x32 {
public:
    using Block = std::array<std::uint32_t, 4>;

    explicit Philox4x32(std::uint64_t seed)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

    Block operator()(std::uint64_t stream, std::uint64_t counter) const {
        Block ctr{static_cast<std::uint32_t>(counter), static_cast<std::uint32_t>(counter >> 32),
                  static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
        std::array<std::uint32_t, 2> key = key_;
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += 0x9E3779B9u;
                key[1] += 0xBB67AE85u;
            }
            const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }

private:
    std::array<std::uint32_t, 2> key_;
};

// Two independent standard normals from one block by Box-Muller on two
// 53-bit uniforms; u1 is in (0, 1] so the logarithm is finite.
inline std::pair<double, double> gaussian_pair(const Philox4x32::Block& b) {
    constexpr double scale = 1.0 / 9007199254740992.0;  // 2^-53
    const std::uint64_t w0 = (std::uint64_t{b[0]} << 32) | b[1];
    const std::uint64_t w1 = (std::uint64_t{b[2]} << 32) | b[3];
    const double u1 = (static_cast<double>(w0 >> 11) + 1.0) * scale;
    const double u2 = static_cast<double>(w1 >> 11) * scale;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phase = constants::two_pi * u2;
    return {r * std::cos(phase), r * std::sin(phase)};
}

}  // namespace wgmcool

#endif
