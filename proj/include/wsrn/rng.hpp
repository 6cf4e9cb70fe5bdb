#ifndef WSRN_RNG_HPP
#define WSRN_RNG_HPP

#include <cstdint>
#include <random>

namespace wsrn {

// Single random stream per simulation run. Every random quantity of a run
// (deployment positions, events, collecting-robot picks) is drawn from one
// Rng in a fixed order, so a (config, seed) pair reproduces bit-identically.
// Doubles come from the top 53 bits of the mt19937_64 output rather than
// std::uniform_real_distribution, whose mapping is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n), unbiased via rejection.
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t rem = (std::uint64_t(0) - n) % n; // 2^64 mod n
        std::uint64_t x;
        do {
            x = engine_();
        } while (x < rem);
        return x % n;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace wsrn

#endif  // WSRN_RNG_HPP
