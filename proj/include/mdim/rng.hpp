#ifndef MDIM_RNG_HPP
#define MDIM_RNG_HPP

#include <cstdint>
#include <random>

namespace mdim {

/// All randomness in the project flows from a single 64-bit seed through this
/// generator: an std::mt19937_64 stream with explicit bounded draws, so equal
/// seeds give byte-identical behaviour on every platform (the standard
/// distributions are deliberately avoided; they vary between libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish draw in [0, bound) by modulo; bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// 53-bit mantissa draw in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace mdim

#endif
