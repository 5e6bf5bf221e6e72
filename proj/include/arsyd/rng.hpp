#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace arsyd::rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer
constexpr std::uint64_t finalize(std::uint64_t x) noexcept {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    return finalize(x + kGolden);
}

// n-th output of splitmix64 seeded with `key`; pure in (key, n)
constexpr std::uint64_t word_at(std::uint64_t key, std::uint64_t n) noexcept {
    return finalize(key + (n + 1) * kGolden);
}

/// Collapses a small tuple into a 64-bit stream id (order-sensitive chain of
/// mix64 rounds). Stream allocation used throughout the toolkit:
///   role i       -> stream_id({1, i})
///   filler (i,j) -> stream_id({2, i, j})
///   tags >= 3    -> noise injection, object sampling, dataset generation
constexpr std::uint64_t stream_id(std::initializer_list<std::uint64_t> parts) noexcept {
    std::uint64_t h = 0x243F6A8885A308D3ull;
    for (auto p : parts) h = mix64(h ^ mix64(p));
    return h;
}

// Counter-based stream keyed by (master_seed, stream). No shared state:
// draw n is a pure function of the key and n.
class Stream {
public:
    Stream(std::uint64_t master_seed, std::uint64_t stream) noexcept
        : key_(stream_id({master_seed, stream})) {}

    std::uint64_t next_u64() noexcept { return word_at(key_, counter_++); }

    // [0, 1)
    double uniform() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // (0, 1], safe as a log argument
    double uniform_open() noexcept {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // standard normal via Box-Muller
    double normal() noexcept {
        const double u1 = uniform_open();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    // uniform in [0, n) by multiply-shift
    std::uint64_t index(std::uint64_t n) noexcept {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace arsyd::rng
