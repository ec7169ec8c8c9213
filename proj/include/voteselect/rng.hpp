#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace voteselect {

// All sampling in the project goes through mt19937_64 (whose output sequence
// is fixed by the standard) with hand-rolled reductions, so results are
// byte-identical across platforms. std::uniform_int_distribution is avoided
// on purpose: its mapping is implementation-defined.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives an independent stream seed from a base seed and a stream id.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = seed ^ (0x9e3779b97f4a7c15ULL + stream * 0xd1b54a32d192ed03ULL);
    return a ^ splitmix64(s);
}

inline std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t n) {
    return gen() % n;
}

// Uniform double in [0,1) built from the top 53 bits.
inline double unit_double(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Fisher-Yates shuffle of 0..n-1.
inline std::vector<int> shuffled_indices(int n, std::uint64_t seed) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::mt19937_64 gen(seed);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(bounded(gen, static_cast<std::uint64_t>(i) + 1));
        std::swap(idx[i], idx[j]);
    }
    return idx;
}

} // namespace voteselect
