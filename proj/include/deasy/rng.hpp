#ifndef DEASY_RNG_HPP
#define DEASY_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace deasy {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

// Named RNG stream. One global scenario seed fans out into independent
// streams so that toggling one consumer does not perturb the draws of
// another. Draw helpers are hand-rolled so sequences are stable across
// standard library implementations.
class Rng {
public:
    Rng(std::uint64_t seed, std::string_view stream)
        : eng_(splitmix64(seed ^ fnv1a64(stream))) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return n > 1 ? next() % n : 0; }

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Fisher-Yates shuffle with stable draw order.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace deasy

#endif
