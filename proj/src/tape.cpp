#include "hlc/tape.hpp"

#include <stdexcept>

namespace hlc {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

// 64-bit finalizer with full avalanche; bijective, so chaining it between
// xor-folded inputs keeps distinct (seed, domain, a, b) tuples distinct.
std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

std::uint64_t keyed_word(std::uint64_t seed, std::uint64_t domain,
                         std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = mix64(seed + kGamma * (domain + 1));
    h = mix64(h ^ (a + kGamma));
    h = mix64(h ^ (b + kGamma));
    return h;
}

constexpr std::uint64_t kDomainInitial = 0;
constexpr std::uint64_t kDomainResample = 1;

} // namespace

Color ColorTape::initial_color(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("ColorTape::initial_color: vertex " +
                                std::to_string(v) + " outside [0, " +
                                std::to_string(n_) + ")");
    return color_from_bit(
        int(keyed_word(seed_, kDomainInitial, std::uint64_t(v), 0) & 1));
}

int ColorTape::resample_bit(std::uint64_t stream, std::uint64_t counter) const {
    return int(keyed_word(seed_, kDomainResample, stream, counter) & 1);
}

} // namespace hlc
