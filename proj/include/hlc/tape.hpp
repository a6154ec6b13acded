#pragma once

#include <cstdint>
#include <string>

namespace hlc {

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

inline char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }
inline Color color_from_bit(int b) { return b ? Color::Blue : Color::Red; }

// Stateless keyed bit source. Every bit is a pure function of
// (seed, domain, index pair), so any bit can be re-read at any time and
// concurrent readers need no synchronization. Vertex colors and resample
// streams live in separate domains; resample streams are further split by a
// caller-chosen stream id so independent consumers never share bits.
class ColorTape {
public:
    ColorTape(std::uint64_t seed, int num_vertices)
        : seed_(seed), n_(num_vertices) {}

    std::uint64_t seed() const { return seed_; }
    int num_vertices() const { return n_; }

    // Initial color of vertex v. Throws std::out_of_range for v outside [0, n).
    Color initial_color(int v) const;

    // One bit of the resample stream `stream` at position `counter`.
    int resample_bit(std::uint64_t stream, std::uint64_t counter) const;

private:
    std::uint64_t seed_;
    int n_;
};

// Sequential reader over one resample stream. Tracks how many bits were
// consumed; the tape itself stays stateless.
struct BitStream {
    const ColorTape* tape;
    std::uint64_t stream;
    std::uint64_t counter = 0;

    int next() { return tape->resample_bit(stream, counter++); }
    Color next_color() { return color_from_bit(next()); }
    std::uint64_t consumed() const { return counter; }
};

// Fixed stream-id tags so distinct consumers of resample bits never collide.
// Engine trials use component/trial indices below the tag bits.
namespace stream_tag {
inline constexpr std::uint64_t engine = 0;
inline constexpr std::uint64_t alon = std::uint64_t(1) << 60;
inline constexpr std::uint64_t conservative = std::uint64_t(2) << 60;
inline constexpr std::uint64_t standalone_mt = std::uint64_t(3) << 60;
inline constexpr std::uint64_t query_order = std::uint64_t(4) << 60;
} // namespace stream_tag

inline std::uint64_t engine_stream(int component_index, int trial) {
    return stream_tag::engine | (std::uint64_t(component_index) << 20) |
           std::uint64_t(trial);
}
inline std::uint64_t alon_stream(int component_index, int trial) {
    return stream_tag::alon | (std::uint64_t(component_index) << 20) |
           std::uint64_t(trial);
}

} // namespace hlc
