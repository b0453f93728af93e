#ifndef CANTORLP_RNG_HPP
#define CANTORLP_RNG_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>

namespace cantorlp {

// Philox4x64-10 block function (Salmon et al., counter-based).
// Pure integer arithmetic, so streams are reproducible across platforms
// and any substream can be regenerated from (key, counter) alone.
std::array<std::uint64_t, 4> philox4x64(const std::array<std::uint64_t, 4>& counter,
                                        const std::array<std::uint64_t, 2>& key);

// 64-bit FNV-1a over a sequence of words; used to derive substream ids.
std::uint64_t fnv1a64(std::span<const std::uint64_t> words);
std::uint64_t fnv1a64(std::string_view text);

// One independent random stream: key = (seed, stream id), counter starts at 0.
// Substreams are derived by hashing path words into a fresh stream id, so
// construction steps, pilot replicas and checks never share a stream.
class RngStream {
public:
    RngStream() : RngStream(0) {}
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
        : key_{seed, stream}, counter_{0, 0, 0, 0} {}

    std::uint64_t seed() const { return key_[0]; }
    std::uint64_t stream_id() const { return key_[1]; }

    // Derived stream: same seed, stream id = hash(parent id, path words).
    RngStream substream(std::initializer_list<std::uint64_t> path) const;
    RngStream substream(std::string_view name) const;
    RngStream substream(std::string_view name, std::uint64_t index) const;

    std::uint64_t next_u64();
    // Uniform on [0,1), 53-bit mantissa.
    double uniform();
    // Uniform on [lo, hi).
    double uniform(double lo, double hi);

private:
    std::array<std::uint64_t, 2> key_;
    std::array<std::uint64_t, 4> counter_;
    std::array<std::uint64_t, 4> block_{};
    unsigned block_pos_ = 4;  // 4 = exhausted
};

}  // namespace cantorlp

#endif
