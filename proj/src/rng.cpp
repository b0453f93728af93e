#include "cantorlp/rng.hpp"

namespace cantorlp {

namespace {

constexpr std::uint64_t kPhiloxM0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kPhiloxM1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;  // golden ratio
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;  // sqrt(3)-1

inline std::uint64_t mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    hi = static_cast<std::uint64_t>(prod >> 64);
    return static_cast<std::uint64_t>(prod);
}

inline void philox_round(std::array<std::uint64_t, 4>& ctr, const std::array<std::uint64_t, 2>& key) {
    std::uint64_t hi0, hi1;
    const std::uint64_t lo0 = mulhilo(kPhiloxM0, ctr[0], hi0);
    const std::uint64_t lo1 = mulhilo(kPhiloxM1, ctr[2], hi1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

}  // namespace

std::array<std::uint64_t, 4> philox4x64(const std::array<std::uint64_t, 4>& counter,
                                        const std::array<std::uint64_t, 2>& key) {
    std::array<std::uint64_t, 4> ctr = counter;
    std::array<std::uint64_t, 2> k = key;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            k[0] += kWeyl0;
            k[1] += kWeyl1;
        }
        philox_round(ctr, k);
    }
    return ctr;
}

std::uint64_t fnv1a64(std::span<const std::uint64_t> words) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (std::uint64_t w : words) {
        for (int i = 0; i < 8; ++i) {
            h ^= (w >> (8 * i)) & 0xFF;
            h *= 0x100000001B3ULL;
        }
    }
    return h;
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

RngStream RngStream::substream(std::initializer_list<std::uint64_t> path) const {
    std::uint64_t h = fnv1a64(std::span<const std::uint64_t>(&key_[1], 1));
    for (std::uint64_t w : path) {
        const std::uint64_t words[2] = {h, w};
        h = fnv1a64(std::span<const std::uint64_t>(words, 2));
    }
    return RngStream(key_[0], h);
}

RngStream RngStream::substream(std::string_view name) const {
    const std::uint64_t words[2] = {key_[1], fnv1a64(name)};
    return RngStream(key_[0], fnv1a64(std::span<const std::uint64_t>(words, 2)));
}

RngStream RngStream::substream(std::string_view name, std::uint64_t index) const {
    const std::uint64_t words[3] = {key_[1], fnv1a64(name), index};
    return RngStream(key_[0], fnv1a64(std::span<const std::uint64_t>(words, 3)));
}

std::uint64_t RngStream::next_u64() {
    if (block_pos_ == 4) {
        // Counter advances before the block is produced, matching the
        // convention numpy's Philox generator uses for its raw stream.
        for (auto& c : counter_) {
            if (++c != 0) break;  // 256-bit counter increment
        }
        block_ = philox4x64(counter_, key_);
        block_pos_ = 0;
    }
    return block_[block_pos_++];
}

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

}  // namespace cantorlp
