#pragma once

#include <cmath>
#include <cstdint>

namespace alpharoot {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011). Streams are
// addressed, not seeked: key = mixed seed, counter words c2/c3 carry
// (path index, purpose tag) and c0/c1 the running block index, so any
// (seed, path, tag) stream can be generated independently on any thread with
// bit-identical output.
struct Philox4x32 {
    std::uint32_t c0, c1, c2, c3;
    std::uint32_t k0, k1;

    static void round_once(std::uint32_t& c0, std::uint32_t& c1, std::uint32_t& c2,
                           std::uint32_t& c3, std::uint32_t k0, std::uint32_t k1) {
        const std::uint64_t p0 = 0xD2511F53ull * c0;
        const std::uint64_t p1 = 0xCD9E8D57ull * c2;
        const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        c0 = hi1 ^ c1 ^ k0;
        c1 = lo1;
        c2 = hi0 ^ c3 ^ k1;
        c3 = lo0;
    }

    // one 10-round block; counter/key taken by value
    static void block(std::uint32_t ctr[4], std::uint32_t key0, std::uint32_t key1,
                      std::uint32_t out[4]) {
        std::uint32_t c0 = ctr[0], c1 = ctr[1], c2 = ctr[2], c3 = ctr[3];
        std::uint32_t k0 = key0, k1 = key1;
        for (int r = 0; r < 10; ++r) {
            round_once(c0, c1, c2, c3, k0, k1);
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        out[0] = c0;
        out[1] = c1;
        out[2] = c2;
        out[3] = c3;
    }
};

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// purpose tags: one stream per concern, so e.g. jump and Brownian draws stay
// independent and a scheme can skip draws without desynchronizing others
inline constexpr std::uint32_t kTagStable = 0;
inline constexpr std::uint32_t kTagGauss = 1;
inline constexpr std::uint32_t kTagGeneric = 2;

class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_index, std::uint32_t tag) {
        const std::uint64_t mixed = splitmix64(seed);
        key0_ = static_cast<std::uint32_t>(mixed);
        key1_ = static_cast<std::uint32_t>(mixed >> 32);
        base2_ = static_cast<std::uint32_t>(stream_index);
        base3_ = (static_cast<std::uint32_t>(stream_index >> 32) & 0x00FFFFFFu) |
                 (tag << 24);
        block_ = 0;
        have_gauss_ = false;
        gauss_cache_ = 0.0;
    }

    // uniform on the open interval (0, 1), 52-bit resolution
    double next_u01() {
        const std::uint64_t bits = next_u64();
        return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
    }

    double next_exponential() { return -std::log(next_u01()); }

    // Box-Muller pair, one value cached
    double next_gaussian() {
        if (have_gauss_) {
            have_gauss_ = false;
            return gauss_cache_;
        }
        const double u1 = next_u01();
        const double u2 = next_u01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 6.283185307179586476925286766559 * u2;
        gauss_cache_ = r * std::sin(phi);
        have_gauss_ = true;
        return r * std::cos(phi);
    }

    std::uint64_t next_u64() {
        if (word_pos_ == 0) {
            std::uint32_t ctr[4] = {static_cast<std::uint32_t>(block_),
                                    static_cast<std::uint32_t>(block_ >> 32), base2_,
                                    base3_};
            Philox4x32::block(ctr, key0_, key1_, words_);
            ++block_;
            word_pos_ = 2;
        }
        --word_pos_;
        const int i = 2 * (1 - word_pos_);
        return (static_cast<std::uint64_t>(words_[i + 1]) << 32) | words_[i];
    }

  private:
    std::uint32_t key0_, key1_, base2_, base3_;
    std::uint64_t block_;
    std::uint32_t words_[4];
    int word_pos_ = 0;
    bool have_gauss_;
    double gauss_cache_;
};

}  // namespace alpharoot
