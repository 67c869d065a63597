#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace mfris::montecarlo {

// Philox4x32-10 counter-based generator. Each (seed, stream) pair is an
// independent sequence, so stream = global trial index gives identical
// draws no matter how trials are partitioned across workers.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key0_(static_cast<std::uint32_t>(seed)),
          key1_(static_cast<std::uint32_t>(seed >> 32)),
          stream_(stream) {}

    std::uint64_t next_u64() {
        if (pos_ == 0) {
            fill_block();
            pos_ = 2;
        }
        --pos_;
        return out_[pos_];
    }

    // Uniform on (0, 1].
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
    }

    // Standard normal pair via Box-Muller (fixed draw count per call).
    std::pair<double, double> normal_pair() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * M_PI * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        auto [a, b] = normal_pair();
        spare_ = b;
        have_spare_ = true;
        return a;
    }

    // Exponential with the given mean.
    double exponential(double mean) { return -mean * std::log(uniform01()); }

  private:
    static void round(std::uint32_t& c0, std::uint32_t& c1, std::uint32_t& c2,
                      std::uint32_t& c3, std::uint32_t k0, std::uint32_t k1) {
        const std::uint64_t p0 = 0xD2511F53ULL * c0;
        const std::uint64_t p1 = 0xCD9E8D57ULL * c2;
        const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        const std::uint32_t n0 = hi1 ^ c1 ^ k0;
        const std::uint32_t n1 = lo1;
        const std::uint32_t n2 = hi0 ^ c3 ^ k1;
        const std::uint32_t n3 = lo0;
        c0 = n0;
        c1 = n1;
        c2 = n2;
        c3 = n3;
    }

    void fill_block() {
        std::uint32_t c0 = static_cast<std::uint32_t>(counter_);
        std::uint32_t c1 = static_cast<std::uint32_t>(counter_ >> 32);
        std::uint32_t c2 = static_cast<std::uint32_t>(stream_);
        std::uint32_t c3 = static_cast<std::uint32_t>(stream_ >> 32);
        std::uint32_t k0 = key0_;
        std::uint32_t k1 = key1_;
        for (int r = 0; r < 10; ++r) {
            round(c0, c1, c2, c3, k0, k1);
            k0 += 0x9E3779B9U;
            k1 += 0xBB67AE85U;
        }
        out_[0] = (static_cast<std::uint64_t>(c0) << 32) | c1;
        out_[1] = (static_cast<std::uint64_t>(c2) << 32) | c3;
        ++counter_;
    }

    std::uint32_t key0_;
    std::uint32_t key1_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    std::uint64_t out_[2] = {0, 0};
    int pos_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace mfris::montecarlo
