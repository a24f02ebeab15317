#pragma once

#include <array>
#include <cstdint>

// Counter-based random numbers (Philox4x32-10). A stream is addressed by
// (seed, stream): the seed forms the key, the stream id and a running block
// index form the counter. Streams are therefore independent of execution
// order, which is what makes per-trial seeding reproducible under any
// scheduling.
//
// Transforms:
//   uniform:  (u32 + 0.5) * 2^-32, in the open interval (0,1)
//   gaussian: Box-Muller on a uniform pair
namespace l1pt::rng {

std::array<std::uint32_t, 4> philox4x32(std::uint64_t seed, std::uint64_t stream,
                                        std::uint64_t block);

// Deterministic sub-seed for job `index` of a run keyed by `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

class Stream {
  public:
    Stream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint32_t next_u32();
    std::uint64_t next_u64();
    double uniform();   // (0, 1)
    double gaussian();  // standard normal

    // Unbiased-enough bounded draw for shuffles (multiply-shift).
    std::uint32_t bounded(std::uint32_t n);

  private:
    void refill();

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int pos_ = 4;
    double gauss_spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace l1pt::rng
