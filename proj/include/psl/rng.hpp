#ifndef PSL_RNG_HPP
#define PSL_RNG_HPP

#include <array>
#include <cstdint>
#include <limits>

namespace psl {

/// Philox4x32-10 block function (Salmon et al. counter-based generator).
/// Stateless: output is a pure function of (counter, key), which is what
/// makes per-sample substreams bitwise reproducible under any scheduling.
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
  constexpr std::uint32_t kMul0 = 0xD2511F53u;
  constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  auto round = [](std::array<std::uint32_t, 4> x, std::array<std::uint32_t, 2> k) {
    const std::uint64_t p0 = std::uint64_t{kMul0} * x[0];
    const std::uint64_t p1 = std::uint64_t{kMul1} * x[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    return std::array<std::uint32_t, 4>{hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
  };

  ctr = round(ctr, key);
  for (int i = 1; i < 10; ++i) {
    key[0] += kWeyl0;
    key[1] += kWeyl1;
    ctr = round(ctr, key);
  }
  return ctr;
}

/// Seedable counter-mode stream: key is the 64-bit seed, the high half of
/// the counter is the substream index, the low half counts emitted blocks.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream_index)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_{static_cast<std::uint32_t>(stream_index),
                static_cast<std::uint32_t>(stream_index >> 32)} {}

  std::uint64_t next_u64() {
    if (avail_ == 0) {
      const std::array<std::uint32_t, 4> ctr{static_cast<std::uint32_t>(block_),
                                             static_cast<std::uint32_t>(block_ >> 32),
                                             stream_[0], stream_[1]};
      const auto out = philox4x32(ctr, key_);
      buf_[0] = (std::uint64_t{out[1]} << 32) | out[0];
      buf_[1] = (std::uint64_t{out[3]} << 32) | out[2];
      ++block_;
      avail_ = 2;
    }
    return buf_[2 - avail_--];
  }

  /// Unbiased draw from {0, ..., bound-1} by rejection.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t residue =
        (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    const std::uint64_t cutoff = std::numeric_limits<std::uint64_t>::max() - residue;
    std::uint64_t u = next_u64();
    while (u > cutoff) u = next_u64();
    return u % bound;
  }

  double uniform_unit() {  // [0,1) with 53 random bits
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 2> stream_;
  std::uint64_t block_ = 0;
  int avail_ = 0;
  std::array<std::uint64_t, 2> buf_{};
};

}  // namespace psl

#endif  // PSL_RNG_HPP
