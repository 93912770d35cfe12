#pragma once

#include <cstdint>
#include <span>

namespace chaoslab {

/// Injected randomness. Implementations fill buffers with uniform bytes and
/// throw EntropyError on failure.
class ByteSource {
 public:
  virtual ~ByteSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;

  std::uint64_t next_u64();
  /// Uniform double in the open interval (0, 1) with 53 random bits.
  double next_open_unit();
};

/// Operating-system CSPRNG (getrandom(2) on Linux).
class SystemEntropy final : public ByteSource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

/// Reproducible splitmix64 stream for fixtures and tests. Not secure.
class SeededByteSource final : public ByteSource {
 public:
  explicit SeededByteSource(std::uint64_t seed) noexcept : state_(seed) {}
  void fill(std::span<std::uint8_t> out) override;

 private:
  std::uint64_t state_;
};

}  // namespace chaoslab
