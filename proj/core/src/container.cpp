#include "chaoslab/container.hpp"

#include <algorithm>

#include "chaoslab/errors.hpp"

namespace chaoslab::container {

namespace {

constexpr std::uint8_t kMagic[4] = {'C', 'H', 'L', 'B'};

std::uint64_t read_be(std::span<const std::uint8_t> bytes, std::size_t offset, std::size_t width) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < width; ++i) v = (v << 8) | bytes[offset + i];
  return v;
}

}  // namespace

bool has_magic(std::span<const std::uint8_t> bytes) noexcept {
  return bytes.size() >= 4 && std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin());
}

std::vector<std::uint8_t> serialize(const cipher::CipherBlock& block) {
  cipher::validate_header(block);
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderSize + 8 * block.words.size());
  for (std::uint8_t c : kMagic) out.push_back(c);
  out.push_back(kFormatVersion);
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(block.side >> shift));
  for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(block.payload_len >> shift));
  out.push_back(block.base_tag);
  for (std::uint64_t w : block.words) {
    for (int shift = 0; shift < 64; shift += 8) out.push_back(static_cast<std::uint8_t>(w >> shift));
  }
  return out;
}

cipher::CipherBlock deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) throw FormatError("ciphertext container truncated header");
  if (!has_magic(bytes)) throw FormatError("ciphertext container has bad magic");
  if (bytes[4] != kFormatVersion) {
    throw FormatError("unsupported ciphertext container version " + std::to_string(bytes[4]));
  }
  cipher::CipherBlock block;
  block.side = static_cast<std::uint32_t>(read_be(bytes, 5, 4));
  block.payload_len = read_be(bytes, 9, 8);
  block.base_tag = bytes[17];

  const std::uint64_t s = block.side;
  if (s < 2 || s > 0xFFFF) throw FormatError("ciphertext container side out of range");
  const std::uint64_t expected = kHeaderSize + 8 * s * s;
  if (bytes.size() != expected) {
    throw FormatError("ciphertext container size " + std::to_string(bytes.size()) + " does not match header (" +
                      std::to_string(expected) + ")");
  }
  block.words = Matrix<std::uint64_t>::square(s);
  auto words = block.words.cells();
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint64_t w = 0;
    for (int b = 7; b >= 0; --b) w = (w << 8) | bytes[kHeaderSize + 8 * i + b];
    words[i] = w;
  }
  cipher::validate_header(block);
  return block;
}

}  // namespace chaoslab::container
