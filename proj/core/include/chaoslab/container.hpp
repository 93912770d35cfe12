#pragma once

// Binary ciphertext container:
//   "CHLB" | version u8 | side u32 BE | payload_len u64 BE | base_tag u8 |
//   side*side words, u64 little-endian, row-major.

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "chaoslab/cipher_core.hpp"

namespace chaoslab::container {

inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::size_t kHeaderSize = 4 + 1 + 4 + 8 + 1;

std::vector<std::uint8_t> serialize(const cipher::CipherBlock& block);

/// Throws FormatError on bad magic, unknown version, truncated or trailing
/// data, or an inconsistent header.
cipher::CipherBlock deserialize(std::span<const std::uint8_t> bytes);

/// True when `bytes` starts with the container magic.
bool has_magic(std::span<const std::uint8_t> bytes) noexcept;

}  // namespace chaoslab::container
