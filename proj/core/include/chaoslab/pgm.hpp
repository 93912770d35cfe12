#pragma once

// Binary PGM (P5, maxval 255) reading and writing.

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "chaoslab/matrix.hpp"

namespace chaoslab::pgm {

/// Parses a P5 image with maxval 255. Comments (#...) are allowed in the
/// header. Throws FormatError otherwise.
GrayImage decode(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode(const GrayImage& image);

/// True when `bytes` starts with the P5 magic followed by whitespace.
bool looks_like_pgm(std::span<const std::uint8_t> bytes) noexcept;

GrayImage read(const std::filesystem::path& path);
void write(const std::filesystem::path& path, const GrayImage& image);

}  // namespace chaoslab::pgm
