#pragma once

// Test-only fixtures and independent oracles. Nothing here calls into the
// code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "chaoslab/matrix.hpp"

namespace chaoslab::testing {

inline std::uint8_t clamp_byte(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

/// Smooth, non-periodic ramp with a little curvature.
inline GrayImage gradient_image(std::size_t n) {
  GrayImage img(n, n);
  const double span = static_cast<double>(n - 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double u = static_cast<double>(c) / span;
      const double v = static_cast<double>(r) / span;
      img(r, c) = clamp_byte(30.0 + 180.0 * (0.65 * u + 0.35 * v * v));
    }
  }
  return img;
}

/// Off-centre Gaussian blob on a tilted background.
inline GrayImage blob_image(std::size_t n) {
  GrayImage img(n, n);
  const double span = static_cast<double>(n - 1);
  const double cx = 0.35 * static_cast<double>(n);
  const double cy = 0.6 * static_cast<double>(n);
  const double sigma = static_cast<double>(n) / 6.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double bg = 20.0 + 60.0 * (static_cast<double>(c) + 2.0 * static_cast<double>(r)) / (3.0 * span);
      const double dx = static_cast<double>(c) - cx;
      const double dy = static_cast<double>(r) - cy;
      img(r, c) = clamp_byte(bg + 150.0 * std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma)));
    }
  }
  return img;
}

/// Photo-like texture: two octaves of bilinear value noise plus sensor noise.
inline GrayImage photo_image(std::size_t n, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto octave = [&](std::size_t cells) {
    std::vector<double> lattice((cells + 1) * (cells + 1));
    for (auto& v : lattice) v = unit(rng);
    std::vector<double> out(n * n);
    const double scale = static_cast<double>(cells) / static_cast<double>(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const double fy = static_cast<double>(r) * scale;
        const double fx = static_cast<double>(c) * scale;
        const auto iy = static_cast<std::size_t>(fy);
        const auto ix = static_cast<std::size_t>(fx);
        const double ty = fy - static_cast<double>(iy);
        const double tx = fx - static_cast<double>(ix);
        auto at = [&](std::size_t y, std::size_t x) { return lattice[y * (cells + 1) + x]; };
        const double top = at(iy, ix) * (1 - tx) + at(iy, ix + 1) * tx;
        const double bottom = at(iy + 1, ix) * (1 - tx) + at(iy + 1, ix + 1) * tx;
        out[r * n + c] = top * (1 - ty) + bottom * ty;
      }
    }
    return out;
  };
  const auto coarse = octave(4);
  const auto fine = octave(12);
  std::normal_distribution<double> grain(0.0, 2.0);
  GrayImage img(n, n);
  for (std::size_t i = 0; i < n * n; ++i) {
    img.cells()[i] = clamp_byte(20.0 + 160.0 * coarse[i] + 60.0 * fine[i] + grain(rng));
  }
  return img;
}

inline GrayImage random_image(std::size_t n, std::mt19937_64& rng) {
  GrayImage img(n, n);
  std::uniform_int_distribution<int> byte(0, 255);
  for (auto& px : img) px = static_cast<std::uint8_t>(byte(rng));
  return img;
}

/// Period of the cat map [[1,a],[b,1+ab]] mod n as the lcm of the cycle
/// lengths of its action on the n x n lattice.
inline std::uint64_t lattice_cycle_period(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  std::vector<bool> seen(n * n, false);
  std::uint64_t period = 1;
  for (std::uint64_t start = 0; start < n * n; ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    std::uint64_t cur = start;
    do {
      seen[cur] = true;
      const std::uint64_t x = cur % n;
      const std::uint64_t y = cur / n;
      const std::uint64_t nx = (x + a * y) % n;
      const std::uint64_t ny = (b * x + (1 + a * b) * y) % n;
      cur = ny * n + nx;
      ++len;
    } while (cur != start);
    period = std::lcm(period, len);
  }
  return period;
}

}  // namespace chaoslab::testing
