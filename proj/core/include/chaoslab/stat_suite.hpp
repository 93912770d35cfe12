#pragma once

// Ciphertext statistics: Shannon entropy, adjacent-pixel correlation, NPCR,
// UACI, MSE/PSNR, and the one-pixel differential protocol.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>

#include "chaoslab/errors.hpp"
#include "chaoslab/keying.hpp"
#include "chaoslab/matrix.hpp"

namespace chaoslab::stats {

/// H = -sum p_i log2 p_i over the observed frequencies of arbitrary symbols.
template <typename T>
double shannon_entropy_of(std::span<const T> symbols) {
  if (symbols.empty()) throw DomainError("entropy of empty data is undefined");
  std::map<T, std::size_t> counts;
  for (const T& s : symbols) ++counts[s];
  const double total = static_cast<double>(symbols.size());
  double h = 0.0;
  for (const auto& [symbol, count] : counts) {
    const double p = static_cast<double>(count) / total;
    h -= p * std::log2(p);
  }
  return h;
}

/// Entropy over the byte alphabet (n = 256); 0 <= H <= 8.
double shannon_entropy(std::span<const std::uint8_t> bytes);

/// Entropy of 64-bit words bucketed by their top byte (n = 256).
double word_entropy(std::span<const std::uint64_t> words);

std::array<std::uint64_t, 256> histogram(const GrayImage& image);

/// 256 lines, one count per gray level.
void write_histogram(std::ostream& out, const GrayImage& image);

enum class Direction { horizontal, vertical, diagonal };

std::string_view to_string(Direction direction) noexcept;

inline constexpr std::size_t kDefaultCorrelationSamples = 4096;

/// Pearson correlation of paired samples. Throws UndefinedCorrelationError
/// when either marginal has zero variance.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// Pearson correlation over `sample_count` uniformly drawn adjacent pairs.
double adjacent_correlation(const GrayImage& image, Direction direction, std::size_t sample_count,
                            std::mt19937_64& rng);

/// Pearson correlation over every adjacent pair (no wrap-around).
double adjacent_correlation_full(const GrayImage& image, Direction direction);

/// Percentage of positions where the images differ. Throws DomainError on
/// dimension mismatch.
double npcr(const GrayImage& lhs, const GrayImage& rhs);

/// 100 * mean(|lhs - rhs|) / 255.
double uaci(const GrayImage& lhs, const GrayImage& rhs);

struct MsePsnr {
  double mse = 0.0;
  double psnr_db = 0.0;  // +infinity iff mse == 0
};

MsePsnr mse_psnr(const GrayImage& lhs, const GrayImage& rhs);

struct DifferentialResult {
  double npcr = 0.0;
  double uaci = 0.0;
};

/// Encrypts `image` and a copy with pixel (row, col) incremented mod 256
/// under the same parameters (image mode), then compares the ciphertexts.
DifferentialResult differential_pair(const GrayImage& image, const keying::CipherParams& params, std::size_t row,
                                     std::size_t col);

struct AnalysisReport {
  std::string alphabet = "bytes(256)";
  std::optional<double> entropy_bits;
  std::optional<double> corr_h;
  std::optional<double> corr_v;
  std::optional<double> corr_d;
  std::optional<double> npcr_pct;
  std::optional<double> uaci_pct;
  std::optional<double> mse;
  std::optional<double> psnr_db;
};

/// Entropy and sampled correlations; a zero-variance direction is left empty.
AnalysisReport analyze_image(const GrayImage& image, std::mt19937_64& rng,
                             std::size_t samples = kDefaultCorrelationSamples);

/// analyze_image(first) plus NPCR, UACI, MSE and PSNR of the pair.
AnalysisReport analyze_pair(const GrayImage& first, const GrayImage& second, std::mt19937_64& rng,
                            std::size_t samples = kDefaultCorrelationSamples);

/// Flat `key=value` lines; absent values print as `undefined`, infinite
/// PSNR as `inf`.
void write_report(std::ostream& out, const AnalysisReport& report);

}  // namespace chaoslab::stats
