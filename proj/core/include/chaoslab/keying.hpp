#pragma once

// The 40-hex-digit secret key and the four cipher parameters derived from it.
//
// The key splits into four 10-character chunks. Each character contributes
// the decimal digit hexvalue(c) mod 10, so {0,A}, {1,B}, ..., {5,F} collide.
//   chunk 1 (0-9)   -> r    = 3.d1..d10, d1 promoted to 6 when below 6
//   chunk 2 (10-19) -> x0   = 0.d1..d10, all-zero chunk becomes 1e-10
//   chunk 3 (20-29) -> base = 1.d2..d10, zero fraction becomes 1.5
//   chunk 4 (30-39) -> iterations = hexvalue(key[35]), 0 becomes 1
// Positions 20, 30-34 and 36-39 never influence the parameters.

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "chaoslab/entropy_source.hpp"

namespace chaoslab::keying {

inline constexpr std::size_t kKeyLength = 40;
inline constexpr std::size_t kChunkLength = 10;
inline constexpr std::size_t kIterationPosition = 35;

class SecretKey {
 public:
  /// Throws FormatError unless `text` matches ^[0-9A-F]{40}$.
  static SecretKey parse(std::string_view text);

  const std::string& str() const noexcept { return chars_; }
  std::string_view chunk(std::size_t index) const;

  bool operator==(const SecretKey&) const = default;

 private:
  explicit SecretKey(std::string chars) : chars_(std::move(chars)) {}
  std::string chars_;
};

class CipherParams {
 public:
  /// Throws DomainError unless r in (3.6, 4), x0 in (0, 1), base in (1, 2)
  /// and iterations in [1, 16].
  CipherParams(double r, double x0, double base, unsigned iterations);

  double r() const noexcept { return r_; }
  double x0() const noexcept { return x0_; }
  double base() const noexcept { return base_; }
  unsigned iterations() const noexcept { return iterations_; }

  bool operator==(const CipherParams&) const = default;

 private:
  double r_;
  double x0_;
  double base_;
  unsigned iterations_;
};

/// 40 independent uniform hex characters from `source`.
SecretKey generate_key(ByteSource& source);

using ParamScreen = std::function<bool(const CipherParams&)>;

/// Lyapunov screen on (r, x0) with the default threshold.
bool default_screen(const CipherParams& params);

struct ScreenedKey {
  SecretKey key;
  std::size_t attempts = 0;
};

/// Regenerates until `screen` accepts the extracted parameters. Throws
/// BudgetError after `max_attempts` rejections.
ScreenedKey generate_screened_key(ByteSource& source, const ParamScreen& screen = default_screen,
                                  std::size_t max_attempts = 1000);

/// Total and deterministic on valid keys.
CipherParams extract_params(const SecretKey& key);

/// Decimal digit contributed by a hex character: hexvalue(c) mod 10.
unsigned hex_digit_value(char c);

struct AvalancheViolation {
  std::size_t position = 0;
  char original = '0';
  char replacement = '0';

  bool operator==(const AvalancheViolation&) const = default;
};

struct AvalancheReport {
  SecretKey key;
  /// Single-character substitutions among the first 30 positions that leave
  /// every parameter unchanged.
  std::vector<AvalancheViolation> violations;
  /// Positions (all 40) where no substitution changes any parameter.
  std::vector<std::size_t> dead_positions;
};

AvalancheReport avalanche_check(const SecretKey& key);

/// log2 of the number of distinct CipherParams reachable from valid keys.
double effective_key_space_log2();

}  // namespace chaoslab::keying
