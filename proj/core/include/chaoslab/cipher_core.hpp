#pragma once

// Two-layer cipher: cat-map scrambling of a padded value matrix (confusion)
// followed by XOR with a logistic-map keystream (diffusion).
//
// Text mode embeds each byte as log_base(byte) in an s x s matrix of doubles,
// s = ceil(sqrt(2N)), with random decoys filling the rest, and XORs the raw
// IEEE-754 bit patterns with 64-bit keystream words. Image mode permutes the
// pixels of a square 8-bit image and XORs them with keystream bytes.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chaoslab/entropy_source.hpp"
#include "chaoslab/keying.hpp"
#include "chaoslab/matrix.hpp"

namespace chaoslab::cipher {

using keying::CipherParams;

inline constexpr std::size_t kKeystreamBurnIn = 256;
inline constexpr std::uint8_t kMinPrintable = 32;
inline constexpr std::uint8_t kMaxPrintable = 126;

/// Printable-ASCII message, at least one byte long.
class PlainText {
 public:
  /// Throws DomainError on empty input or any byte outside [32, 126].
  explicit PlainText(std::string_view bytes);

  const std::string& bytes() const noexcept { return bytes_; }
  std::size_t size() const noexcept { return bytes_.size(); }

  bool operator==(const PlainText&) const = default;

 private:
  std::string bytes_;
};

struct CipherBlock {
  std::uint32_t side = 0;
  std::uint64_t payload_len = 0;
  std::uint8_t base_tag = 0;  // reserved, always 0
  Matrix<std::uint64_t> words;

  bool operator==(const CipherBlock&) const = default;
};

/// Throws FormatError unless side >= 2, side^2 >= 2 * payload_len,
/// payload_len >= 1 and words is side x side.
void validate_header(const CipherBlock& block);

/// ceil(sqrt(2n)), computed exactly in integers.
std::uint32_t block_side(std::size_t n);

/// `iterations`, bumped by one when it is a multiple of the classical period
/// for `side` (a multiple would leave the matrix unchanged).
std::uint64_t effective_iterations(unsigned iterations, std::uint64_t side);

/// Logistic orbit from x0 after a 256-step burn-in.
class LogisticKeystream {
 public:
  explicit LogisticKeystream(const CipherParams& params);

  double next() noexcept;
  /// floor(x * 2^64) truncated to 64 bits.
  std::uint64_t next_word() noexcept;
  /// floor(x * 2^53) mod 256.
  std::uint8_t next_byte() noexcept;

 private:
  double r_;
  double x_;
};

/// s x s keystream words, row-major.
Matrix<std::uint64_t> keystream(const CipherParams& params, std::size_t side);

/// First `count` image-mode keystream bytes.
std::vector<std::uint8_t> keystream_bytes(const CipherParams& params, std::size_t count);

/// Payload cells 0..N-1 (row-major) hold log_base(byte); the remaining cells
/// hold uniform draws from the open interval (log_base 65, log_base 122).
Matrix<double> embed_plaintext(const PlainText& text, double base, ByteSource& rng);

CipherBlock encrypt(const PlainText& text, const CipherParams& params, ByteSource& rng);

/// Throws FormatError on an inconsistent header and IntegrityError when a
/// recovered payload cell is not within 1e-9 of a printable byte.
PlainText decrypt(const CipherBlock& block, const CipherParams& params);

/// Throws DomainError on non-square or smaller than 2x2 images.
GrayImage encrypt_image(const GrayImage& image, const CipherParams& params);
GrayImage decrypt_image(const GrayImage& image, const CipherParams& params);

}  // namespace chaoslab::cipher
