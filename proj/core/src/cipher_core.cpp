#include "chaoslab/cipher_core.hpp"

#include <bit>
#include <cmath>

#include "chaoslab/chaotic_maps.hpp"
#include "chaoslab/errors.hpp"
#include "chaoslab/period_analysis.hpp"

namespace chaoslab::cipher {

namespace {

constexpr double kRecoveryTolerance = 1e-9;

double log_base(double value, double base) { return std::log(value) / std::log(base); }

void check_image(const GrayImage& image) {
  if (!image.is_square()) throw DomainError("image mode requires a square image");
  if (image.rows() < 2) throw DomainError("image mode requires at least a 2x2 image");
}

}  // namespace

PlainText::PlainText(std::string_view bytes) : bytes_(bytes) {
  if (bytes_.empty()) throw DomainError("plaintext must not be empty");
  for (std::size_t i = 0; i < bytes_.size(); ++i) {
    const auto c = static_cast<unsigned char>(bytes_[i]);
    if (c < kMinPrintable || c > kMaxPrintable) {
      throw DomainError("plaintext byte " + std::to_string(i) + " (value " + std::to_string(c) +
                        ") is not printable ASCII");
    }
  }
}

void validate_header(const CipherBlock& block) {
  const std::uint64_t s = block.side;
  if (s < 2) throw FormatError("cipher block side must be at least 2");
  if (block.payload_len < 1) throw FormatError("cipher block payload length must be positive");
  if (s * s < 2 * block.payload_len) {
    throw FormatError("cipher block side " + std::to_string(s) + " too small for payload " +
                      std::to_string(block.payload_len));
  }
  if (block.words.rows() != s || block.words.cols() != s) {
    throw FormatError("cipher block word matrix does not match its side");
  }
}

std::uint32_t block_side(std::size_t n) {
  const std::uint64_t target = 2 * static_cast<std::uint64_t>(n);
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(target)));
  while (s * s < target) ++s;
  while (s > 0 && (s - 1) * (s - 1) >= target) --s;
  return static_cast<std::uint32_t>(s);
}

std::uint64_t effective_iterations(unsigned iterations, std::uint64_t side) {
  const std::uint64_t period = period::period_fibonacci(side).period;
  return iterations % period == 0 ? iterations + 1ull : iterations;
}

LogisticKeystream::LogisticKeystream(const CipherParams& params) : r_(params.r()), x_(params.x0()) {
  for (std::size_t i = 0; i < kKeystreamBurnIn; ++i) x_ = r_ * x_ * (1.0 - x_);
}

double LogisticKeystream::next() noexcept {
  x_ = r_ * x_ * (1.0 - x_);
  return x_;
}

std::uint64_t LogisticKeystream::next_word() noexcept {
  const double x = next();
  // x * 2^64 is exact; x == 1 would be 2^64, which truncates to 0.
  if (!(x < 1.0)) return 0;
  return static_cast<std::uint64_t>(std::ldexp(x, 64));
}

std::uint8_t LogisticKeystream::next_byte() noexcept {
  const double x = next();
  return static_cast<std::uint8_t>(static_cast<std::uint64_t>(std::ldexp(x, 53)) & 0xFFu);
}

Matrix<std::uint64_t> keystream(const CipherParams& params, std::size_t side) {
  LogisticKeystream stream(params);
  auto block = Matrix<std::uint64_t>::square(side);
  for (auto& w : block) w = stream.next_word();
  return block;
}

std::vector<std::uint8_t> keystream_bytes(const CipherParams& params, std::size_t count) {
  LogisticKeystream stream(params);
  std::vector<std::uint8_t> out(count);
  for (auto& b : out) b = stream.next_byte();
  return out;
}

Matrix<double> embed_plaintext(const PlainText& text, double base, ByteSource& rng) {
  if (!(base > 1.0)) throw DomainError("embedding base must exceed 1");
  const std::uint32_t s = block_side(text.size());
  auto cells = Matrix<double>::square(s);
  auto flat = cells.cells();

  for (std::size_t i = 0; i < text.size(); ++i) {
    flat[i] = log_base(static_cast<unsigned char>(text.bytes()[i]), base);
  }
  const double lo = log_base(65.0, base);
  const double hi = log_base(122.0, base);
  for (std::size_t i = text.size(); i < flat.size(); ++i) {
    double v;
    do {
      v = lo + rng.next_open_unit() * (hi - lo);
    } while (!(v > lo && v < hi));
    flat[i] = v;
  }
  return cells;
}

CipherBlock encrypt(const PlainText& text, const CipherParams& params, ByteSource& rng) {
  const Matrix<double> embedded = embed_plaintext(text, params.base(), rng);
  const std::uint32_t s = static_cast<std::uint32_t>(embedded.rows());

  Matrix<std::uint64_t> bits(s, s);
  for (std::size_t i = 0; i < bits.size(); ++i) bits.cells()[i] = std::bit_cast<std::uint64_t>(embedded.cells()[i]);

  const maps::TorusMap cat = maps::TorusMap::classical(s);
  Matrix<std::uint64_t> words = maps::scramble_lattice(cat, bits, effective_iterations(params.iterations(), s));

  const Matrix<std::uint64_t> noise = keystream(params, s);
  for (std::size_t i = 0; i < words.size(); ++i) words.cells()[i] ^= noise.cells()[i];

  return CipherBlock{s, text.size(), 0, std::move(words)};
}

PlainText decrypt(const CipherBlock& block, const CipherParams& params) {
  validate_header(block);
  const std::uint32_t s = block.side;

  Matrix<std::uint64_t> words = block.words;
  const Matrix<std::uint64_t> noise = keystream(params, s);
  for (std::size_t i = 0; i < words.size(); ++i) words.cells()[i] ^= noise.cells()[i];

  const maps::TorusMap cat = maps::TorusMap::classical(s);
  const Matrix<std::uint64_t> plain = maps::unscramble_lattice(cat, words, effective_iterations(params.iterations(), s));

  std::string out;
  out.reserve(block.payload_len);
  for (std::size_t i = 0; i < block.payload_len; ++i) {
    const double cell = std::bit_cast<double>(plain.cells()[i]);
    const double value = std::pow(params.base(), cell);
    const double rounded = std::round(value);
    if (!std::isfinite(value) || rounded < kMinPrintable || rounded > kMaxPrintable ||
        std::fabs(value - rounded) > kRecoveryTolerance) {
      throw IntegrityError("decryption integrity failure at payload cell " + std::to_string(i) +
                           " (wrong key or corrupted ciphertext)");
    }
    out.push_back(static_cast<char>(static_cast<int>(rounded)));
  }
  return PlainText(out);
}

GrayImage encrypt_image(const GrayImage& image, const CipherParams& params) {
  check_image(image);
  const std::uint64_t n = image.rows();
  GrayImage out = maps::scramble_lattice(maps::TorusMap::classical(n), image,
                                         effective_iterations(params.iterations(), n));
  LogisticKeystream stream(params);
  for (auto& px : out) px ^= stream.next_byte();
  return out;
}

GrayImage decrypt_image(const GrayImage& image, const CipherParams& params) {
  check_image(image);
  const std::uint64_t n = image.rows();
  GrayImage mixed = image;
  LogisticKeystream stream(params);
  for (auto& px : mixed) px ^= stream.next_byte();
  return maps::unscramble_lattice(maps::TorusMap::classical(n), mixed,
                                  effective_iterations(params.iterations(), n));
}

}  // namespace chaoslab::cipher
