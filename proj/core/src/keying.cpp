#include "chaoslab/keying.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "chaoslab/dynamics_metrics.hpp"
#include "chaoslab/errors.hpp"

namespace chaoslab::keying {

namespace {

constexpr std::string_view kHexAlphabet = "0123456789ABCDEF";

int hex_value(char c) noexcept {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

double parse_decimal(const std::string& text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw FormatError("internal: could not parse decimal '" + text + "'");
  }
  return value;
}

std::string chunk_digits(std::string_view chunk) {
  std::string digits;
  digits.reserve(chunk.size());
  for (char c : chunk) digits.push_back(static_cast<char>('0' + hex_digit_value(c)));
  return digits;
}

}  // namespace

SecretKey SecretKey::parse(std::string_view text) {
  if (text.size() != kKeyLength) {
    throw FormatError("secret key must be exactly 40 characters, got " + std::to_string(text.size()));
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (hex_value(text[i]) < 0) {
      throw FormatError("secret key character " + std::to_string(i) +
                        " is not an uppercase hex digit (0-9, A-F)");
    }
  }
  return SecretKey(std::string(text));
}

std::string_view SecretKey::chunk(std::size_t index) const {
  if (index >= kKeyLength / kChunkLength) throw DomainError("chunk index out of range");
  return std::string_view(chars_).substr(index * kChunkLength, kChunkLength);
}

CipherParams::CipherParams(double r, double x0, double base, unsigned iterations)
    : r_(r), x0_(x0), base_(base), iterations_(iterations) {
  if (!(r > 3.6 && r < 4.0)) throw DomainError("cipher params: r must lie in (3.6, 4)");
  if (!(x0 > 0.0 && x0 < 1.0)) throw DomainError("cipher params: x0 must lie in (0, 1)");
  if (!(base > 1.0 && base < 2.0)) throw DomainError("cipher params: base must lie in (1, 2)");
  if (iterations < 1 || iterations > 16) throw DomainError("cipher params: iterations must lie in [1, 16]");
}

unsigned hex_digit_value(char c) {
  const int v = hex_value(c);
  if (v < 0) throw FormatError(std::string("not a hex digit: '") + c + "'");
  return static_cast<unsigned>(v % 10);
}

SecretKey generate_key(ByteSource& source) {
  std::array<std::uint8_t, kKeyLength / 2> bytes{};
  source.fill(bytes);
  std::string chars;
  chars.reserve(kKeyLength);
  for (auto byte : bytes) {
    chars.push_back(kHexAlphabet[byte >> 4]);
    chars.push_back(kHexAlphabet[byte & 0x0F]);
  }
  return SecretKey::parse(chars);
}

bool default_screen(const CipherParams& params) {
  return dynamics::screen_parameter(params.r(), params.x0());
}

ScreenedKey generate_screened_key(ByteSource& source, const ParamScreen& screen, std::size_t max_attempts) {
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    SecretKey key = generate_key(source);
    if (screen(extract_params(key))) return {std::move(key), attempt};
  }
  throw BudgetError("no key passed the parameter screen in " + std::to_string(max_attempts) + " attempts");
}

CipherParams extract_params(const SecretKey& key) {
  std::string r_digits = chunk_digits(key.chunk(0));
  if (r_digits[0] < '6') r_digits[0] = '6';
  // 3.6 itself is outside the open interval.
  if (r_digits == "6000000000") r_digits.back() = '1';

  std::string x_digits = chunk_digits(key.chunk(1));
  if (x_digits == std::string(kChunkLength, '0')) x_digits.back() = '1';

  std::string base_digits = chunk_digits(key.chunk(2));
  base_digits[0] = '1';
  if (base_digits.substr(1) == std::string(kChunkLength - 1, '0')) base_digits[1] = '5';

  unsigned iterations = static_cast<unsigned>(hex_value(key.str()[kIterationPosition]));
  if (iterations == 0) iterations = 1;

  return CipherParams(parse_decimal("3." + r_digits), parse_decimal("0." + x_digits),
                      parse_decimal(base_digits.substr(0, 1) + "." + base_digits.substr(1)), iterations);
}

AvalancheReport avalanche_check(const SecretKey& key) {
  AvalancheReport report{key, {}, {}};
  const CipherParams original = extract_params(key);
  std::string probe = key.str();
  for (std::size_t pos = 0; pos < kKeyLength; ++pos) {
    bool any_change = false;
    for (char replacement : kHexAlphabet) {
      if (replacement == key.str()[pos]) continue;
      probe[pos] = replacement;
      const bool changed = !(extract_params(SecretKey::parse(probe)) == original);
      any_change = any_change || changed;
      if (!changed && pos < 3 * kChunkLength) {
        report.violations.push_back({pos, key.str()[pos], replacement});
      }
    }
    probe[pos] = key.str()[pos];
    if (!any_change) report.dead_positions.push_back(pos);
  }
  return report;
}

double effective_key_space_log2() {
  // r: leading digit in {6,7,8,9}; "6000000000" folds onto "6000000001".
  const double r_values = 4e9 - 1.0;
  // x0: the all-zero chunk folds onto ...0001.
  const double x_values = 1e10 - 1.0;
  // base: leading digit fixed; zero fraction folds onto 1.5.
  const double base_values = 1e9 - 1.0;
  // iterations: hex 0 folds onto 1.
  const double iteration_values = 15.0;
  return std::log2(r_values) + std::log2(x_values) + std::log2(base_values) + std::log2(iteration_values);
}

}  // namespace chaoslab::keying
