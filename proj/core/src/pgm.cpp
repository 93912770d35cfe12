#include "chaoslab/pgm.hpp"

#include <cctype>
#include <string>

#include "chaoslab/atomic_file.hpp"
#include "chaoslab/errors.hpp"

namespace chaoslab::pgm {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint64_t next_number(const char* what) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw FormatError(std::string("PGM header: expected ") + what);
    }
    std::uint64_t v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_++] - '0');
      if (v > 1'000'000'000) throw FormatError(std::string("PGM header: ") + what + " too large");
    }
    return v;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_offset() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw FormatError("PGM header: missing whitespace before raster");
    }
    return pos_ + 1;
  }

  std::size_t pos_ = 2;

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
};

}  // namespace

bool looks_like_pgm(std::span<const std::uint8_t> bytes) noexcept {
  return bytes.size() >= 3 && bytes[0] == 'P' && bytes[1] == '5' && std::isspace(bytes[2]);
}

GrayImage decode(std::span<const std::uint8_t> bytes) {
  if (!looks_like_pgm(bytes)) throw FormatError("not a binary PGM (P5) file");
  HeaderReader header(bytes);
  const std::uint64_t width = header.next_number("width");
  const std::uint64_t height = header.next_number("height");
  const std::uint64_t maxval = header.next_number("maxval");
  if (width == 0 || height == 0) throw FormatError("PGM image has zero size");
  if (maxval != 255) throw FormatError("only 8-bit PGM (maxval 255) is supported, got " + std::to_string(maxval));
  const std::size_t offset = header.raster_offset();
  const std::uint64_t count = width * height;
  if (bytes.size() - offset < count) throw FormatError("PGM raster truncated");
  std::vector<std::uint8_t> cells(bytes.begin() + static_cast<std::ptrdiff_t>(offset),
                                  bytes.begin() + static_cast<std::ptrdiff_t>(offset + count));
  return GrayImage(height, width, std::move(cells));
}

std::vector<std::uint8_t> encode(const GrayImage& image) {
  const std::string header =
      "P5\n" + std::to_string(image.cols()) + " " + std::to_string(image.rows()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), image.begin(), image.end());
  return out;
}

GrayImage read(const std::filesystem::path& path) { return decode(io::read_file(path)); }

void write(const std::filesystem::path& path, const GrayImage& image) { io::write_file_atomic(path, encode(image)); }

}  // namespace chaoslab::pgm
