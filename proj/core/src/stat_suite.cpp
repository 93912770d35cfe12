#include "chaoslab/stat_suite.hpp"

#include <limits>
#include <ostream>
#include <vector>

#include "chaoslab/cipher_core.hpp"

namespace chaoslab::stats {

namespace {

struct Offset {
  std::size_t dr;
  std::size_t dc;
};

Offset offset_of(Direction d) noexcept {
  switch (d) {
    case Direction::horizontal: return {0, 1};
    case Direction::vertical: return {1, 0};
    case Direction::diagonal: return {1, 1};
  }
  return {0, 1};
}

void require_same_shape(const GrayImage& lhs, const GrayImage& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw DomainError("image dimensions differ: " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) +
                      " vs " + std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
  }
  if (lhs.empty()) throw DomainError("images are empty");
}

void require_pairs(const GrayImage& image) {
  if (image.rows() < 2 || image.cols() < 2) throw DomainError("correlation needs an image of at least 2x2");
}

}  // namespace

double shannon_entropy(std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) throw DomainError("entropy of empty data is undefined");
  std::array<std::size_t, 256> counts{};
  for (auto b : bytes) ++counts[b];
  const double total = static_cast<double>(bytes.size());
  double h = 0.0;
  for (auto c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    h -= p * std::log2(p);
  }
  return h;
}

double word_entropy(std::span<const std::uint64_t> words) {
  std::vector<std::uint8_t> buckets;
  buckets.reserve(words.size());
  for (auto w : words) buckets.push_back(static_cast<std::uint8_t>(w >> 56));
  return shannon_entropy(buckets);
}

std::array<std::uint64_t, 256> histogram(const GrayImage& image) {
  std::array<std::uint64_t, 256> counts{};
  for (auto px : image) ++counts[px];
  return counts;
}

void write_histogram(std::ostream& out, const GrayImage& image) {
  for (auto c : histogram(image)) out << c << '\n';
}

std::string_view to_string(Direction direction) noexcept {
  switch (direction) {
    case Direction::horizontal: return "horizontal";
    case Direction::vertical: return "vertical";
    case Direction::diagonal: return "diagonal";
  }
  return "unknown";
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw DomainError("pearson needs two equal-length samples of size >= 2");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw UndefinedCorrelationError("undefined correlation: zero variance");
  return sxy / std::sqrt(sxx * syy);
}

double adjacent_correlation(const GrayImage& image, Direction direction, std::size_t sample_count,
                            std::mt19937_64& rng) {
  require_pairs(image);
  if (sample_count < 2) throw DomainError("correlation needs at least 2 samples");
  const auto [dr, dc] = offset_of(direction);
  std::uniform_int_distribution<std::size_t> row(0, image.rows() - 1 - dr);
  std::uniform_int_distribution<std::size_t> col(0, image.cols() - 1 - dc);
  std::vector<double> xs(sample_count), ys(sample_count);
  for (std::size_t i = 0; i < sample_count; ++i) {
    const std::size_t r = row(rng);
    const std::size_t c = col(rng);
    xs[i] = image(r, c);
    ys[i] = image(r + dr, c + dc);
  }
  return pearson(xs, ys);
}

double adjacent_correlation_full(const GrayImage& image, Direction direction) {
  require_pairs(image);
  const auto [dr, dc] = offset_of(direction);
  std::vector<double> xs, ys;
  xs.reserve((image.rows() - dr) * (image.cols() - dc));
  ys.reserve(xs.capacity());
  for (std::size_t r = 0; r + dr < image.rows(); ++r) {
    for (std::size_t c = 0; c + dc < image.cols(); ++c) {
      xs.push_back(image(r, c));
      ys.push_back(image(r + dr, c + dc));
    }
  }
  return pearson(xs, ys);
}

double npcr(const GrayImage& lhs, const GrayImage& rhs) {
  require_same_shape(lhs, rhs);
  std::size_t differ = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) differ += lhs.cells()[i] != rhs.cells()[i] ? 1 : 0;
  return 100.0 * static_cast<double>(differ) / static_cast<double>(lhs.size());
}

double uaci(const GrayImage& lhs, const GrayImage& rhs) {
  require_same_shape(lhs, rhs);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const int d = static_cast<int>(lhs.cells()[i]) - static_cast<int>(rhs.cells()[i]);
    total += static_cast<std::uint64_t>(d < 0 ? -d : d);
  }
  return 100.0 * static_cast<double>(total) / (255.0 * static_cast<double>(lhs.size()));
}

MsePsnr mse_psnr(const GrayImage& lhs, const GrayImage& rhs) {
  require_same_shape(lhs, rhs);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const std::int64_t d = static_cast<std::int64_t>(lhs.cells()[i]) - static_cast<std::int64_t>(rhs.cells()[i]);
    total += static_cast<std::uint64_t>(d * d);
  }
  const double mse = static_cast<double>(total) / static_cast<double>(lhs.size());
  const double psnr = mse == 0.0 ? std::numeric_limits<double>::infinity() : 10.0 * std::log10(255.0 * 255.0 / mse);
  return {mse, psnr};
}

DifferentialResult differential_pair(const GrayImage& image, const keying::CipherParams& params, std::size_t row,
                                     std::size_t col) {
  if (row >= image.rows() || col >= image.cols()) {
    throw DomainError("differential_pair: flip position (" + std::to_string(row) + ", " + std::to_string(col) +
                      ") outside the image");
  }
  GrayImage flipped = image;
  flipped(row, col) = static_cast<std::uint8_t>(flipped(row, col) + 1);
  const GrayImage c1 = cipher::encrypt_image(image, params);
  const GrayImage c2 = cipher::encrypt_image(flipped, params);
  return {npcr(c1, c2), uaci(c1, c2)};
}

AnalysisReport analyze_image(const GrayImage& image, std::mt19937_64& rng, std::size_t samples) {
  AnalysisReport report;
  report.entropy_bits = shannon_entropy(image.cells());
  auto corr = [&](Direction d) -> std::optional<double> {
    try {
      return adjacent_correlation(image, d, samples, rng);
    } catch (const UndefinedCorrelationError&) {
      return std::nullopt;
    }
  };
  report.corr_h = corr(Direction::horizontal);
  report.corr_v = corr(Direction::vertical);
  report.corr_d = corr(Direction::diagonal);
  return report;
}

AnalysisReport analyze_pair(const GrayImage& first, const GrayImage& second, std::mt19937_64& rng,
                            std::size_t samples) {
  require_same_shape(first, second);
  AnalysisReport report = analyze_image(first, rng, samples);
  report.npcr_pct = npcr(first, second);
  report.uaci_pct = uaci(first, second);
  const MsePsnr mp = mse_psnr(first, second);
  report.mse = mp.mse;
  report.psnr_db = mp.psnr_db;
  return report;
}

void write_report(std::ostream& out, const AnalysisReport& report) {
  const auto old_precision = out.precision(8);
  auto field = [&out](std::string_view key, const std::optional<double>& v) {
    out << key << '=';
    if (!v) {
      out << "undefined";
    } else if (std::isinf(*v)) {
      out << "inf";
    } else {
      out << *v;
    }
    out << '\n';
  };
  out << "alphabet=" << report.alphabet << '\n';
  field("entropy_bits", report.entropy_bits);
  field("corr_h", report.corr_h);
  field("corr_v", report.corr_v);
  field("corr_d", report.corr_d);
  if (report.npcr_pct) {
    field("npcr_pct", report.npcr_pct);
    field("uaci_pct", report.uaci_pct);
    field("mse", report.mse);
    field("psnr_db", report.psnr_db);
  }
  out.precision(old_precision);
}

}  // namespace chaoslab::stats
