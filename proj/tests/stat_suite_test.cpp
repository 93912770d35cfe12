#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "chaoslab/cipher_core.hpp"
#include "chaoslab/errors.hpp"
#include "chaoslab/stat_suite.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace chaoslab;
using namespace chaoslab::stats;
using doctest::Approx;

namespace {

GrayImage filled(std::size_t n, std::uint8_t v) { return GrayImage::square(n, v); }

const keying::CipherParams kParams(3.9123456789, 0.3141592653, 1.6180339887, 5);

}  // namespace

TEST_CASE("entropy examples") {
  std::vector<std::uint8_t> uniform;
  for (int rep = 0; rep < 4; ++rep) {
    for (int b = 0; b < 256; ++b) uniform.push_back(static_cast<std::uint8_t>(b));
  }
  CHECK(shannon_entropy(uniform) == Approx(8.0).epsilon(1e-15));
  CHECK(shannon_entropy(std::vector<std::uint8_t>(100, 9)) == 0.0);
  CHECK(shannon_entropy(std::vector<std::uint8_t>{1, 1, 1, 2}) == Approx(0.811278124459132864).epsilon(1e-14));
  CHECK_THROWS_AS(shannon_entropy(std::vector<std::uint8_t>{}), DomainError);

  const std::vector<int> ints{7, 7, 7, 1000};
  CHECK(shannon_entropy_of<int>(ints) == Approx(0.811278124459132864).epsilon(1e-14));
}

TEST_CASE("entropy stays within the alphabet bound") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint8_t> data(1 + rng() % 5000);
    for (auto& b : data) b = static_cast<std::uint8_t>(rng() % (1 + trial * 12));
    const double h = shannon_entropy(data);
    CHECK(h >= 0.0);
    CHECK(h <= 8.0 + 1e-12);
  }
}

TEST_CASE("word entropy buckets by top byte") {
  std::vector<std::uint64_t> words;
  for (std::uint64_t b = 0; b < 256; ++b) words.push_back((b << 56) | 0xABCDEFull);
  CHECK(word_entropy(words) == Approx(8.0));
  CHECK(word_entropy(std::vector<std::uint64_t>(10, 0x00FF'FFFF'FFFF'FFFFull)) == 0.0);
}

TEST_CASE("histogram export") {
  GrayImage img(2, 2, std::vector<std::uint8_t>{0, 0, 5, 255});
  const auto h = histogram(img);
  CHECK(h[0] == 2);
  CHECK(h[5] == 1);
  CHECK(h[255] == 1);
  std::ostringstream out;
  write_histogram(out, img);
  std::istringstream in(out.str());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 256);
}

TEST_CASE("correlation examples") {
  std::mt19937_64 rng(2);
  GrayImage rows(16, 16);
  for (std::size_t r = 0; r < 16; ++r) {
    for (std::size_t c = 0; c < 16; ++c) rows(r, c) = static_cast<std::uint8_t>(r * 13);
  }
  CHECK(adjacent_correlation(rows, Direction::horizontal, 4096, rng) == Approx(1.0));
  CHECK(adjacent_correlation_full(rows, Direction::horizontal) == Approx(1.0));

  GrayImage board(16, 16);
  for (std::size_t r = 0; r < 16; ++r) {
    for (std::size_t c = 0; c < 16; ++c) board(r, c) = (r + c) % 2 ? 255 : 0;
  }
  CHECK(adjacent_correlation(board, Direction::horizontal, 4096, rng) == Approx(-1.0));
  CHECK(adjacent_correlation_full(board, Direction::vertical) == Approx(-1.0));
  CHECK(adjacent_correlation_full(board, Direction::diagonal) == Approx(1.0));

  CHECK_THROWS_AS(adjacent_correlation(filled(8, 4), Direction::horizontal, 100, rng), UndefinedCorrelationError);
  CHECK_THROWS_AS(adjacent_correlation_full(filled(8, 4), Direction::vertical), UndefinedCorrelationError);
  CHECK_THROWS_AS(adjacent_correlation(filled(1, 4), Direction::horizontal, 100, rng), DomainError);
  CHECK_THROWS_AS(adjacent_correlation(rows, Direction::horizontal, 1, rng), DomainError);
}

TEST_CASE("correlation is invariant under a joint affine map") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> px(0, 100);
  for (int trial = 0; trial < 10; ++trial) {
    GrayImage img(24, 24);
    for (auto& p : img) p = static_cast<std::uint8_t>(px(rng));
    GrayImage scaled = img;
    for (auto& p : scaled) p = static_cast<std::uint8_t>(2 * p + 10);
    for (auto d : {Direction::horizontal, Direction::vertical, Direction::diagonal}) {
      CHECK(adjacent_correlation_full(scaled, d) == Approx(adjacent_correlation_full(img, d)).epsilon(1e-12));
      std::mt19937_64 a(trial), b(trial);
      CHECK(adjacent_correlation(scaled, d, 512, a) == Approx(adjacent_correlation(img, d, 512, b)).epsilon(1e-12));
    }
  }
}

TEST_CASE("sampled correlation is reproducible") {
  const auto img = testing::photo_image(32);
  std::mt19937_64 a(9), b(9);
  CHECK(adjacent_correlation(img, Direction::vertical, 300, a) == adjacent_correlation(img, Direction::vertical, 300, b));
}

TEST_CASE("npcr uaci mse examples") {
  CHECK(npcr(filled(4, 3), filled(4, 3)) == 0.0);
  CHECK(npcr(filled(4, 3), filled(4, 4)) == 100.0);
  GrayImage a(2, 2, std::uint8_t{0});
  GrayImage b = a;
  b(1, 0) = 1;
  CHECK(npcr(a, b) == 25.0);

  CHECK(uaci(filled(3, 0), filled(3, 0)) == 0.0);
  CHECK(uaci(filled(3, 0), filled(3, 255)) == Approx(100.0));
  CHECK(uaci(filled(3, 0), filled(3, 51)) == Approx(20.0));

  const auto same = mse_psnr(filled(3, 7), filled(3, 7));
  CHECK(same.mse == 0.0);
  CHECK(std::isinf(same.psnr_db));
  const auto full = mse_psnr(filled(3, 0), filled(3, 255));
  CHECK(full.mse == 65025.0);
  CHECK(full.psnr_db == Approx(0.0));
  const auto fifth = mse_psnr(filled(3, 0), filled(3, 51));
  CHECK(fifth.mse == 2601.0);
  CHECK(fifth.psnr_db == Approx(13.979400086720376).epsilon(1e-12));

  CHECK_THROWS_AS(npcr(filled(3, 0), filled(4, 0)), DomainError);
  CHECK_THROWS_AS(uaci(filled(3, 0), GrayImage(3, 4)), DomainError);
  CHECK_THROWS_AS(mse_psnr(filled(2, 0), filled(3, 0)), DomainError);
}

TEST_CASE("pair metrics are symmetric and vanish only on equal images") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = testing::random_image(12, rng);
    auto y = x;
    if (trial % 4 != 0) y(rng() % 12, rng() % 12) ^= static_cast<std::uint8_t>(1 + rng() % 255);
    CHECK(npcr(x, y) == npcr(y, x));
    CHECK(uaci(x, y) == uaci(y, x));
    CHECK(mse_psnr(x, y).mse == mse_psnr(y, x).mse);
    const bool equal = x == y;
    CHECK((npcr(x, y) == 0.0) == equal);
    CHECK((uaci(x, y) == 0.0) == equal);
    CHECK((mse_psnr(x, y).mse == 0.0) == equal);
  }
}

TEST_CASE("differential pair") {
  std::mt19937_64 rng(5);
  const auto img = testing::random_image(64, rng);
  CHECK_THROWS_AS(differential_pair(img, kParams, 64, 0), DomainError);
  CHECK_THROWS_AS(differential_pair(img, kParams, 0, 64), DomainError);

  // Same image twice through the deterministic image pipeline.
  const auto c = cipher::encrypt_image(img, kParams);
  CHECK(npcr(c, cipher::encrypt_image(img, kParams)) == 0.0);

  // Permutation and keystream do not depend on the plaintext, so a one-pixel
  // change reaches exactly one ciphertext pixel.
  const auto d = differential_pair(img, kParams, 10, 20);
  CHECK(d.npcr == Approx(100.0 / 4096.0));
  CHECK(d.uaci > 0.0);
  CHECK(d.uaci <= 100.0 / 4096.0);
}

TEST_CASE("analysis report") {
  std::mt19937_64 rng(6);
  const auto constant = analyze_image(filled(8, 77), rng);
  CHECK(constant.entropy_bits == 0.0);
  CHECK_FALSE(constant.corr_h.has_value());
  CHECK_FALSE(constant.corr_v.has_value());
  CHECK_FALSE(constant.corr_d.has_value());

  const auto img = testing::photo_image(32);
  const auto pair = analyze_pair(img, img, rng);
  CHECK(pair.npcr_pct == 0.0);
  CHECK(pair.mse == 0.0);
  REQUIRE(pair.psnr_db.has_value());
  CHECK(std::isinf(*pair.psnr_db));

  std::ostringstream out;
  write_report(out, constant);
  CHECK(out.str() ==
        "alphabet=bytes(256)\nentropy_bits=0\ncorr_h=undefined\ncorr_v=undefined\ncorr_d=undefined\n");

  std::ostringstream pair_out;
  write_report(pair_out, pair);
  CHECK(pair_out.str().find("npcr_pct=0\n") != std::string::npos);
  CHECK(pair_out.str().find("psnr_db=inf\n") != std::string::npos);
  CHECK_THROWS_AS(analyze_pair(img, filled(8, 0), rng), DomainError);
}
