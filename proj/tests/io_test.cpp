#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "chaoslab/atomic_file.hpp"
#include "chaoslab/container.hpp"
#include "chaoslab/errors.hpp"
#include "chaoslab/pgm.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace chaoslab;
namespace fs = std::filesystem;

namespace {

cipher::CipherBlock random_block(std::mt19937_64& rng, std::uint32_t side, std::uint64_t len) {
  cipher::CipherBlock block;
  block.side = side;
  block.payload_len = len;
  block.words = Matrix<std::uint64_t>::square(side);
  for (auto& w : block.words) w = rng();
  return block;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("chaoslab_io_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::vector<std::uint8_t> bytes_of(std::string_view s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("container round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto side = static_cast<std::uint32_t>(2 + rng() % 40);
    const std::uint64_t len = 1 + rng() % (side * side / 2);
    const auto block = random_block(rng, side, len);
    const auto bytes = container::serialize(block);
    CHECK(bytes.size() == container::kHeaderSize + 8u * side * side);
    CHECK(container::has_magic(bytes));
    CHECK(container::deserialize(bytes) == block);
  }
}

TEST_CASE("container header layout") {
  std::mt19937_64 rng(4);
  auto block = random_block(rng, 3, 4);
  block.words(0, 0) = 0x0102030405060708ull;
  const auto bytes = container::serialize(block);
  CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "CHLB");
  CHECK(bytes[4] == 1);
  CHECK(bytes[5] == 0);
  CHECK(bytes[8] == 3);
  CHECK(bytes[16] == 4);
  CHECK(bytes[17] == 0);
  CHECK(bytes[18] == 0x08);
  CHECK(bytes[25] == 0x01);
}

TEST_CASE("container rejects malformed input") {
  std::mt19937_64 rng(5);
  const auto good = container::serialize(random_block(rng, 4, 5));

  auto bad_magic = good;
  bad_magic[0] = 'X';
  CHECK_THROWS_AS(container::deserialize(bad_magic), FormatError);

  auto bad_version = good;
  bad_version[4] = 2;
  CHECK_THROWS_AS(container::deserialize(bad_version), FormatError);

  auto truncated = good;
  truncated.pop_back();
  CHECK_THROWS_AS(container::deserialize(truncated), FormatError);

  auto trailing = good;
  trailing.push_back(0);
  CHECK_THROWS_AS(container::deserialize(trailing), FormatError);

  auto too_long = good;
  too_long[16] = 9;  // payload 9 needs side^2 >= 18
  CHECK_THROWS_AS(container::deserialize(too_long), FormatError);

  auto empty_payload = good;
  empty_payload[16] = 0;
  CHECK_THROWS_AS(container::deserialize(empty_payload), FormatError);

  CHECK_THROWS_AS(container::deserialize(std::vector<std::uint8_t>(3, 0)), FormatError);
  CHECK_FALSE(container::has_magic(std::vector<std::uint8_t>{'C', 'H'}));
}

TEST_CASE("pgm round trip") {
  const auto img = testing::photo_image(17);
  const auto bytes = pgm::encode(img);
  CHECK(pgm::looks_like_pgm(bytes));
  CHECK(pgm::decode(bytes) == img);
}

TEST_CASE("pgm header with comments") {
  std::string text = "P5\n# made by hand\n3 # width\n2\n# maxval next\n255\n";
  text += std::string("\x01\x02\x03\x04\x05\xff", 6);
  const auto img = pgm::decode(bytes_of(text));
  REQUIRE(img.rows() == 2);
  REQUIRE(img.cols() == 3);
  CHECK(img(0, 0) == 1);
  CHECK(img(1, 2) == 255);
}

TEST_CASE("pgm rejects unsupported input") {
  CHECK_THROWS_AS(pgm::decode(bytes_of("P2\n2 2\n255\n0 0 0 0\n")), FormatError);
  CHECK_THROWS_AS(pgm::decode(bytes_of(std::string("P5\n2 2\n65535\n") + std::string(8, '\0'))), FormatError);
  CHECK_THROWS_AS(pgm::decode(bytes_of("P5\n2 2\n255\n\x01\x02")), FormatError);
  CHECK_THROWS_AS(pgm::decode(bytes_of("P5\n0 2\n255\n")), FormatError);
  CHECK_THROWS_AS(pgm::decode(bytes_of("P5\n2")), FormatError);
  CHECK_FALSE(pgm::looks_like_pgm(bytes_of("P6\n")));
}

TEST_CASE("atomic write") {
  TempDir dir;
  const fs::path target = dir.path / "out.bin";
  io::write_file_atomic(target, std::string_view("first"));
  io::write_file_atomic(target, std::string_view("second"));
  const auto back = io::read_file(target);
  CHECK(std::string(back.begin(), back.end()) == "second");

  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path)) ++entries;
  CHECK(entries == 1);

  CHECK_THROWS(io::write_file_atomic(dir.path / "missing" / "x.bin", std::string_view("data")));
  CHECK_FALSE(fs::exists(dir.path / "missing"));
  CHECK_THROWS_AS(io::read_file(dir.path / "nope"), FormatError);
}

TEST_CASE("pgm file helpers") {
  TempDir dir;
  const auto img = testing::gradient_image(8);
  pgm::write(dir.path / "g.pgm", img);
  CHECK(pgm::read(dir.path / "g.pgm") == img);
}
