#include <algorithm>
#include <random>
#include <sstream>

#include "chaoslab/attack_lab.hpp"
#include "chaoslab/chaotic_maps.hpp"
#include "chaoslab/errors.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace chaoslab;
using namespace chaoslab::attack;

namespace {

GrayImage scramble(const GrayImage& img, std::uint64_t k) {
  return maps::scramble_lattice(maps::TorusMap::classical(img.rows()), img, k);
}

}  // namespace

TEST_CASE("naturalness score") {
  CHECK(score_naturalness(testing::gradient_image(64)) > 0.8);
  CHECK(score_naturalness(testing::blob_image(64)) > 0.8);
  CHECK(score_naturalness(testing::photo_image(64)) > 0.8);

  std::mt19937_64 rng(11);
  int below = 0;
  for (int trial = 0; trial < 200; ++trial) below += score_naturalness(testing::random_image(64, rng)) < 0.1 ? 1 : 0;
  CHECK(below >= 198);

  CHECK_THROWS_AS(score_naturalness(GrayImage::square(16, 40)), UndefinedCorrelationError);
}

TEST_CASE("recover k = 7 on a 64 x 64 image") {
  const auto original = testing::gradient_image(64);
  const auto scrambled = scramble(original, 7);
  const auto result = brute_force_unscramble(scrambled, std::nullopt, &original);
  const std::uint64_t period = testing::lattice_cycle_period(1, 1, 64);
  REQUIRE(period == 48);
  CHECK(result.budget == 192);
  CHECK(result.score_trace.size() == 193);
  CHECK((result.recovered_iteration + 7) % period == 0);
  CHECK(result.recovered_iteration == 41);
  CHECK(result.verified);
  CHECK(result.succeeded);
  CHECK(result.candidate == original);
}

TEST_CASE("insufficient budget is reported as a miss") {
  const auto original = testing::blob_image(32);
  const auto result = brute_force_unscramble(scramble(original, 7), 1, &original);
  CHECK(result.budget == 1);
  CHECK(result.score_trace.size() == 2);
  CHECK(result.recovered_iteration <= 1);
  CHECK(result.verified);
  CHECK_FALSE(result.succeeded);
}

TEST_CASE("unscrambled input") {
  const auto original = testing::photo_image(50);
  const auto result = brute_force_unscramble(original, std::nullopt, &original);
  CHECK(result.recovered_iteration == 0);
  CHECK(result.succeeded);

  const auto no_truth = brute_force_unscramble(original);
  CHECK_FALSE(no_truth.verified);
  CHECK_FALSE(no_truth.succeeded);
  CHECK(no_truth.candidate == original);
}

TEST_CASE("true original outscores nearly every other iteration") {
  for (std::size_t n : {32u, 50u, 64u}) {
    const auto original = testing::blob_image(n);
    const auto result = brute_force_unscramble(scramble(original, 5));
    const std::uint64_t period = testing::lattice_cycle_period(1, 1, n);
    double truth_score = 0.0;
    for (const auto& p : result.score_trace) {
      if ((p.iteration + 5) % period == 0) truth_score = p.score;
    }
    std::size_t others = 0, beaten = 0;
    for (const auto& p : result.score_trace) {
      if ((p.iteration + 5) % period == 0) continue;
      ++others;
      beaten += truth_score > p.score ? 1 : 0;
    }
    CHECK(static_cast<double>(beaten) >= 0.95 * static_cast<double>(others));
  }
}

TEST_CASE("attack input validation and trace export") {
  CHECK_THROWS_AS(brute_force_unscramble(GrayImage(4, 5)), DomainError);
  const auto original = testing::gradient_image(8);
  const auto result = brute_force_unscramble(scramble(original, 2), 3);
  std::ostringstream out;
  write_trace_csv(out, result);
  const std::string csv = out.str();
  CHECK(csv.rfind("iteration,score\n0,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}
