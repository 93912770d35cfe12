#include "chaoslab/attack_lab.hpp"

#include <cmath>
#include <ostream>

#include "chaoslab/chaotic_maps.hpp"
#include "chaoslab/errors.hpp"
#include "chaoslab/stat_suite.hpp"

namespace chaoslab::attack {

double score_naturalness(const GrayImage& image) {
  const double h = stats::adjacent_correlation_full(image, stats::Direction::horizontal);
  const double v = stats::adjacent_correlation_full(image, stats::Direction::vertical);
  return (std::fabs(h) + std::fabs(v)) / 2.0;
}

AttackResult brute_force_unscramble(const GrayImage& scrambled, std::optional<std::uint64_t> budget,
                                    const GrayImage* truth) {
  if (!scrambled.is_square() || scrambled.rows() < 2) {
    throw DomainError("brute_force_unscramble needs a square image of at least 2x2");
  }
  const std::uint64_t n = scrambled.rows();
  const maps::TorusMap cat = maps::TorusMap::classical(n);
  const auto step = maps::scramble_permutation(cat, 1);

  AttackResult result;
  result.budget = budget.value_or(3 * n);
  result.score_trace.reserve(result.budget + 1);

  GrayImage current = scrambled;
  GrayImage next(n, n);
  double best_score = -1.0;
  for (std::uint64_t it = 0;; ++it) {
    const double score = score_naturalness(current);
    result.score_trace.push_back({it, score});
    if (score > best_score) {
      best_score = score;
      result.recovered_iteration = it;
      result.candidate = current;
    }
    if (it == result.budget) break;
    auto src = current.cells();
    auto dst = next.cells();
    for (std::size_t i = 0; i < src.size(); ++i) dst[step[i]] = src[i];
    std::swap(current, next);
  }

  if (truth != nullptr) {
    result.verified = true;
    result.succeeded = result.candidate == *truth;
  }
  return result;
}

void write_trace_csv(std::ostream& out, const AttackResult& result) {
  const auto old_precision = out.precision(10);
  out << "iteration,score\n";
  for (const auto& p : result.score_trace) out << p.iteration << ',' << p.score << '\n';
  out.precision(old_precision);
}

}  // namespace chaoslab::attack
