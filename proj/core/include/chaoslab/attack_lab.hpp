#pragma once

// Brute-force recovery of cat-map-scrambled images. The classical map's
// period never exceeds 3N, so iterating the map 3N times is guaranteed to
// revisit the original; a correlation score picks it out.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "chaoslab/matrix.hpp"

namespace chaoslab::attack {

/// (|rho_h| + |rho_v|) / 2 over every horizontally and vertically adjacent
/// pair. Throws UndefinedCorrelationError on constant images.
double score_naturalness(const GrayImage& image);

struct TracePoint {
  std::uint64_t iteration = 0;
  double score = 0.0;
};

struct AttackResult {
  std::uint64_t recovered_iteration = 0;
  std::vector<TracePoint> score_trace;  // iterations 0 .. budget
  bool succeeded = false;               // only meaningful when a truth image was given
  bool verified = false;                // a truth image was given
  std::uint64_t budget = 0;
  GrayImage candidate;
};

/// Applies the classical map 0..budget times (budget defaults to 3N) and
/// keeps the most natural-looking candidate; ties go to the smallest
/// iteration. Throws DomainError on non-square images.
AttackResult brute_force_unscramble(const GrayImage& scrambled, std::optional<std::uint64_t> budget = std::nullopt,
                                    const GrayImage* truth = nullptr);

/// CSV with header `iteration,score`.
void write_trace_csv(std::ostream& out, const AttackResult& result);

}  // namespace chaoslab::attack
