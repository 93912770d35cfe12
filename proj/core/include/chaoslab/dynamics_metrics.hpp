#pragma once

// Lyapunov exponent of the logistic map, parameter sweeps, and the
// key-quality screen built on them. Exponents are in nats per iteration.

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace chaoslab::dynamics {

inline constexpr std::size_t kDefaultBurnIn = 1000;
inline constexpr std::size_t kDefaultPointSamples = 1'000'000;
inline constexpr std::size_t kDefaultSweepSamples = 100'000;
inline constexpr double kDefaultScreenThreshold = 0.05;

struct LyapunovEstimate {
  double r = 0.0;
  double x0 = 0.0;
  std::size_t burn_in = 0;
  std::size_t samples = 0;
  double lambda = 0.0;
  /// Some |r (1 - 2x)| was exactly zero; that term was skipped.
  bool singular = false;
  std::size_t singular_terms = 0;
};

/// lambda = mean of ln|r (1 - 2 x_i)| over `samples` iterates after `burn_in`.
/// Singular terms are excluded from the mean; if every term is singular the
/// estimate is -infinity. Throws DomainError unless r in (0, 4], x0 in (0, 1)
/// and samples >= 1.
LyapunovEstimate lyapunov_logistic(double r, double x0, std::size_t burn_in = kDefaultBurnIn,
                                   std::size_t samples = kDefaultPointSamples);

struct SweepEntry {
  double r = 0.0;
  double lambda = 0.0;
  bool chaotic = false;  // lambda > 0
};

struct SweepReport {
  double r_min = 0.0;
  double r_max = 0.0;
  double step = 0.0;
  std::vector<SweepEntry> entries;

  std::size_t negative_count() const noexcept;
};

/// Grid r_i = r_min + i * step for i = 0 .. floor((r_max - r_min) / step).
/// Grid points are evaluated concurrently; results are assembled in grid
/// order and are bit-identical to a sequential run.
SweepReport lyapunov_sweep(double r_min, double r_max, double step, double x0,
                           std::size_t burn_in = kDefaultBurnIn,
                           std::size_t samples = kDefaultSweepSamples);

/// CSV with header `r,lambda,chaotic`.
void write_sweep_csv(std::ostream& out, const SweepReport& report);

/// lyapunov_logistic(r, x0, 1000, 1e5).lambda > threshold.
bool screen_parameter(double r, double x0, double threshold = kDefaultScreenThreshold);

}  // namespace chaoslab::dynamics
