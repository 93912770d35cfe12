#include "chaoslab/dynamics_metrics.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "chaoslab/errors.hpp"
#include "parallel.hpp"

namespace chaoslab::dynamics {

LyapunovEstimate lyapunov_logistic(double r, double x0, std::size_t burn_in, std::size_t samples) {
  if (!(r > 0.0 && r <= 4.0)) throw DomainError("lyapunov: r must lie in (0, 4], got " + std::to_string(r));
  if (!(x0 > 0.0 && x0 < 1.0)) throw DomainError("lyapunov: x0 must lie in (0, 1), got " + std::to_string(x0));
  if (samples == 0) throw DomainError("lyapunov: samples must be at least 1");

  LyapunovEstimate est{r, x0, burn_in, samples, 0.0, false, 0};
  double x = x0;
  for (std::size_t i = 0; i < burn_in; ++i) x = r * x * (1.0 - x);

  double sum = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double slope = std::fabs(r * (1.0 - 2.0 * x));
    if (slope == 0.0) {
      ++est.singular_terms;
    } else {
      sum += std::log(slope);
      ++used;
    }
    x = r * x * (1.0 - x);
  }
  est.singular = est.singular_terms > 0;
  est.lambda = used > 0 ? sum / static_cast<double>(used) : -std::numeric_limits<double>::infinity();
  return est;
}

std::size_t SweepReport::negative_count() const noexcept {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.lambda < 0.0 ? 1 : 0;
  return n;
}

SweepReport lyapunov_sweep(double r_min, double r_max, double step, double x0, std::size_t burn_in,
                           std::size_t samples) {
  if (!(step > 0.0)) throw DomainError("lyapunov_sweep: step must be positive");
  if (!(r_min <= r_max)) throw DomainError("lyapunov_sweep: r_min must not exceed r_max");

  // The epsilon absorbs representation error in (r_max - r_min) / step.
  const auto count = static_cast<std::size_t>(std::floor((r_max - r_min) / step + 1e-9)) + 1;
  SweepReport report{r_min, r_max, step, std::vector<SweepEntry>(count)};
  detail::parallel_for(count, [&](std::size_t i) {
    const double r = std::min(r_min + static_cast<double>(i) * step, r_max);
    const double lambda = lyapunov_logistic(r, x0, burn_in, samples).lambda;
    report.entries[i] = {r, lambda, lambda > 0.0};
  });
  return report;
}

void write_sweep_csv(std::ostream& out, const SweepReport& report) {
  const auto old_precision = out.precision(10);
  out << "r,lambda,chaotic\n";
  for (const auto& e : report.entries) {
    out << e.r << ',' << e.lambda << ',' << (e.chaotic ? 1 : 0) << '\n';
  }
  out.precision(old_precision);
}

bool screen_parameter(double r, double x0, double threshold) {
  return lyapunov_logistic(r, x0, kDefaultBurnIn, kDefaultSweepSamples).lambda > threshold;
}

}  // namespace chaoslab::dynamics
