#include "chaoslab/chaotic_maps.hpp"

#include <cmath>
#include <string>

namespace chaoslab::maps {

LogisticState::LogisticState(double r, double x) : r_(r), x_(x) {
  if (!(r > 0.0 && r <= 4.0)) {
    throw DomainError("logistic map: r must lie in (0, 4], got " + std::to_string(r));
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("logistic map: x must lie in [0, 1], got " + std::to_string(x));
  }
}

LogisticState logistic_step(const LogisticState& state) noexcept {
  const double x = state.x();
  // The constructor cannot fail here: r * x * (1 - x) <= r / 4 <= 1.
  return LogisticState(state.r(), state.r() * x * (1.0 - x));
}

std::vector<double> logistic_orbit(const LogisticState& state, std::size_t burn_in, std::size_t n) {
  if (n == 0) throw DomainError("logistic_orbit: n must be at least 1");
  const double r = state.r();
  double x = state.x();
  for (std::size_t i = 0; i < burn_in; ++i) x = r * x * (1.0 - x);
  std::vector<double> orbit;
  orbit.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    x = r * x * (1.0 - x);
    orbit.push_back(x);
  }
  return orbit;
}

GlmParams::GlmParams(double p, double q) : p_(p), q_(q) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("GLM: p must lie in (0, 1)");
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("GLM: q must lie in [0, 1]");
}

double glm_step(const GlmParams& params, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("GLM: x must lie in [0, 1], got " + std::to_string(x));
  }
  const double p = params.p();
  const double q = params.q();
  const double d = p - x;
  const double width = x <= p ? p : 1.0 - p;
  const double y = q - q * (d * d) / (width * width);
  // Rounding can push the endpoints a hair below zero.
  return y < 0.0 ? 0.0 : y;
}

ModMat2 mul_mod(const ModMat2& lhs, const ModMat2& rhs, std::uint64_t n) noexcept {
  const auto& l = lhs.m;
  const auto& r = rhs.m;
  auto dot = [n](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    return ((a * b) % n + (c * d) % n) % n;
  };
  return {{dot(l[0], r[0], l[1], r[2]), dot(l[0], r[1], l[1], r[3]),
           dot(l[2], r[0], l[3], r[2]), dot(l[2], r[1], l[3], r[3])}};
}

ModMat2 pow_mod(ModMat2 base, std::uint64_t exponent, std::uint64_t n) noexcept {
  ModMat2 result = ModMat2::identity();
  for (auto& v : result.m) v %= n;
  while (exponent > 0) {
    if (exponent & 1u) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exponent >>= 1u;
  }
  return result;
}

std::uint64_t reduce(std::int64_t value, std::uint64_t modulus) noexcept {
  const auto n = static_cast<std::int64_t>(modulus);
  std::int64_t r = value % n;
  if (r < 0) r += n;
  return static_cast<std::uint64_t>(r);
}

TorusMap::TorusMap(std::uint64_t a, std::uint64_t b, std::uint64_t modulus)
    : a_(a), b_(b), n_(modulus) {
  if (modulus < 2 || modulus > kMaxModulus) {
    throw DomainError("cat map: modulus must lie in [2, 2^32 - 1], got " + std::to_string(modulus));
  }
}

ModMat2 TorusMap::matrix() const noexcept {
  const std::uint64_t a = a_ % n_;
  const std::uint64_t b = b_ % n_;
  return {{1 % n_, a, b, (1 + (a * b) % n_) % n_}};
}

ModMat2 TorusMap::inverse_matrix() const noexcept {
  const std::uint64_t a = a_ % n_;
  const std::uint64_t b = b_ % n_;
  return {{(1 + (a * b) % n_) % n_, (n_ - a) % n_, (n_ - b) % n_, 1 % n_}};
}

LatticePoint TorusMap::point(std::int64_t x, std::int64_t y) const noexcept {
  return {reduce(x, n_), reduce(y, n_)};
}

LatticePoint apply(const ModMat2& mat, LatticePoint pt, std::uint64_t n) noexcept {
  const auto& m = mat.m;
  const std::uint64_t x = pt.x % n;
  const std::uint64_t y = pt.y % n;
  return {((m[0] * x) % n + (m[1] * y) % n) % n, ((m[2] * x) % n + (m[3] * y) % n) % n};
}

LatticePoint cat_forward(const TorusMap& map, LatticePoint pt) noexcept {
  return apply(map.matrix(), pt, map.modulus());
}

LatticePoint cat_inverse(const TorusMap& map, LatticePoint pt) noexcept {
  return apply(map.inverse_matrix(), pt, map.modulus());
}

std::vector<std::size_t> scramble_permutation(const TorusMap& map, std::uint64_t k) {
  const std::uint64_t n = map.modulus();
  const ModMat2 mk = pow_mod(map.matrix(), k, n);
  std::vector<std::size_t> dest(static_cast<std::size_t>(n * n));
  for (std::uint64_t y = 0; y < n; ++y) {
    for (std::uint64_t x = 0; x < n; ++x) {
      const LatticePoint to = apply(mk, {x, y}, n);
      dest[y * n + x] = static_cast<std::size_t>(to.y * n + to.x);
    }
  }
  return dest;
}

namespace detail {
void check_grid(const TorusMap& map, std::size_t rows, std::size_t cols) {
  if (rows != map.modulus() || cols != map.modulus()) {
    throw DomainError("scramble_lattice: grid is " + std::to_string(rows) + "x" +
                      std::to_string(cols) + " but map modulus is " +
                      std::to_string(map.modulus()));
  }
}
}  // namespace detail

}  // namespace chaoslab::maps
