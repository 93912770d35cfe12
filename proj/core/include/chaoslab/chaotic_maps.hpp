#pragma once

// Logistic map, generalized logistic map (GLM) and the Arnold cat map family
// acting on integer lattices. Everything here is a pure function of its
// arguments; all types are immutable after construction.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "chaoslab/errors.hpp"
#include "chaoslab/matrix.hpp"

namespace chaoslab::maps {

// ---------------------------------------------------------------------------
// Logistic map  x <- r x (1 - x)
// ---------------------------------------------------------------------------

class LogisticState {
 public:
  /// Throws DomainError unless 0 < r <= 4 and 0 <= x <= 1.
  LogisticState(double r, double x);

  double r() const noexcept { return r_; }
  double x() const noexcept { return x_; }

 private:
  double r_;
  double x_;
};

/// One application of the map. No clamping: [0,1] is forward-invariant for r <= 4.
LogisticState logistic_step(const LogisticState& state) noexcept;

/// Discards `burn_in` iterates, then returns the next `n` iterates in order.
std::vector<double> logistic_orbit(const LogisticState& state, std::size_t burn_in, std::size_t n);

// ---------------------------------------------------------------------------
// Generalized logistic map: two parabolas meeting at the vertex (p, q).
// ---------------------------------------------------------------------------

class GlmParams {
 public:
  /// Throws DomainError unless 0 < p < 1 and 0 <= q <= 1.
  GlmParams(double p, double q);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

 private:
  double p_;
  double q_;
};

/// Throws DomainError when x lies outside [0, 1]. Result lies in [0, q].
double glm_step(const GlmParams& params, double x);

// ---------------------------------------------------------------------------
// Cat map family on the N x N lattice.
// ---------------------------------------------------------------------------

/// 2x2 matrix over Z_N, stored row-major {m00, m01, m10, m11}.
struct ModMat2 {
  std::array<std::uint64_t, 4> m{};

  static constexpr ModMat2 identity() noexcept { return {{1, 0, 0, 1}}; }
  bool operator==(const ModMat2&) const = default;
};

/// Product modulo N. Every partial product is reduced, so any N < 2^32 is safe.
ModMat2 mul_mod(const ModMat2& lhs, const ModMat2& rhs, std::uint64_t modulus) noexcept;

/// lhs^exponent modulo N by binary exponentiation.
ModMat2 pow_mod(ModMat2 base, std::uint64_t exponent, std::uint64_t modulus) noexcept;

/// Reduces an arbitrary (possibly negative) integer into [0, modulus).
std::uint64_t reduce(std::int64_t value, std::uint64_t modulus) noexcept;

/// Largest supported lattice side / modulus.
inline constexpr std::uint64_t kMaxModulus = 0xFFFF'FFFFull;

struct LatticePoint {
  std::uint64_t x = 0;  // column
  std::uint64_t y = 0;  // row

  bool operator==(const LatticePoint&) const = default;
};

/// The generalized cat map [[1, a], [b, 1 + ab]] modulo N. The classical
/// Arnold map is a = b = 1. The determinant is 1, so the map is a bijection
/// of the lattice for every (a, b, N).
class TorusMap {
 public:
  /// Throws DomainError unless 2 <= modulus <= kMaxModulus.
  TorusMap(std::uint64_t a, std::uint64_t b, std::uint64_t modulus);

  static TorusMap classical(std::uint64_t modulus) { return TorusMap(1, 1, modulus); }

  std::uint64_t a() const noexcept { return a_; }
  std::uint64_t b() const noexcept { return b_; }
  std::uint64_t modulus() const noexcept { return n_; }
  bool is_classical() const noexcept { return a_ == 1 && b_ == 1; }

  /// Forward matrix reduced mod N.
  ModMat2 matrix() const noexcept;
  /// [[1 + ab, -a], [-b, 1]] reduced mod N.
  ModMat2 inverse_matrix() const noexcept;

  /// Builds a point with both coordinates reduced mod N.
  LatticePoint point(std::int64_t x, std::int64_t y) const noexcept;

 private:
  std::uint64_t a_;
  std::uint64_t b_;
  std::uint64_t n_;
};

/// (x, y) -> (x + a y, b x + (1 + ab) y) mod N.
LatticePoint cat_forward(const TorusMap& map, LatticePoint pt) noexcept;

/// Exact inverse of cat_forward.
LatticePoint cat_inverse(const TorusMap& map, LatticePoint pt) noexcept;

/// Applies a 2x2 matrix to a point modulo N.
LatticePoint apply(const ModMat2& mat, LatticePoint pt, std::uint64_t modulus) noexcept;

/// Destination index of every lattice cell after `k` forward iterations:
/// result[y * N + x] is the row-major index of cat_forward^k(x, y).
std::vector<std::size_t> scramble_permutation(const TorusMap& map, std::uint64_t k);

namespace detail {
void check_grid(const TorusMap& map, std::size_t rows, std::size_t cols);
}

/// Moves the entry at (x, y) to cat_forward^k(x, y). Grid rows are the y
/// coordinate, columns the x coordinate. Throws DomainError if the grid is
/// not N x N for the map's modulus N.
template <typename T>
Matrix<T> scramble_lattice(const TorusMap& map, const Matrix<T>& grid, std::uint64_t k) {
  detail::check_grid(map, grid.rows(), grid.cols());
  if (k == 0) return grid;
  const auto dest = scramble_permutation(map, k);
  Matrix<T> out(grid.rows(), grid.cols());
  auto src = grid.cells();
  auto dst = out.cells();
  for (std::size_t i = 0; i < src.size(); ++i) dst[dest[i]] = src[i];
  return out;
}

/// Inverse of scramble_lattice with the same (map, k).
template <typename T>
Matrix<T> unscramble_lattice(const TorusMap& map, const Matrix<T>& grid, std::uint64_t k) {
  detail::check_grid(map, grid.rows(), grid.cols());
  if (k == 0) return grid;
  const auto dest = scramble_permutation(map, k);
  Matrix<T> out(grid.rows(), grid.cols());
  auto src = grid.cells();
  auto dst = out.cells();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[dest[i]];
  return out;
}

}  // namespace chaoslab::maps
