#pragma once

// Minimal period of the cat map, Pi(N) = min { n >= 1 : M^n = I (mod N) },
// by three independent routes (matrix iteration, the Fibonacci criterion and
// closed forms for special (a, b, N)), plus a checker for the bound ladder
// m_N <= 3N / 2N / (12/7)N of the classical map.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chaoslab/chaotic_maps.hpp"

namespace chaoslab::period {

enum class PeriodMethod { matrix_power, fibonacci, closed_form };

std::string_view to_string(PeriodMethod method) noexcept;

struct PeriodResult {
  std::uint64_t modulus = 0;
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::uint64_t period = 0;
  PeriodMethod method = PeriodMethod::matrix_power;

  bool operator==(const PeriodResult&) const = default;
};

inline constexpr std::uint64_t kDefaultIterationCap = 1'000'000;

/// Iterates M, M^2, ... until the identity appears. Classical maps always
/// terminate within 3N steps, so their cap is max(cap, 3N); generalized maps
/// throw BudgetError once `cap` multiplications have not found the period.
PeriodResult period_matrix_power(const maps::TorusMap& map,
                                 std::uint64_t cap = kDefaultIterationCap);

/// Classical map only: smallest n with F_{2n} = 0 and F_{2n-1} = 1 (mod N),
/// streaming the Fibonacci sequence with two residues of state.
PeriodResult period_fibonacci(std::uint64_t modulus);

/// F_0 .. F_{count-1} reduced mod N.
struct FibSequenceMod {
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> values;
};

FibSequenceMod fibonacci_mod(std::uint64_t modulus, std::size_t count);

/// True iff both F^n = [[F_{n-1}, F_n], [F_n, F_{n+1}]] and
/// A^n = [[F_{2n-1}, F_{2n}], [F_{2n}, F_{2n+1}]] hold mod N.
bool fibonacci_matrix_identity_check(std::uint64_t n, std::uint64_t modulus);

// ---------------------------------------------------------------------------
// Bound ladder for the classical map.
// ---------------------------------------------------------------------------

enum class BoundClass {
  three_n,          // N = 2 * 5^y, y >= 1: m_N = 3N
  two_n,            // N = 5^y (y >= 1) or N = 6 * 5^y (y >= 0): m_N = 2N
  twelve_sevenths,  // everything else: m_N <= 12N / 7
};

std::string_view to_string(BoundClass bound) noexcept;

/// Family of N in the ladder.
BoundClass classify_modulus(std::uint64_t modulus) noexcept;

struct BoundRecord {
  std::uint64_t modulus = 0;
  std::uint64_t period = 0;
  BoundClass bound = BoundClass::twelve_sevenths;
  bool at_equality = false;  // period == 3N (three_n) or 2N (two_n)
  bool violation = false;
  std::string note;
};

struct BoundReport {
  std::vector<BoundRecord> records;  // ascending N
  std::vector<BoundRecord> violations;
  std::vector<std::string> findings;

  std::vector<std::uint64_t> equality_set(BoundClass bound) const;
};

/// Checks every N in [2, n_max]. Violations are reported, never thrown.
BoundReport check_dyson_bounds(std::uint64_t n_max);

/// One JSON object per line for every record, then one summary object.
void write_bound_report(std::ostream& out, const BoundReport& report);

// ---------------------------------------------------------------------------
// Closed forms for the generalized map.
// ---------------------------------------------------------------------------

/// Every closed-form template matching (a, b): N = ab+1 (a, b != 1) -> 6,
/// ab+2 -> 4, ab+3 -> 3, a^2b^2+5ab+5 -> 5, a^3b^3+7a^2b^2+14ab+7 -> 7,
/// a^2b^2+4ab+2 -> 8. Throws DomainError unless a, b >= 1.
std::vector<PeriodResult> bao_closed_forms(std::uint64_t a, std::uint64_t b);

/// The template for one specific modulus, if any applies.
std::optional<PeriodResult> bao_closed_form(std::uint64_t a, std::uint64_t b, std::uint64_t modulus);

struct ClosedFormMismatch {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t modulus = 0;
  std::uint64_t claimed = 0;
  std::uint64_t measured = 0;
};

struct ClosedFormCheck {
  std::size_t templates_checked = 0;
  std::vector<ClosedFormMismatch> mismatches;
};

/// Brute-forces every template for (a, b) in [1, max_ab]^2.
ClosedFormCheck check_closed_forms(std::uint64_t max_ab);

}  // namespace chaoslab::period
