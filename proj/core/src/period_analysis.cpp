#include "chaoslab/period_analysis.hpp"

#include <algorithm>
#include <ostream>

#include "json.hpp"

namespace chaoslab::period {

using maps::ModMat2;
using maps::TorusMap;

std::string_view to_string(PeriodMethod method) noexcept {
  switch (method) {
    case PeriodMethod::matrix_power: return "matrix_power";
    case PeriodMethod::fibonacci: return "fibonacci";
    case PeriodMethod::closed_form: return "closed_form";
  }
  return "unknown";
}

std::string_view to_string(BoundClass bound) noexcept {
  switch (bound) {
    case BoundClass::three_n: return "3N";
    case BoundClass::two_n: return "2N";
    case BoundClass::twelve_sevenths: return "12N/7";
  }
  return "unknown";
}

PeriodResult period_matrix_power(const TorusMap& map, std::uint64_t cap) {
  const std::uint64_t n = map.modulus();
  if (map.is_classical()) cap = std::max(cap, 3 * n);

  const ModMat2 step = map.matrix();
  const ModMat2 identity = ModMat2::identity();
  ModMat2 power = step;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (power == identity) return {n, map.a(), map.b(), k, PeriodMethod::matrix_power};
    power = maps::mul_mod(power, step, n);
  }
  throw BudgetError("period not found within budget of " + std::to_string(cap) +
                    " iterations (a=" + std::to_string(map.a()) + ", b=" + std::to_string(map.b()) +
                    ", N=" + std::to_string(n) + ")");
}

PeriodResult period_fibonacci(std::uint64_t n) {
  if (n < 2) throw DomainError("period_fibonacci: N must be at least 2");
  // Walk pairs (F_{2k-1}, F_{2k}); each step advances the index by two.
  std::uint64_t odd = 1;   // F_1
  std::uint64_t even = 1;  // F_2
  for (std::uint64_t k = 1;; ++k) {
    if (even == 0 && odd == 1) return {n, 1, 1, k, PeriodMethod::fibonacci};
    const std::uint64_t next_odd = (odd + even) % n;
    const std::uint64_t next_even = (next_odd + even) % n;
    odd = next_odd;
    even = next_even;
  }
}

FibSequenceMod fibonacci_mod(std::uint64_t modulus, std::size_t count) {
  if (modulus < 1) throw DomainError("fibonacci_mod: modulus must be positive");
  FibSequenceMod seq{modulus, {}};
  seq.values.reserve(count);
  std::uint64_t prev = 0;
  std::uint64_t cur = 1 % modulus;
  for (std::size_t i = 0; i < count; ++i) {
    seq.values.push_back(prev);
    const std::uint64_t next = (prev + cur) % modulus;
    prev = cur;
    cur = next;
  }
  return seq;
}

bool fibonacci_matrix_identity_check(std::uint64_t n, std::uint64_t modulus) {
  if (n < 1) throw DomainError("fibonacci_matrix_identity_check: n must be at least 1");
  if (modulus < 2) throw DomainError("fibonacci_matrix_identity_check: modulus must be at least 2");
  const auto fib = fibonacci_mod(modulus, static_cast<std::size_t>(2 * n + 2)).values;

  const ModMat2 f{{0, 1, 1, 1}};
  const ModMat2 fn = maps::pow_mod(f, n, modulus);
  const ModMat2 expected_fn{{fib[n - 1], fib[n], fib[n], fib[n + 1]}};

  const ModMat2 an = maps::pow_mod(TorusMap::classical(modulus).matrix(), n, modulus);
  const ModMat2 expected_an{{fib[2 * n - 1], fib[2 * n], fib[2 * n], fib[2 * n + 1]}};

  return fn == expected_fn && an == expected_an;
}

namespace {

// n == base * 5^k for some k >= min_exp.
bool is_scaled_power_of_five(std::uint64_t n, std::uint64_t base, unsigned min_exp) {
  if (n % base != 0) return false;
  n /= base;
  unsigned exp = 0;
  while (n % 5 == 0) {
    n /= 5;
    ++exp;
  }
  return n == 1 && exp >= min_exp;
}

}  // namespace

BoundClass classify_modulus(std::uint64_t n) noexcept {
  // 2 * 5^0 = 2 is excluded: its period is 3, not 6.
  if (is_scaled_power_of_five(n, 2, 1)) return BoundClass::three_n;
  if (is_scaled_power_of_five(n, 1, 1) || is_scaled_power_of_five(n, 6, 0)) return BoundClass::two_n;
  return BoundClass::twelve_sevenths;
}

std::vector<std::uint64_t> BoundReport::equality_set(BoundClass bound) const {
  std::vector<std::uint64_t> out;
  for (const auto& rec : records) {
    const bool eq3 = rec.period == 3 * rec.modulus;
    const bool eq2 = rec.period == 2 * rec.modulus;
    if ((bound == BoundClass::three_n && eq3) || (bound == BoundClass::two_n && eq2)) {
      out.push_back(rec.modulus);
    }
  }
  return out;
}

BoundReport check_dyson_bounds(std::uint64_t n_max) {
  if (n_max < 2) throw DomainError("check_dyson_bounds: N_max must be at least 2");
  BoundReport report;
  report.records.reserve(static_cast<std::size_t>(n_max - 1));
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    BoundRecord rec;
    rec.modulus = n;
    rec.period = period_matrix_power(TorusMap::classical(n)).period;
    rec.bound = classify_modulus(n);

    const std::uint64_t p = rec.period;
    switch (rec.bound) {
      case BoundClass::three_n:
        rec.at_equality = p == 3 * n;
        rec.violation = !rec.at_equality;
        break;
      case BoundClass::two_n:
        rec.at_equality = p == 2 * n;
        rec.violation = !rec.at_equality;
        break;
      case BoundClass::twelve_sevenths:
        rec.violation = 7 * p > 12 * n;
        break;
    }
    if (p > 3 * n) rec.violation = true;

    if (n == 2) {
      rec.note = "N=2=2*5^0 has period 3 < 3N; equality family 2*5^y applied for y>=1 only";
      report.findings.push_back(rec.note);
    }
    if (rec.violation) report.violations.push_back(rec);
    report.records.push_back(std::move(rec));
  }
  return report;
}

void write_bound_report(std::ostream& out, const BoundReport& report) {
  for (const auto& rec : report.records) {
    nlohmann::json line = {
        {"N", rec.modulus},
        {"period", rec.period},
        {"bound", to_string(rec.bound)},
        {"equality", rec.at_equality},
        {"violation", rec.violation},
    };
    if (!rec.note.empty()) line["note"] = rec.note;
    out << line.dump() << '\n';
  }
  nlohmann::json summary = {
      {"summary", true},
      {"checked", report.records.size()},
      {"violations", report.violations.size()},
      {"findings", report.findings},
  };
  out << summary.dump() << '\n';
}

std::vector<PeriodResult> bao_closed_forms(std::uint64_t a, std::uint64_t b) {
  if (a < 1 || b < 1) throw DomainError("bao_closed_forms: a and b must be at least 1");
  const std::uint64_t ab = a * b;
  std::vector<PeriodResult> out;
  auto add = [&](std::uint64_t n, std::uint64_t period) {
    if (n >= 2 && n <= maps::kMaxModulus) out.push_back({n, a, b, period, PeriodMethod::closed_form});
  };
  if (a != 1 && b != 1) add(ab + 1, 6);
  add(ab + 2, 4);
  add(ab + 3, 3);
  add(ab * ab + 5 * ab + 5, 5);
  add(ab * ab * ab + 7 * ab * ab + 14 * ab + 7, 7);
  add(ab * ab + 4 * ab + 2, 8);
  return out;
}

std::optional<PeriodResult> bao_closed_form(std::uint64_t a, std::uint64_t b, std::uint64_t modulus) {
  for (const auto& r : bao_closed_forms(a, b)) {
    if (r.modulus == modulus) return r;
  }
  return std::nullopt;
}

ClosedFormCheck check_closed_forms(std::uint64_t max_ab) {
  ClosedFormCheck check;
  for (std::uint64_t a = 1; a <= max_ab; ++a) {
    for (std::uint64_t b = 1; b <= max_ab; ++b) {
      for (const auto& claim : bao_closed_forms(a, b)) {
        ++check.templates_checked;
        std::uint64_t measured = 0;
        try {
          measured = period_matrix_power(TorusMap(a, b, claim.modulus)).period;
        } catch (const BudgetError&) {
          measured = 0;
        }
        if (measured != claim.period) {
          check.mismatches.push_back({a, b, claim.modulus, claim.period, measured});
        }
      }
    }
  }
  return check;
}

}  // namespace chaoslab::period
