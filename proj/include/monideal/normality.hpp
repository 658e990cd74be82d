#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monideal/newton.hpp"

namespace monideal {

enum class Verdict { normal, not_normal, undetermined };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::normal: return "normal";
    case Verdict::not_normal: return "not_normal";
    default: return "undetermined";
  }
}

enum class BoundSource { rrv, user };

inline const char* to_string(BoundSource s) { return s == BoundSource::rrv ? "rrv" : "user"; }

/// Outcome of checking closure(I^n) = I^n for n up to a bound.
struct NormalityReport {
  MonomialIdeal ideal;
  std::vector<std::pair<long long, bool>> checked_powers;  // (n, is_closed)
  Verdict verdict = Verdict::undetermined;
  /// Least failing power and a divisibility-minimal witness in
  /// closure(I^n) \ I^n, lex-least among the minimal ones.
  std::optional<std::pair<long long, ExponentVector>> first_failure;
  long long bound_used = 1;
  BoundSource bound_source = BoundSource::rrv;
  /// Zero and unit ideals are normal by convention; this flags them.
  bool degenerate = false;
};

/// I = closure(I). The zero ideal is integrally closed by convention.
inline bool is_integrally_closed(const MonomialIdeal& I) {
  if (I.is_zero()) return true;
  return integral_closure(I) == I;
}

/// Power bound that certifies normality of a monomial ideal in d variables:
/// if I^1, ..., I^{d-1} are all integrally closed, every power is
/// (Reid-Roberts-Vitulli).
inline long long rrv_bound(int dim) { return std::max(1, dim - 1); }

namespace detail {

/// Minimal generators of closure(I^n) that are missing from I^n, in
/// graded-lex order. Empty iff I^n is integrally closed. The closure is
/// computed with the scaled constraint (sum lambda = n against the
/// generators of I); pow = I^n serves as the comparison ideal and as the
/// divisibility shortcut.
inline std::vector<ExponentVector> missing_closure_generators(const MonomialIdeal& I, Exp n,
                                                              const MonomialIdeal& pow) {
  std::vector<Exp> box = closure_box(I, n);
  // The box from I^n's own minimal generators is valid for the same
  // polyhedron and is often tighter; use the smaller of the two.
  std::vector<Exp> alt = closure_box(pow, 1);
  for (std::size_t j = 0; j < box.size(); ++j) box[j] = std::min(box[j], alt[j]);
  std::vector<ExponentVector> closure_gens = np_minimal_points(I, n, box, &pow);
  std::vector<ExponentVector> missing;
  for (auto& g : closure_gens)
    if (!contains(pow, g)) missing.push_back(std::move(g));
  std::sort(missing.begin(), missing.end(), graded_lex_less);
  return missing;
}

}  // namespace detail

/// The integral closure of I^n, computed by scaled membership tests against
/// the generators of I (never by closing the expanded ideal I^n directly,
/// although both routes must agree).
inline MonomialIdeal closure_of_power(const MonomialIdeal& I, long long n) {
  if (n < 1) throw std::invalid_argument("power must be positive");
  if (I.is_zero()) return I;
  MonomialIdeal pow = power(I, n);
  std::vector<Exp> box = detail::closure_box(I, n);
  std::vector<Exp> alt = detail::closure_box(pow, 1);
  for (std::size_t j = 0; j < box.size(); ++j) box[j] = std::min(box[j], alt[j]);
  return MonomialIdeal(I.dim(), detail::np_minimal_points(I, n, box, &pow));
}

/// A divisibility-minimal witness in closure(I^n) \ I^n (lex-least among the
/// minimal ones), or "none" if I^n is integrally closed.
inline std::optional<ExponentVector> first_failure_witness(const MonomialIdeal& I, long long n) {
  if (n < 1) throw std::invalid_argument("power must be positive");
  if (I.is_zero() || I.is_unit()) return std::nullopt;
  auto missing = detail::missing_closure_generators(I, n, power(I, n));
  if (missing.empty()) return std::nullopt;
  return *std::min_element(missing.begin(), missing.end(), lex_less);
}

/// Checks closure(I^n) = I^n for n = 1..bound, where the default bound is
/// the certification bound for d variables (powers 1..d-1 suffice). A user
/// bound below the certification bound yields raw data only: the verdict is
/// "undetermined" when all its checks pass. Stops at the first failing power.
inline NormalityReport is_normal(const MonomialIdeal& I,
                                 std::optional<long long> max_power = std::nullopt) {
  NormalityReport report{.ideal = I};
  if (max_power && *max_power < 1) throw std::invalid_argument("max_power must be positive");
  if (I.is_zero() || I.is_unit()) {
    report.verdict = Verdict::normal;
    report.degenerate = true;
    report.bound_used = max_power.value_or(1);
    return report;
  }
  const long long certified = rrv_bound(I.dim());
  report.bound_used = max_power.value_or(certified);
  // bound_source records the certification authority: any bound covering
  // powers 1..d-1 certifies via the power-bound theorem.
  report.bound_source =
      (max_power && *max_power < certified) ? BoundSource::user : BoundSource::rrv;

  for (long long n = 1; n <= report.bound_used; ++n) {
    auto missing = detail::missing_closure_generators(I, n, power(I, n));
    bool closed = missing.empty();
    report.checked_powers.emplace_back(n, closed);
    if (!closed) {
      report.verdict = Verdict::not_normal;
      report.first_failure = {n, *std::min_element(missing.begin(), missing.end(), lex_less)};
      return report;
    }
  }
  report.verdict =
      report.bound_source == BoundSource::rrv ? Verdict::normal : Verdict::undetermined;
  return report;
}

}  // namespace monideal
