#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "monideal/exponents.hpp"

namespace monideal {

/// A monomial ideal in d variables, stored as its unique minimal generating
/// antichain in graded-lex order. Minimal generating sets of monomial ideals
/// are unique, so equality of ideals is equality of the stored sets.
///
/// Conventions: the zero ideal is the empty generator set; the unit ideal is
/// the singleton {(0,...,0)}.
class MonomialIdeal {
 public:
  /// The zero ideal in `dim` variables.
  explicit MonomialIdeal(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("ambient dimension must be positive");
  }

  /// Minimalizes `gens` (drops every generator divisible by another one).
  MonomialIdeal(int dim, std::vector<ExponentVector> gens) : MonomialIdeal(dim) {
    for (const auto& g : gens)
      if (g.dim() != dim) throw DimensionError("generator has wrong dimension");
    std::sort(gens.begin(), gens.end(), graded_lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // A proper divisor has strictly smaller total degree, so scanning in
    // graded order against the already accepted antichain is enough.
    for (auto& g : gens) {
      bool redundant = false;
      for (const auto& h : gens_)
        if (h.divides(g)) { redundant = true; break; }
      if (!redundant) gens_.push_back(std::move(g));
    }
  }

  static MonomialIdeal zero(int dim) { return MonomialIdeal(dim); }

  static MonomialIdeal unit(int dim) {
    return MonomialIdeal(dim, {ExponentVector::zero(dim)});
  }

  /// The maximal ideal (x_1, ..., x_d).
  static MonomialIdeal maximal(int dim) {
    std::vector<ExponentVector> g;
    for (int j = 0; j < dim; ++j) g.push_back(ExponentVector::axis(dim, j));
    return MonomialIdeal(dim, std::move(g));
  }

  int dim() const { return dim_; }
  std::span<const ExponentVector> generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].total_degree() == 0; }

  /// Minimal number of generators.
  std::size_t mu() const { return gens_.size(); }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.dim_ == b.dim_ && a.gens_ == b.gens_;
  }

 private:
  int dim_ = 0;
  std::vector<ExponentVector> gens_;
};

inline MonomialIdeal minimalize(std::vector<ExponentVector> gens, int dim) {
  return MonomialIdeal(dim, std::move(gens));
}

/// x^m in I, i.e. some generator divides x^m.
inline bool contains(const MonomialIdeal& I, const ExponentVector& m) {
  if (I.dim() != m.dim()) throw DimensionError("membership query in wrong dimension");
  for (const auto& g : I.generators())
    if (g.divides(m)) return true;
  return false;
}

inline bool is_subideal(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.dim() != J.dim()) throw DimensionError("subideal query in wrong dimension");
  for (const auto& g : I.generators())
    if (!contains(J, g)) return false;
  return true;
}

inline void check_same_dim(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.dim() != J.dim()) throw DimensionError("ideals of different dimension");
}

inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_dim(I, J);
  std::vector<ExponentVector> cand;
  cand.reserve(I.generators().size() * J.generators().size());
  for (const auto& g : I.generators())
    for (const auto& h : J.generators()) cand.push_back(g.plus(h));
  return MonomialIdeal(I.dim(), std::move(cand));
}

/// I^n, with I^0 the unit ideal.
inline MonomialIdeal power(const MonomialIdeal& I, long long n) {
  if (n < 0) throw std::invalid_argument("negative ideal power");
  MonomialIdeal acc = MonomialIdeal::unit(I.dim());
  for (long long i = 0; i < n; ++i) acc = product(acc, I);
  return acc;
}

inline MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_dim(I, J);
  std::vector<ExponentVector> cand(I.generators().begin(), I.generators().end());
  cand.insert(cand.end(), J.generators().begin(), J.generators().end());
  return MonomialIdeal(I.dim(), std::move(cand));
}

inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_dim(I, J);
  std::vector<ExponentVector> cand;
  cand.reserve(I.generators().size() * J.generators().size());
  for (const auto& g : I.generators()) {
    for (const auto& h : J.generators()) {
      std::vector<Exp> m(static_cast<std::size_t>(I.dim()));
      for (int j = 0; j < I.dim(); ++j) m[static_cast<std::size_t>(j)] = std::max(g[j], h[j]);
      cand.emplace_back(std::move(m));
    }
  }
  return MonomialIdeal(I.dim(), std::move(cand));
}

/// (I : J). Colon by the zero ideal returns the unit ideal by convention.
inline MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_dim(I, J);
  if (J.is_zero()) return MonomialIdeal::unit(I.dim());
  std::optional<MonomialIdeal> acc;
  for (const auto& h : J.generators()) {
    std::vector<ExponentVector> shifted;
    shifted.reserve(I.generators().size());
    for (const auto& g : I.generators()) shifted.push_back(g.minus_clamped(h));
    MonomialIdeal part(I.dim(), std::move(shifted));
    acc = acc ? intersect(*acc, part) : part;
  }
  return *acc;
}

inline bool equals(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_dim(I, J);
  return I == J;
}

/// True iff every variable has a pure power among the generators, which for
/// monomial ideals is m-primariness. The unit ideal counts as m-primary by
/// convention (query is_unit to tell the two apart).
inline bool is_m_primary(const MonomialIdeal& I) {
  if (I.is_unit()) return true;
  for (int j = 0; j < I.dim(); ++j) {
    bool found = false;
    for (const auto& g : I.generators()) {
      if (g[j] > 0 && g.total_degree() == g[j]) { found = true; break; }
    }
    if (!found) return false;
  }
  return true;
}

/// Least pure-power exponent of variable j, if any.
inline std::optional<Exp> pure_power_exponent(const MonomialIdeal& I, int j) {
  std::optional<Exp> best;
  for (const auto& g : I.generators())
    if (g[j] > 0 && g.total_degree() == g[j])
      if (!best || g[j] < *best) best = g[j];
  return best;
}

/// Length of R/I: the number of standard monomials. nullopt means infinite
/// (I not m-primary). Standard monomials all lie in the box prod_j [0, p_j)
/// where p_j is the least pure power of variable j in I.
inline std::optional<long long> colength(const MonomialIdeal& I) {
  if (I.is_unit()) return 0;
  std::vector<Exp> box(static_cast<std::size_t>(I.dim()));
  for (int j = 0; j < I.dim(); ++j) {
    auto p = pure_power_exponent(I, j);
    if (!p) return std::nullopt;
    box[static_cast<std::size_t>(j)] = *p;
  }
  long long count = 0;
  std::vector<Exp> cur(static_cast<std::size_t>(I.dim()), 0);
  for (;;) {
    if (!contains(I, ExponentVector(cur))) ++count;
    int j = I.dim() - 1;
    while (j >= 0 && cur[static_cast<std::size_t>(j)] + 1 >= box[static_cast<std::size_t>(j)]) {
      cur[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++cur[static_cast<std::size_t>(j)];
  }
  return count;
}

/// Number of variables that are themselves generators of I. For monomial
/// ideals this is the length of (I + m^2)/m^2, i.e. the longest part of a
/// regular system of parameters contained in I.
inline int rsop_count(const MonomialIdeal& I) {
  int count = 0;
  for (const auto& g : I.generators())
    if (g.total_degree() == 1) ++count;
  return count;
}

/// Embedding dimension of R/I: d minus the number of variables in I.
inline int v_quotient(const MonomialIdeal& I) { return I.dim() - rsop_count(I); }

}  // namespace monideal
