#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace monideal {

/// Exponent of a single variable. Signed so that clamped subtraction and
/// box arithmetic stay in one type.
using Exp = std::int64_t;

/// Thrown when two objects of different ambient dimension are combined.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A lattice point m in N^d, standing for the monomial x^m.
/// Immutable after construction; entries are always >= 0.
class ExponentVector {
 public:
  ExponentVector() = default;

  explicit ExponentVector(std::vector<Exp> entries) : e_(std::move(entries)) {
    for (Exp v : e_)
      if (v < 0) throw std::invalid_argument("exponent entries must be non-negative");
  }

  static ExponentVector zero(int dim) {
    return ExponentVector(std::vector<Exp>(static_cast<std::size_t>(dim), 0));
  }

  /// k * e_j, the pure power x_j^k.
  static ExponentVector axis(int dim, int j, Exp k = 1) {
    std::vector<Exp> e(static_cast<std::size_t>(dim), 0);
    e.at(static_cast<std::size_t>(j)) = k;
    return ExponentVector(std::move(e));
  }

  int dim() const { return static_cast<int>(e_.size()); }
  Exp operator[](int j) const { return e_[static_cast<std::size_t>(j)]; }
  std::span<const Exp> entries() const { return e_; }

  Exp total_degree() const { return std::accumulate(e_.begin(), e_.end(), Exp{0}); }

  /// x^this divides x^m, i.e. this <= m componentwise.
  bool divides(const ExponentVector& m) const {
    check_same_dim(m);
    for (int j = 0; j < dim(); ++j)
      if (e_[static_cast<std::size_t>(j)] > m[j]) return false;
    return true;
  }

  ExponentVector plus(const ExponentVector& o) const {
    check_same_dim(o);
    std::vector<Exp> r(e_);
    for (int j = 0; j < dim(); ++j) r[static_cast<std::size_t>(j)] += o[j];
    return ExponentVector(std::move(r));
  }

  /// max(this - o, 0) componentwise; the colon-by-monomial shift.
  ExponentVector minus_clamped(const ExponentVector& o) const {
    check_same_dim(o);
    std::vector<Exp> r(e_);
    for (int j = 0; j < dim(); ++j)
      r[static_cast<std::size_t>(j)] = std::max<Exp>(r[static_cast<std::size_t>(j)] - o[j], 0);
    return ExponentVector(std::move(r));
  }

  ExponentVector scaled(Exp n) const {
    std::vector<Exp> r(e_);
    for (Exp& v : r) v *= n;
    return ExponentVector(std::move(r));
  }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.e_ == b.e_;
  }

 private:
  void check_same_dim(const ExponentVector& o) const {
    if (dim() != o.dim()) throw DimensionError("exponent vectors of different dimension");
  }

  std::vector<Exp> e_;
};

inline bool lex_less(const ExponentVector& a, const ExponentVector& b) {
  auto ae = a.entries(), be = b.entries();
  return std::lexicographical_compare(ae.begin(), ae.end(), be.begin(), be.end());
}

/// Total degree first, then lex: the canonical storage order for generators.
inline bool graded_lex_less(const ExponentVector& a, const ExponentVector& b) {
  Exp da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return lex_less(a, b);
}

}  // namespace monideal
