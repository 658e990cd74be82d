#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "monideal/monomial_ideal.hpp"
#include "monideal/simplex.hpp"

namespace monideal {

/// Explicit integral-dependence witness for x^m over I:
/// rho * m = sum counts_i * g_i + slack, with sum counts_i = rho and
/// slack >= 0, so (x^m)^rho lies in I^rho.
struct ClosureCertificate {
  long long rho = 0;
  /// Generator index (into the minimal antichain) -> multiplicity. Only
  /// nonzero multiplicities are stored.
  std::map<std::size_t, long long> factor_counts;
  ExponentVector slack;
};

/// Checks the two certificate invariants exactly.
inline bool certificate_is_valid(const MonomialIdeal& I, const ExponentVector& m,
                                 const ClosureCertificate& cert) {
  if (cert.rho < 1 || cert.slack.dim() != I.dim()) return false;
  long long total = 0;
  std::vector<Exp> combo(static_cast<std::size_t>(I.dim()), 0);
  auto gens = I.generators();
  for (const auto& [idx, count] : cert.factor_counts) {
    if (idx >= gens.size() || count < 0) return false;
    total += count;
    for (int j = 0; j < I.dim(); ++j) combo[static_cast<std::size_t>(j)] += count * gens[idx][j];
  }
  if (total != cert.rho) return false;
  for (int j = 0; j < I.dim(); ++j)
    if (combo[static_cast<std::size_t>(j)] + cert.slack[j] != cert.rho * m[j]) return false;
  return true;
}

/// Membership of the lattice point m in n * NP(I) = conv(n * gens) + R_{>=0}^d,
/// i.e. x^m in the integral closure of I^n, decided by exact rational
/// feasibility of sum lambda_i = n, sum lambda_i g_i <= m.
inline bool np_membership_scaled(const MonomialIdeal& I, const ExponentVector& m, Exp n) {
  if (I.dim() != m.dim()) throw DimensionError("Newton membership in wrong dimension");
  if (I.is_zero()) return false;
  return scaled_feasibility(I.generators(), m, n).feasible;
}

/// m in NP(I), i.e. x^m in the integral closure of I. False for the zero ideal.
inline bool np_membership(const MonomialIdeal& I, const ExponentVector& m) {
  return np_membership_scaled(I, m, 1);
}

/// Feasibility query that also reports the multipliers, for certificate
/// extraction and for the rho-power oracle bound.
inline FeasibilityResult np_feasibility(const MonomialIdeal& I, const ExponentVector& m) {
  if (I.dim() != m.dim()) throw DimensionError("Newton membership in wrong dimension");
  if (I.is_zero()) return {};
  return scaled_feasibility(I.generators(), m, 1);
}

/// Clears denominators of a feasible multiplier vector into an integral
/// dependence certificate; "none" when x^m is not in the closure. rho is the
/// lcm of the multiplier denominators; no attempt is made to minimize it.
inline std::optional<ClosureCertificate> certificate(const MonomialIdeal& I,
                                                     const ExponentVector& m) {
  FeasibilityResult fr = np_feasibility(I, m);
  if (!fr.feasible) return std::nullopt;
  ClosureCertificate cert;
  if (!fr.denominator.fits_slong_p())
    throw std::overflow_error("certificate power does not fit a machine integer");
  cert.rho = fr.denominator.get_si();
  auto gens = I.generators();
  std::vector<Exp> combo(static_cast<std::size_t>(I.dim()), 0);
  for (std::size_t i = 0; i < fr.lambda.size(); ++i) {
    if (sgn(fr.lambda[i]) == 0) continue;
    mpz_class c = fr.lambda[i].get_num() * (fr.denominator / fr.lambda[i].get_den());
    long long count = c.get_si();
    cert.factor_counts[i] = count;
    for (int j = 0; j < I.dim(); ++j) combo[static_cast<std::size_t>(j)] += count * gens[i][j];
  }
  std::vector<Exp> slack(static_cast<std::size_t>(I.dim()));
  for (int j = 0; j < I.dim(); ++j)
    slack[static_cast<std::size_t>(j)] = cert.rho * m[j] - combo[static_cast<std::size_t>(j)];
  cert.slack = ExponentVector(std::move(slack));
  if (!certificate_is_valid(I, m, cert))
    throw std::logic_error("extracted certificate failed its invariants");
  return cert;
}

namespace detail {

/// Minimal lattice points of n * NP(I) inside the box prod_j [0, box_j].
///
/// Why the box suffices: every <=-minimal lattice point m of the polyhedron
/// satisfies m_j <= box_j = n * max_i g_i[j]. Writing m = c + r with c in
/// conv(n * gens) and r >= 0, a coordinate m_j > box_j forces
/// r_j = m_j - c_j >= 1 (both m_j and the bound are integers and c_j is at
/// most the bound), so m - e_j is still in the polyhedron and m was not
/// minimal.
///
/// The staircase is scanned column by column: for a fixed prefix c of the
/// first d-1 coordinates, membership of (c, k) is monotone in k, so the
/// minimal depth t(c) is found by binary search; t is non-increasing in each
/// prefix coordinate, which both caps the search range and identifies the
/// minimal points as the (c, t(c)) whose prefix neighbours all have strictly
/// larger thresholds. The result is the full antichain of minimal generators
/// of the closure of I^n.
///
/// `quick` may name any ideal known to be contained in the closure (I^n
/// itself in practice); divisibility against it short-circuits the exact
/// feasibility call but can never change the answer.
inline std::vector<ExponentVector> np_minimal_points(const MonomialIdeal& I, Exp n,
                                                     const std::vector<Exp>& box,
                                                     const MonomialIdeal* quick = nullptr) {
  const int d = I.dim();
  const Exp min_deg = [&] {
    Exp md = -1;
    for (const auto& g : I.generators())
      if (md < 0 || g.total_degree() < md) md = g.total_degree();
    return md * n;
  }();

  auto member = [&](const std::vector<Exp>& pt) {
    Exp deg = 0;
    for (Exp v : pt) deg += v;
    if (deg < min_deg) return false;
    ExponentVector m{std::vector<Exp>(pt)};
    if (quick && contains(*quick, m)) return true;
    return scaled_feasibility(I.generators(), m, n).feasible;
  };

  const int cd = d - 1;  // prefix coordinates
  std::vector<std::size_t> stride(static_cast<std::size_t>(cd), 1);
  std::size_t total = 1;
  for (int j = cd - 1; j >= 0; --j) {
    stride[static_cast<std::size_t>(j)] = total;
    total *= static_cast<std::size_t>(box[static_cast<std::size_t>(j)] + 1);
  }
  // Hold thresholds per prefix column; kNone marks columns that never meet
  // the polyhedron within the box (hence not at all).
  constexpr Exp kNone = -1;
  std::vector<Exp> threshold(total, kNone);

  const Exp depth_max = box[static_cast<std::size_t>(cd)];
  std::vector<Exp> col(static_cast<std::size_t>(cd), 0);
  std::vector<Exp> pt(static_cast<std::size_t>(d), 0);

  for (std::size_t idx = 0; idx < total; ++idx) {
    Exp hi = depth_max;
    for (int j = 0; j < cd; ++j) {
      if (col[static_cast<std::size_t>(j)] == 0) continue;
      Exp t = threshold[idx - stride[static_cast<std::size_t>(j)]];
      if (t != kNone && t < hi) hi = t;  // t is monotone non-increasing
    }
    for (int j = 0; j < cd; ++j) pt[static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(j)];
    pt[static_cast<std::size_t>(cd)] = hi;
    if (member(pt)) {
      Exp lo = 0;
      while (lo < hi) {
        Exp mid = lo + (hi - lo) / 2;
        pt[static_cast<std::size_t>(cd)] = mid;
        if (member(pt)) hi = mid; else lo = mid + 1;
      }
      threshold[idx] = lo;
    }
    // advance the odometer over prefix columns (row-major / lex order)
    for (int j = cd - 1; j >= 0; --j) {
      if (col[static_cast<std::size_t>(j)] < box[static_cast<std::size_t>(j)]) {
        ++col[static_cast<std::size_t>(j)];
        break;
      }
      col[static_cast<std::size_t>(j)] = 0;
    }
  }

  std::vector<ExponentVector> minimal;
  std::fill(col.begin(), col.end(), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    Exp t = threshold[idx];
    if (t != kNone) {
      bool is_min = true;
      for (int j = 0; j < cd && is_min; ++j) {
        if (col[static_cast<std::size_t>(j)] == 0) continue;
        Exp tn = threshold[idx - stride[static_cast<std::size_t>(j)]];
        if (tn != kNone && tn <= t) is_min = false;
      }
      if (is_min) {
        for (int j = 0; j < cd; ++j) pt[static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(j)];
        pt[static_cast<std::size_t>(cd)] = t;
        minimal.emplace_back(std::vector<Exp>(pt));
      }
    }
    for (int j = cd - 1; j >= 0; --j) {
      if (col[static_cast<std::size_t>(j)] < box[static_cast<std::size_t>(j)]) {
        ++col[static_cast<std::size_t>(j)];
        break;
      }
      col[static_cast<std::size_t>(j)] = 0;
    }
  }
  return minimal;
}

inline std::vector<Exp> closure_box(const MonomialIdeal& I, Exp n) {
  std::vector<Exp> box(static_cast<std::size_t>(I.dim()), 0);
  for (const auto& g : I.generators())
    for (int j = 0; j < I.dim(); ++j)
      box[static_cast<std::size_t>(j)] = std::max(box[static_cast<std::size_t>(j)], n * g[j]);
  return box;
}

}  // namespace detail

/// The integral closure of I: the ideal of all lattice points of NP(I).
/// Returns I itself (as a value) iff I is integrally closed.
inline MonomialIdeal integral_closure(const MonomialIdeal& I) {
  if (I.is_zero()) return I;
  return MonomialIdeal(I.dim(),
                       detail::np_minimal_points(I, 1, detail::closure_box(I, 1), &I));
}

/// Non-negative rational weights, one per variable; a monomial valuation.
struct WeightVector {
  explicit WeightVector(std::vector<mpq_class> w) : weights(std::move(w)) {
    for (const auto& q : weights)
      if (sgn(q) < 0) throw std::invalid_argument("weights must be non-negative");
  }
  int dim() const { return static_cast<int>(weights.size()); }
  std::vector<mpq_class> weights;
};

inline mpq_class weight_of(const WeightVector& w, const ExponentVector& m) {
  if (w.dim() != m.dim()) throw DimensionError("weight/exponent dimension mismatch");
  mpq_class acc = 0;
  for (int j = 0; j < m.dim(); ++j) acc += w.weights[static_cast<std::size_t>(j)] * m[j];
  return acc;
}

/// ord_w(I) = min over generators of <w, g>; the order of the image of I
/// under the monomial map with weights w.
inline mpq_class ord_w(const MonomialIdeal& I, const WeightVector& w) {
  if (I.is_zero()) throw std::domain_error("undefined order: zero ideal");
  if (w.dim() != I.dim()) throw DimensionError("weight dimension mismatch");
  std::optional<mpq_class> best;
  for (const auto& g : I.generators()) {
    mpq_class v = weight_of(w, g);
    if (!best || v < *best) best = v;
  }
  return *best;
}

/// Necessary test for closure membership: <w, m> >= ord_w(I) for every
/// supplied weight. Equivalent to np_membership only when the sample carries
/// all facet normals of NP(I). False for the zero ideal (empty closure).
inline bool valuation_membership(const MonomialIdeal& I, const ExponentVector& m,
                                 std::span<const WeightVector> sample) {
  if (I.is_zero()) return false;
  for (const auto& w : sample)
    if (weight_of(w, m) < ord_w(I, w)) return false;
  return true;
}

}  // namespace monideal
