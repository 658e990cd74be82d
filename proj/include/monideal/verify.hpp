#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "monideal/io.hpp"
#include "monideal/normality.hpp"
#include "monideal/rng.hpp"

namespace monideal {

/// ceil(c/2) as used by the dimension-3 family bound.
inline long long ceil_half(long long c) { return (c + 1) / 2; }

struct CheckFailure {
  std::string input;
  std::string expected;
  std::string got;
};

/// Result of one verification check. JSON schema:
/// {check_name, params, passes, failures:[{input, expected, got}]}.
struct CheckReport {
  std::string check_name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  long long passes = 0;
  std::vector<CheckFailure> failures;

  bool ok() const { return failures.empty(); }

  void expect(bool cond, const std::string& input, const std::string& expected,
              const std::string& got) {
    if (cond) ++passes;
    else failures.push_back({input, expected, got});
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["check_name"] = check_name;
    j["params"] = params;
    j["passes"] = passes;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& f : failures)
      arr.push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
    j["failures"] = std::move(arr);
    return j;
  }
};

/// One grid cell of an (a,b,c)-family experiment. b is absent for the
/// two-variable family.
struct SweepRecord {
  long long a = 0;
  std::optional<long long> b;
  long long c = 0;
  bool is_closed = false;
  bool bound_holds = false;
  Verdict normal_verdict = Verdict::undetermined;
  std::optional<ExponentVector> witness;
  long long mu = 0;
  long long colength = 0;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  std::vector<std::string> vars;  // for witness formatting
  CheckReport report;
};

/// Columns exactly: a,b,c,is_closed,bound_holds,normal_verdict,witness,mu,colength.
inline void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
  os << "a,b,c,is_closed,bound_holds,normal_verdict,witness,mu,colength\n";
  for (const auto& r : sweep.records) {
    os << r.a << ',';
    if (r.b) os << *r.b;
    os << ',' << r.c << ',' << (r.is_closed ? "true" : "false") << ','
       << (r.bound_holds ? "true" : "false") << ',' << to_string(r.normal_verdict) << ',';
    if (r.witness) os << format_monomial(*r.witness, sweep.vars);
    os << ',' << r.mu << ',' << r.colength << '\n';
  }
}

namespace detail {

inline std::string ideal_diff(const MonomialIdeal& expected, const MonomialIdeal& got,
                              const std::vector<std::string>& vars) {
  std::string missing, extra;
  for (const auto& g : expected.generators())
    if (!std::ranges::count(got.generators(), g))
      missing += (missing.empty() ? "" : ", ") + format_monomial(g, vars);
  for (const auto& g : got.generators())
    if (!std::ranges::count(expected.generators(), g))
      extra += (extra.empty() ? "" : ", ") + format_monomial(g, vars);
  std::string out = "(" + format_ideal(got, vars) + ")";
  if (!missing.empty()) out += " missing {" + missing + "}";
  if (!extra.empty()) out += " extra {" + extra + "}";
  return out;
}

}  // namespace detail

/// Reproduces the introduction's worked example: Q = (X^7, Y^3, Z^2),
/// I = closure(Q) with its eight listed generators, closure(I^2) != I^2,
/// and I^2 = QI.
inline CheckReport verify_intro_example() {
  CheckReport r{.check_name = "intro_example"};
  const std::vector<std::string> vars{"x", "y", "z"};
  MonomialIdeal Q = parse_ideal("x^7, y^3, z^2", vars);
  MonomialIdeal listed = parse_ideal(
      "x^7, y^3, z^2, x^5*y, x^4*z, x^3*y^2, x^2*y*z, y^2*z", vars);

  MonomialIdeal closure = integral_closure(Q);
  r.expect(closure == listed, "closure(" + format_ideal(Q, vars) + ")",
           "(" + format_ideal(listed, vars) + ")", detail::ideal_diff(listed, closure, vars));

  r.expect(is_integrally_closed(listed), "is_integrally_closed(I)", "true", "false");

  MonomialIdeal I2 = power(listed, 2);
  MonomialIdeal cl2 = closure_of_power(listed, 2);
  r.expect(!(cl2 == I2), "closure(I^2) vs I^2", "different",
           "equal: (" + format_ideal(I2, vars) + ")");
  auto witness = first_failure_witness(listed, 2);
  r.expect(witness.has_value(), "witness in closure(I^2) \\ I^2", "present", "none");

  MonomialIdeal QI = product(Q, listed);
  r.expect(I2 == QI, "I^2 vs Q*I", "(" + format_ideal(I2, vars) + ")",
           detail::ideal_diff(I2, QI, vars));
  return r;
}

/// Reproduces the three explicit three-variable examples: the two closures
/// of (X^n, Y^n, Z) with their generator counts and embedding dimensions,
/// and the closure of (X^2, Y^2, Z^4) with its normality.
inline CheckReport verify_examples() {
  CheckReport r{.check_name = "examples"};
  const std::vector<std::string> vars{"x", "y", "z"};

  auto check_example = [&](const std::string& label, const std::string& input,
                           const std::string& listed, long long mu, int v) {
    MonomialIdeal I = parse_ideal(input, vars);
    MonomialIdeal expected = parse_ideal(listed, vars);
    MonomialIdeal closure = integral_closure(I);
    r.expect(closure == expected, label + ": closure(" + input + ")",
             "(" + listed + ")", detail::ideal_diff(expected, closure, vars));
    r.expect(static_cast<long long>(closure.mu()) == mu, label + ": mu",
             std::to_string(mu), std::to_string(closure.mu()));
    r.expect(v_quotient(closure) == v, label + ": v(R/I)", std::to_string(v),
             std::to_string(v_quotient(closure)));
    auto rep = is_normal(closure);
    r.expect(rep.verdict == Verdict::normal, label + ": is_normal", "normal",
             to_string(rep.verdict));
  };

  check_example("3.5(1)", "x^3, y^3, z", "x^3, x^2*y, x*y^2, y^3, z", 5, 2);
  check_example("3.5(2)", "x^4, y^4, z", "x^4, x^3*y, x^2*y^2, x*y^3, y^4, z", 6, 2);
  check_example("post-3.5", "x^2, y^2, z^4", "x^2, x*y, y^2, z^4, x*z^2, y*z^2", 6, 3);
  return r;
}

/// Grid experiment over J = (X^2, XZ^a, Z^c) in two variables. Cells with
/// a <= ceil(c/2) must be integrally closed and normal; cells outside the
/// hypothesis are recorded without assertion.
inline SweepResult sweep_lemma_dim2(long long a_max, long long c_max) {
  if (a_max < 2 || c_max < 2) throw std::invalid_argument("sweep bounds must be at least 2");
  SweepResult sweep;
  sweep.vars = {"x", "z"};
  sweep.report.check_name = "sweep_lemma_dim2";
  sweep.report.params = {{"a_max", a_max}, {"c_max", c_max}};
  for (long long a = 1; a <= a_max; ++a) {
    for (long long c = 2; c <= c_max; ++c) {
      MonomialIdeal J(2, {ExponentVector({2, 0}), ExponentVector({1, a}),
                          ExponentVector({0, c})});
      NormalityReport rep = is_normal(J);
      SweepRecord rec;
      rec.a = a;
      rec.c = c;
      rec.is_closed = rep.checked_powers.front().second;
      rec.bound_holds = a <= ceil_half(c);
      rec.normal_verdict = rep.verdict;
      if (rep.first_failure) rec.witness = rep.first_failure->second;
      rec.mu = static_cast<long long>(J.mu());
      rec.colength = colength(J).value();
      if (rec.bound_holds) {
        std::string cell = "(a,c)=(" + std::to_string(a) + "," + std::to_string(c) + ")";
        sweep.report.expect(rec.is_closed && rep.verdict == Verdict::normal, cell,
                            "integrally closed and normal",
                            std::string(rec.is_closed ? "closed" : "not closed") + ", " +
                                to_string(rep.verdict));
      }
      sweep.records.push_back(std::move(rec));
    }
  }
  return sweep;
}

/// Grid experiment over I = (X^2, XY, Y^2, Z^c, XZ^a, YZ^b) with
/// 1 <= a <= b <= c-1. Asserts: closed implies (b <= ceil(c/2) and normal);
/// and when b > ceil(c/2), the first-failure witness at power 1 is
/// Y Z^{ceil(c/2)}.
inline SweepResult sweep_theorem_dim3(long long c_max) {
  if (c_max < 2) throw std::invalid_argument("sweep bound must be at least 2");
  SweepResult sweep;
  sweep.vars = {"x", "y", "z"};
  sweep.report.check_name = "sweep_theorem_dim3";
  sweep.report.params = {{"c_max", c_max}};
  for (long long a = 1; a <= c_max - 1; ++a) {
    for (long long b = a; b <= c_max - 1; ++b) {
      for (long long c = std::max<long long>(b + 1, 2); c <= c_max; ++c) {
        MonomialIdeal I(3, {ExponentVector({2, 0, 0}), ExponentVector({1, 1, 0}),
                            ExponentVector({0, 2, 0}), ExponentVector({0, 0, c}),
                            ExponentVector({1, 0, a}), ExponentVector({0, 1, b})});
        NormalityReport rep = is_normal(I);
        SweepRecord rec;
        rec.a = a;
        rec.b = b;
        rec.c = c;
        rec.is_closed = rep.checked_powers.front().second;
        rec.bound_holds = b <= ceil_half(c);
        rec.normal_verdict = rep.verdict;
        if (rep.first_failure) rec.witness = rep.first_failure->second;
        rec.mu = static_cast<long long>(I.mu());
        rec.colength = colength(I).value();

        std::string cell = "(a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")";
        bool cell_ok = true;
        if (rec.is_closed && !(rec.bound_holds && rep.verdict == Verdict::normal)) {
          cell_ok = false;
          sweep.report.failures.push_back(
              {cell, "closed implies b <= ceil(c/2) and normal",
               std::string("bound ") + (rec.bound_holds ? "holds" : "fails") + ", " +
                   to_string(rep.verdict)});
        }
        if (!rec.bound_holds) {
          ExponentVector expected({0, 1, ceil_half(c)});
          bool witness_ok = rep.first_failure && rep.first_failure->first == 1 &&
                            rep.first_failure->second == expected;
          if (!witness_ok) {
            cell_ok = false;
            sweep.report.failures.push_back(
                {cell, "witness " + format_monomial(expected, sweep.vars) + " at power 1",
                 rep.first_failure
                     ? "power " + std::to_string(rep.first_failure->first) + ", " +
                           format_monomial(rep.first_failure->second, sweep.vars)
                     : "none"});
          }
        }
        if (cell_ok) ++sweep.report.passes;
        sweep.records.push_back(std::move(rec));
      }
    }
  }
  return sweep;
}

/// Parameters of a reproducible random corpus.
struct CorpusSpec {
  int dim = 3;
  long long trials = 200;
  std::uint64_t seed = 42;
  Exp exp_bound = 4;
  int gens_min = 2;
  int gens_max = 6;

  nlohmann::ordered_json to_json() const {
    return {{"dim", dim},       {"trials", trials},       {"seed", seed},
            {"exp_bound", exp_bound}, {"gens_min", gens_min}, {"gens_max", gens_max}};
  }
};

/// Deterministic stream of integrally closed m-primary ideals.
///
/// Each draw takes a generator count uniform in [gens_min, gens_max], that
/// many nonzero exponent vectors uniform in the box [0, exp_bound]^d
/// (all-zero draws are rejected and redrawn), one pure power of every
/// variable with exponent uniform in [1, exp_bound], and returns the
/// integral closure. The construction forces both standing hypotheses.
class RandomClosedIdeals {
 public:
  explicit RandomClosedIdeals(const CorpusSpec& spec) : spec_(spec), rng_(spec.seed) {
    if (spec.trials < 0 || spec.gens_min < 1 || spec.gens_max < spec.gens_min ||
        spec.exp_bound < 1 || spec.dim < 1)
      throw std::invalid_argument("invalid corpus spec");
  }

  MonomialIdeal next() {
    const int d = spec_.dim;
    int count = static_cast<int>(rng_.uniform(spec_.gens_min, spec_.gens_max));
    std::vector<ExponentVector> gens;
    for (int i = 0; i < count; ++i) {
      std::vector<Exp> e(static_cast<std::size_t>(d));
      for (;;) {
        Exp deg = 0;
        for (int j = 0; j < d; ++j) {
          e[static_cast<std::size_t>(j)] = rng_.uniform(0, spec_.exp_bound);
          deg += e[static_cast<std::size_t>(j)];
        }
        if (deg > 0) break;
      }
      gens.emplace_back(e);
    }
    for (int j = 0; j < d; ++j)
      gens.push_back(ExponentVector::axis(d, j, rng_.uniform(1, spec_.exp_bound)));
    return integral_closure(MonomialIdeal(d, std::move(gens)));
  }

 private:
  CorpusSpec spec_;
  Rng rng_;
};

namespace detail {

inline CheckReport corpus_check(const CorpusSpec& spec, const std::string& name,
                                auto hypothesis, auto conclusion, auto describe) {
  CheckReport r{.check_name = name, .params = spec.to_json()};
  RandomClosedIdeals stream(spec);
  const std::vector<std::string> vars = default_vars(spec.dim);
  for (long long t = 0; t < spec.trials; ++t) {
    MonomialIdeal I = stream.next();
    if (!hypothesis(I)) continue;
    if (conclusion(I)) ++r.passes;
    else {
      auto [expected, got] = describe(I);
      r.failures.push_back({"(" + format_ideal(I, vars) + ")", expected, got});
    }
  }
  if (r.passes == 0 && r.failures.empty())
    r.failures.push_back({"corpus", "at least one instance satisfying the hypothesis", "0"});
  return r;
}

}  // namespace detail

/// Over the corpus: mu(I) <= d+2 implies v(R/I) <= 2.
inline CheckReport corpus_check_div2(const CorpusSpec& spec) {
  if (spec.dim < 3) throw std::invalid_argument("div2 check needs dim >= 3");
  return detail::corpus_check(
      spec, "corpus_div2",
      [&](const MonomialIdeal& I) { return static_cast<long long>(I.mu()) <= spec.dim + 2; },
      [](const MonomialIdeal& I) { return v_quotient(I) <= 2; },
      [](const MonomialIdeal& I) {
        return std::pair<std::string, std::string>{"v(R/I) <= 2",
                                                   "v = " + std::to_string(v_quotient(I))};
      });
}

/// Over the corpus: I inside m^2 (no variable among the generators) implies
/// mu(I) >= mu(m^2) = d(d+1)/2, by m-fullness of integrally closed ideals.
inline CheckReport corpus_check_watanabe(const CorpusSpec& spec) {
  if (spec.dim < 3) throw std::invalid_argument("watanabe check needs dim >= 3");
  long long floor_mu = static_cast<long long>(spec.dim) * (spec.dim + 1) / 2;
  return detail::corpus_check(
      spec, "corpus_watanabe",
      [](const MonomialIdeal& I) { return rsop_count(I) == 0; },
      [&](const MonomialIdeal& I) { return static_cast<long long>(I.mu()) >= floor_mu; },
      [&](const MonomialIdeal& I) {
        return std::pair<std::string, std::string>{"mu >= " + std::to_string(floor_mu),
                                                   "mu = " + std::to_string(I.mu())};
      });
}

/// Over the corpus: v(R/I) <= 2 implies I is normal.
inline CheckReport corpus_check_main_normality(const CorpusSpec& spec) {
  if (spec.dim < 3) throw std::invalid_argument("normality check needs dim >= 3");
  return detail::corpus_check(
      spec, "corpus_main_normality",
      [](const MonomialIdeal& I) { return v_quotient(I) <= 2; },
      [](const MonomialIdeal& I) { return is_normal(I).verdict == Verdict::normal; },
      [](const MonomialIdeal& I) {
        return std::pair<std::string, std::string>{"normal",
                                                   to_string(is_normal(I).verdict)};
      });
}

/// Over corpus pairs in two variables: the product of two integrally closed
/// ideals is integrally closed.
inline CheckReport corpus_check_zariski(const CorpusSpec& spec) {
  if (spec.dim != 2) throw std::invalid_argument("zariski check needs dim == 2");
  CheckReport r{.check_name = "corpus_zariski", .params = spec.to_json()};
  RandomClosedIdeals stream(spec);
  const std::vector<std::string> vars = default_vars(2);
  for (long long t = 0; t < spec.trials; ++t) {
    MonomialIdeal I = stream.next();
    MonomialIdeal J = stream.next();
    MonomialIdeal P = product(I, J);
    if (is_integrally_closed(P)) ++r.passes;
    else
      r.failures.push_back({"(" + format_ideal(I, vars) + ") * (" + format_ideal(J, vars) + ")",
                            "product integrally closed", "(" + format_ideal(P, vars) + ")"});
  }
  if (r.passes == 0 && r.failures.empty())
    r.failures.push_back({"corpus", "at least one pair", "0"});
  return r;
}

struct PaperVerification {
  std::vector<CheckReport> reports;
  bool ok() const {
    for (const auto& r : reports)
      if (!r.ok()) return false;
    return true;
  }
  nlohmann::ordered_json to_json() const {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    return arr;
  }
};

/// Runs every verification check at the default bounds: the two worked
/// example suites, both grid sweeps, and all corpus property checks at
/// dimensions 3 and 4 (2 for the product check).
inline PaperVerification verify_paper(std::uint64_t seed, long long trials) {
  PaperVerification v;
  v.reports.push_back(verify_intro_example());
  v.reports.push_back(verify_examples());
  v.reports.push_back(sweep_lemma_dim2(8, 16).report);
  v.reports.push_back(sweep_theorem_dim3(12).report);
  for (int d : {3, 4}) {
    CorpusSpec spec{.dim = d, .trials = trials, .seed = seed};
    v.reports.push_back(corpus_check_div2(spec));
    v.reports.push_back(corpus_check_watanabe(spec));
    v.reports.push_back(corpus_check_main_normality(spec));
  }
  v.reports.push_back(corpus_check_zariski({.dim = 2, .trials = trials, .seed = seed}));
  return v;
}

}  // namespace monideal
