#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monideal/verify.hpp"

namespace monideal::cli {

/// Exit codes: 0 success, 1 failed verification check, 2 usage or parse error.
enum ExitCode { kOk = 0, kAssertionFailed = 1, kUsageError = 2 };

namespace detail {

inline std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
      item.erase(item.begin());
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
      item.pop_back();
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct IdealInput {
  std::string vars_csv;
  std::string inline_text;
  std::string file_path;

  ParsedIdeal load() const {
    if (!inline_text.empty()) {
      std::vector<std::string> vars = split_csv(vars_csv);
      if (vars.empty())
        throw std::invalid_argument("--vars is required with --ideal");
      return {parse_ideal(inline_text, vars), vars};
    }
    std::ifstream in(file_path);
    if (!in) throw std::invalid_argument("cannot open ideal file: " + file_path);
    nlohmann::json j = nlohmann::json::parse(in);
    return ideal_from_json(j);
  }
};

inline void add_ideal_options(CLI::App* cmd, IdealInput& input) {
  auto* vars = cmd->add_option("--vars", input.vars_csv, "comma-separated variable names");
  auto* inl = cmd->add_option("--ideal", input.inline_text,
                              "inline ideal, e.g. \"x^7, y^3, z^2\"");
  auto* file = cmd->add_option("--ideal-file", input.file_path,
                               "JSON ideal file with \"vars\" and \"generators\"");
  inl->excludes(file);
  inl->needs(vars);
  cmd->callback([inl, file]() {
    if (inl->count() == 0 && file->count() == 0)
      throw CLI::RequiredError("one of --ideal or --ideal-file");
  });
}

class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

inline std::uint64_t default_seed() {
  // MONIDEAL_SEED overrides the built-in default seed of 42.
  if (const char* env = std::getenv("MONIDEAL_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("MONIDEAL_SEED is not an unsigned integer");
    }
  }
  return 42;
}

inline void print_normality_text(std::ostream& os, const NormalityReport& rep,
                                 const std::vector<std::string>& vars) {
  os << "verdict: " << to_string(rep.verdict) << "\n";
  os << "bound_used: " << rep.bound_used << "\n";
  os << "bound_source: " << to_string(rep.bound_source) << "\n";
  os << "checked_powers:";
  for (const auto& [n, closed] : rep.checked_powers)
    os << ' ' << n << (closed ? ":closed" : ":not_closed");
  os << "\n";
  if (rep.first_failure)
    os << "first_failure: n=" << rep.first_failure->first
       << " witness=" << format_monomial(rep.first_failure->second, vars) << "\n";
  else
    os << "first_failure: none\n";
  if (rep.degenerate) os << "degenerate: true\n";
}

inline nlohmann::ordered_json normality_json(const NormalityReport& rep,
                                             const std::vector<std::string>& vars) {
  nlohmann::ordered_json j;
  j["ideal"] = ideal_to_json(rep.ideal, vars);
  auto powers = nlohmann::ordered_json::array();
  for (const auto& [n, closed] : rep.checked_powers)
    powers.push_back({{"n", n}, {"is_closed", closed}});
  j["checked_powers"] = std::move(powers);
  j["verdict"] = to_string(rep.verdict);
  if (rep.first_failure)
    j["first_failure"] = {{"power", rep.first_failure->first},
                          {"witness", format_monomial(rep.first_failure->second, vars)}};
  else
    j["first_failure"] = nullptr;
  j["bound_used"] = rep.bound_used;
  j["bound_source"] = to_string(rep.bound_source);
  j["degenerate"] = rep.degenerate;
  return j;
}

}  // namespace detail

/// Runs the CLI on the given arguments (program name excluded), writing to
/// the supplied streams. Returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact monomial-ideal computations: integral closure, normality, invariants",
               "monideal"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1);

  detail::IdealInput input;
  std::string format = "text";
  std::string output_path;
  long long power_n = 1;
  std::optional<long long> max_power;
  long long a_max = 8, c_max = 16;
  std::uint64_t seed = 0;
  bool seed_given = false;
  long long trials = 200;

  auto add_common = [&](CLI::App* cmd, bool ideal_taking) {
    if (ideal_taking) detail::add_ideal_options(cmd, input);
    cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--output", output_path, "write the result to a file instead of stdout");
  };

  auto* closure_cmd = app.add_subcommand("closure", "integral closure of the ideal");
  add_common(closure_cmd, true);
  auto* is_closed_cmd = app.add_subcommand("is-closed", "is the ideal integrally closed?");
  add_common(is_closed_cmd, true);
  auto* is_normal_cmd = app.add_subcommand("is-normal", "normality report for the ideal");
  add_common(is_normal_cmd, true);
  is_normal_cmd->add_option("--max-power", max_power,
                            "check powers up to this bound instead of the certification bound");
  auto* power_closure_cmd =
      app.add_subcommand("power-closure", "integral closure of the n-th power");
  add_common(power_closure_cmd, true);
  power_closure_cmd->add_option("-n,--power", power_n, "the power n")->required();
  auto* invariants_cmd =
      app.add_subcommand("invariants", "mu, colength, v, rsop count, m-primariness");
  add_common(invariants_cmd, true);
  auto* witness_cmd =
      app.add_subcommand("witness", "a monomial in closure(I^n) \\ I^n, if any");
  add_common(witness_cmd, true);
  witness_cmd->add_option("-n,--power", power_n, "the power n")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "grid experiments over the two ideal families");
  std::string family;
  sweep_cmd->add_option("family", family, "lemma-dim2 or thm-dim3")
      ->required()
      ->check(CLI::IsMember({"lemma-dim2", "thm-dim3"}));
  sweep_cmd->add_option("--a-max", a_max, "largest a for lemma-dim2 (default 8)");
  sweep_cmd->add_option("--c-max", c_max, "largest c (default 16 / 12)");
  bool c_max_given = false;
  sweep_cmd->callback([&]() { c_max_given = sweep_cmd->count("--c-max") > 0; });
  sweep_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--output", output_path);

  auto* verify_cmd = app.add_subcommand(
      "verify-paper", "run every example, sweep and corpus check at the default bounds");
  verify_cmd->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });
  verify_cmd->add_option("--trials", trials, "corpus trials per check (default 200)");
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--output", output_path);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsageError;
  }

  try {
    detail::OutputTarget target(output_path, out);
    std::ostream& os = target.stream();

    auto print_ideal = [&](const MonomialIdeal& I, const std::vector<std::string>& vars) {
      if (format == "json") os << ideal_to_json(I, vars).dump(2) << "\n";
      else os << format_ideal(I, vars) << "\n";
    };

    if (closure_cmd->parsed()) {
      auto [I, vars] = input.load();
      print_ideal(integral_closure(I), vars);
    } else if (is_closed_cmd->parsed()) {
      auto [I, vars] = input.load();
      bool closed = is_integrally_closed(I);
      if (format == "json") os << nlohmann::ordered_json{{"is_integrally_closed", closed}}.dump(2) << "\n";
      else os << (closed ? "true" : "false") << "\n";
    } else if (is_normal_cmd->parsed()) {
      auto [I, vars] = input.load();
      NormalityReport rep = is_normal(I, max_power);
      if (format == "json") os << detail::normality_json(rep, vars).dump(2) << "\n";
      else detail::print_normality_text(os, rep, vars);
    } else if (power_closure_cmd->parsed()) {
      auto [I, vars] = input.load();
      print_ideal(closure_of_power(I, power_n), vars);
    } else if (invariants_cmd->parsed()) {
      auto [I, vars] = input.load();
      auto len = colength(I);
      std::string len_str = len ? std::to_string(*len) : "infinite";
      if (format == "json") {
        nlohmann::ordered_json j{{"mu", I.mu()},
                                 {"colength", len ? nlohmann::ordered_json(*len)
                                                  : nlohmann::ordered_json("infinite")},
                                 {"v", v_quotient(I)},
                                 {"rsop_count", rsop_count(I)},
                                 {"m_primary", is_m_primary(I)},
                                 {"unit", I.is_unit()},
                                 {"zero", I.is_zero()}};
        os << j.dump(2) << "\n";
      } else {
        os << "mu: " << I.mu() << "\n"
           << "colength: " << len_str << "\n"
           << "v: " << v_quotient(I) << "\n"
           << "rsop_count: " << rsop_count(I) << "\n"
           << "m_primary: " << (is_m_primary(I) ? "true" : "false") << "\n";
        if (I.is_unit()) os << "unit: true\n";
        if (I.is_zero()) os << "zero: true\n";
      }
    } else if (witness_cmd->parsed()) {
      auto [I, vars] = input.load();
      auto w = first_failure_witness(I, power_n);
      if (format == "json") {
        nlohmann::ordered_json j{{"power", power_n},
                                 {"witness", w ? nlohmann::ordered_json(format_monomial(*w, vars))
                                               : nlohmann::ordered_json(nullptr)}};
        os << j.dump(2) << "\n";
      } else {
        os << (w ? format_monomial(*w, vars) : "none") << "\n";
      }
    } else if (sweep_cmd->parsed()) {
      SweepResult sweep = family == "lemma-dim2"
                              ? sweep_lemma_dim2(a_max, c_max)
                              : sweep_theorem_dim3(c_max_given ? c_max : 12);
      if (format == "json") os << sweep.report.to_json().dump(2) << "\n";
      else write_sweep_csv(os, sweep);
      if (!sweep.report.ok()) {
        err << sweep.report.check_name << ": " << sweep.report.failures.size()
            << " violation(s)\n";
        return kAssertionFailed;
      }
    } else if (verify_cmd->parsed()) {
      PaperVerification v = verify_paper(seed_given ? seed : detail::default_seed(), trials);
      if (format == "json") {
        os << v.to_json().dump(2) << "\n";
      } else {
        for (const auto& r : v.reports) {
          os << (r.ok() ? "PASS " : "FAIL ") << r.check_name << " (passes=" << r.passes
             << ", failures=" << r.failures.size() << ")\n";
          for (const auto& f : r.failures)
            os << "  " << f.input << ": expected " << f.expected << ", got " << f.got << "\n";
        }
        os << (v.ok() ? "all checks passed" : "CHECKS FAILED") << "\n";
      }
      if (!v.ok()) return kAssertionFailed;
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "JSON error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace monideal::cli
