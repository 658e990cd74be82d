#pragma once

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "monideal/monomial_ideal.hpp"

#include <json.hpp>

namespace monideal {

/// Inline ideal grammar error; `position` is the 0-based character offset.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

namespace detail {

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class IdealParser {
 public:
  IdealParser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  MonomialIdeal parse() {
    skip_ws();
    // Extensions to the grammar for the degenerate ideals: "0" is the zero
    // ideal and "1" denotes the trivial monomial, so every ideal round-trips.
    if (peek() == '0') {
      ++pos_;
      skip_ws();
      if (pos_ != text_.size()) throw ParseError("unexpected input after 0", pos_);
      return MonomialIdeal::zero(static_cast<int>(vars_.size()));
    }
    std::vector<ExponentVector> gens;
    gens.push_back(monomial());
    skip_ws();
    while (pos_ < text_.size()) {
      expect(',');
      gens.push_back(monomial());
      skip_ws();
    }
    return MonomialIdeal(static_cast<int>(vars_.size()), std::move(gens));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  ExponentVector monomial() {
    std::vector<Exp> e(vars_.size(), 0);
    skip_ws();
    if (peek() == '1') {
      ++pos_;
      return ExponentVector(std::move(e));
    }
    factor(e);
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      factor(e);
      skip_ws();
    }
    return ExponentVector(std::move(e));
  }

  void factor(std::vector<Exp>& e) {
    skip_ws();
    if (!is_ident_start(peek()))
      throw ParseError("expected a variable name", pos_);
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident(text_[pos_])) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    std::size_t var = 0;
    for (; var < vars_.size(); ++var)
      if (vars_[var] == name) break;
    if (var == vars_.size()) throw ParseError("unknown variable '" + name + "'", start);
    Exp k = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t dstart = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected a positive integer exponent", pos_);
      k = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        k = k * 10 + (text_[pos_] - '0');
        if (k > (Exp{1} << 40)) throw ParseError("exponent too large", dstart);
        ++pos_;
      }
      if (k == 0) throw ParseError("exponent must be positive", dstart);
    }
    e[var] += k;
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the inline grammar: comma-separated monomials, each a `*`-joined
/// list of `var` or `var^k` factors. The variable list fixes the dimension
/// and the coordinate order.
inline MonomialIdeal parse_ideal(std::string_view text, const std::vector<std::string>& vars) {
  if (vars.empty()) throw std::invalid_argument("variable list must not be empty");
  return detail::IdealParser(text, vars).parse();
}

inline std::string format_monomial(const ExponentVector& m, const std::vector<std::string>& vars) {
  if (static_cast<int>(vars.size()) != m.dim())
    throw DimensionError("variable list does not match exponent vector");
  std::string out;
  for (int j = 0; j < m.dim(); ++j) {
    if (m[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[static_cast<std::size_t>(j)];
    if (m[j] > 1) out += '^' + std::to_string(m[j]);
  }
  return out.empty() ? "1" : out;
}

/// Inverse of parse_ideal on canonical forms: parse_ideal(format_ideal(I)) == I.
inline std::string format_ideal(const MonomialIdeal& I, const std::vector<std::string>& vars) {
  if (I.is_zero()) return "0";
  std::string out;
  for (const auto& g : I.generators()) {
    if (!out.empty()) out += ", ";
    out += format_monomial(g, vars);
  }
  return out;
}

inline std::vector<std::string> default_vars(int dim) {
  static const char* names[] = {"x", "y", "z", "w", "u", "v", "s", "t"};
  std::vector<std::string> vars;
  for (int j = 0; j < dim; ++j) {
    if (j < 8) vars.emplace_back(names[j]);
    else vars.push_back("x" + std::to_string(j));
  }
  return vars;
}

/// JSON form: {"vars": [names], "generators": [[non-negative ints]]}.
inline nlohmann::ordered_json ideal_to_json(const MonomialIdeal& I,
                                            const std::vector<std::string>& vars) {
  nlohmann::ordered_json j;
  j["vars"] = vars;
  auto gens = nlohmann::ordered_json::array();
  for (const auto& g : I.generators())
    gens.push_back(std::vector<Exp>(g.entries().begin(), g.entries().end()));
  j["generators"] = std::move(gens);
  return j;
}

struct ParsedIdeal {
  MonomialIdeal ideal;
  std::vector<std::string> vars;
};

inline ParsedIdeal ideal_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("generators"))
    throw std::invalid_argument("ideal JSON must have \"vars\" and \"generators\"");
  std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
  if (vars.empty()) throw std::invalid_argument("ideal JSON has empty variable list");
  std::vector<ExponentVector> gens;
  for (const auto& row : j.at("generators")) {
    std::vector<Exp> e = row.get<std::vector<Exp>>();
    if (e.size() != vars.size())
      throw std::invalid_argument("generator row length does not match variable count");
    for (Exp v : e)
      if (v < 0) throw std::invalid_argument("negative exponent in ideal JSON");
    gens.emplace_back(std::move(e));
  }
  return {MonomialIdeal(static_cast<int>(vars.size()), std::move(gens)), std::move(vars)};
}

}  // namespace monideal
