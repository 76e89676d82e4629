#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "spiraldet/errors.hpp"
#include "spiraldet/laurent.hpp"
#include "spiraldet/rational.hpp"

namespace spiraldet {

namespace detail {

inline std::string half_units_to_string(std::int64_t d) {
  if (d % 2 == 0) return std::to_string(d / 2);
  return std::to_string(d) + "/2";
}

inline std::string monomial_to_string(const ExponentVector& e) {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    const std::int64_t d = e.doubled[i];
    if (d == 0) continue;
    if (!out.empty()) out += '*';
    out += kVarNames[i];
    if (d == 2) continue;
    out += '^';
    if (d % 2 == 0) {
      out += std::to_string(d / 2);
    } else {
      out += '(' + half_units_to_string(d) + ')';
    }
  }
  return out;
}

}  // namespace detail

/// Human-readable form, e.g. "-2*a*x^-1 + b^2*c^(1/2)". Terms appear in
/// ascending lexicographic order of their exponent vectors.
inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    std::string term;
    if (e.is_zero()) {
      term = mag.get_str();
    } else if (mag == 1) {
      term = detail::monomial_to_string(e);
    } else {
      term = mag.get_str() + "*" + detail::monomial_to_string(e);
    }
    if (first) {
      out = negative ? "-" + term : term;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    LaurentPoly out;
    skip_ws();
    if (s_.empty()) fail("empty input");
    BigInt sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    }
    for (;;) {
      auto [coeff, e] = term();
      out.add_term(e, sign * coeff);
      skip_ws();
      if (pos_ == s_.size()) break;
      if (peek() == '+') {
        sign = 1;
      } else if (peek() == '-') {
        sign = -1;
      } else {
        fail("expected '+' or '-'");
      }
      ++pos_;
    }
    return out;
  }

 private:
  std::pair<BigInt, ExponentVector> term() {
    BigInt coeff = 1;
    ExponentVector e;
    for (;;) {
      skip_ws();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_bigint(digits());
      } else {
        const std::size_t v = variable();
        std::int64_t d = 2;
        skip_ws();
        if (pos_ < s_.size() && peek() == '^') {
          ++pos_;
          d = exponent();
        }
        e.doubled[v] += d;
      }
      skip_ws();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      return {coeff, e};
    }
  }

  std::size_t variable() {
    if (pos_ < s_.size()) {
      for (std::size_t i = 0; i < kNumVars; ++i) {
        if (peek() == kVarNames[i][0]) {
          ++pos_;
          return i;
        }
      }
    }
    fail("expected a variable or coefficient");
  }

  // Doubled exponent: "3", "-3", "(1/2)", "(-3/2)", "(2)".
  std::int64_t exponent() {
    skip_ws();
    if (pos_ < s_.size() && peek() == '(') {
      ++pos_;
      const std::int64_t num = signed_int();
      std::int64_t d = 2 * num;
      skip_ws();
      if (pos_ < s_.size() && peek() == '/') {
        ++pos_;
        if (signed_int() != 2) fail("exponent denominator must be 2");
        d = num;
      }
      skip_ws();
      if (pos_ >= s_.size() || peek() != ')') fail("expected ')'");
      ++pos_;
      return d;
    }
    return 2 * signed_int();
  }

  std::int64_t signed_int() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && peek() == '-') {
      neg = true;
      ++pos_;
    }
    const auto text = digits();
    const std::int64_t v = std::stoll(std::string(text));
    return neg ? -v : v;
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Inverse of to_string(const LaurentPoly&).
inline LaurentPoly parse_poly(std::string_view text) {
  return detail::PolyParser(text).parse();
}

/// Structured form: [{"coefficient": "-3", "exponents": ["1","0","1/2","-3","0"]}, ...]
inline nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::array();
    for (auto d : e.doubled) exps.push_back(detail::half_units_to_string(d));
    terms.push_back({{"coefficient", c.get_str()}, {"exponents", exps}});
  }
  return terms;
}

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial record must be an array");
  LaurentPoly p;
  try {
    for (const auto& t : j) {
      const auto& exps = t.at("exponents");
      if (!exps.is_array() || exps.size() != kNumVars) {
        throw ParseError("exponents must list 5 values");
      }
      ExponentVector e;
      for (std::size_t i = 0; i < kNumVars; ++i) {
        const Rational r = parse_rational(exps[i].get<std::string>());
        if (r.get_den() != 1 && r.get_den() != 2) {
          throw ParseError("exponent denominator must be 1 or 2");
        }
        e.doubled[i] = Rational(r * 2).get_num().get_si();
      }
      const BigInt c = parse_bigint(t.at("coefficient").get<std::string>());
      if (c == 0) throw ParseError("zero coefficient in polynomial record");
      if (p.terms().count(e)) throw ParseError("repeated exponent vector");
      p.add_term(e, c);
    }
  } catch (const nlohmann::json::exception& e) {
    // Missing keys or non-string fields.
    throw ParseError(std::string("malformed polynomial record: ") + e.what());
  }
  return p;
}

inline nlohmann::json to_json(const Rational& r) { return to_string(r); }

}  // namespace spiraldet
