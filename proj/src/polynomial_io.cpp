#include <cctype>
#include <sstream>

#include "ultra/error.hpp"
#include "ultra/json_io.hpp"
#include "ultra/polynomial.hpp"

namespace ultra {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  SparsePoly parse() {
    SparsePoly result;
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      auto [coefficient, exponent] = term();
      result += SparsePoly::monomial(coefficient * sign, exponent);
      skip_space();
    }
    return result;
  }

 private:
  std::pair<Rational, std::uint64_t> term() {
    Rational coefficient = 1;
    bool have_coefficient = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = number();
      have_coefficient = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || peek() != 'x') throw ParseError("expected 'x' after '*'", pos_);
      }
    }
    if (at_end() || peek() != 'x') {
      if (!have_coefficient) throw ParseError("expected a coefficient or 'x'", pos_);
      return {coefficient, 0};
    }
    ++pos_;
    skip_space();
    std::uint64_t exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected exponent digits", pos_);
      }
      exponent = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::uint64_t digit = static_cast<std::uint64_t>(peek() - '0');
        if (exponent > (UINT64_MAX - digit) / 10) throw ParseError("exponent too large", start);
        exponent = exponent * 10 + digit;
        ++pos_;
      }
    }
    return {coefficient, exponent};
  }

  Rational number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ParseError("expected denominator digits", pos_);
      }
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const ParseError&) {
      throw ParseError("invalid coefficient", start);
    }
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string to_string(const SparsePoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = abs(c);
    if (e == 0) {
      out << to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out << to_string(magnitude) << '*';
    out << 'x';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

Json poly_to_json(const SparsePoly& f) {
  Json terms = Json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    terms.push_back(Json::array({it->first, to_string(it->second)}));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

SparsePoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw ParseError("polynomial JSON needs a \"terms\" array");
  }
  SparsePoly::Terms terms;
  bool have_previous = false;
  std::uint64_t previous = 0;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_unsigned() || !t[1].is_string()) {
      throw ParseError("polynomial term must be [exponent, \"coefficient\"]");
    }
    const auto e = t[0].get<std::uint64_t>();
    if (have_previous && e >= previous) throw ParseError("polynomial exponents must strictly decrease");
    Rational c = parse_rational(t[1].get<std::string>());
    if (c == 0) throw ParseError("polynomial JSON coefficient is zero");
    terms.emplace(e, std::move(c));
    previous = e;
    have_previous = true;
  }
  return SparsePoly(std::move(terms));
}

std::string dump(const Json& j) { return j.dump(); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
}

}  // namespace ultra
