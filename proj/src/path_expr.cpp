// Copyright (c) kvar contributors
// SPDX-License-Identifier: Apache-2.0

#include "kvar/path_expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

namespace kvar {

Polynomial::Polynomial(std::vector<Complex> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == Complex(0.0, 0.0)) {
    coefficients_.pop_back();
  }
}

Complex Polynomial::operator()(double x) const {
  Complex acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coefficients_.size() <= 1) return Polynomial();
  std::vector<Complex> d(coefficients_.size() - 1);
  for (std::size_t k = 1; k < coefficients_.size(); ++k) {
    d[k - 1] = static_cast<double>(k) * coefficients_[k];
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<Complex> sum(std::max(coefficients_.size(), rhs.coefficients_.size()), 0.0);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) sum[k] += coefficients_[k];
  for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) sum[k] += rhs.coefficients_[k];
  return Polynomial(std::move(sum));
}

Polynomial Polynomial::scaled(Complex alpha) const {
  std::vector<Complex> s(coefficients_);
  for (auto& c : s) c *= alpha;
  return Polynomial(std::move(s));
}

PathExpression::PathExpression(std::vector<Polynomial> coords, std::string source,
                               std::vector<SourceSpan> spans)
    : coords_(std::move(coords)), source_(std::move(source)), spans_(std::move(spans)) {}

Vec PathExpression::evaluate(double x) const {
  Vec v(dim());
  for (int i = 0; i < dim(); ++i) v[i] = coords_[i](x);
  return v;
}

namespace {

// Rebuilds source text and spans for expressions produced by arithmetic
// rather than parsing.
PathExpression from_coords(std::vector<Polynomial> coords) {
  PathExpression tmp(std::move(coords), "", {});
  auto r = parse(tmp.format());
  return std::get<PathExpression>(std::move(r));
}

}  // namespace

PathExpression PathExpression::derivative() const {
  std::vector<Polynomial> d;
  d.reserve(coords_.size());
  for (const auto& c : coords_) d.push_back(c.derivative());
  return from_coords(std::move(d));
}

PathExpression PathExpression::scaled(Complex alpha) const {
  std::vector<Polynomial> s;
  s.reserve(coords_.size());
  for (const auto& c : coords_) s.push_back(c.scaled(alpha));
  return from_coords(std::move(s));
}

PathExpression PathExpression::operator+(const PathExpression& rhs) const {
  if (dim() != rhs.dim()) {
    throw DimensionError("path expressions have different coordinate counts");
  }
  std::vector<Polynomial> s;
  s.reserve(coords_.size());
  for (int i = 0; i < dim(); ++i) s.push_back(coords_[i] + rhs.coords_[i]);
  return from_coords(std::move(s));
}

PathExpression PathExpression::linearly_mapped(const Mat& m) const {
  if (m.cols() != dim()) {
    throw DimensionError("matrix shape does not match coordinate count");
  }
  int max_len = 0;
  for (const auto& c : coords_) {
    max_len = std::max(max_len, static_cast<int>(c.coefficients().size()));
  }
  std::vector<std::vector<Complex>> mapped(m.rows(), std::vector<Complex>(max_len, 0.0));
  for (int k = 0; k < max_len; ++k) {
    Vec column = Vec::Zero(dim());
    for (int i = 0; i < dim(); ++i) {
      if (k < static_cast<int>(coords_[i].coefficients().size())) {
        column[i] = coords_[i].coefficients()[k];
      }
    }
    const Vec image = m * column;
    for (int r = 0; r < m.rows(); ++r) mapped[r][k] = image[r];
  }
  std::vector<Polynomial> out;
  out.reserve(mapped.size());
  for (auto& row : mapped) out.push_back(Polynomial(std::move(row)));
  return from_coords(std::move(out));
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// One signed monomial: "<lit>", "<lit>*x", "<lit>*x^k", with "i" suffix
// for imaginary literals.
void append_term(std::string& out, bool first, double value, bool imaginary, int degree) {
  if (!first) {
    out += value < 0 ? " - " : " + ";
  } else if (value < 0) {
    out += "-";
  }
  out += format_double(std::fabs(value));
  if (imaginary) out += "i";
  if (degree >= 1) {
    out += "*x";
    if (degree >= 2) {
      out += "^";
      out += std::to_string(degree);
    }
  }
}

}  // namespace

std::string PathExpression::format() const {
  std::string out = "(";
  for (int i = 0; i < dim(); ++i) {
    if (i > 0) out += ", ";
    const auto& cs = coords_[i].coefficients();
    bool first = true;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (cs[k].real() != 0.0) {
        append_term(out, first, cs[k].real(), false, static_cast<int>(k));
        first = false;
      }
      if (cs[k].imag() != 0.0) {
        append_term(out, first, cs[k].imag(), true, static_cast<int>(k));
        first = false;
      }
    }
    if (first) out += "0";
  }
  out += ")";
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParseResult run() {
    skip_ws();
    if (!eat('(')) return fail("expected '('", "'('");
    std::vector<Polynomial> coords;
    std::vector<SourceSpan> spans;
    while (true) {
      skip_ws();
      const std::size_t start = pos_;
      auto coord = parse_coord();
      if (error_) return *error_;
      coords.push_back(std::move(coord));
      spans.push_back({start, pos_ - start});
      skip_ws();
      if (eat(',')) continue;
      if (eat(')')) break;
      return fail("expected ',' or ')'", "',' or ')'");
    }
    skip_ws();
    if (pos_ != text_.size()) return fail("trailing input after ')'", "end of input");
    return PathExpression(std::move(coords), std::string(text_), std::move(spans));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<ParseError> error_;

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  ParseError fail(std::string message, std::string expected) {
    ParseError e{std::move(message), std::min(pos_, text_.size()), std::move(expected)};
    error_ = e;
    return e;
  }

  struct Term {
    Complex coefficient;
    int degree = 0;
  };

  Polynomial parse_coord() {
    skip_ws();
    if (peek() == ',' || peek() == ')' || pos_ >= text_.size()) {
      fail("empty coordinate", "term");
      return {};
    }
    std::vector<Complex> coeffs;
    bool negate = false;
    while (true) {
      Term t = parse_term();
      if (error_) return {};
      if (static_cast<int>(coeffs.size()) <= t.degree) coeffs.resize(t.degree + 1, 0.0);
      coeffs[t.degree] += negate ? -t.coefficient : t.coefficient;
      skip_ws();
      if (eat('+')) {
        negate = false;
      } else if (peek() == '-') {
        ++pos_;
        negate = true;
      } else {
        break;
      }
    }
    return Polynomial(std::move(coeffs));
  }

  Term parse_term() {
    skip_ws();
    if (peek() == 'x') {
      const int deg = parse_var();
      return {Complex(1.0, 0.0), deg};
    }
    const Complex lit = parse_complexlit();
    if (error_) return {};
    skip_ws();
    if (eat('*')) {
      skip_ws();
      if (peek() != 'x') {
        fail("expected 'x' after '*'", "'x'");
        return {};
      }
      const int deg = parse_var();
      return {lit, deg};
    }
    return {lit, 0};
  }

  int parse_var() {
    ++pos_;  // consume 'x'
    if (peek() != '^') return 1;
    ++pos_;
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) {
      fail("expected exponent digits", "unsigned integer");
      return 0;
    }
    long deg = std::strtol(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr, 10);
    if (deg > kMaxPolyDegree) {
      error_ = ParseError{"degree above 16", start, "exponent <= 16"};
      return 0;
    }
    return static_cast<int>(deg);
  }

  Complex parse_complexlit() {
    skip_ws();
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      if (text_[pos_] == '-') sign = -1.0;
      ++pos_;
      skip_ws();
    }
    if (peek() == 'i') {
      ++pos_;
      return Complex(0.0, sign);
    }
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    bool any_digits = pos_ > start;
    if (peek() == '.') {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      any_digits = any_digits || pos_ > start + 1;
    }
    if (!any_digits) {
      fail("expected numeric literal", "number or 'i'");
      return {};
    }
    if (peek() == 'e' || peek() == 'E') {
      const std::size_t mark = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = mark;
        fail("malformed exponent", "digits after 'e'");
        return {};
      }
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    const std::string slice(text_.substr(start, pos_ - start));
    const double value = std::strtod(slice.c_str(), nullptr);
    if (!std::isfinite(value)) {
      error_ = ParseError{"malformed literal: out of range", start, "finite number"};
      return {};
    }
    if (peek() == 'i') {
      ++pos_;
      return Complex(0.0, sign * value);
    }
    return Complex(sign * value, 0.0);
  }
};

}  // namespace

ParseResult parse(std::string_view text) { return Parser(text).run(); }

PathExpression parse_or_throw(std::string_view text) {
  auto r = parse(text);
  if (auto* err = std::get_if<ParseError>(&r)) {
    std::ostringstream os;
    os << "path parse error at offset " << err->offset << ": " << err->message
       << " (expected " << err->expected << ")";
    throw ConfigError(os.str());
  }
  return std::get<PathExpression>(std::move(r));
}

}  // namespace kvar
