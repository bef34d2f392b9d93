// Copyright (c) kvar contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef KVAR_PATH_EXPR_HPP
#define KVAR_PATH_EXPR_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kvar/krein.hpp"

namespace kvar {

/// Polynomial degrees above this are rejected by the parser.
inline constexpr int kMaxPolyDegree = 16;

/// Univariate polynomial with complex coefficients, ascending degree,
/// trailing zeros trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coefficients);

  /// Horner evaluation.
  Complex operator()(double x) const;

  Polynomial derivative() const;
  int degree() const { return coefficients_.empty() ? 0 : static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<Complex>& coefficients() const { return coefficients_; }

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial scaled(Complex alpha) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Complex> coefficients_;
};

struct SourceSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
};

/// Parsed coordinate-wise path text: one polynomial per coordinate.
class PathExpression {
 public:
  PathExpression(std::vector<Polynomial> coords, std::string source,
                 std::vector<SourceSpan> spans);

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<Polynomial>& coords() const { return coords_; }
  const std::string& source() const { return source_; }
  const std::vector<SourceSpan>& spans() const { return spans_; }

  Vec evaluate(double x) const;
  PathExpression derivative() const;

  /// Canonical text that reparses to a structurally equal expression.
  std::string format() const;

  PathExpression scaled(Complex alpha) const;
  PathExpression operator+(const PathExpression& rhs) const;

  /// Applies a matrix to the coordinate tuple (coefficient-wise per degree).
  PathExpression linearly_mapped(const Mat& m) const;

  bool structurally_equal(const PathExpression& rhs) const { return coords_ == rhs.coords_; }

 private:
  std::vector<Polynomial> coords_;
  std::string source_;
  std::vector<SourceSpan> spans_;
};

struct ParseError {
  std::string message;
  std::size_t offset = 0;   // byte offset into the source, <= source length
  std::string expected;     // short summary of the acceptable tokens
};

using ParseResult = std::variant<PathExpression, ParseError>;

inline bool parse_ok(const ParseResult& r) { return std::holds_alternative<PathExpression>(r); }

/// Total parser for the path grammar
///   path  := '(' coord (',' coord)* ')'
///   coord := term (('+'|'-') term)*
///   term  := complexlit ('*' var)? | var
///   var   := 'x' ('^' uint)?
///   complexlit := sign? (number 'i'? | 'i')
/// Whitespace is insignificant. Never throws; malformed input yields
/// ParseError with a byte offset.
ParseResult parse(std::string_view text);

/// Parse wrapper that throws ConfigError carrying the error position.
PathExpression parse_or_throw(std::string_view text);

}  // namespace kvar

#endif  // KVAR_PATH_EXPR_HPP
