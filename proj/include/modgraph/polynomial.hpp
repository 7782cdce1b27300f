#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace modgraph {

/// Exponent vector, one entry per variable.
using Exponents = std::vector<std::uint16_t>;

/// Graded lexicographic order, largest first: higher total degree wins,
/// ties broken by the first differing exponent (x0 > x1 > ...).
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Z in a fixed number of variables.
///
/// Terms are kept in graded-lex order, largest first, and zero
/// coefficients are never stored; equality is therefore structural.
class IntPolynomial {
 public:
  using Terms = std::map<Exponents, mpz_class, GradedLexGreater>;

  explicit IntPolynomial(int variables = 0) : variables_(variables) {}

  static IntPolynomial constant(int variables, const mpz_class& value);
  static IntPolynomial variable(int variables, int index);
  /// sum_i coefficients[i] * x_i
  static IntPolynomial linear(std::span<const long> coefficients);

  int variables() const { return variables_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  /// Adds `coefficient * x^exponents`, dropping the term if it cancels.
  void add_term(const Exponents& exponents, const mpz_class& coefficient);

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;

  /// Quotient of an exact division. Throws InternalError when `divisor`
  /// does not divide `*this`.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  /// "x0*x1 + x0*x2 + x1*x2"; "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const IntPolynomial& other) const;

  int variables_;
  Terms terms_;
};

/// Flattened squarefree-friendly view of a polynomial for repeated
/// floating-point evaluation.
class CompiledPolynomial {
 public:
  explicit CompiledPolynomial(const IntPolynomial& p);

  int variables() const { return variables_; }
  /// Evaluates with long double accumulation.
  long double operator()(std::span<const double> point) const;

 private:
  struct Factor {
    int variable;
    int power;
  };
  int variables_;
  std::vector<long double> coefficients_;
  std::vector<std::size_t> offsets_;
  std::vector<Factor> factors_;
};

/// Evaluates `p` at `point`; throws GraphError on a length mismatch.
long double eval_poly(const IntPolynomial& p, std::span<const double> point);

}  // namespace modgraph
