#include "modgraph/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "modgraph/errors.hpp"

namespace modgraph {

namespace {

unsigned degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

IntPolynomial IntPolynomial::constant(int variables, const mpz_class& value) {
  IntPolynomial p(variables);
  p.add_term(Exponents(static_cast<std::size_t>(variables), 0), value);
  return p;
}

IntPolynomial IntPolynomial::variable(int variables, int index) {
  if (index < 0 || index >= variables) throw InternalError("variable index out of range");
  IntPolynomial p(variables);
  Exponents e(static_cast<std::size_t>(variables), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

IntPolynomial IntPolynomial::linear(std::span<const long> coefficients) {
  const int n = static_cast<int>(coefficients.size());
  IntPolynomial p(n);
  for (int i = 0; i < n; ++i) {
    if (coefficients[i] == 0) continue;
    Exponents e(static_cast<std::size_t>(n), 0);
    e[i] = 1;
    p.add_term(e, coefficients[i]);
  }
  return p;
}

int IntPolynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.begin()->first));
}

bool IntPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = degree_of(terms_.begin()->first);
  return degree_of(terms_.rbegin()->first) == d;
}

void IntPolynomial::add_term(const Exponents& exponents, const mpz_class& coefficient) {
  if (static_cast<int>(exponents.size()) != variables_) throw InternalError("exponent vector length mismatch");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void IntPolynomial::check_compatible(const IntPolynomial& other) const {
  if (other.variables_ != variables_) throw InternalError("polynomials over different variable sets");
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  a.check_compatible(b);
  IntPolynomial out(a.variables_);
  Exponents e(static_cast<std::size_t>(a.variables_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw InternalError("division by the zero polynomial");
  const auto& [lead_e, lead_c] = *divisor.terms_.begin();
  IntPolynomial quotient(variables_);
  IntPolynomial rest = *this;
  Exponents qe(static_cast<std::size_t>(variables_));
  while (!rest.is_zero()) {
    const auto& [re, rc] = *rest.terms_.begin();
    for (std::size_t i = 0; i < qe.size(); ++i) {
      if (re[i] < lead_e[i]) throw InternalError("inexact polynomial division");
      qe[i] = static_cast<std::uint16_t>(re[i] - lead_e[i]);
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) throw InternalError("inexact polynomial division");
    const mpz_class qc = rc / lead_c;
    quotient.add_term(qe, qc);
    for (const auto& [de, dc] : divisor.terms_) {
      Exponents e(de.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(de[i] + qe[i]);
      rest.add_term(e, -qc * dc);
    }
  }
  return quotient;
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool any_var = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) vars << "*";
      vars << "x" << i;
      if (e[i] > 1) vars << "^" << e[i];
      any_var = true;
    }
    if (!any_var) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << vars.str();
    }
  }
  return out.str();
}

CompiledPolynomial::CompiledPolynomial(const IntPolynomial& p) : variables_(p.variables()) {
  offsets_.push_back(0);
  for (const auto& [e, c] : p.terms()) {
    coefficients_.push_back(static_cast<long double>(c.get_d()));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) factors_.push_back({static_cast<int>(i), e[i]});
    }
    offsets_.push_back(factors_.size());
  }
}

long double CompiledPolynomial::operator()(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != variables_) throw GraphError("evaluation point has the wrong length");
  long double sum = 0;
  for (std::size_t t = 0; t < coefficients_.size(); ++t) {
    long double term = coefficients_[t];
    for (std::size_t k = offsets_[t]; k < offsets_[t + 1]; ++k) {
      const long double x = point[factors_[k].variable];
      for (int p = 0; p < factors_[k].power; ++p) term *= x;
    }
    sum += term;
  }
  return sum;
}

long double eval_poly(const IntPolynomial& p, std::span<const double> point) {
  return CompiledPolynomial(p)(point);
}

}  // namespace modgraph
