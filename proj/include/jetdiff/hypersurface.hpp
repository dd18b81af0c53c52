#pragma once

// Chern classes of a smooth degree-d hypersurface X in P^{n+1}, from
// (1 + h)^{n+2} = (1 + d h) c(X), and evaluation of base classes to
// polynomials in d using the normalization h^n = d.

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "jetdiff/polyring.hpp"
#include "json.hpp"

namespace jetdiff {

/// Univariate integer polynomial in the hypersurface degree d.
class DegreePolynomial {
 public:
  DegreePolynomial() = default;
  /// coeffs[i] is the coefficient of d^i.
  explicit DegreePolynomial(std::vector<mpz_class> coeffs);

  static DegreePolynomial monomial(unsigned exponent, const mpz_class& c);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as 0.
  unsigned degree() const { return coeffs_.empty() ? 0 : static_cast<unsigned>(coeffs_.size() - 1); }
  mpz_class coefficient(unsigned exponent) const;
  mpz_class leading() const { return coeffs_.empty() ? mpz_class(0) : coeffs_.back(); }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  mpz_class evaluate(const mpz_class& d) const;

  /// `333162*d^4 - 21628710*d^3 - ...`, descending.
  std::string to_string() const;
  /// [[exponent, "coefficient"], ...] in descending exponent.
  nlohmann::json to_json() const;
  static DegreePolynomial from_json(const nlohmann::json& j);

  friend DegreePolynomial operator+(const DegreePolynomial& p, const DegreePolynomial& q);
  friend DegreePolynomial operator*(const DegreePolynomial& p, const DegreePolynomial& q);
  friend bool operator==(const DegreePolynomial&, const DegreePolynomial&) = default;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const DegreePolynomial& p);

/// e_s(d) with c_s(X) = e_s(d) h^s, for s = 1..n:
///   e_s(d) = sum_{j=0..s} (-d)^j C(n+2, s-j).
std::vector<DegreePolynomial> chern_classes_of_hypersurface(unsigned n);

/// The same classes as ring elements c_s -> e_s(d) h^s, with d a formal
/// grade-0 variable. Suitable for substitute().
std::map<Variable, Polynomial> hypersurface_substitution(unsigned n);

/// Evaluates a grade-n class in c and h on a degree-d hypersurface:
/// substitutes c_s, applies h^n = d. Throws DomainError if p involves u or
/// d, or is not homogeneous of grade n.
DegreePolynomial evaluate_degree(const Polynomial& p, unsigned n);

}  // namespace jetdiff
