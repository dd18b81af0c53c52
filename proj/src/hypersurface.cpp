#include "jetdiff/hypersurface.hpp"

#include <ostream>

namespace jetdiff {

namespace {

mpz_class binomial(unsigned a, unsigned b) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), a, b);
  return out;
}

}  // namespace

DegreePolynomial::DegreePolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

DegreePolynomial DegreePolynomial::monomial(unsigned exponent, const mpz_class& c) {
  std::vector<mpz_class> coeffs(exponent + 1);
  coeffs[exponent] = c;
  return DegreePolynomial(std::move(coeffs));
}

void DegreePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class DegreePolynomial::coefficient(unsigned exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : mpz_class(0);
}

mpz_class DegreePolynomial::evaluate(const mpz_class& d) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * d + *it;
  return acc;
}

std::string DegreePolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    bool negative = c < 0;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + '*';
    out += 'd';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

nlohmann::json DegreePolynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    if (coeffs_[i] != 0) arr.push_back(nlohmann::json::array({i, coeffs_[i].get_str()}));
  return arr;
}

DegreePolynomial DegreePolynomial::from_json(const nlohmann::json& j) {
  std::vector<mpz_class> coeffs;
  for (const auto& pair : j) {
    auto e = pair.at(0).get<std::size_t>();
    if (coeffs.size() <= e) coeffs.resize(e + 1);
    coeffs[e] += mpz_class(pair.at(1).get<std::string>());
  }
  return DegreePolynomial(std::move(coeffs));
}

DegreePolynomial operator+(const DegreePolynomial& p, const DegreePolynomial& q) {
  std::vector<mpz_class> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] += p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i] += q.coeffs_[i];
  return DegreePolynomial(std::move(out));
}

DegreePolynomial operator*(const DegreePolynomial& p, const DegreePolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<mpz_class> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return DegreePolynomial(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const DegreePolynomial& p) { return os << p.to_string(); }

std::vector<DegreePolynomial> chern_classes_of_hypersurface(unsigned n) {
  if (n < 1) throw DomainError("hypersurface dimension must be >= 1");
  std::vector<DegreePolynomial> classes;
  for (unsigned s = 1; s <= n; ++s) {
    std::vector<mpz_class> coeffs(s + 1);
    for (unsigned j = 0; j <= s; ++j) {
      mpz_class term = binomial(n + 2, s - j);
      coeffs[j] = (j % 2 == 0) ? term : mpz_class(-term);
    }
    classes.emplace_back(std::move(coeffs));
  }
  return classes;
}

std::map<Variable, Polynomial> hypersurface_substitution(unsigned n) {
  std::map<Variable, Polynomial> out;
  auto classes = chern_classes_of_hypersurface(n);
  for (unsigned s = 1; s <= n; ++s) {
    PolynomialAccumulator acc;
    const auto& coeffs = classes[s - 1].coefficients();
    for (unsigned j = 0; j < coeffs.size(); ++j) {
      Monomial m{Variable::h(), s};
      m.set(Variable::d(), j);
      acc.add(m, coeffs[j]);
    }
    out.emplace(Variable::c(s), acc.take());
  }
  return out;
}

DegreePolynomial evaluate_degree(const Polynomial& p, unsigned n) {
  if (p.involves(VarKind::U)) throw DomainError("evaluate_degree: class still involves tower variables");
  if (p.involves(VarKind::D)) throw DomainError("evaluate_degree: input already involves d");
  if (p.is_zero()) return {};
  if (p.grade() != n)
    throw DomainError("evaluate_degree: class is not homogeneous of grade " + std::to_string(n));

  const Polynomial in_d = substitute(p, hypersurface_substitution(n));
  std::vector<mpz_class> coeffs;
  for (const auto& t : in_d.terms()) {
    // every term is now d^j h^n; h^n integrates to d
    unsigned e = t.mono.exponent(Variable::d()) + 1;
    if (coeffs.size() <= e) coeffs.resize(e + 1);
    coeffs[e] += t.coeff;
  }
  return DegreePolynomial(std::move(coeffs));
}

}  // namespace jetdiff
