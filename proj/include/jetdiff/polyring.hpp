#pragma once

// Exact sparse polynomials in the cohomology variables of a jet tower:
//   u1..uk  tautological classes of the tower levels (grade 1)
//   c1..cn  Chern classes of the base tangent bundle (grade s)
//   h       hyperplane class (grade 1)
//   d       hypersurface degree, a formal scalar (grade 0)
// Coefficients are GMP integers; nothing here ever divides.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "jetdiff/errors.hpp"

namespace jetdiff {

inline constexpr unsigned kMaxLevels = 16;  // u1..u16
inline constexpr unsigned kMaxChern = 14;   // c1..c14

enum class VarKind : std::uint8_t { U, C, H, D };

struct Variable {
  VarKind kind = VarKind::H;
  unsigned index = 0;  // level j for U, s for C, unused otherwise

  static Variable u(unsigned level);
  static Variable c(unsigned s);
  static constexpr Variable h() { return {VarKind::H, 0}; }
  static constexpr Variable d() { return {VarKind::D, 0}; }

  /// Cohomological degree: u and h are 1, c_s is s, d is 0.
  unsigned grade() const;
  std::size_t slot() const;
  std::string name() const;

  auto operator<=>(const Variable&) const = default;
};

/// Dense exponent vector over a fixed slot layout, so monomials from
/// different towers compare and hash without a ring context.
class Monomial {
 public:
  static constexpr std::size_t kSlots = 32;

  Monomial() = default;
  explicit Monomial(Variable v, unsigned e = 1);

  unsigned exponent(Variable v) const { return exps_[v.slot()]; }
  unsigned exponent_at(std::size_t slot) const { return exps_[slot]; }
  void set(Variable v, unsigned e);

  unsigned grade() const;
  /// Grade carried by the c and h variables only.
  unsigned base_grade() const;
  unsigned total_degree() const;
  bool is_one() const;

  /// Part in u1..uk, and the complementary part in c, h, d.
  Monomial tower_part() const;
  Monomial base_part() const;

  /// Throws ComputationTooLarge if an exponent would exceed 255.
  Monomial operator*(const Monomial& other) const;

  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, kSlots> exps_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Display order: higher total degree first, then lexicographic with
/// h > c1 > ... > c14 > u16 > ... > u1 > d.
bool canonical_less(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  mpz_class coeff;
};

class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(const mpz_class& c);
  static Polynomial variable(Variable v);
  static Polynomial monomial(const Monomial& m, const mpz_class& c = 1);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Common grade of all terms; nullopt if not homogeneous. Zero is
  /// homogeneous of every grade and reports nullopt here.
  std::optional<unsigned> grade() const;
  bool is_homogeneous() const;
  unsigned degree_in(Variable v) const;
  bool involves(VarKind kind) const;

  /// Coefficient of the given monomial (0 when absent).
  mpz_class coefficient(const Monomial& m) const;

  std::string to_string() const;
  static Polynomial parse(std::string_view text);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const mpz_class& s, const Polynomial& p);
  friend bool operator==(const Polynomial& p, const Polynomial& q);

 private:
  friend class PolynomialAccumulator;
  std::vector<Term> terms_;  // canonical order, no zero coefficients
};

/// Hash-map accumulator used to build polynomials term by term.
class PolynomialAccumulator {
 public:
  PolynomialAccumulator() = default;
  explicit PolynomialAccumulator(std::size_t reserve) { map_.reserve(reserve); }

  void add(const Monomial& m, const mpz_class& c);
  /// Adds scale * p.
  void add(const Polynomial& p, const mpz_class& scale = 1);
  std::size_t size() const { return map_.size(); }
  Polynomial take();

 private:
  std::unordered_map<Monomial, mpz_class, MonomialHash> map_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);

/// Product of p and q. With a base cap, product monomials whose base grade
/// exceeds the cap are dropped.
Polynomial mul(const Polynomial& p, const Polynomial& q,
               std::optional<unsigned> base_cap = std::nullopt);

/// Coefficient of v^e when p is read as a univariate polynomial in v.
Polynomial coeff_of(const Polynomial& p, Variable v, unsigned e);

/// Simultaneous substitution of variables by polynomials.
Polynomial substitute(const Polynomial& p,
                      const std::map<Variable, Polynomial>& assignments);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace jetdiff
