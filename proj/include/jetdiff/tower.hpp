#pragma once

// Cohomology ring of the Demailly tower X_k -> ... -> X_1 -> X built from
// (X, T_X) with rank r = n. Each level is a projectivized bundle, so the
// ring is generated over the base by u_1..u_k subject to one monic
// relation of degree r per level.

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "jetdiff/polyring.hpp"

namespace jetdiff {

inline constexpr std::size_t kDefaultMaxTerms = 20'000'000;

class TowerModel {
 public:
  unsigned n() const { return n_; }
  unsigned k() const { return k_; }
  unsigned rank() const { return r_; }
  /// dim X_k = n + k(r - 1)
  unsigned total_dim() const { return n_ + k_ * (r_ - 1); }

  /// c_s(V_j) for 0 <= j < k, 1 <= s <= r, fully expanded over u_1..u_j, c, h.
  const Polynomial& chern(unsigned j, unsigned s) const { return chern_v_.at(j).at(s - 1); }
  /// q_j = u_j^r + sum_s c_s(V_{j-1}) u_j^{r-s}, for 1 <= j <= k.
  const Polynomial& relation(unsigned j) const { return relations_.at(j - 1); }

  friend TowerModel build_tower(unsigned n, unsigned k);

 private:
  unsigned n_ = 0;
  unsigned k_ = 0;
  unsigned r_ = 0;
  std::vector<std::vector<Polynomial>> chern_v_;
  std::vector<Polynomial> relations_;
};

/// Throws DomainError unless n >= 2 and k >= 1 (and both fit the
/// variable layout).
TowerModel build_tower(unsigned n, unsigned k);

struct ReductionLimits {
  /// Drop monomials whose c/h grade exceeds this value.
  std::optional<unsigned> base_cap;
  /// Ceiling on live terms; ComputationTooLarge when exceeded.
  std::size_t max_terms = kDefaultMaxTerms;

  static ReductionLimits capped(const TowerModel& t, std::size_t max_terms = kDefaultMaxTerms) {
    return {t.n(), max_terms};
  }
};

/// Rewrites polynomials into the reduced basis (every u_j exponent < r).
///
/// A non-reduced tower monomial u^e is rewritten through its highest level j
/// with e_j >= r:
///   u^e = -sum_s c_s(V_{j-1}) * u^{e - s*[j]}
/// Levels above j are untouched and e_j strictly drops, so the recursion
/// terminates. Reduced forms of tower monomials are memoized; the memo makes
/// a Reducer stateful, so each thread should own one.
class Reducer {
 public:
  explicit Reducer(const TowerModel& tower, ReductionLimits limits = {});

  const TowerModel& tower() const { return tower_; }
  const ReductionLimits& limits() const { return limits_; }

  Polynomial reduce(const Polynomial& p);
  /// reduce(mul(a, b, cap)) without materializing the unreduced product.
  Polynomial multiply_reduce(const Polynomial& a, const Polynomial& b);

  std::size_t memo_entries() const { return memo_.size(); }

 private:
  struct Reduced {
    std::vector<Term> terms;           // sorted by base grade
    std::vector<std::size_t> upto;     // upto[g]: count of terms with base grade <= g
    std::size_t count_upto(unsigned g) const {
      if (upto.empty()) return 0;
      return g >= upto.size() ? terms.size() : upto[g];
    }
  };

  bool is_reduced(const Monomial& tower_mono) const;
  const Reduced& reduce_tower_monomial(const Monomial& tower_mono);
  void accumulate(PolynomialAccumulator& acc, const Monomial& mono, const mpz_class& coeff);
  void check_size(std::size_t n) const;

  const TowerModel& tower_;
  ReductionLimits limits_;
  std::unordered_map<Monomial, Reduced, MonomialHash> memo_;
  std::size_t memo_terms_ = 0;
};

/// Full reduction without a base cap.
Polynomial reduce(const Polynomial& p, const TowerModel& tower);

/// Pushforward to the base: extracts the coefficient of u_j^{r-1} for
/// j = k, ..., 1. Throws DomainError if p is not reduced.
Polynomial integrate_fiber(const Polynomial& p, const TowerModel& tower);

/// p^e in reduced form by a linear multiply-and-reduce chain. The default
/// limits cap the base grade at n.
Polynomial pow_reduced(const Polynomial& p, unsigned e, const TowerModel& tower);
Polynomial pow_reduced(const Polynomial& p, unsigned e, const TowerModel& tower,
                       const ReductionLimits& limits);
Polynomial pow_reduced(const Polynomial& p, unsigned e, Reducer& reducer);

}  // namespace jetdiff
