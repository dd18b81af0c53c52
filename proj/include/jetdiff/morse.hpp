#pragma once

// Algebraic Morse criterion for L_k(X) = F (x) G^{-1} on the jet tower of a
// hypersurface, and extraction of the least degree d from which the
// resulting polynomial in d stays positive.

#include <cstdint>
#include <optional>
#include <vector>

#include "jetdiff/hypersurface.hpp"
#include "jetdiff/polyring.hpp"
#include "jetdiff/tower.hpp"
#include "json.hpp"

namespace jetdiff {

struct WeightVector {
  std::vector<std::int64_t> a;  // weight of O_{X_j}(1), j = 1..k
  std::int64_t twist = 0;       // coefficient of h in F

  unsigned k() const { return static_cast<unsigned>(a.size()); }
  /// m = a_1 + ... + a_k
  std::int64_t weighted_degree() const;
  /// b_j = a_1 + ... + a_j
  std::vector<std::int64_t> partial_sums() const;
  /// a_1 >= 3a_2, ..., a_{k-2} >= 3a_{k-1}, a_{k-1} >= 2a_k > 0; (1) for k = 1.
  bool admissible() const;
};

/// a = (2*3^{k-2}, ..., 6, 2, 1), twist = 2*3^{k-1}; a = (1), twist = 2 for k = 1.
WeightVector canonical_weights(unsigned k);

struct MorseResult {
  unsigned n = 0;
  unsigned k = 0;
  unsigned total_dim = 0;
  WeightVector weights;
  Polynomial class_in_chern;
  DegreePolynomial poly_in_d;
  std::optional<std::uint64_t> bound;

  nlohmann::json to_json() const;
};

struct MorseOptions {
  bool use_base_cap = true;
  std::size_t max_terms = kDefaultMaxTerms;
};

/// Pushforward to X of (A - N B) A^{N-1} where A = u_k + sum_{j<k} a_j u_j
/// + twist*h and B = twist*h. Homogeneous of grade n in c and h.
Polynomial morse_class(const TowerModel& tower, const WeightVector& weights,
                       const MorseOptions& options = {});
Polynomial morse_class(unsigned n, unsigned k, const MorseOptions& options = {});

/// Least d0 >= 1 with p(d) > 0 for every integer d >= d0, or nullopt when
/// the leading coefficient is not positive.
std::optional<std::uint64_t> degree_bound(const DegreePolynomial& p);

MorseResult compute_bound(unsigned n, unsigned k, const MorseOptions& options = {});

}  // namespace jetdiff
