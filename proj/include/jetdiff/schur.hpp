#pragma once

// Partition combinatorics for Schur powers of a rank-n bundle: Pieri rule,
// decomposition of the Green-Griffiths graded pieces S^{l_1} (x) ... (x) S^{l_k},
// and the Brueckmann-Rackwitz vanishing test on complete intersections.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "jetdiff/errors.hpp"
#include "json.hpp"

namespace jetdiff {

/// Nonincreasing parts with trailing zeros trimmed.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError if parts increase anywhere.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  /// Number of nonzero parts.
  unsigned length() const { return static_cast<unsigned>(parts_.size()); }
  /// Number of boxes.
  unsigned size() const;
  /// i-th part, 0-based; 0 past the end.
  unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Column depths of the Young diagram.
  Partition conjugate() const;

  /// `3,1,1`; the empty partition prints as an empty string.
  std::string to_string() const;
  /// Accepts `3,1,1`, optionally in parentheses, with whitespace.
  static Partition parse(std::string_view text);

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<unsigned> parts_;
};

/// Irreducible components with multiplicities, largest partition first.
using PartitionMultiset = std::map<Partition, std::uint64_t, std::greater<>>;

/// Multi-index l of a graded piece S^{l_1} (x) ... (x) S^{l_k}.
struct GradedPiece {
  std::vector<unsigned> ell;

  /// |l|_k = l_1 + 2 l_2 + ... + k l_k
  unsigned weighted_degree() const;
  /// `(3,0)`
  std::string to_string() const;
  auto operator<=>(const GradedPiece&) const = default;
};

inline constexpr std::size_t kDefaultMaxComponents = 5'000'000;

/// Gamma^lambda (x) S^m over horizontal strips of m boxes, at most n rows.
PartitionMultiset pieri(const Partition& lambda, unsigned m, unsigned n);

/// Iterated Pieri from the empty partition through S^{l_1}, ..., S^{l_k}.
PartitionMultiset decompose_tensor(const GradedPiece& piece, unsigned n,
                                   std::size_t max_components = kDefaultMaxComponents);

/// dim Gamma^lambda for GL(n): prod_{i<j} (l_i - l_j + j - i) / (j - i).
mpz_class schur_dim(const Partition& lambda, unsigned n);

/// All l in N^k with |l|_k = m, in descending lexicographic order.
std::vector<GradedPiece> graded_pieces(unsigned k, unsigned m);

/// Sum of the first N - n column depths of lambda.
unsigned column_count(const Partition& lambda, unsigned n, unsigned big_n);

/// True when t = column_count(lambda, n, N) < n, i.e. H^0(X, Gamma^lambda T*_X)
/// vanishes on every smooth complete intersection X^n in P^N.
bool br_vanishing(const Partition& lambda, unsigned n, unsigned big_n);

struct VanishingComponent {
  GradedPiece piece;
  Partition partition;
  std::uint64_t multiplicity = 0;
  unsigned t = 0;
  std::string reason;

  nlohmann::json to_json() const;
};

struct VanishingReport {
  unsigned n = 0;
  unsigned k = 0;
  unsigned m = 0;
  unsigned big_n = 0;
  std::size_t pieces = 0;
  /// Irreducible summands counted with multiplicity.
  std::uint64_t components = 0;
  bool all_vanish = true;
  /// Failures of the row bound, or of the vanishing test where
  /// k(N - n) < n promises it.
  std::vector<VanishingComponent> violations;
  /// Components without guaranteed vanishing when k(N - n) >= n.
  std::vector<VanishingComponent> not_guaranteed;

  nlohmann::json to_json() const;
};

/// Checks every irreducible component of every graded piece of E^GG_{k,m}
/// on X^n in P^N (N = n + 1 for hypersurfaces). Throws ComputationTooLarge
/// when the enumeration exceeds max_components.
VanishingReport verify_theorem1(unsigned n, unsigned k, unsigned m, unsigned big_n,
                                std::size_t max_components = kDefaultMaxComponents);
inline VanishingReport verify_theorem1(unsigned n, unsigned k, unsigned m) {
  return verify_theorem1(n, k, m, n + 1);
}

}  // namespace jetdiff
