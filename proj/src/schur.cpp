#include "jetdiff/schur.hpp"

#include <cctype>
#include <numeric>

namespace jetdiff {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be nonincreasing");
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

unsigned Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

Partition Partition::conjugate() const {
  std::vector<unsigned> cols(part(0), 0);
  for (unsigned row : parts_)
    for (unsigned c = 0; c < row; ++c) ++cols[c];
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  std::string clean;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')') clean += ch;
  std::vector<unsigned> parts;
  if (clean.empty()) return Partition{};
  std::size_t pos = 0;
  while (pos <= clean.size()) {
    std::size_t comma = clean.find(',', pos);
    if (comma == std::string::npos) comma = clean.size();
    std::string_view field(clean.data() + pos, comma - pos);
    if (field.empty()) throw ParseError("empty partition part in '" + std::string(text) + "'");
    unsigned long value = 0;
    for (char ch : field) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError("bad partition part '" + std::string(field) + "'");
      value = value * 10 + static_cast<unsigned long>(ch - '0');
      if (value > 1'000'000) throw ParseError("partition part too large");
    }
    parts.push_back(static_cast<unsigned>(value));
    pos = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

// ---------------------------------------------------------------- GradedPiece

unsigned GradedPiece::weighted_degree() const {
  unsigned w = 0;
  for (std::size_t i = 0; i < ell.size(); ++i) w += static_cast<unsigned>(i + 1) * ell[i];
  return w;
}

std::string GradedPiece::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < ell.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ell[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------- Pieri

namespace {

// Fills mu row by row; row i may grow from lambda_i up to lambda_{i-1}
// (unbounded for the first row), which is the horizontal-strip condition.
void extend_strip(const Partition& lambda, unsigned n, std::size_t row, unsigned remaining,
                  std::vector<unsigned>& mu, PartitionMultiset& out) {
  if (row == n) {
    if (remaining == 0) out.emplace(Partition(mu), 1);
    return;
  }
  const unsigned base = lambda.part(row);
  const unsigned room = row == 0 ? remaining : std::min(remaining, lambda.part(row - 1) - base);
  for (unsigned add = room + 1; add-- > 0;) {
    mu[row] = base + add;
    extend_strip(lambda, n, row + 1, remaining - add, mu, out);
  }
  mu[row] = base;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw ComputationTooLarge("multiplicity overflow");
  return out;
}

}  // namespace

PartitionMultiset pieri(const Partition& lambda, unsigned m, unsigned n) {
  if (lambda.length() > n)
    throw DomainError("partition (" + lambda.to_string() + ") has more than " + std::to_string(n) + " parts");
  PartitionMultiset out;
  std::vector<unsigned> mu(n, 0);
  for (unsigned i = 0; i < n; ++i) mu[i] = lambda.part(i);
  extend_strip(lambda, n, 0, m, mu, out);
  return out;
}

PartitionMultiset decompose_tensor(const GradedPiece& piece, unsigned n, std::size_t max_components) {
  PartitionMultiset current{{Partition{}, 1}};
  for (unsigned l : piece.ell) {
    if (l == 0) continue;
    PartitionMultiset next;
    for (const auto& [lambda, mult] : current) {
      for (const auto& [mu, one] : pieri(lambda, l, n)) {
        auto& slot = next[mu];
        slot = checked_add(slot, mult * one);
      }
      if (next.size() > max_components)
        throw ComputationTooLarge("decomposition exceeds " + std::to_string(max_components) + " components");
    }
    current = std::move(next);
  }
  return current;
}

mpz_class schur_dim(const Partition& lambda, unsigned n) {
  if (lambda.length() > n) throw DomainError("schur_dim: partition has more than n parts");
  mpz_class num = 1, den = 1;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      num *= mpz_class(lambda.part(i)) - lambda.part(j) + (j - i);
      den *= j - i;
    }
  return num / den;
}

namespace {

void enumerate_pieces(unsigned k, unsigned level, unsigned remaining, std::vector<unsigned>& ell,
                      std::vector<GradedPiece>& out) {
  if (level == k) {
    if (remaining == 0) out.push_back({ell});
    return;
  }
  const unsigned weight = level + 1;
  for (unsigned l = remaining / weight + 1; l-- > 0;) {
    ell[level] = l;
    enumerate_pieces(k, level + 1, remaining - l * weight, ell, out);
  }
  ell[level] = 0;
}

}  // namespace

std::vector<GradedPiece> graded_pieces(unsigned k, unsigned m) {
  if (k < 1) throw DomainError("graded_pieces: k must be >= 1");
  std::vector<GradedPiece> out;
  std::vector<unsigned> ell(k, 0);
  enumerate_pieces(k, 0, m, ell, out);
  return out;
}

// ---------------------------------------------------------------- vanishing

unsigned column_count(const Partition& lambda, unsigned n, unsigned big_n) {
  if (n < 1 || big_n <= n) throw DomainError("need N > n >= 1");
  const Partition columns = lambda.conjugate();
  unsigned t = 0;
  for (unsigned i = 0; i < big_n - n; ++i) t += columns.part(i);
  return t;
}

bool br_vanishing(const Partition& lambda, unsigned n, unsigned big_n) {
  return column_count(lambda, n, big_n) < n;
}

nlohmann::json VanishingComponent::to_json() const {
  return {{"piece", piece.ell},
          {"partition", partition.to_string()},
          {"multiplicity", multiplicity},
          {"t", t},
          {"reason", reason}};
}

nlohmann::json VanishingReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["k"] = k;
  j["m"] = m;
  j["N"] = big_n;
  j["pieces"] = pieces;
  j["components"] = components;
  j["all_vanish"] = all_vanish;
  j["violations"] = nlohmann::json::array();
  for (const auto& v : violations) j["violations"].push_back(v.to_json());
  j["not_guaranteed"] = nlohmann::json::array();
  for (const auto& v : not_guaranteed) j["not_guaranteed"].push_back(v.to_json());
  return j;
}

VanishingReport verify_theorem1(unsigned n, unsigned k, unsigned m, unsigned big_n, std::size_t max_components) {
  if (m < 1) throw DomainError("verify_theorem1: m must be >= 1");
  if (k < 1) throw DomainError("verify_theorem1: k must be >= 1");
  if (n < 1 || big_n <= n) throw DomainError("verify_theorem1: need N > n >= 1");

  VanishingReport report;
  report.n = n;
  report.k = k;
  report.m = m;
  report.big_n = big_n;
  const bool theorem_applies = static_cast<unsigned long>(k) * (big_n - n) < n;

  const auto pieces = graded_pieces(k, m);
  if (pieces.size() > max_components)
    throw ComputationTooLarge("graded piece count exceeds " + std::to_string(max_components));
  report.pieces = pieces.size();

  for (const auto& piece : pieces) {
    for (const auto& [lambda, mult] : decompose_tensor(piece, n, max_components)) {
      report.components = checked_add(report.components, mult);
      const unsigned t = column_count(lambda, n, big_n);
      const bool vanishes = t < n;
      if (!vanishes) report.all_vanish = false;
      if (lambda.length() > k) {
        report.violations.push_back({piece, lambda, mult, t, "more than k nonzero parts"});
      } else if (!vanishes) {
        if (theorem_applies)
          report.violations.push_back({piece, lambda, mult, t, "t >= n although k(N-n) < n"});
        else
          report.not_guaranteed.push_back({piece, lambda, mult, t, "t >= n"});
      }
    }
  }
  return report;
}

}  // namespace jetdiff
