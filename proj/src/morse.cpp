#include "jetdiff/morse.hpp"

#include <string>

namespace jetdiff {

namespace {

// Linear scan ceiling for degree_bound.
constexpr std::uint64_t kMaxScan = 1'000'000'000ULL;

std::int64_t pow3(unsigned e) {
  std::int64_t out = 1;
  while (e-- > 0) out *= 3;
  return out;
}

mpz_class ceil_div(const mpz_class& a, const mpz_class& b) { return (a + b - 1) / b; }

// Smallest integer y >= 0 with y^i >= x.
mpz_class ceil_root(const mpz_class& x, unsigned i) {
  mpz_class y;
  mpz_root(y.get_mpz_t(), x.get_mpz_t(), i);
  mpz_class pw;
  mpz_pow_ui(pw.get_mpz_t(), y.get_mpz_t(), i);
  if (pw < x) ++y;
  return y;
}

}  // namespace

std::int64_t WeightVector::weighted_degree() const {
  std::int64_t m = 0;
  for (auto x : a) m += x;
  return m;
}

std::vector<std::int64_t> WeightVector::partial_sums() const {
  std::vector<std::int64_t> b;
  std::int64_t acc = 0;
  for (auto x : a) b.push_back(acc += x);
  return b;
}

bool WeightVector::admissible() const {
  const std::size_t k = a.size();
  if (k == 0) return false;
  if (k == 1) return a[0] == 1;
  for (std::size_t j = 0; j + 2 < k; ++j)
    if (a[j] < 3 * a[j + 1]) return false;
  if (a[k - 2] < 2 * a[k - 1] || a[k - 1] <= 0) return false;
  for (auto b : partial_sums())
    if (b < 0) return false;
  return true;
}

WeightVector canonical_weights(unsigned k) {
  if (k < 1) throw DomainError("canonical_weights: k must be >= 1");
  if (k > kMaxLevels) throw DomainError("canonical_weights: k exceeds supported maximum");
  WeightVector w;
  for (unsigned j = 1; j < k; ++j) w.a.push_back(2 * pow3(k - j - 1));
  w.a.push_back(1);
  w.twist = 2 * pow3(k - 1);
  return w;
}

Polynomial morse_class(const TowerModel& tower, const WeightVector& weights, const MorseOptions& options) {
  const unsigned k = tower.k();
  if (weights.k() != k) throw DomainError("weight vector length does not match tower height");

  PolynomialAccumulator a_acc;
  for (unsigned j = 1; j <= k; ++j) a_acc.add(Monomial{Variable::u(j)}, weights.a[j - 1]);
  a_acc.add(Monomial{Variable::h()}, weights.twist);
  const Polynomial a = a_acc.take();
  const Polynomial b = Polynomial::monomial(Monomial{Variable::h()}, weights.twist);
  const unsigned big_n = tower.total_dim();

  ReductionLimits limits;
  limits.max_terms = options.max_terms;
  if (options.use_base_cap) limits.base_cap = tower.n();
  Reducer reducer(tower, limits);

  const Polynomial power = pow_reduced(a, big_n - 1, reducer);
  const Polynomial top = reducer.multiply_reduce(a - mpz_class(big_n) * b, power);
  return integrate_fiber(top, tower);
}

Polynomial morse_class(unsigned n, unsigned k, const MorseOptions& options) {
  return morse_class(build_tower(n, k), canonical_weights(k), options);
}

std::optional<std::uint64_t> degree_bound(const DegreePolynomial& p) {
  if (p.is_zero() || p.leading() <= 0) return std::nullopt;
  const unsigned deg = p.degree();
  const mpz_class lead = p.leading();

  // Cauchy: every root z has |z| < 1 + max|a_i| / a_lead.
  mpz_class max_abs = 0;
  for (unsigned i = 0; i < deg; ++i) max_abs = std::max(max_abs, mpz_class(abs(p.coefficient(i))));
  mpz_class limit = 1 + ceil_div(max_abs, lead);

  // Fujiwara: |z| <= 2 max_i |a_{deg-i} / a_lead|^{1/i}, halving a_0 first.
  mpz_class fujiwara = 0;
  for (unsigned i = 1; i <= deg; ++i) {
    mpz_class num = abs(p.coefficient(deg - i));
    mpz_class den = i == deg ? mpz_class(2 * lead) : lead;
    fujiwara = std::max(fujiwara, ceil_root(ceil_div(num, den), i));
  }
  limit = std::min(limit, mpz_class(2 * fujiwara + 1));
  if (limit > kMaxScan) throw ComputationTooLarge("degree_bound: scan range " + limit.get_str() + " too large");

  // p > 0 for every d >= limit; walk down until the first non-positive value.
  mpz_class d = limit;
  while (d >= 1 && p.evaluate(d) > 0) --d;
  d += 1;
  return static_cast<std::uint64_t>(d.get_ui());
}

MorseResult compute_bound(unsigned n, unsigned k, const MorseOptions& options) {
  const TowerModel tower = build_tower(n, k);
  MorseResult result;
  result.n = n;
  result.k = k;
  result.total_dim = tower.total_dim();
  result.weights = canonical_weights(k);
  result.class_in_chern = morse_class(tower, result.weights, options);
  result.poly_in_d = evaluate_degree(result.class_in_chern, n);
  result.bound = degree_bound(result.poly_in_d);
  return result;
}

nlohmann::json MorseResult::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["k"] = k;
  j["class"] = class_in_chern.to_string();
  j["poly_d"] = poly_in_d.to_json();
  j["bound"] = bound ? nlohmann::json(*bound) : nlohmann::json(nullptr);
  j["N"] = total_dim;
  j["weights"] = weights.a;
  j["twist"] = weights.twist;
  return j;
}

}  // namespace jetdiff
