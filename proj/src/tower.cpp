#include "jetdiff/tower.hpp"

#include <algorithm>
#include <string>

namespace jetdiff {

namespace {

long binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  long result = 1;
  for (long i = 1; i <= b; ++i) result = result * (a - b + i) / i;
  return result;
}

}  // namespace

TowerModel build_tower(unsigned n, unsigned k) {
  if (n < 2) throw DomainError("tower needs n >= 2 (rank of V at least 2), got n = " + std::to_string(n));
  if (k < 1) throw DomainError("tower needs k >= 1, got k = " + std::to_string(k));
  if (n > kMaxChern) throw DomainError("n exceeds supported maximum " + std::to_string(kMaxChern));
  if (k > kMaxLevels) throw DomainError("k exceeds supported maximum " + std::to_string(kMaxLevels));

  TowerModel t;
  t.n_ = n;
  t.k_ = k;
  t.r_ = n;
  const long r = t.r_;

  std::vector<Polynomial> current;
  for (unsigned s = 1; s <= t.r_; ++s) current.push_back(Polynomial::variable(Variable::c(s)));

  for (unsigned j = 1; j <= k; ++j) {
    t.chern_v_.push_back(current);

    // q_j = u_j^r + sum_s c_s^{[j-1]} u_j^{r-s}
    const Variable u = Variable::u(j);
    PolynomialAccumulator q;
    q.add(Monomial{u, t.r_}, 1);
    for (unsigned s = 1; s <= t.r_; ++s)
      q.add(mul(current[s - 1], Polynomial::monomial(Monomial{u, t.r_ - s})));
    t.relations_.push_back(q.take());

    if (j == k) break;

    // Grade-s part of (1 - u_j) * sum_t c_t^{[j-1]} (1 + u_j)^{r-t}.
    std::vector<Polynomial> next;
    for (long s = 1; s <= r; ++s) {
      PolynomialAccumulator acc;
      acc.add(Monomial{u, static_cast<unsigned>(s)}, binomial(r, s) - binomial(r, s - 1));
      for (long tt = 1; tt <= s; ++tt) {
        long coeff = binomial(r - tt, s - tt) - binomial(r - tt, s - tt - 1);
        if (coeff == 0) continue;
        acc.add(mul(current[tt - 1], Polynomial::monomial(Monomial{u, static_cast<unsigned>(s - tt)})),
                coeff);
      }
      next.push_back(acc.take());
    }
    current = std::move(next);
  }
  return t;
}

// ---------------------------------------------------------------- Reducer

Reducer::Reducer(const TowerModel& tower, ReductionLimits limits) : tower_(tower), limits_(limits) {}

bool Reducer::is_reduced(const Monomial& tower_mono) const {
  for (unsigned j = 1; j <= tower_.k(); ++j)
    if (tower_mono.exponent(Variable::u(j)) >= tower_.rank()) return false;
  return true;
}

void Reducer::check_size(std::size_t n) const {
  if (n > limits_.max_terms)
    throw ComputationTooLarge("term count " + std::to_string(n) + " exceeds ceiling " +
                              std::to_string(limits_.max_terms));
}

const Reducer::Reduced& Reducer::reduce_tower_monomial(const Monomial& tower_mono) {
  if (auto it = memo_.find(tower_mono); it != memo_.end()) return it->second;

  PolynomialAccumulator acc;
  if (is_reduced(tower_mono)) {
    acc.add(tower_mono, 1);
  } else {
    const unsigned r = tower_.rank();
    unsigned level = tower_.k();
    while (tower_mono.exponent(Variable::u(level)) < r) --level;
    const Variable u = Variable::u(level);
    Monomial rest = tower_mono;
    rest.set(u, tower_mono.exponent(u) - r);

    for (unsigned s = 1; s <= r; ++s) {
      Monomial shifted = rest;
      shifted.set(u, rest.exponent(u) + r - s);
      for (const auto& term : tower_.chern(level - 1, s).terms()) {
        const Monomial base = term.mono.base_part();
        const unsigned bg = base.base_grade();
        if (limits_.base_cap && bg > *limits_.base_cap) continue;
        const Reduced& sub = reduce_tower_monomial(shifted * term.mono.tower_part());
        const std::size_t count =
            limits_.base_cap ? sub.count_upto(*limits_.base_cap - bg) : sub.terms.size();
        for (std::size_t i = 0; i < count; ++i)
          acc.add(sub.terms[i].mono * base, -term.coeff * sub.terms[i].coeff);
      }
    }
  }

  Polynomial p = acc.take();
  Reduced red;
  red.terms.assign(p.terms().begin(), p.terms().end());
  std::stable_sort(red.terms.begin(), red.terms.end(), [](const Term& a, const Term& b) {
    return a.mono.base_grade() < b.mono.base_grade();
  });
  unsigned max_grade = red.terms.empty() ? 0 : red.terms.back().mono.base_grade();
  red.upto.assign(max_grade + 1, 0);
  for (const auto& term : red.terms) ++red.upto[term.mono.base_grade()];
  for (std::size_t g = 1; g < red.upto.size(); ++g) red.upto[g] += red.upto[g - 1];

  memo_terms_ += red.terms.size();
  check_size(memo_terms_);
  return memo_.emplace(tower_mono, std::move(red)).first->second;
}

void Reducer::accumulate(PolynomialAccumulator& acc, const Monomial& mono, const mpz_class& coeff) {
  const Monomial tower_part = mono.tower_part();
  const unsigned bg = mono.base_grade();
  if (limits_.base_cap && bg > *limits_.base_cap) return;
  if (is_reduced(tower_part)) {
    acc.add(mono, coeff);
    return;
  }
  const Monomial base = mono.base_part();
  const Reduced& red = reduce_tower_monomial(tower_part);
  const std::size_t count =
      limits_.base_cap ? red.count_upto(*limits_.base_cap - bg) : red.terms.size();
  for (std::size_t i = 0; i < count; ++i) acc.add(red.terms[i].mono * base, coeff * red.terms[i].coeff);
}

Polynomial Reducer::reduce(const Polynomial& p) {
  PolynomialAccumulator acc(p.size());
  for (const auto& t : p.terms()) {
    accumulate(acc, t.mono, t.coeff);
    check_size(acc.size());
  }
  return acc.take();
}

Polynomial Reducer::multiply_reduce(const Polynomial& a, const Polynomial& b) {
  PolynomialAccumulator acc(a.size() * 2);
  mpz_class prod;
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      prod = x.coeff * y.coeff;
      accumulate(acc, x.mono * y.mono, prod);
    }
    check_size(acc.size());
  }
  return acc.take();
}

// ---------------------------------------------------------------- free functions

Polynomial reduce(const Polynomial& p, const TowerModel& tower) {
  Reducer reducer(tower);
  return reducer.reduce(p);
}

Polynomial integrate_fiber(const Polynomial& p, const TowerModel& tower) {
  const unsigned r = tower.rank();
  Polynomial a = p;
  for (unsigned j = tower.k(); j >= 1; --j) {
    const Variable u = Variable::u(j);
    if (a.degree_in(u) >= r)
      throw DomainError("integrate_fiber: input not reduced in " + u.name());
    a = coeff_of(a, u, r - 1);
  }
  return a;
}

Polynomial pow_reduced(const Polynomial& p, unsigned e, Reducer& reducer) {
  Polynomial acc = reducer.reduce(Polynomial::constant(1));
  for (unsigned i = 0; i < e; ++i) acc = reducer.multiply_reduce(acc, p);
  return acc;
}

Polynomial pow_reduced(const Polynomial& p, unsigned e, const TowerModel& tower,
                       const ReductionLimits& limits) {
  Reducer reducer(tower, limits);
  return pow_reduced(p, e, reducer);
}

Polynomial pow_reduced(const Polynomial& p, unsigned e, const TowerModel& tower) {
  return pow_reduced(p, e, tower, ReductionLimits::capped(tower));
}

}  // namespace jetdiff
