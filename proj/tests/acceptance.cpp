// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "jetdiff/cli.hpp"
#include "jetdiff/hypersurface.hpp"
#include "jetdiff/morse.hpp"
#include "jetdiff/schur.hpp"
#include "jetdiff/tower.hpp"
#include "json.hpp"
#include "random_poly.hpp"

using namespace jetdiff;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

const char* kThreefoldClass =
    "-3421377792*h^3 + 676045440*c1*h^2 - 7494966*c1^3 + 10997352*c2*c1 - 3835548*c3";

DegreePolynomial D(std::vector<long> coeffs) {
  std::vector<mpz_class> z(coeffs.begin(), coeffs.end());
  return DegreePolynomial(std::move(z));
}

mpz_class binomial(unsigned a, unsigned b) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), a, b);
  return out;
}

void table_reproduction(Check& c) {
  std::ostringstream out, err;
  int code = cli::run({"--format", "json", "table", "--max-n", "5"}, out, err);
  c.expect(code == 0, "table exited " + std::to_string(code) + ": " + err.str());
  if (!c.ok) return;
  const std::map<std::pair<unsigned, unsigned>, unsigned> published{
      {{2, 2}, 18}, {{2, 3}, 16}, {{2, 4}, 16}, {{2, 5}, 16}, {{3, 3}, 82},
      {{3, 4}, 74}, {{3, 5}, 74}, {{4, 4}, 329}, {{4, 5}, 298}, {{5, 5}, 1222}};
  auto j = nlohmann::json::parse(out.str());
  std::size_t matched = 0;
  for (const auto& cell : j["cells"]) {
    const unsigned n = cell["n"], k = cell["k"];
    const std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
    auto it = published.find({n, k});
    if (it == published.end()) {
      c.expect(cell["bound"].is_null(), at + " should have no bound");
    } else {
      c.expect(cell["bound"] == it->second, at + " = " + cell["bound"].dump());
      ++matched;
    }
  }
  c.expect(matched == published.size(), "missing published cells");
}

void intermediate_class(Check& c) {
  c.expect(morse_class(3, 3) == Polynomial::parse(kThreefoldClass), "class differs");
}

void degree_polynomial(Check& c) {
  auto p = evaluate_degree(Polynomial::parse(kThreefoldClass), 3);
  c.expect(p == D({0, -466509222, -460474830, -21628710, 333162}), "polynomial " + p.to_string());
  auto bound = degree_bound(p);
  c.expect(bound && *bound == 82, "bound differs");
}

void rank_three(Check& c) {
  for (unsigned k = 1; k <= 5; ++k) {
    auto t = build_tower(3, k);
    for (unsigned j = 1; j <= k; ++j) {
      const Polynomial u = Polynomial::variable(Variable::u(j));
      const Polynomial c1 = t.chern(j - 1, 1), c2 = t.chern(j - 1, 2), c3 = t.chern(j - 1, 3);
      const std::string at = " at k=" + std::to_string(k) + " j=" + std::to_string(j);
      c.expect(t.relation(j) == u * u * u + c1 * u * u + c2 * u + c3, "relation" + at);
      if (j == k) continue;
      c.expect(t.chern(j, 1) == c1 + mpz_class(2) * u, "c1" + at);
      c.expect(t.chern(j, 2) == c2 + c1 * u, "c2" + at);
      c.expect(t.chern(j, 3) == c3 - c1 * u * u - mpz_class(2) * u * u * u, "c3" + at);
    }
  }
}

void hypersurface_chern(Check& c) {
  auto cls = chern_classes_of_hypersurface(3);
  c.expect(cls.size() == 3, "wrong count");
  if (!c.ok) return;
  c.expect(cls[0] == D({5, -1}), "c1 = " + cls[0].to_string());
  c.expect(cls[1] == D({10, -5, 1}), "c2 = " + cls[1].to_string());
  c.expect(cls[2] == D({10, -10, 5, -1}), "c3 = " + cls[2].to_string());
}

void small_case(Check& c) {
  auto r = compute_bound(2, 1);
  c.expect(r.poly_in_d == D({0, -2, -4}), "polynomial " + r.poly_in_d.to_string());
  c.expect(!r.bound.has_value(), "unexpected bound");
}

void vanishing_suite(Check& c) {
  const auto start = Clock::now();
  for (unsigned n = 2; n <= 6; ++n)
    for (unsigned k = 1; k < n; ++k)
      for (unsigned m = 1; m <= 20; ++m) {
        auto r = verify_theorem1(n, k, m);
        const std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(m) + ")";
        c.expect(r.all_vanish && r.violations.empty() && r.not_guaranteed.empty(), "failure at " + at);
      }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  c.expect(secs < 30, "took " + std::to_string(secs) + " s");
}

void dimension_conservation(Check& c) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<unsigned> kd(1, 4), nd(1, 5);
  for (int i = 0; i < 500; ++i) {
    const unsigned k = kd(rng), n = nd(rng);
    std::uniform_int_distribution<unsigned> total(0, 8);
    unsigned budget = total(rng);
    std::vector<unsigned> ell(k, 0);
    for (unsigned& l : ell) {
      l = std::uniform_int_distribution<unsigned>(0, budget)(rng);
      budget -= l;
    }
    std::shuffle(ell.begin(), ell.end(), rng);
    mpz_class expected = 1;
    for (unsigned l : ell) expected *= binomial(l + n - 1, n - 1);
    mpz_class got = 0;
    for (const auto& [mu, mult] : decompose_tensor({ell}, n)) got += schur_dim(mu, n) * mult;
    c.expect(got == expected, "mismatch for " + GradedPiece{ell}.to_string() + " n=" + std::to_string(n));
  }
}

bool is_reduced(const Polynomial& p, const TowerModel& t) {
  for (unsigned j = 1; j <= t.k(); ++j)
    if (p.degree_in(Variable::u(j)) >= t.rank()) return false;
  return true;
}

void algebra_properties(Check& c) {
  const std::pair<unsigned, unsigned> towers[] = {{2, 1}, {2, 3}, {3, 2}, {3, 3}, {4, 2}};
  int idempotent = 0, morphism = 0, homogeneous = 0, round_trip = 0;
  for (int i = 0; i < 1000; ++i) {
    auto [n, k] = towers[i % 5];
    auto t = build_tower(n, k);
    testing::PolyGen gen(n, k, 0xacce55 + i);

    std::uniform_int_distribution<unsigned> g(1, 2 * n);
    const unsigned grade = g(gen.rng());
    Polynomial p = gen.random_homogeneous(grade);
    Polynomial r = reduce(p, t);
    idempotent += is_reduced(r, t) && reduce(r, t) == r;

    Polynomial a = gen.random_polynomial(3, n + 1), b = gen.random_polynomial(3, n + 1);
    morphism += reduce(a * b, t) == reduce(reduce(a, t) * reduce(b, t), t) &&
                reduce(a + b, t) == reduce(a, t) + reduce(b, t);

    const unsigned other = g(gen.rng());
    Polynomial q = gen.random_homogeneous(other);
    Polynomial prod = reduce(p * q, t);
    homogeneous += (r.is_zero() || r.grade() == grade) && (prod.is_zero() || prod.grade() == grade + other);

    Polynomial s = gen.random_polynomial(6, 5);
    round_trip += Polynomial::parse(s.to_string()) == s;
  }
  c.expect(idempotent == 1000, "idempotence " + std::to_string(idempotent) + "/1000; ");
  c.expect(morphism == 1000, "ring morphism " + std::to_string(morphism) + "/1000; ");
  c.expect(homogeneous == 1000, "homogeneity " + std::to_string(homogeneous) + "/1000; ");
  c.expect(round_trip == 1000, "round trip " + std::to_string(round_trip) + "/1000; ");

  MorseOptions uncapped;
  uncapped.use_base_cap = false;
  for (unsigned n = 2; n <= 3; ++n)
    for (unsigned k = 1; k <= 5; ++k)
      c.expect(morse_class(n, k) == morse_class(n, k, uncapped),
               "cap changes (" + std::to_string(n) + "," + std::to_string(k) + ")");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"table reproduction for n <= 5", table_reproduction},
      {"intermediate class for (3,3)", intermediate_class},
      {"d-polynomial and bound 82 for (3,3)", degree_polynomial},
      {"rank-3 tower relations for k <= 5", rank_three},
      {"Chern classes of a threefold in P^4", hypersurface_chern},
      {"surface with k = 1 has no bound", small_case},
      {"vanishing for n <= 6, k < n, m <= 20", vanishing_suite},
      {"dimension conservation on 500 pieces", dimension_conservation},
      {"algebra property suite", algebra_properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = Clock::now();
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::cout << "criterion " << i + 1 << ": " << (check.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << std::fixed << std::setprecision(2) << secs << " s)";
    if (!check.ok) std::cout << "  " << check.why.str();
    std::cout << std::endl;
    failures += !check.ok;
  }
  return failures == 0 ? 0 : 1;
}
