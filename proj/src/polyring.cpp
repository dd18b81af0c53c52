#include "jetdiff/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <ostream>
#include <sstream>

namespace jetdiff {

namespace {

constexpr std::size_t kSlotU0 = 0;
constexpr std::size_t kSlotC0 = 16;
constexpr std::size_t kSlotH = 30;
constexpr std::size_t kSlotD = 31;

// Slot priority for the display order.
constexpr std::array<std::uint8_t, Monomial::kSlots> kPriority = [] {
  std::array<std::uint8_t, Monomial::kSlots> order{};
  std::size_t i = 0;
  order[i++] = kSlotH;
  for (std::size_t s = 0; s < kMaxChern; ++s) order[i++] = kSlotC0 + s;
  for (std::size_t j = kMaxLevels; j > 0; --j) order[i++] = kSlotU0 + j - 1;
  order[i++] = kSlotD;
  return order;
}();

// Print order inside a monomial: u1..u16, c1..c14, h, d.
constexpr std::array<std::uint8_t, Monomial::kSlots> kPrintOrder = [] {
  std::array<std::uint8_t, Monomial::kSlots> order{};
  for (std::size_t i = 0; i < Monomial::kSlots; ++i) order[i] = static_cast<std::uint8_t>(i);
  return order;
}();

Variable variable_of_slot(std::size_t slot) {
  if (slot < kSlotC0) return Variable::u(static_cast<unsigned>(slot - kSlotU0 + 1));
  if (slot < kSlotH) return Variable::c(static_cast<unsigned>(slot - kSlotC0 + 1));
  if (slot == kSlotH) return Variable::h();
  return Variable::d();
}

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

}  // namespace

// ---------------------------------------------------------------- Variable

Variable Variable::u(unsigned level) {
  if (level < 1 || level > kMaxLevels)
    throw DomainError("tower level out of range: u" + std::to_string(level));
  return {VarKind::U, level};
}

Variable Variable::c(unsigned s) {
  if (s < 1 || s > kMaxChern)
    throw DomainError("Chern index out of range: c" + std::to_string(s));
  return {VarKind::C, s};
}

unsigned Variable::grade() const {
  switch (kind) {
    case VarKind::U: return 1;
    case VarKind::C: return index;
    case VarKind::H: return 1;
    case VarKind::D: return 0;
  }
  return 0;
}

std::size_t Variable::slot() const {
  switch (kind) {
    case VarKind::U: return kSlotU0 + index - 1;
    case VarKind::C: return kSlotC0 + index - 1;
    case VarKind::H: return kSlotH;
    case VarKind::D: return kSlotD;
  }
  return kSlotH;
}

std::string Variable::name() const {
  switch (kind) {
    case VarKind::U: return "u" + std::to_string(index);
    case VarKind::C: return "c" + std::to_string(index);
    case VarKind::H: return "h";
    case VarKind::D: return "d";
  }
  return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Variable v, unsigned e) { set(v, e); }

void Monomial::set(Variable v, unsigned e) {
  if (e > 255) throw ComputationTooLarge("exponent exceeds 255 for " + v.name());
  exps_[v.slot()] = static_cast<std::uint8_t>(e);
}

unsigned Monomial::base_grade() const {
  unsigned g = exps_[kSlotH];
  for (std::size_t s = 0; s < kMaxChern; ++s) g += static_cast<unsigned>(s + 1) * exps_[kSlotC0 + s];
  return g;
}

unsigned Monomial::grade() const {
  unsigned g = base_grade();
  for (std::size_t j = 0; j < kMaxLevels; ++j) g += exps_[kSlotU0 + j];
  return g;
}

unsigned Monomial::total_degree() const {
  unsigned t = 0;
  for (auto e : exps_) t += e;
  return t;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e == 0; });
}

Monomial Monomial::tower_part() const {
  Monomial m;
  std::copy_n(exps_.begin() + kSlotU0, kMaxLevels, m.exps_.begin() + kSlotU0);
  return m;
}

Monomial Monomial::base_part() const {
  Monomial m = *this;
  std::fill_n(m.exps_.begin() + kSlotU0, kMaxLevels, std::uint8_t{0});
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kSlots; ++i) {
    unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > 255)
      throw ComputationTooLarge("exponent exceeds 255 for " + variable_of_slot(i).name());
    m.exps_[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

std::size_t Monomial::hash() const {
  std::uint64_t w[4];
  std::memcpy(w, exps_.data(), sizeof w);
  std::uint64_t x = mix(w[0]);
  x = mix(x ^ (w[1] + 0x9e3779b97f4a7c15ULL));
  x = mix(x ^ (w[2] + 0x7f4a7c159e3779b9ULL));
  x = mix(x ^ (w[3] + 0x3c6ef372fe94f82bULL));
  return static_cast<std::size_t>(x);
}

std::string Monomial::to_string() const {
  std::string out;
  for (auto slot : kPrintOrder) {
    unsigned e = exps_[slot];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_of_slot(slot).name();
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  unsigned ta = a.total_degree(), tb = b.total_degree();
  if (ta != tb) return ta > tb;
  for (auto slot : kPriority) {
    unsigned ea = a.exponent_at(slot), eb = b.exponent_at(slot);
    if (ea != eb) return ea > eb;
  }
  return false;
}

// ---------------------------------------------------------------- Accumulator

void PolynomialAccumulator::add(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = map_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolynomialAccumulator::add(const Polynomial& p, const mpz_class& scale) {
  if (scale == 0) return;
  for (const auto& t : p.terms_) add(t.mono, scale * t.coeff);
}

Polynomial PolynomialAccumulator::take() {
  Polynomial p;
  p.terms_.reserve(map_.size());
  for (auto& [m, c] : map_)
    if (c != 0) p.terms_.push_back({m, std::move(c)});
  map_.clear();
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& a, const Term& b) { return canonical_less(a.mono, b.mono); });
  return p;
}

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(const mpz_class& c) { return monomial(Monomial{}, c); }

Polynomial Polynomial::variable(Variable v) { return monomial(Monomial{v}, 1); }

Polynomial Polynomial::monomial(const Monomial& m, const mpz_class& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

std::optional<unsigned> Polynomial::grade() const {
  if (terms_.empty()) return std::nullopt;
  unsigned g = terms_.front().mono.grade();
  for (const auto& t : terms_)
    if (t.mono.grade() != g) return std::nullopt;
  return g;
}

bool Polynomial::is_homogeneous() const { return terms_.empty() || grade().has_value(); }

unsigned Polynomial::degree_in(Variable v) const {
  unsigned deg = 0;
  for (const auto& t : terms_) deg = std::max(deg, t.mono.exponent(v));
  return deg;
}

bool Polynomial::involves(VarKind kind) const {
  for (const auto& t : terms_)
    for (std::size_t slot = 0; slot < Monomial::kSlots; ++slot)
      if (t.mono.exponent_at(slot) != 0 && variable_of_slot(slot).kind == kind) return true;
  return false;
}

mpz_class Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff < 0;
    mpz_class mag = abs(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += t.mono.to_string();
    } else {
      out += mag.get_str() + '*' + t.mono.to_string();
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial run() {
    PolynomialAccumulator acc;
    skip_ws();
    if (at_end()) fail("empty input");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [mono, coeff] = parse_term();
      acc.add(mono, sign * coeff);
      skip_ws();
    }
    return acc.take();
  }

 private:
  std::pair<Monomial, mpz_class> parse_term() {
    Monomial mono;
    mpz_class coeff = 1;
    for (;;) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_integer();
      } else {
        Variable v = parse_variable();
        unsigned e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          mpz_class ez = parse_integer();
          if (!ez.fits_uint_p()) fail("exponent too large");
          e = static_cast<unsigned>(ez.get_ui());
        }
        mono = mono * Monomial{v, e};
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      return {mono, coeff};
    }
  }

  mpz_class parse_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Variable parse_variable() {
    char ch = peek();
    ++pos_;
    if (ch == 'h') return Variable::h();
    if (ch == 'd') return Variable::d();
    if (ch == 'u' || ch == 'c') {
      mpz_class idx = parse_integer();
      if (!idx.fits_uint_p()) fail("variable index too large");
      unsigned i = static_cast<unsigned>(idx.get_ui());
      try {
        return ch == 'u' ? Variable::u(i) : Variable::c(i);
      } catch (const DomainError& e) {
        fail(e.what());
      }
    }
    --pos_;
    fail(std::string("unexpected character '") + ch + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).run(); }

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  PolynomialAccumulator acc(p.size() + q.size());
  acc.add(p);
  acc.add(q);
  return acc.take();
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  PolynomialAccumulator acc(p.size() + q.size());
  acc.add(p);
  acc.add(q, -1);
  return acc.take();
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }

Polynomial operator*(const mpz_class& s, const Polynomial& p) {
  if (s == 0) return {};
  Polynomial out = p;
  for (auto& t : out.terms_) t.coeff *= s;
  return out;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  if (p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < p.terms_.size(); ++i)
    if (!(p.terms_[i].mono == q.terms_[i].mono) || p.terms_[i].coeff != q.terms_[i].coeff)
      return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q, std::optional<unsigned> base_cap) {
  if (p.is_zero() || q.is_zero()) return {};
  PolynomialAccumulator acc(p.size() * q.size());
  mpz_class prod;
  for (const auto& a : p.terms()) {
    unsigned ga = a.mono.base_grade();
    if (base_cap && ga > *base_cap) continue;
    for (const auto& b : q.terms()) {
      if (base_cap && ga + b.mono.base_grade() > *base_cap) continue;
      prod = a.coeff * b.coeff;
      acc.add(a.mono * b.mono, prod);
    }
  }
  return acc.take();
}

Polynomial coeff_of(const Polynomial& p, Variable v, unsigned e) {
  PolynomialAccumulator acc;
  for (const auto& t : p.terms()) {
    if (t.mono.exponent(v) != e) continue;
    Monomial m = t.mono;
    m.set(v, 0);
    acc.add(m, t.coeff);
  }
  return acc.take();
}

Polynomial substitute(const Polynomial& p, const std::map<Variable, Polynomial>& assignments) {
  if (assignments.empty()) return p;
  // powers[v][e] = value(v)^e, grown on demand
  std::map<Variable, std::vector<Polynomial>> powers;
  auto power = [&](Variable v, unsigned e) -> const Polynomial& {
    auto& table = powers[v];
    if (table.empty()) table.push_back(Polynomial::constant(1));
    while (table.size() <= e) table.push_back(table.back() * assignments.at(v));
    return table[e];
  };

  PolynomialAccumulator acc;
  for (const auto& t : p.terms()) {
    Monomial rest = t.mono;
    Polynomial value = Polynomial::constant(t.coeff);
    for (const auto& [v, _] : assignments) {
      unsigned e = rest.exponent(v);
      if (e == 0) continue;
      rest.set(v, 0);
      value = value * power(v, e);
    }
    for (const auto& vt : value.terms()) acc.add(vt.mono * rest, vt.coeff);
  }
  return acc.take();
}

}  // namespace jetdiff
