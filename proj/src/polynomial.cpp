#include "vsqe/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace vsqe {

Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("malformed number: " + std::string(text)); };
  if (text.empty()) fail();
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) fail();

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (num.empty() || den.empty()) fail();
    for (char ch : num) if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
    for (char ch : den) if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
    mpz_class d(std::string(den), 10);
    if (d == 0) fail();
    value = Rational(mpz_class(std::string(num), 10), d);
  } else {
    auto dot = body.find('.');
    std::string digits;
    std::size_t scale = 0;
    if (dot == std::string_view::npos) {
      digits = std::string(body);
    } else {
      digits = std::string(body.substr(0, dot)) + std::string(body.substr(dot + 1));
      scale = body.size() - dot - 1;
      if (scale == 0 || dot == 0) fail();
    }
    if (digits.empty()) fail();
    for (char ch : digits) if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    value = Rational(mpz_class(digits, 10), den);
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::initializer_list<Factor> factors)
    : Monomial(std::vector<Factor>(factors)) {}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v)
      factors_.back().second += e;
    else
      factors_.emplace_back(v, e);
  }
}

Monomial Monomial::variable(Var v, Exponent e) { return Monomial({{v, e}}); }

Exponent Monomial::exponent(Var v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, Var key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Exponent Monomial::total_degree() const {
  Exponent total = 0;
  for (const auto& f : factors_) total += f.second;
  return total;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::without(Var v) const {
  Monomial out;
  for (const auto& f : factors_)
    if (f.first != v) out.factors_.push_back(f);
  return out;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da > db;
  // Lexicographic on dense exponent vectors (x0, x1, ...): the first
  // variable where the exponents differ decides.
  auto fa = a.factors().begin();
  auto fb = b.factors().begin();
  while (fa != a.factors().end() || fb != b.factors().end()) {
    if (fb == b.factors().end() || (fa != a.factors().end() && fa->first < fb->first))
      return true;  // a has a positive exponent where b has 0
    if (fa == a.factors().end() || fb->first < fa->first) return false;
    if (fa->second != fb->second) return fa->second > fb->second;
    ++fa;
    ++fb;
  }
  return false;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

Polynomial::Polynomial(const Monomial& m, const Rational& coeff) {
  if (coeff != 0) terms_.emplace(m, coeff);
}

Polynomial Polynomial::var(Var v) { return Polynomial(Monomial::variable(v), Rational(1)); }

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const { return coefficient(Monomial()); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Var> Polynomial::variables() const {
  std::vector<Var> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) vars.push_back(f.first);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool Polynomial::mentions(Var v) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) != 0) return true;
  return false;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) { return *this = *this * q; }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  for (const auto& [mp, cp] : p.terms_)
    for (const auto& [mq, cq] : q.terms_) out.add_term(mp * mq, cp * cq);
  return out;
}

Valuation Valuation::prepend(const Rational& x) const {
  std::vector<Rational> values;
  values.reserve(values_.size() + 1);
  values.push_back(x);
  values.insert(values.end(), values_.begin(), values_.end());
  return Valuation(std::move(values));
}

// -------------------------------------------------------------- operations

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial pow(const Polynomial& p, unsigned n) {
  Polynomial result(1);
  Polynomial base = p;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

Exponent degree_in(const Polynomial& p, Var var) {
  Exponent d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m.exponent(var));
  return d;
}

Polynomial isolate_coefficient(const Polynomial& p, Var var, Exponent i) {
  Polynomial out;
  for (const auto& [m, c] : p.terms())
    if (m.exponent(var) == i) out += Polynomial(m.without(var), c);
  return out;
}

std::vector<Polynomial> nested_decompose(const Polynomial& p, Var var) {
  std::vector<Polynomial> coeffs(degree_in(p, var) + 1);
  for (const auto& [m, c] : p.terms()) coeffs[m.exponent(var)] += Polynomial(m.without(var), c);
  return coeffs;
}

Polynomial derivative(const Polynomial& p, Var var) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const Exponent k = m.exponent(var);
    if (k == 0) continue;
    out += Polynomial(m.without(var) * Monomial::variable(var, k - 1), c * k);
  }
  return out;
}

namespace {

Rational power(const Rational& base, Exponent e) {
  Rational result = 1;
  for (Exponent i = 0; i < e; ++i) result *= base;
  return result;
}

}  // namespace

Rational insertion(const Valuation& v, const Polynomial& p) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (const auto& [var, e] : m.factors()) {
      term *= power(v[var], e);
      if (term == 0) break;
    }
    total += term;
  }
  return total;
}

Polynomial partial_insertion(const Valuation& v, const Polynomial& p, Var keep) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Rational coeff = c;
    for (const auto& [var, e] : m.factors())
      if (var != keep) coeff *= power(v[var], e);
    out += Polynomial(Monomial::variable(keep, m.exponent(keep)), coeff);
  }
  return out;
}

Polynomial substitute(const Polynomial& p, Var var, const Polynomial& q) {
  auto coeffs = nested_decompose(p, var);
  // Horner in q.
  Polynomial out;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * q + *it;
  return out;
}

Polynomial rename_vars(const Polynomial& p, const std::function<Var(Var)>& rename) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> factors;
    factors.reserve(m.factors().size());
    for (const auto& [v, e] : m.factors()) factors.emplace_back(rename(v), e);
    out += Polynomial(Monomial(std::move(factors)), c);
  }
  return out;
}

Polynomial lift_poly(Var d, Var a, const Polynomial& p) {
  if (a == 0) return p;
  return rename_vars(p, [d, a](Var v) { return v >= d ? v + a : v; });
}

Polynomial lower_poly(Var d, Var a, const Polynomial& p) {
  if (a == 0) return p;
  for (Var v : p.variables())
    if (v >= d && v < d + a)
      throw std::invalid_argument("lower_poly: variable " + std::to_string(v) +
                                  " lies in the lowered range");
  return rename_vars(p, [d, a](Var v) { return v >= d + a ? v - a : v; });
}

Exponent min_exponent(const Polynomial& p, Var var) {
  if (p.is_zero()) return 0;
  Exponent n = UINT32_MAX;
  for (const auto& [m, c] : p.terms()) n = std::min(n, m.exponent(var));
  return n;
}

Polynomial divide_by_power(const Polynomial& p, Var var, Exponent n) {
  if (n == 0) return p;
  if (min_exponent(p, var) < n) throw std::invalid_argument("divide_by_power: not divisible");
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const Exponent k = m.exponent(var);
    out += Polynomial(m.without(var) * Monomial::variable(var, k - n), c);
  }
  return out;
}

std::string to_display_string(const Polynomial& p) {
  if (p.is_zero()) return "Const 0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (m.is_one() || magnitude != 1) {
      out << "Const " << magnitude.get_str();
      need_star = true;
    }
    for (const auto& [v, e] : m.factors()) {
      if (need_star) out << " * ";
      if (e == 1)
        out << "Var " << v;
      else
        out << "(Var " << v << ")^" << e;
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace vsqe
