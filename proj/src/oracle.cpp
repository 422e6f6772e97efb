#include "vsqe/oracle.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace vsqe::oracle {

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Sign of A + B*sqrt(c1) + C*sqrt(c2).
int sign_of3(const Rational& A, const Rational& B, const Rational& c1, const Rational& C,
             const Rational& c2) {
  if (C == 0 || c2 == 0) return sign_of(A, B, c1);
  if (B == 0 || c1 == 0) return sign_of(A, C, c2);
  if (c1 == c2) return sign_of(A, B + C, c1);
  const int sx = sign_of(A, B, c1);
  const int sy = sgn(C);
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  // Opposite signs: compare squares. X^2 - Y^2 = (A^2 + B^2 c1 - C^2 c2) + 2AB sqrt(c1).
  const int s = sign_of(A * A + B * B * c1 - C * C * c2, 2 * A * B, c1);
  return s > 0 ? sx : s < 0 ? sy : 0;
}

// x - y as a QuadNum when both live in the same field.
std::optional<QuadNum> difference(const QuadNum& x, const QuadNum& y) {
  if (!x.is_rational() && !y.is_rational() && x.c() != y.c()) return std::nullopt;
  const Rational c = x.is_rational() ? y.c() : x.c();
  return QuadNum(x.a() * y.d() - y.a() * x.d(), x.b() * y.d() - y.b() * x.d(), c, x.d() * y.d());
}

}  // namespace

int sign_of(const Rational& u, const Rational& v, const Rational& w) {
  if (v == 0 || w == 0) return sgn(u);
  const int su = sgn(u);
  const int sv = sgn(v);
  if (su == 0) return sv;
  if (su == sv) return su;
  const int s = sgn(u * u - v * v * w);
  return s > 0 ? su : s < 0 ? sv : 0;
}

// ------------------------------------------------------------------ QuadNum

QuadNum::QuadNum(const Rational& q) : a_(q), b_(0), c_(0), d_(1) {}

QuadNum::QuadNum(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (c_ < 0) throw std::invalid_argument("QuadNum: negative radicand");
  if (d_ == 0) throw std::invalid_argument("QuadNum: zero denominator");
  if (d_ < 0) {
    a_ = -a_;
    b_ = -b_;
    d_ = -d_;
  }
  if (b_ == 0 || c_ == 0) {
    b_ = 0;
    c_ = 0;
  } else if (auto r = rational_sqrt(c_)) {
    a_ += b_ * *r;
    b_ = 0;
    c_ = 0;
  }
}

QuadNum QuadNum::operator+(const Rational& q) const { return QuadNum(a_ + q * d_, b_, c_, d_); }

std::pair<Rational, Rational> QuadNum::enclose(const Rational& width) const {
  if (is_rational()) return {rational(), rational()};
  // Bracket sqrt(c) by integers, then bisect.
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), c_.get_num_mpz_t(), c_.get_den_mpz_t());
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), fl.get_mpz_t());
  Rational lo(s), hi(s + 1);
  const Rational scale = abs_q(b_) / d_;
  while ((hi - lo) * scale > width) {
    Rational mid = (lo + hi) / 2;
    if (mid * mid <= c_)
      lo = mid;
    else
      hi = mid;
  }
  Rational x = (a_ + b_ * lo) / d_;
  Rational y = (a_ + b_ * hi) / d_;
  if (x > y) std::swap(x, y);
  return {x, y};
}

double QuadNum::to_double() const {
  auto [lo, hi] = enclose(Rational(1, 1u << 30));
  return Rational((lo + hi) / 2).get_d();
}

std::string QuadNum::to_string() const {
  std::ostringstream out;
  out << '(' << a_.get_str() << " + " << b_.get_str() << "*sqrt(" << c_.get_str() << "))/"
      << d_.get_str();
  return out.str();
}

std::strong_ordering quad_compare(const QuadNum& x, const QuadNum& y) {
  // Sign of x - y, scaled by d1 d2 > 0.
  const int s = sign_of3(x.a() * y.d() - y.a() * x.d(), x.b() * y.d(), x.c(), -(y.b() * x.d()), y.c());
  return s < 0 ? std::strong_ordering::less
         : s > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

// ------------------------------------------------------------- polynomials

UniPoly trim(UniPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int degree(const UniPoly& p) { return static_cast<int>(trim(p).size()) - 1; }

UniPoly uni_poly(const UniAtom& at) { return trim({at.c, at.b, at.a}); }

int sign_at(const UniPoly& p, const QuadNum& x) {
  if (p.size() > 3) throw std::domain_error("sign_at: degree above 2");
  const Rational zero(0);
  const Rational& p0 = p.size() > 0 ? p[0] : zero;
  const Rational& p1 = p.size() > 1 ? p[1] : zero;
  const Rational& p2 = p.size() > 2 ? p[2] : zero;
  const Rational &a = x.a(), &b = x.b(), &c = x.c(), &d = x.d();
  // d^2 * p(x), an element of Q(sqrt c).
  const Rational u = p0 * d * d + p1 * d * a + p2 * (a * a + b * b * c);
  const Rational v = p1 * d * b + 2 * p2 * a * b;
  return sign_of(u, v, c);
}

bool holds_at(const UniAtom& at, const QuadNum& x) {
  return rel_holds(at.rel, sign_at(uni_poly(at), x));
}

std::vector<QuadNum> real_roots(const UniPoly& raw) {
  const UniPoly p = trim(raw);
  switch (static_cast<int>(p.size()) - 1) {
    case -1: throw std::invalid_argument("real_roots: zero polynomial");
    case 0: return {};
    case 1: return {QuadNum(-p[0] / p[1])};
    case 2: {
      const Rational disc = p[1] * p[1] - 4 * p[2] * p[0];
      if (disc < 0) return {};
      if (disc == 0) return {QuadNum(-p[1] / (2 * p[2]))};
      std::vector<QuadNum> roots{QuadNum(-p[1], -1, disc, 2 * p[2]), QuadNum(-p[1], 1, disc, 2 * p[2])};
      if (roots[1] < roots[0]) std::swap(roots[0], roots[1]);
      return roots;
    }
    default: throw std::domain_error("real_roots: degree above 2");
  }
}

Rational below_all_roots(std::span<const UniPoly> polys) {
  Rational bound(1);
  for (const auto& raw : polys) {
    const UniPoly p = trim(raw);
    if (p.empty()) throw std::invalid_argument("below_all_roots: zero polynomial");
    Rational m(0);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Rational(abs_q(p[i])));
    bound = std::max(bound, Rational(1 + m / abs_q(p.back())));
  }
  return -bound - 1;
}

Rational rational_between(const QuadNum& x, const QuadNum& y) {
  if (!(x < y)) throw std::invalid_argument("rational_between: need x < y");
  Rational width(1);
  for (;;) {
    const auto [xl, xu] = x.enclose(width);
    const auto [yl, yu] = y.enclose(width);
    if (xu < yl) return (xu + yl) / 2;
    width /= 4;
  }
}

bool decide_closed_conjunction(std::span<const UniAtom> atoms) {
  std::vector<QuadNum> roots;
  for (const auto& at : atoms) {
    const UniPoly p = uni_poly(at);
    if (p.size() <= 1) {
      if (!rel_holds(at.rel, p.empty() ? 0 : sgn(p[0]))) return false;
      continue;
    }
    for (auto& r : real_roots(p)) roots.push_back(std::move(r));
  }
  std::sort(roots.begin(), roots.end(), [](const QuadNum& x, const QuadNum& y) { return x < y; });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

  std::vector<QuadNum> samples;
  if (roots.empty()) {
    samples.emplace_back(0);
  } else {
    samples.emplace_back(roots.front().enclose(1).first - 1);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      samples.push_back(roots[i]);
      if (i + 1 < roots.size()) samples.emplace_back(rational_between(roots[i], roots[i + 1]));
    }
    samples.emplace_back(roots.back().enclose(1).second + 1);
  }
  return std::any_of(samples.begin(), samples.end(), [&](const QuadNum& x) {
    return std::all_of(atoms.begin(), atoms.end(), [&](const UniAtom& at) { return holds_at(at, x); });
  });
}

Rational epsilon_witness(const QuadNum& r, std::span<const UniPoly> polys) {
  std::optional<QuadNum> next;
  for (const auto& raw : polys) {
    const UniPoly p = trim(raw);
    if (p.size() <= 1) continue;
    for (auto& root : real_roots(p))
      if (root > r && (!next || root < *next)) next = std::move(root);
  }
  if (!next) return 1;
  if (auto gap = difference(*next, r); gap && gap->is_rational()) return gap->rational() / 2;

  // Largest delta with r + 2 delta <= next, approached from below.
  const auto valid = [&](const Rational& delta) { return r + 2 * delta <= *next; };
  Rational lo(0), hi(1);
  while (valid(hi)) {
    lo = hi;
    hi *= 2;
  }
  const Rational precision(1, 1u << 20);
  while (lo == 0 || hi - lo > hi * precision) {
    Rational mid = (lo + hi) / 2;
    if (valid(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace vsqe::oracle
