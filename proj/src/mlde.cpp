#include "qmlde/mlde.hpp"

#include <algorithm>

#include "qmlde/errors.hpp"
#include "qmlde/modforms.hpp"

namespace qmlde {

GradedModularPolynomial::GradedModularPolynomial(int weight, std::vector<Term> terms)
    : weight_(weight) {
  if (weight < 0 || weight % 2 != 0)
    throw invalid_weight("modular polynomial weight must be a nonnegative even integer");
  for (auto& t : terms) {
    if (t.e4_exp < 0 || t.e6_exp < 0) throw std::invalid_argument("negative Eisenstein exponent");
    if (4 * t.e4_exp + 6 * t.e6_exp != weight)
      throw std::invalid_argument("term E4^" + std::to_string(t.e4_exp) + " E6^" +
                                  std::to_string(t.e6_exp) + " is not homogeneous of weight " +
                                  std::to_string(weight));
    if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
  }
}

QSeries GradedModularPolynomial::expand(int order) const {
  if (terms_.empty()) return QSeries::zero();
  const QSeries e4 = eisenstein_e(4, order);
  const QSeries e6 = eisenstein_e(6, order);
  QSeries acc = QSeries::zero();
  for (const auto& t : terms_)
    acc = acc + (e4.pow(t.e4_exp) * e6.pow(t.e6_exp)).scaled(t.coeff);
  return acc;
}

Rational GradedModularPolynomial::constant_term() const {
  Rational acc = 0;
  for (const auto& t : terms_) acc += t.coeff;
  return acc;
}

bool operator==(const GradedModularPolynomial& a, const GradedModularPolynomial& b) {
  if (a.weight_ != b.weight_ || a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i) {
    const auto &x = a.terms_[i], &y = b.terms_[i];
    if (x.coeff != y.coeff || x.e4_exp != y.e4_exp || x.e6_exp != y.e6_exp) return false;
  }
  return true;
}

Mlde::Mlde(Rational weight, int order, std::map<int, GradedModularPolynomial> p_list)
    : weight_(std::move(weight)), order_(order), p_list_(std::move(p_list)),
      memo_(std::make_shared<Memo>()) {
  if (order < 1) throw std::invalid_argument("equation order must be positive");
  for (const auto& [j, p] : p_list_) {
    if (j < 0 || j >= order) throw std::invalid_argument("coefficient index out of range");
    if (p.weight() != 2 * (order - j))
      throw invalid_weight("P_" + std::to_string(j) + " must have weight " +
                           std::to_string(2 * (order - j)) + ", got " + std::to_string(p.weight()));
  }
}

std::shared_ptr<const std::vector<QSeries>> Mlde::d_form(int order) const {
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->by_order.find(order);
    if (it != memo_->by_order.end()) return it->second;
  }

  const QSeries e2 = eisenstein_e(2, order);
  // T_j holds the D-expansion of theta^j (starting weight weight_); composing
  // theta_w on sum a_i D^i gives b_i = a_{i-1} + D(a_i) - (w/12) E_2 a_i.
  std::vector<QSeries> t = {QSeries::one(order)};
  std::vector<std::vector<QSeries>> towers = {t};
  Rational w = weight_;
  for (int j = 0; j < order_; ++j, w += 2) {
    std::vector<QSeries> next(t.size() + 1, QSeries::zero());
    const Rational factor = w / Rational(12);
    for (size_t i = 0; i < t.size(); ++i) {
      QSeries term = t[i].derivative();
      if (!factor.is_zero()) term = term - (e2 * t[i]).scaled(factor);
      next[i] = next[i] + term;
      next[i + 1] = next[i + 1] + t[i];
    }
    t = std::move(next);
    towers.push_back(t);
  }

  auto a = std::vector<QSeries>(towers[static_cast<size_t>(order_)]);
  for (const auto& [j, p] : p_list_) {
    const QSeries pj = p.expand(order);
    if (pj.is_zero()) continue;
    const auto& tj = towers[static_cast<size_t>(j)];
    for (size_t i = 0; i < tj.size(); ++i) a[i] = a[i] + pj * tj[i];
  }

  auto result = std::make_shared<const std::vector<QSeries>>(std::move(a));
  std::lock_guard<std::mutex> lock(memo_->mutex);
  return memo_->by_order.emplace(order, std::move(result)).first->second;
}

namespace {

// Coefficient of q^t, taking zero/stripped-lead series in stride.
Rational coeff_at_offset(const QSeries& s, long t) {
  if (s.is_zero()) return 0;
  return s.coefficient_at(Rational(t));
}

Rational eval_poly(const std::vector<Rational>& poly, const Rational& x) {
  Rational acc = 0;
  for (size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const Integer n = r.num(), d = r.den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0)
    return std::nullopt;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(sn, sd);
}

// Divides poly by (x - r); remainder must vanish (r is a root).
std::vector<Rational> deflate(const std::vector<Rational>& poly, const Rational& r) {
  std::vector<Rational> out(poly.size() - 1);
  Rational carry = poly.back();
  for (size_t i = poly.size() - 1; i-- > 0;) {
    out[i] = carry;
    carry = poly[i] + carry * r;
  }
  return out;
}

std::vector<Integer> divisors(const Integer& n0) {
  Integer n = abs(n0);
  std::vector<Integer> divs;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    divs.push_back(d);
    Integer e = n / d;
    if (e != d) divs.push_back(e);
  }
  return divs;
}

// All rational roots of an integer-cleared polynomial via the rational root
// theorem, used for degree >= 3 (degrees 1 and 2 are handled exactly below).
void rational_roots_by_divisors(std::vector<Rational> poly, std::vector<Rational>& roots,
                                int& remaining_degree) {
  while (poly.size() > 1 && poly.front().is_zero()) {
    roots.push_back(0);
    poly.erase(poly.begin());
  }
  if (poly.size() <= 1) {
    remaining_degree = 0;
    return;
  }
  Integer lcm = 1;
  for (const auto& c : poly) {
    Integer g;
    mpz_lcm(g.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    lcm = g;
  }
  std::vector<Integer> ic;
  ic.reserve(poly.size());
  for (const auto& c : poly) ic.push_back(c.num() * (Rational(lcm) / Rational(c.den())).num());
  for (const Integer& p : divisors(ic.front()))
    for (const Integer& q : divisors(ic.back()))
      for (int sign : {1, -1}) {
        const Rational cand(sign * p, q);
        while (poly.size() > 1 && eval_poly(poly, cand).is_zero()) {
          roots.push_back(cand);
          poly = deflate(poly, cand);
        }
      }
  remaining_degree = static_cast<int>(poly.size()) - 1;
}

}  // namespace

std::vector<Rational> Mlde::indicial_polynomial() const {
  // Constant terms of the A_j; D never contributes to the constant term, so
  // order-0 series arithmetic is exact here.
  const auto a = d_form(0);
  std::vector<Rational> poly(a->size());
  for (size_t j = 0; j < a->size(); ++j) poly[j] = coeff_at_offset((*a)[j], 0);
  return poly;
}

IndicialData indicial(const Mlde& m) {
  IndicialData data;
  data.polynomial = m.indicial_polynomial();
  const int n = m.order();
  std::vector<Rational> roots;
  if (n == 1) {
    roots.push_back(-data.polynomial[0]);
  } else if (n == 2) {
    // alpha^2 + b alpha + c = 0 (monic by construction)
    const Rational &b = data.polynomial[1], &c = data.polynomial[0];
    const Rational disc = b * b - Rational(4) * c;
    if (const auto s = exact_sqrt(disc)) {
      roots.push_back((-b + *s) / Rational(2));
      if (!s->is_zero()) roots.push_back((-b - *s) / Rational(2));
    } else {
      data.has_irrational_roots = true;
    }
  } else {
    int remaining = 0;
    rational_roots_by_divisors(data.polynomial, roots, remaining);
    data.has_irrational_roots = remaining > 0;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  data.roots = std::move(roots);
  return data;
}

FrobeniusStepper::FrobeniusStepper(const Mlde& m, const Rational& lambda, int order)
    : lambda_(lambda), order_(order), d_form_(m.d_form(order)), ipoly_(m.indicial_polynomial()) {
  if (!eval_poly(ipoly_, lambda).is_zero())
    throw not_an_exponent("I(" + lambda.to_string() + ") = " +
                          eval_poly(ipoly_, lambda).to_string() + ", not an indicial root");
  coeffs_.push_back(1);
  std::vector<Rational> pw(d_form_->size());
  Rational x = 1;
  for (size_t j = 0; j < pw.size(); ++j, x *= lambda) pw[j] = x;
  lambda_powers_.push_back(std::move(pw));
}

Rational FrobeniusStepper::indicial_at(const Rational& x) const { return eval_poly(ipoly_, x); }

const Rational& FrobeniusStepper::step() {
  const int s = static_cast<int>(coeffs_.size());
  if (s > order_) throw std::logic_error("stepped past the requested truncation order");
  Rational rhs = 0;
  for (int m = 0; m < s; ++m) {
    const auto& pw = lambda_powers_[static_cast<size_t>(m)];
    Rational inner = 0;
    for (size_t j = 0; j < d_form_->size(); ++j) {
      const Rational a_jt = coeff_at_offset((*d_form_)[j], s - m);
      if (!a_jt.is_zero()) inner += a_jt * pw[j];
    }
    if (!inner.is_zero()) rhs -= coeffs_[static_cast<size_t>(m)] * inner;
  }
  const Rational is = indicial_at(lambda_ + Rational(static_cast<long>(s)));
  Rational cs;
  if (is.is_zero()) {
    if (!rhs.is_zero()) throw logarithmic_obstruction(s);
    resonant_ = true;
    cs = 0;  // canonical representative of the free coefficient
  } else {
    cs = rhs / is;
  }
  coeffs_.push_back(std::move(cs));
  std::vector<Rational> pw(d_form_->size());
  const Rational base = lambda_ + Rational(static_cast<long>(s));
  Rational x = 1;
  for (size_t j = 0; j < pw.size(); ++j, x *= base) pw[j] = x;
  lambda_powers_.push_back(std::move(pw));
  return coeffs_.back();
}

FrobeniusSolution frobenius_solve(const Mlde& m, const Rational& lambda, int order) {
  FrobeniusStepper stepper(m, lambda, order);
  for (int s = 1; s <= order; ++s) stepper.step();
  FrobeniusSolution sol;
  sol.exponent = lambda;
  sol.coeffs = stepper.coeffs();
  sol.trunc_order = order;
  sol.resonant = stepper.resonant();
  return sol;
}

QSeries solution_series(const FrobeniusSolution& sol) {
  return QSeries::from_coeffs(sol.exponent, sol.coeffs);
}

std::vector<Resonance> resonances(const Mlde& m) {
  const auto data = indicial(m);
  std::vector<Resonance> out;
  for (size_t i = 0; i < data.roots.size(); ++i)
    for (size_t j = i + 1; j < data.roots.size(); ++j) {
      const Rational gap = data.roots[j] - data.roots[i];
      if (gap.is_integer() && gap.sign() > 0)
        out.push_back({data.roots[i], data.roots[j], static_cast<int>(to_long(gap.num()))});
    }
  return out;
}

QSeries apply_mlde(const Mlde& m, const QSeries& f) {
  if (f.is_zero()) return f;
  const auto a = m.d_form(f.trunc_order());
  QSeries acc = QSeries::zero();
  QSeries df = f;
  for (size_t j = 0; j < a->size(); ++j) {
    acc = acc + (*a)[j] * df;
    if (j + 1 < a->size()) df = df.derivative();
  }
  return acc;
}

Mlde second_order_weight0(const Rational& k) {
  std::map<int, GradedModularPolynomial> p;
  p.emplace(1, GradedModularPolynomial(2, {}));
  p.emplace(0, GradedModularPolynomial(
                   4, {{-(k * (k + Rational(2))) / Rational(144), 1, 0}}));
  return Mlde(0, 2, std::move(p));
}

Mlde deligne_mlde(int h_dual) {
  if (h_dual < 1) throw std::invalid_argument("dual Coxeter number must be positive");
  return second_order_weight0(h_dual - 1);
}

}  // namespace qmlde
