#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qmlde/qseries.hpp"

namespace qmlde {

// Homogeneous polynomial in E_4 and E_6 with tracked modular weight: every
// term c * E_4^a * E_6^b must satisfy 4a + 6b = weight. Zero-coefficient
// terms are dropped; an empty term list is the zero polynomial (the only
// possibility for weights like 2 that no monomial can reach).
class GradedModularPolynomial {
 public:
  struct Term {
    Rational coeff;
    int e4_exp = 0;
    int e6_exp = 0;
  };

  GradedModularPolynomial(int weight, std::vector<Term> terms);

  int weight() const { return weight_; }
  const std::vector<Term>& terms() const { return terms_; }

  QSeries expand(int order) const;
  // Value at q = 0 (E_4 and E_6 both have constant term 1).
  Rational constant_term() const;

  friend bool operator==(const GradedModularPolynomial& a, const GradedModularPolynomial& b);

 private:
  int weight_;
  std::vector<Term> terms_;
};

// Monic modular linear differential equation of weight k and order n in
// theta form:
//   theta_k^n f + sum_{j=0}^{n-1} P_j theta_k^j f = 0,
// with P_j a classical modular polynomial of weight 2(n - j).
//
// Immutable value; the derived D-form coefficients (see d_form) are memoized
// per truncation order behind a shared pure cache.
class Mlde {
 public:
  Mlde(Rational weight, int order, std::map<int, GradedModularPolynomial> p_list);

  const Rational& weight() const { return weight_; }
  int order() const { return order_; }
  const std::map<int, GradedModularPolynomial>& p_list() const { return p_list_; }

  // Coefficients A_0 .. A_n of the expansion sum_j A_j(q) D^j of the
  // operator, D = q d/dq. A_n is identically 1.
  std::shared_ptr<const std::vector<QSeries>> d_form(int order) const;

  // Indicial polynomial I(alpha) = sum_j A_j(0) alpha^j, ascending, monic.
  std::vector<Rational> indicial_polynomial() const;

 private:
  Rational weight_;
  int order_;
  std::map<int, GradedModularPolynomial> p_list_;

  struct Memo {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const std::vector<QSeries>>> by_order;
  };
  std::shared_ptr<Memo> memo_;
};

struct IndicialData {
  std::vector<Rational> polynomial;  // ascending coefficients of I(alpha)
  std::vector<Rational> roots;       // distinct rational roots, ascending
  bool has_irrational_roots = false; // true when not all roots (with multiplicity) are rational
};

IndicialData indicial(const Mlde& m);

// Power-series solution q^lambda (1 + sum_{s>=1} c_s q^s) of the equation.
struct FrobeniusSolution {
  Rational exponent;
  std::vector<Rational> coeffs;  // coeffs[0] = 1
  int trunc_order = 0;
  bool resonant = false;
  // First resonant offset with nonzero obstruction. Never set on a returned
  // solution (the solver throws logarithmic_obstruction instead); kept for
  // serialization of reports.
  std::optional<int> obstruction_at;
};

// Steps the Frobenius coefficient recursion one offset at a time, so callers
// can interleave their own per-coefficient checks and stop early.
// c_s I(lambda + s) = - sum_{m < s} c_m sum_j a_{j, s-m} (lambda + m)^j,
// where a_{j,t} is the q^t coefficient of A_j. At a resonant offset
// (I(lambda + s) = 0) a vanishing right side yields c_s = 0; a nonzero one
// throws logarithmic_obstruction.
class FrobeniusStepper {
 public:
  // Throws not_an_exponent unless I(lambda) = 0.
  FrobeniusStepper(const Mlde& m, const Rational& lambda, int order);

  // Computes the coefficient at the next offset (and returns it).
  const Rational& step();

  int last_offset() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& exponent() const { return lambda_; }
  bool resonant() const { return resonant_; }

 private:
  Rational indicial_at(const Rational& x) const;

  Rational lambda_;
  int order_;
  std::shared_ptr<const std::vector<QSeries>> d_form_;
  std::vector<Rational> ipoly_;
  std::vector<Rational> coeffs_;
  std::vector<std::vector<Rational>> lambda_powers_;  // (lambda + m)^j for computed m
  bool resonant_ = false;
};

// Runs the recursion to the given order. Throws not_an_exponent or
// logarithmic_obstruction.
FrobeniusSolution frobenius_solve(const Mlde& m, const Rational& lambda, int order);

// The solution as a QSeries; requires the exponent to lie on the 1/24 lattice.
QSeries solution_series(const FrobeniusSolution& sol);

struct Resonance {
  Rational lambda_small;
  Rational lambda_large;
  int gap = 0;  // positive integer difference
};

// All ordered pairs of rational indicial roots differing by a positive integer.
std::vector<Resonance> resonances(const Mlde& m);

// sum_j A_j D^j f to the shared valid order; the zero series iff f solves the
// equation to that order.
QSeries apply_mlde(const Mlde& m, const QSeries& f);

// The second-order weight-0 family
//   f'' - (1/6) E_2 f' - (k(k+2)/144) E_4 f = 0
// in theta form: P_1 = 0, P_0 = -(k(k+2)/144) E_4.
Mlde second_order_weight0(const Rational& k);

// Specialization k = h_dual - 1, the equation with E_4 coefficient
// (h_dual - 1)(h_dual + 1)/144.
Mlde deligne_mlde(int h_dual);

}  // namespace qmlde
