#include "qmlde/rational.hpp"

#include <stdexcept>

namespace qmlde {

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + z.get_str());
  return z.get_si();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw zero_division("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.remove_prefix(1);  // mpq rejects an explicit plus
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string str(s);
  // mpq_class(str) accepts whitespace-embedded oddities; validate shape first.
  auto is_digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = s;
  if (body.front() == '-' || body.front() == '+') body.remove_prefix(1);
  auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    if (!is_digits(body)) throw std::invalid_argument("malformed rational literal: " + str);
  } else {
    if (!is_digits(body.substr(0, slash)) || !is_digits(body.substr(slash + 1)))
      throw std::invalid_argument("malformed rational literal: " + str);
  }
  mpq_class v;
  if (v.set_str(str, 10) != 0) throw std::invalid_argument("malformed rational literal: " + str);
  if (v.get_den() == 0) throw zero_division("rational literal with zero denominator: " + str);
  v.canonicalize();
  return Rational(v);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw zero_division("zero raised to a negative power");
    return Rational(0);
  }
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), k);
  return e > 0 ? Rational(n, d) : Rational(d, n);
}

}  // namespace qmlde
