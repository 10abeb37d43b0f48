#include "l2sig/rational.hpp"

#include <charconv>

#include "l2sig/errors.hpp"

namespace l2sig {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational norm = o.re * o.re + o.im * o.im;
  if (norm.is_zero()) throw ValidationError("division by zero in Q(i)");
  *this *= conjugate(o);
  re /= norm;
  im /= norm;
  return *this;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string to_string(const Rational& x) {
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

std::string to_string(const GaussianRational& x) {
  if (x.im.is_zero()) return to_string(x.re);
  return "(" + to_string(x.re) + ")+(" + to_string(x.im) + ")i";
}

Rational parse_rational(std::string_view text) {
  auto valid = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid(num) || !valid(den)) throw ParseError("bad rational literal '" + std::string(text) + "'");
  using Int = boost::multiprecision::mpz_int;
  Int n(std::string(num.front() == '+' ? num.substr(1) : num));
  Int d(std::string(den.front() == '+' ? den.substr(1) : den));
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace l2sig
