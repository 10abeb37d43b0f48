#ifndef L2SIG_RATIONAL_HPP
#define L2SIG_RATIONAL_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace l2sig {

// Expression templates are switched off: Eigen and boost's expression
// templates do not compose reliably.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

/// Exact element of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(int r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline Rational conjugate(const Rational& x) { return x; }
inline GaussianRational conjugate(const GaussianRational& x) { return {x.re, -x.im}; }
inline std::complex<double> conjugate(const std::complex<double>& x) { return std::conj(x); }

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const GaussianRational& x) { return x.re.is_zero() && x.im.is_zero(); }
inline bool is_zero(const std::complex<double>& x) { return x == 0.0; }

inline bool is_real(const Rational&) { return true; }
inline bool is_real(const GaussianRational& x) { return x.im.is_zero(); }

double to_double(const Rational& x);
inline std::complex<double> to_complex(const Rational& x) { return {to_double(x), 0.0}; }
inline std::complex<double> to_complex(const GaussianRational& x) {
  return {to_double(x.re), to_double(x.im)};
}

/// "num/den" with den > 0, always including the denominator.
std::string to_string(const Rational& x);
std::string to_string(const GaussianRational& x);

/// Accepts "n", "-n", "n/d".
Rational parse_rational(std::string_view text);

Rational factorial(int n);

}  // namespace l2sig

namespace Eigen {

template <>
struct NumTraits<l2sig::GaussianRational> : GenericNumTraits<l2sig::GaussianRational> {
  using Real = l2sig::Rational;
  using NonInteger = l2sig::GaussianRational;
  using Literal = l2sig::GaussianRational;
  using Nested = l2sig::GaussianRational;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 40,
    MulCost = 120
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // L2SIG_RATIONAL_HPP
