#include "l2sig/vn_signature.hpp"

namespace l2sig {

std::string to_string(Method m) {
  switch (m) {
    case Method::exact_finite:
      return "exact-finite";
    case Method::torus_quadrature:
      return "torus-quadrature";
    case Method::tower_limit:
      return "tower-limit";
    case Method::explicit_cover:
      return "explicit-cover";
  }
  return "?";
}

SignatureReport exact_report(const Inertia& inertia, std::int64_t scale, Method method) {
  SignatureReport r;
  r.method = method;
  r.sign2_exact = Rational(inertia.signature()) / scale;
  r.kernel_exact = Rational(inertia.zero) / scale;
  r.total_exact = Rational(inertia.size()) / scale;
  r.sign2 = to_double(*r.sign2_exact);
  r.kernel_dim = to_double(*r.kernel_exact);
  r.total_dim = to_double(*r.total_exact);
  r.error_bound = 0.0;
  return r;
}

}  // namespace l2sig
