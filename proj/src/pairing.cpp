#include "l2sig/pairing.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "l2sig/errors.hpp"

namespace l2sig {

namespace {

int middle_degree(const OrientedSimplicialComplex& complex) {
  if (complex.dim() % 2 != 0)
    throw ValidationError("middle dimension undefined: the complex has odd dimension " + std::to_string(complex.dim()));
  return complex.dim() / 2;
}

void require_signature_dimension(const OrientedSimplicialComplex& complex) {
  if (complex.dim() % 4 != 0)
    throw ValidationError("signatures need dimension divisible by 4, got " + std::to_string(complex.dim()));
}

LocalOrdering ordering_for(const OrientedSimplicialComplex& complex, const std::optional<LocalOrdering>& ordering) {
  LocalOrdering o = ordering ? *ordering : LocalOrdering::identity(complex.vertex_count());
  o.check(complex);
  return o;
}

std::complex<double> character(std::span<const double> theta, const GroupElement& h) {
  double phase = 0.0;
  for (std::size_t a = 0; a < theta.size(); ++a) phase += static_cast<double>(h.coords[a]) * theta[a];
  return std::polar(1.0, phase);
}

}  // namespace

std::vector<PairingTerm> pairing_terms(const OrientedSimplicialComplex& complex, const FundamentalCycle& cycle,
                                       const CoveringCocycle& cocycle, const LocalOrdering& ordering) {
  const int m = middle_degree(complex);
  std::vector<PairingTerm> terms;
  const auto& tops = complex.top_simplices();
  for (std::size_t k = 0; k < tops.size(); ++k) {
    const Simplex& tau = tops[k];
    const auto ord = ordering.order(tau);
    std::vector<int> front(ord.begin(), ord.begin() + m + 1);
    std::vector<int> back(ord.begin() + m, ord.end());
    PairingTerm t;
    t.sign = cycle.signs[k] * sorting_sign(ord) * sorting_sign(front) * sorting_sign(back);
    std::sort(front.begin(), front.end());
    std::sort(back.begin(), back.end());
    t.front = complex.index(front);
    t.back = complex.index(back);
    t.front_shift = cocycle(tau[0], front[0]);
    t.back_shift = cocycle(tau[0], back[0]);
    terms.push_back(std::move(t));
  }
  return terms;
}

Rational pair_cochains(const std::vector<PairingTerm>& terms, const CoveringCocycle& cocycle,
                       ExactRealization realization, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational total(0);
  if (realization == ExactRealization::trivial) {
    for (const auto& t : terms) {
      const Rational& x = a[t.front];
      if (x.is_zero()) continue;
      total += t.sign * x * b[t.back];
    }
    return total;
  }
  const GroupModel& group = cocycle.group();
  const auto sheets = group.elements();
  const std::size_t r = sheets.size();
  for (const auto& t : terms)
    for (const auto& s : sheets) {
      const Rational& x = a[t.front * r + group.index_of(group.multiply(s, t.front_shift))];
      if (x.is_zero()) continue;
      total += t.sign * x * b[t.back * r + group.index_of(group.multiply(s, t.back_shift))];
    }
  return total;
}

std::complex<double> pair_cochains(const std::vector<PairingTerm>& terms, std::span<const double> theta,
                                   const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  std::complex<double> total = 0.0;
  for (const auto& t : terms) {
    const std::complex<double> x = character(theta, t.front_shift) * a(static_cast<Eigen::Index>(t.front));
    const std::complex<double> y = character(theta, t.back_shift) * b(static_cast<Eigen::Index>(t.back));
    total += static_cast<double>(t.sign) * x * std::conj(y);
  }
  return total;
}

MiddlePairingData intersection_pairing(const CoveredComplex& space, ExactRealization realization,
                                       const std::optional<LocalOrdering>& ordering) {
  const OrientedSimplicialComplex& complex = space.complex;
  const int m = middle_degree(complex);
  const FundamentalCycle cycle = validate_and_orient(complex);
  validate_cocycle(complex, space.covering);
  const LocalOrdering order = ordering_for(complex, ordering);

  const auto cochains = twisted_cochain_complex(complex, space.covering, realization);
  MiddlePairingData data;
  data.degree = m;
  data.rep_dim = cochains.rep_dim;
  const auto rows = static_cast<std::size_t>(cochains.cochain_dims[m]);
  const SparseColumns<Rational> previous = m > 0 ? cochains.coboundary[m - 1] : SparseColumns<Rational>(rows, 0);
  const SparseColumns<Rational> next = m < cochains.dim ? cochains.coboundary[m] : SparseColumns<Rational>(0, rows);
  data.basis = cohomology_basis(previous, next);

  const auto terms = pairing_terms(complex, cycle, space.covering, order);
  const auto b = static_cast<Eigen::Index>(data.basis.size());
  data.pairing = Matrix<Rational>::Zero(b, b);
  for (Eigen::Index i = 0; i < b; ++i)
    for (Eigen::Index j = 0; j < b; ++j)
      data.pairing(i, j) = pair_cochains(terms, space.covering, realization, data.basis[i], data.basis[j]);
  return data;
}

TorusPairingData intersection_pairing(const CoveredComplex& space, std::span<const double> theta, double tolerance,
                                      const std::optional<LocalOrdering>& ordering) {
  const OrientedSimplicialComplex& complex = space.complex;
  const int m = middle_degree(complex);
  const FundamentalCycle cycle = validate_and_orient(complex);
  validate_cocycle(complex, space.covering);
  const LocalOrdering order = ordering_for(complex, ordering);

  const auto cochains = twisted_cochain_complex(complex, space.covering, theta);
  const auto n = static_cast<Eigen::Index>(cochains.cochain_dims[m]);
  Eigen::MatrixXcd laplacian = Eigen::MatrixXcd::Zero(n, n);
  if (m < cochains.dim) {
    const Eigen::MatrixXcd d = cochains.coboundary[m].to_dense();
    laplacian += d.adjoint() * d;
  }
  if (m > 0) {
    const Eigen::MatrixXcd d = cochains.coboundary[m - 1].to_dense();
    laplacian += d * d.adjoint();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(laplacian);
  const auto& eigenvalues = solver.eigenvalues();

  TorusPairingData data;
  data.degree = m;
  std::vector<Eigen::Index> harmonic;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (eigenvalues(k) <= tolerance)
      harmonic.push_back(k);
    else if (eigenvalues(k) <= std::sqrt(tolerance))
      data.near_harmonic = true;
  }
  data.harmonic.resize(n, static_cast<Eigen::Index>(harmonic.size()));
  for (std::size_t k = 0; k < harmonic.size(); ++k)
    data.harmonic.col(static_cast<Eigen::Index>(k)) = solver.eigenvectors().col(harmonic[k]);

  const auto terms = pairing_terms(complex, cycle, space.covering, order);
  const auto b = data.harmonic.cols();
  data.pairing.resize(b, b);
  for (Eigen::Index i = 0; i < b; ++i)
    for (Eigen::Index j = 0; j < b; ++j)
      data.pairing(i, j) = pair_cochains(terms, theta, data.harmonic.col(i), data.harmonic.col(j));
  data.hermitian_defect = b == 0 ? 0.0 : (data.pairing - data.pairing.adjoint()).cwiseAbs().maxCoeff();
  return data;
}

SignatureReport l2_signature_of_space(const CoveredComplex& space, const std::optional<QuadratureSpec>& spec,
                                      const std::optional<LocalOrdering>& ordering) {
  validate_and_orient(space.complex);
  require_signature_dimension(space.complex);
  const GroupModel& group = space.covering.group();
  if (group.kind() == GroupModel::Kind::tower)
    throw ValidationError("coverings are realized over finite or free abelian groups, not towers");

  const MiddlePairingData base = intersection_pairing(space, ExactRealization::trivial, ordering);
  const std::int64_t ordinary = exact_inertia(base.pairing).signature();

  SignatureReport report;
  if (group.is_finite()) {
    const MiddlePairingData cover =
        group.is_trivial() ? base : intersection_pairing(space, ExactRealization::regular, ordering);
    report = exact_report(exact_inertia(cover.pairing), cover.rep_dim, Method::exact_finite);
  } else {
    if (!spec) throw ValidationError("a quadrature spec is required for coverings over " + group.describe());
    const double eps = spec->zero_threshold;
    const QuadratureResult q = torus_quadrature(group.rank(), *spec, [&](std::span<const double> theta) {
      const TorusPairingData data = intersection_pairing(space, theta, eps, ordering);
      const Inertia in = spectral_inertia(data.pairing, eps);
      return NodeSample{in, in.zero > 0 || data.near_harmonic};
    });
    report.method = Method::torus_quadrature;
    report.sign2 = q.sign2;
    report.kernel_dim = q.kernel_dim;
    report.total_dim = q.total_dim;
    report.error_bound = q.error_bound;
    report.quadrature = spec;
  }
  report.ordinary_sign = ordinary;
  return report;
}

SignatureReport explicit_cover_signature(const CoveredComplex& space) {
  require_signature_dimension(space.complex);
  const GroupModel& group = space.covering.group();
  if (!group.is_finite()) throw ValidationError("explicit covers need a finite group, got " + group.describe());
  validate_cocycle(space.complex, space.covering);
  const OrientedSimplicialComplex base = with_orientation(space.complex, validate_and_orient(space.complex));
  const CoveredComplex total{explicit_cover(base, space.covering), CoveringCocycle::trivial()};
  const MiddlePairingData data = intersection_pairing(total, ExactRealization::trivial);
  SignatureReport report = exact_report(exact_inertia(data.pairing), group.order(), Method::explicit_cover);
  const MiddlePairingData base_pairing = intersection_pairing(space, ExactRealization::trivial);
  report.ordinary_sign = exact_inertia(base_pairing.pairing).signature();
  return report;
}

}  // namespace l2sig
