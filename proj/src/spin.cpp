#include "cliffwave/spin.hpp"

#include <cmath>

namespace cliffwave {

ApproxSpin exp_bivector(const Bivector<Approx>& x, double t) {
  const int dim = x.dim();
  const ApproxMV& v = x.value();
  if (v.is_zero()) return ApproxSpin::identity(dim);

  ApproxMV sq = v * v;
  bool simple = true;
  for (const auto& [b, c] : sq.terms())
    if (b != 0 && std::abs(c) > 1e-14 * sq.norm2()) simple = false;
  if (simple) {
    // X^2 = -|X|^2 for a simple real bivector.
    double mag = std::sqrt(-sq.scalar_part().real());
    if (mag > 0.0 && std::isfinite(mag)) {
      ApproxMV r = ApproxMV::scalar(dim, std::cos(t * mag));
      r += v * Approx(std::sin(t * mag) / mag);
      return ApproxSpin(r);
    }
  }

  ApproxMV tx = v * Approx(t);
  ApproxMV term = ApproxMV::one(dim);
  ApproxMV sum = term;
  for (int n = 1; n < 200; ++n) {
    term = term * tx;
    term *= Approx(1.0 / n);
    sum += term;
    if (std::sqrt(term.norm2()) < 1e-17) break;
  }
  // Drop the odd-grade round-off residue, which is identically zero in exact arithmetic.
  ApproxMV even(dim);
  for (const auto& [b, c] : sum.terms())
    if (grade_of(b) % 2 == 0) even.add(b, c);
  return ApproxSpin(even);
}

Eigen::MatrixXd rotation_matrix(const ApproxSpin& s) {
  const int dim = s.dim();
  Eigen::MatrixXd r(dim, dim);
  for (int j = 0; j < dim; ++j) {
    ApproxMV img = action_h(s, ApproxMV::generator(dim, j));
    for (int i = 0; i < dim; ++i) r(i, j) = img.coeff(Blade{1} << i).real();
  }
  return r;
}

namespace {

std::vector<ApproxMV> bivector_basis(int dim) {
  std::vector<ApproxMV> basis;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) basis.push_back(Bivector<Approx>::unit(dim, i, j).value());
  return basis;
}

// tr(ad_X ad_Y) over the bivector basis.
double adjoint_trace(const ApproxMV& x, const ApproxMV& y) {
  double tr = 0.0;
  for (const auto& z : bivector_basis(x.dim())) {
    ApproxMV ady = y * z - z * y;
    ApproxMV adx = x * ady - ady * x;
    // Coordinates in {e_ij} are read off directly; the basis is orthonormal.
    tr += adx.coeff(z.terms().begin()->first).real();
  }
  return tr;
}

}  // namespace

double killing_form(const Bivector<Approx>& x, const Bivector<Approx>& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("killing_form: dimension mismatch");
  if (x.dim() < 3) throw std::invalid_argument("killing_form: spin(m) is abelian for m < 3");
  ApproxMV half = Bivector<Approx>::unit(x.dim(), 0, 1).value() * Approx(0.5);
  double norm = adjoint_trace(half, half);
  return adjoint_trace(x.value(), y.value()) / norm;
}

ApproxMV random_unit_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> v(dim);
  double n = 0.0;
  do {
    n = 0.0;
    for (auto& c : v) {
      c = g(rng);
      n += c * c;
    }
  } while (n < 1e-8);
  n = std::sqrt(n);
  for (auto& c : v) c /= n;
  return ApproxMV::vector(dim, v);
}

ApproxSpin random_spin(int dim, std::mt19937_64& rng, int pairs) {
  ApproxMV s = ApproxMV::one(dim);
  for (int p = 0; p < 2 * pairs; ++p) s = s * random_unit_vector(dim, rng);
  ApproxMV even(dim);
  for (const auto& [b, c] : s.terms())
    if (grade_of(b) % 2 == 0) even.add(b, Approx(c.real(), 0.0));
  return ApproxSpin(even);
}

ApproxSpin torus_element(int dim, const std::vector<double>& angles) {
  if (static_cast<int>(angles.size()) > dim / 2) throw std::invalid_argument("torus_element: too many angles");
  ApproxSpin s = ApproxSpin::identity(dim);
  for (std::size_t j = 0; j < angles.size(); ++j)
    s = s * exp_bivector(Bivector<Approx>::unit(dim, 2 * static_cast<int>(j), 2 * static_cast<int>(j) + 1), angles[j]);
  return s;
}

}  // namespace cliffwave
