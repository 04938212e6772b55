#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cliffwave/polynomial.hpp"
#include "cliffwave/spin.hpp"

namespace cliffwave {

// S^m sits in R^{m+1} with coordinates x_0..x_m; values live in Cl_{m+1} (e_0..e_m).

using MultiIndex = std::vector<int>;

// All multi-indices over `vars` entries with |alpha| = k, in descending lexicographic order.
std::vector<MultiIndex> multi_indices(int vars, int k);

// Surface area A_m of S^m.
double sphere_area(int m);

// (1/A_m) * integral over S^{n-1} of x^beta, n = beta.size().
mpq_class sphere_moment(const std::vector<int>& beta);

// (1/A_m) * integral over the sphere of bar(a) b, for polynomials in one vector variable.
ExactMV sphere_inner(const ExactPoly& a, const ExactPoly& b);

class InsufficientQuadrature : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct QuadratureRule {
  int m = 0;
  int degree = 0;
  std::vector<std::vector<double>> nodes;
  std::vector<double> weights;  // sum to A_m

  std::size_t size() const { return nodes.size(); }
};

// Product rule: Gauss-Gegenbauer in each polar angle, trapezoid in azimuth.
// Exact for polynomials of total degree <= D. Throws std::length_error above max_nodes.
QuadratureRule build_quadrature(int m, int degree, std::size_t max_nodes = 4'000'000);

// Gauss rule for the weight (1 - t^2)^a on [-1, 1] (Golub-Welsch).
void gauss_gegenbauer(int points, double a, std::vector<double>& nodes, std::vector<double>& weights);

// V_alpha = CK(x^alpha / alpha!), alpha over x_1..x_m. Polynomial in VarSystem(1, m+1).
ExactPoly ck_extension(int m, const MultiIndex& alpha);

// sum_j parts[j] * |x|^{-(base + 2j)}; base = 0 with a single part is an ordinary polynomial.
struct RadialExpansion {
  VarSystem vars;
  int base = 0;
  std::vector<ExactPoly> parts;

  // Values on the unit sphere, as a polynomial.
  ExactPoly on_sphere() const;
  // sum_j parts[j] |x|^{2(J-j)}: equals the function times |x|^{base + 2J}.
  ExactPoly homogenized() const;
  RadialExpansion right_multiply(const ExactMV& c) const;
  RadialExpansion& operator+=(const RadialExpansion& o);
  RadialExpansion& operator-=(const RadialExpansion& o);
  // d/dx_c.
  RadialExpansion derivative(int c) const;
};

// Outer monogenic (-1)^{|alpha|} d^alpha [bar(x) / |x|^{m+1}]; the 1/A_m factor is kept in `scale`.
// alpha has m entries (over x_1..x_m) or m+1 entries (over x_0..x_m).
struct OuterFunction {
  RadialExpansion expansion;
  double scale = 1.0;

  ApproxMV evaluate(const std::vector<double>& point) const;
};
OuterFunction outer_basis(int m, const MultiIndex& alpha);

enum class Part { V, W };

std::string part_name(Part p);

struct BasisElement {
  int degree = 0;
  MultiIndex alpha;
  Part part = Part::V;
  // Exactly orthogonal (unnormalized) element; W elements keep their radial form.
  RadialExpansion exact;
  // Raw-to-orthogonal change of basis: exact = sum_j raw_j * transform[j].
  std::vector<ExactMV> transform;
  // exact * normalizer gives the unit element.
  ApproxMV normalizer;
  // Orthonormal element restricted to the sphere.
  ApproxPoly unit;

  // Degree of the spherical harmonics spanned by the components.
  int harmonic_degree() const { return part == Part::V ? degree : degree + 1; }
  std::string key() const;
};

class MonogenicBasis {
 public:
  // Raw bases orthogonalized exactly per degree and part, then normalized.
  static std::shared_ptr<const MonogenicBasis> build(int m, int max_degree);

  int m() const { return m_; }
  int max_degree() const { return max_degree_; }
  int dim() const { return m_ + 1; }
  const std::vector<BasisElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  // Index of an element by key "k/a,b,.../V"; throws std::out_of_range.
  std::size_t index_of(const std::string& key) const;
  // Elements of a given degree and part.
  std::vector<std::size_t> block(int degree, Part part) const;
  // Exact (1/A_m) Gram entry of two stored orthogonal elements.
  ExactMV exact_inner(std::size_t i, std::size_t j) const;
  // Unit elements evaluated at a point.
  std::vector<ApproxMV> evaluate_all(const std::vector<double>& point) const;

  // Keys of raw members dropped as dependent during orthogonalization.
  const std::vector<std::string>& dropped() const { return dropped_; }

  // Right-module rank of the inner monogenics of degree k: binom(k+m-1, m-1).
  static long rank(int m, int k);

 private:
  int m_ = 0;
  int max_degree_ = 0;
  std::vector<BasisElement> elements_;
  std::vector<std::string> dropped_;
};

using BasisPtr = std::shared_ptr<const MonogenicBasis>;

struct SphereSignal {
  std::shared_ptr<const QuadratureRule> rule;
  std::vector<ApproxMV> values;

  int m() const { return rule->m; }
  // L^2 norm squared (scalar part of the integral of bar(f) f).
  double norm2() const;
};

// Coefficients aligned with basis elements; f = sum_i unit_i * coeffs[i].
struct SpectralCoefficients {
  int m = 0;
  int max_degree = 0;
  std::vector<ApproxMV> coeffs;

  static SpectralCoefficients zeros(const MonogenicBasis& basis, int max_degree = -1);
  double norm2() const;
};

// Quadrature exactness required for band limit K.
int required_exactness(int max_degree);

SphereSignal sample(const std::shared_ptr<const QuadratureRule>& rule,
                    const std::function<ApproxMV(const std::vector<double>&)>& f);
SpectralCoefficients analyze(const SphereSignal& f, const MonogenicBasis& basis);
SphereSignal synthesize(const SpectralCoefficients& c, const MonogenicBasis& basis,
                        const std::shared_ptr<const QuadratureRule>& rule);
ApproxMV evaluate(const SpectralCoefficients& c, const MonogenicBasis& basis, const std::vector<double>& point);
double relative_l2_error(const SphereSignal& a, const SphereSignal& b);

// Coefficient-wise product a_i b_i (multiplier action of a zonal spectral object).
SpectralCoefficients spectral_multiply(const SpectralCoefficients& a, const SpectralCoefficients& b);

// Gegenbauer polynomial C_n^lambda(t).
double gegenbauer(int n, double lambda, double t);

// (f*h)(xi; omega) = integral over SO(m+1) of bar(f(g xi)) h(g omega) dg (normalized Haar measure).
class SphereConvolution {
 public:
  SphereConvolution(int m, std::vector<ApproxMV> per_degree) : m_(m), per_degree_(std::move(per_degree)) {}
  ApproxMV operator()(const std::vector<double>& xi, const std::vector<double>& omega) const;
  // Clifford weight of harmonic degree l.
  const std::vector<ApproxMV>& per_degree() const { return per_degree_; }

 private:
  int m_;
  std::vector<ApproxMV> per_degree_;
};

SphereConvolution sphere_convolution(const SpectralCoefficients& f, const SpectralCoefficients& h,
                                     const MonogenicBasis& basis);

enum class KernelSign { Plus, Minus };

// C^-_{m+1,k}(omega, xi) from the Gegenbauer formula; C^+ = -C^- bar(xi) bar(omega).
ApproxMV zonal_kernel(int m, int k, KernelSign sign, const std::vector<double>& omega, const std::vector<double>& xi);

enum class ActionMode { H, L };

// H: f(a) -> s f(s^{-1} a s) s^{-1};  L: f(a) -> s f(s^{-1} a s). Resampled spectrally.
SphereSignal rotate_signal(const ApproxSpin& s, const SphereSignal& f, const MonogenicBasis& basis, ActionMode mode);

}  // namespace cliffwave
