#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliffwave/operators.hpp"
#include "cliffwave/sphere.hpp"

namespace cliffwave {

enum class ProfileKind { HeatH, HeatL, Modified };

// Spectral eigenvalue magnitudes lambda >= 0 per basis element.
struct SpectralProfile {
  ProfileKind kind = ProfileKind::HeatH;
  int m = 2;
  // Constant shift of heat_L; defaults to n(n-1)/8 with n = m + 1.
  double shift = 0.0;

  static SpectralProfile heat_h(int m);
  static SpectralProfile heat_l(int m);
  static SpectralProfile heat_l(int m, double shift);
  static SpectralProfile modified(int m);
  static SpectralProfile parse(const std::string& name, int m);

  std::string name() const;
  // heat_H: V_k -> k(k+m-1), W_k -> (k+1)(k+m); heat_L: k(k+m) + shift; modified: k(k+m).
  // Negative values are floored at 0.
  double lambda(int degree, Part part) const;
  double lambda(const BasisElement& el) const { return lambda(el.degree, el.part); }
};

// Diagonal spectral object exp(-lambda t) per basis element.
SpectralCoefficients heat_kernel(const SpectralProfile& profile, double t, const MonogenicBasis& basis);
// exp(-lambda_{K+1} t) times the number of discarded degree-(K+1) elements.
double heat_truncation_bound(const SpectralProfile& profile, double t, int max_degree);

struct SemigroupReport {
  double max_error = 0.0;
  bool ok = false;
};
SemigroupReport semigroup_check(const SpectralProfile& profile, double t, double s, const MonogenicBasis& basis,
                                double tol = 1e-12);

// Scale cells [0, rho_min], [rho_min, rho_min q], ..., ending at rho_max.
// Nodes: arithmetic midpoint of the first cell, geometric midpoints of the others.
struct ScaleGrid {
  double rho_min = 1e-3;
  double rho_max = 20.0;
  double ratio = 1.05;
  std::vector<double> edges;
  std::vector<double> nodes;
  std::vector<double> widths;

  static ScaleGrid geometric(double rho_min = 1e-3, double rho_max = 20.0, double ratio = 1.05);
  std::size_t size() const { return nodes.size(); }
  // Midpoint-rule approximation of the integral of lambda e^{-lambda rho} over [t, rho_max].
  double admissibility(double lambda, double t) const;
};

// w(rho) = sqrt(lambda) exp(-lambda rho / 2); zero for lambda = 0.
double wavelet_weight(double lambda, double rho);

struct WaveletFamily {
  SpectralProfile profile;
  ScaleGrid grid;
  int max_degree = 0;
  std::vector<double> lambdas;  // per basis element
  std::uint64_t family_hash = 0;

  bool is_zero_mode(std::size_t i) const { return lambdas[i] == 0.0; }
};

WaveletFamily wavelet_family(const SpectralProfile& profile, const ScaleGrid& grid, const MonogenicBasis& basis);
std::uint64_t family_hash(const SpectralProfile& profile, const ScaleGrid& grid, int max_degree);

// Spectral form of the wavelet transform.
struct WaveletCoefficients {
  std::uint64_t family_hash = 0;
  std::vector<SpectralCoefficients> scales;  // one per grid node
  SpectralCoefficients zero_mode;           // lambda = 0 components, carried verbatim
};

enum class ScaleIntegral { Grid, ClosedForm };

WaveletCoefficients wavelet_transform(const SphereSignal& f, const WaveletFamily& family, const MonogenicBasis& basis);
WaveletCoefficients wavelet_transform(const SpectralCoefficients& f, const WaveletFamily& family);
// Throws std::invalid_argument when the hash does not match the family.
SpectralCoefficients wavelet_reconstruct_spectral(const WaveletCoefficients& w, const WaveletFamily& family,
                                                  ScaleIntegral mode = ScaleIntegral::Grid);
SphereSignal wavelet_reconstruct(const WaveletCoefficients& w, const WaveletFamily& family, const MonogenicBasis& basis,
                                 const std::shared_ptr<const QuadratureRule>& rule,
                                 ScaleIntegral mode = ScaleIntegral::Grid);

// Generic scale transform on a coefficient vector; shared by the sphere and Spin(m) paths.
std::vector<std::vector<ApproxMV>> scale_transform(const std::vector<ApproxMV>& coeffs, const std::vector<double>& lambdas,
                                                   const ScaleGrid& grid);
std::vector<ApproxMV> scale_reconstruct(const std::vector<std::vector<ApproxMV>>& scales,
                                        const std::vector<ApproxMV>& zero_mode, const std::vector<double>& lambdas,
                                        const ScaleGrid& grid, ScaleIntegral mode);

// f(s) = H(s) alpha(a) + L(s) beta(a) on Spin(m), with a the standard frame (e_1, ..., e_k).
class SpinFunction {
 public:
  // alpha: simplicial harmonic; beta: simplicial monogenic. Either may be zero.
  SpinFunction(ExactPoly alpha, ExactPoly beta);

  int m() const { return alpha_.vars().n; }
  const ExactPoly& alpha() const { return alpha_; }
  const ExactPoly& beta() const { return beta_; }
  ApproxMV operator()(const ApproxSpin& s) const;

  // Symbolic group Laplacian per branch: casimir_H on alpha, casimir_L_from_generators on beta.
  ExactPoly laplacian_alpha() const { return casimir_H(alpha_); }
  ExactPoly laplacian_beta() const { return casimir_L_from_generators(beta_); }
  // Common eigenvalue when both nonzero branches are eigenfunctions with the same value.
  std::optional<Exact> eigenvalue() const;

  std::vector<int> alpha_degrees() const;
  std::vector<int> beta_degrees() const;

 private:
  ExactPoly alpha_;
  ExactPoly beta_;
};

// sum_j k_j (m - 2 - k_j).
long degree_formula_eigenvalue(const std::vector<int>& degrees, int m);

struct SpinMode {
  Weight weight;
  WeightKind kind;
  SpinFunction function;
  double lambda;  // minus the symbolic eigenvalue
};

constexpr int kMaxSpinWeight = 6;

// Nonincreasing nonnegative integer vectors of length len with sum <= bound.
std::vector<std::vector<int>> dominant_weights(int len, int bound);

// Highest-weight eigenfunctions of every dominant weight with sum of integer parts <= bound.
std::vector<SpinMode> enumerate_spin_modes(int m, int bound);

struct SpinWaveletFamily {
  int m = 0;
  int bound = 0;
  std::vector<SpinMode> modes;
  ScaleGrid grid;

  std::vector<double> lambdas() const;
  // Spectral weight of mode i at scale rho.
  double weight(std::size_t i, double rho) const { return wavelet_weight(modes[i].lambda, rho); }
};

SpinWaveletFamily spin_wavelet(int m, int bound, const ScaleGrid& grid);

// Finite combination sum_i F_i(s) c_i of enumerated modes.
ApproxMV evaluate_spin_combination(const SpinWaveletFamily& family, const std::vector<ApproxMV>& coeffs, const ApproxSpin& s);

}  // namespace cliffwave
