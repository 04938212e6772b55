#pragma once

#include <vector>

#include "cliffwave/polynomial.hpp"

namespace cliffwave {

// Differential-operator calculus on exact Clifford polynomials.
// Variable indices are 0-based; components (a, b) index the ambient coordinates.

// sum_a e_a d/dx_{i,a} p (generators act from the left).
ExactPoly dirac(const ExactPoly& p, int i);
// sum_a d^2/dx_{i,a}^2 p.
ExactPoly laplacian(const ExactPoly& p, int i);
// L_ab = x_{i,a} d/dx_{i,b} - x_{i,b} d/dx_{i,a}, without any extra factor.
ExactPoly angular_momentum(const ExactPoly& p, int i, int a, int b);
// u ^ d_u = sum_{a,b} (e_a ^ e_b) x_{i,a} d/dx_{i,b}, expanded literally.
ExactPoly wedge_dirac(const ExactPoly& p, int i);
// Gamma_i = -sum_{a<b} e_ab L_ab. Inner spherical monogenics of degree k have
// eigenvalue -k, outer ones k + (n - 1).
ExactPoly gamma(const ExactPoly& p, int i);
// sum_i Gamma_i.
ExactPoly gamma_total(const ExactPoly& p);
// sum_a x_{i,a} d/dx_{i,a}.
ExactPoly euler(const ExactPoly& p, int i);
// <x_i, d_{x_j}> = sum_a x_{i,a} d/dx_{j,a}.
ExactPoly mixed_euler(const ExactPoly& p, int i, int j);
// <d_{x_i}, d_{x_j}> = sum_a d/dx_{i,a} d/dx_{j,a}.
ExactPoly mixed_divergence(const ExactPoly& p, int i, int j);
// Delta_{ij} = sum_{a<b} L^{(i)}_ab L^{(j)}_ab.
ExactPoly mixed_laplacian(const ExactPoly& p, int i, int j);
// -<x_j, d'_{x_i}> <x_i, d_{x_j}> p', where d'_{x_i} differentiates p only.
ExactPoly overdot_mixed(const ExactPoly& p, int i, int j);
// sum_{a<b} L_ab^2 in variable i (spherical Laplace-Beltrami part).
ExactPoly spherical_laplacian(const ExactPoly& p, int i);

// Infinitesimal actions of the rotation generator in the (a, b)-plane.
// h_generator rotates all variables; l_generator adds left multiplication by e_ab / 2.
ExactPoly h_generator(const ExactPoly& p, int a, int b);
ExactPoly l_generator(const ExactPoly& p, int a, int b);

// H_*(Omega) = sum_{a<b} (sum_i L^{(i)}_ab)^2.
ExactPoly casimir_H(const ExactPoly& p);
// sum_i spherical_laplacian_i + 2 sum_{i<j} mixed_laplacian_ij (expanded form of casimir_H).
ExactPoly casimir_H_expanded(const ExactPoly& p);

// Constant in L_*(Omega) = H_*(Omega) + Gamma - c; default n(n-1)/8.
Exact default_casimir_constant(int n);
ExactPoly casimir_L(const ExactPoly& p, const Exact& c);
ExactPoly casimir_L(const ExactPoly& p);
// sum_{a<b} l_generator_ab^2: the Casimir built directly from the generators.
ExactPoly casimir_L_from_generators(const ExactPoly& p);

bool is_harmonic(const ExactPoly& p);
bool is_monogenic(const ExactPoly& p);
bool is_simplicial(const ExactPoly& p);

// <P, T> = sum_e x^e [bar(c_e) T]_0 for a polynomial with real monomials.
ExactPoly clifford_inner(const ExactPoly& p, const ExactMV& t);
// Grade-r part of each coefficient.
ExactPoly grade_project(const ExactPoly& p, int r);

// T_j = (e_{2j} - i e_{2j+1}) / 2 in Cl_n (0-based j).
ExactMV isotropic_vector(int n, int j);
// T_j bar(T_j) = (1 - i e_{2j} e_{2j+1}) / 2.
ExactMV interleaved_idempotent(int n, int j);
// (1 + i e_j e_{j+m}) / 2 in Cl_{2m} (0-based j < m).
ExactMV paired_idempotent(int m, int j);

// Dominant weight stored with doubled entries so half-integers stay integral.
class Weight {
 public:
  // (m_1, ..., m_k), integers: harmonic highest weights.
  static Weight integral(const std::vector<int>& m);
  // (m_1 + 1/2, ..., m_k + 1/2): monogenic highest weights; pass the integer parts.
  static Weight half_integral(const std::vector<int>& m);
  static Weight from_doubled(const std::vector<int>& d);

  const std::vector<int>& doubled() const { return doubled_; }
  std::size_t size() const { return doubled_.size(); }
  bool is_dominant() const;
  bool all_even() const;
  bool all_odd() const;
  // Integer part of entry j: m_j for integral weights, m_j for m_j + 1/2.
  int floor_entry(std::size_t j) const;
  std::vector<int> floor_entries() const;
  int floor_sum() const;

 private:
  std::vector<int> doubled_;
};

enum class WeightKind { Harmonic, Monogenic };

// <x_1 T_1>^{m_1-m_2} <x_1^x_2, T_1^T_2>^{m_2-m_3} ... (harmonic), times
// I_1...I_{[n/2]} on the right (monogenic). Throws for non-dominant or
// inadmissible weights.
ExactPoly highest_weight_vector(const Weight& w, WeightKind kind, int n);

// -sum_j m_j (m_j + n - 2j).
Exact casimir_H_eigenvalue(const Weight& w, int n);
// -sum_j m_j (m_j + n - 2j + 1) - n(n-1)/8.
Exact casimir_L_eigenvalue(const Weight& w, int n);

// Dirac operator on Spin(n) for a pair (alpha, beta):
// sum_{a<b} e_ab (H_ab alpha + L_ab beta) with H_ab = -sum_i L^{(i)}_ab and
// L_ab = H_ab + e_ab (left multiplication).
ExactPoly spin_dirac(const ExactPoly& alpha, const ExactPoly& beta);

// Random polynomial with small integer (Gaussian-integer) coefficients.
ExactPoly random_polynomial(VarSystem vs, int max_degree, int terms, unsigned long seed, bool clifford_valued = true);

}  // namespace cliffwave
