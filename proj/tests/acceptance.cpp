// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cliffwave/operators.hpp"
#include "cliffwave/spin.hpp"
#include "cliffwave/verify.hpp"
#include "cliffwave/wavelets.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace cliffwave;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& run) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("criterion %d: %s  %s [%.2fs] %s\n", id, o.pass ? "PASS" : "FAIL", title.c_str(), secs, o.detail.c_str());
  std::fflush(stdout);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

SpectralCoefficients random_coefficients(const MonogenicBasis& basis, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  SpectralCoefficients c = SpectralCoefficients::zeros(basis);
  for (auto& x : c.coeffs)
    for (Blade b = 0; b < (Blade{1} << basis.dim()); ++b) x.add(b, Approx(g(rng), g(rng)));
  return c;
}

double coeff_error(const SpectralCoefficients& a, const SpectralCoefficients& b) {
  double num = 0.0;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) num += (a.coeffs[i] - b.coeffs[i]).norm2();
  return std::sqrt(num / b.norm2());
}

// ---- 1 ----
Outcome clifford_axioms() {
  std::mt19937_64 rng(101);
  long bad = 0, checked = 0;
  for (int m = 2; m <= 5; ++m) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        ExactMV ei = ExactMV::generator(m, i), ej = ExactMV::generator(m, j);
        ExactMV want = i == j ? ExactMV::one(m) * Exact(-2) : ExactMV(m);
        bad += !(ei * ej + ej * ei == want);
      }
    for (int r = 0; r < 1000; ++r) {
      ExactMV a = testing::random_exact(m, rng), b = testing::random_exact(m, rng), c = testing::random_exact(m, rng);
      bad += !((a * b) * c == a * (b * c));
      Exact ip = clifford_inner_product(a, a);
      bool pd = a.is_zero() ? ip.is_zero() : (sgn(ip.re) > 0 && sgn(ip.im) == 0);
      bad += !pd;
      checked += 2;
    }
  }
  return {bad == 0, std::to_string(checked) + " checks, " + std::to_string(bad) + " failures"};
}

// ---- 2 ----
Outcome double_cover() {
  std::mt19937_64 rng(202);
  double worst_orth = 0.0, worst_pair = 0.0, worst_det = 0.0;
  for (int m = 3; m <= 5; ++m) {
    for (int r = 0; r < 200; ++r) {
      ApproxSpin s = random_spin(m, rng);
      Eigen::MatrixXd R = rotation_matrix(s), Rn = rotation_matrix(-s);
      worst_pair = std::max(worst_pair, (R - Rn).cwiseAbs().maxCoeff());
      worst_det = std::max(worst_det, std::abs(R.determinant() - 1.0));
      worst_orth = std::max(worst_orth, (R.transpose() * R - Eigen::MatrixXd::Identity(m, m)).norm());
    }
  }
  double worst_exp = 0.0;
  std::uniform_real_distribution<double> ut(-10.0, 10.0);
  for (int k = 0; k < 20; ++k) {
    double t = ut(rng);
    int m = 3 + k % 3, a = k % m, b = (k + 1) % m;
    auto x = Bivector<Approx>::unit(m, std::min(a, b), std::max(a, b));
    ApproxMV want = ApproxMV::one(m) * Approx(std::cos(t)) + x.value() * Approx(std::sin(t));
    worst_exp = std::max(worst_exp, max_abs_diff(exp_bivector(x, t).value(), want));
  }
  bool ok = worst_pair == 0.0 && worst_det <= 1e-12 && worst_orth <= 1e-12 && worst_exp == 0.0;
  return {ok, "R(s)-R(-s) " + sci(worst_pair) + ", |det-1| " + sci(worst_det) + ", |R^T R - I| " + sci(worst_orth) +
                  ", exp vs cos+sin " + sci(worst_exp)};
}

// ---- 3 ----
Outcome eigenvalue_battery() {
  VerifyReport r;
  for (int m : {2, 3}) verify_basis_eigenvalues(m, 5, r);
  for (int n = 3; n <= 5; ++n) verify_casimir(n, 6, std::nullopt, r);
  std::size_t casimir = 0;
  for (const auto& c : r.checks) casimir += c.section == "Casimir";
  return {r.ok(), std::to_string(r.checks.size()) + " exact checks (" + std::to_string(casimir) + " Casimir incl. oracle), " +
                      std::to_string(r.failures()) + " failures"};
}

// ---- 4 ----
Outcome operator_identities() {
  struct Tally {
    std::string name;
    int total = 0, bad = 0;
    void add(bool ok) {
      ++total;
      bad += !ok;
    }
  };
  Tally casimir{"L=H+Gamma-c"}, gamma_sq{"sumL^2=Gamma(n-2-Gamma)"}, mixed{"Delta_uv=-<v,d'_u><u,d_v>"},
      simplicial{"Delta_uv simplicial=0"}, spin{"d_s=Gamma H a+(Gamma-binom)L b"};
  for (int n = 3; n <= 4; ++n) {
    VarSystem vs(2, n);
    for (unsigned long seed = 1; seed <= 6; ++seed) {
      ExactPoly p = random_polynomial(vs, 6, 6, 1000 * n + seed);
      casimir.add(casimir_L(p) == casimir_L_from_generators(p));
      ExactPoly g = gamma(p, 0);
      gamma_sq.add(spherical_laplacian(p, 0) == g * Exact(n - 2) - gamma(g, 0));
      ExactPoly q = random_polynomial(vs, 6, 6, 2000 * n + seed, false);
      mixed.add(mixed_laplacian(q, 0, 1) == overdot_mixed(q, 0, 1));
    }
    for (const auto& w : dominant_weights(2, 4)) {
      if (w[1] == 0) continue;  // simplicial in two variables
      for (WeightKind kind : {WeightKind::Harmonic, WeightKind::Monogenic}) {
        Weight wt = kind == WeightKind::Harmonic ? Weight::integral(w) : Weight::half_integral(w);
        ExactPoly h;
        try {
          h = highest_weight_vector(wt, kind, n);
        } catch (const std::invalid_argument&) {
          continue;
        }
        simplicial.add(mixed_laplacian(h, 0, 1).is_zero());
      }
    }
  }
  for (int m : {3, 4}) {
    auto modes = enumerate_spin_modes(m, 2);
    for (const auto& a : modes)
      for (const auto& b : modes) {
        if (a.kind != WeightKind::Harmonic || b.kind != WeightKind::Monogenic) continue;
        const ExactPoly& alpha = a.function.alpha();
        const ExactPoly& beta = b.function.beta();
        spin.add(spin_dirac(alpha, beta) == gamma_total(alpha) + gamma_total(beta) - beta * Exact(m * (m - 1) / 2));
      }
  }
  std::ostringstream os;
  bool ok = true;
  for (const Tally* t : {&casimir, &gamma_sq, &mixed, &simplicial, &spin}) {
    os << t->name << " " << t->total - t->bad << "/" << t->total << "; ";
    ok = ok && t->bad == 0;
  }
  return {ok, os.str()};
}

// ---- 5 ----
Outcome transform_round_trip() {
  BasisPtr basis = MonogenicBasis::build(2, 8);
  auto rule = std::make_shared<QuadratureRule>(build_quadrature(2, required_exactness(8)));
  std::mt19937_64 rng(505);
  SphereSignal f = synthesize(random_coefficients(*basis, rng), *basis, rule);
  double e_spec = relative_l2_error(synthesize(analyze(f, *basis), *basis, rule), f);
  double e_grid = 0.0, e_closed = 0.0;
  for (const auto& profile : {SpectralProfile::heat_h(2), SpectralProfile::heat_l(2), SpectralProfile::modified(2)}) {
    WaveletFamily fam = wavelet_family(profile, ScaleGrid::geometric(), *basis);
    WaveletCoefficients w = wavelet_transform(f, fam, *basis);
    e_grid = std::max(e_grid, relative_l2_error(wavelet_reconstruct(w, fam, *basis, rule), f));
    e_closed = std::max(e_closed, relative_l2_error(wavelet_reconstruct(w, fam, *basis, rule, ScaleIntegral::ClosedForm), f));
  }
  bool ok = e_spec <= 1e-10 && e_grid <= 1e-3 && e_closed <= 1e-10;
  return {ok, "analyze/synthesize " + sci(e_spec) + ", wavelet grid " + sci(e_grid) + ", closed form " + sci(e_closed)};
}

// ---- 6 ----
Outcome convolution_theorem() {
  BasisPtr basis = MonogenicBasis::build(2, 3);
  std::mt19937_64 rng(606);
  std::normal_distribution<double> g;
  double worst = 0.0;
  for (int r = 0; r < 3; ++r) {
    SpectralCoefficients f = random_coefficients(*basis, rng), h = random_coefficients(*basis, rng);
    SphereConvolution conv = sphere_convolution(f, h, *basis);
    for (int t = 0; t < 2; ++t) {
      std::vector<double> xi = testing::unit_vector({g(rng), g(rng), g(rng)});
      std::vector<double> om = testing::unit_vector({g(rng), g(rng), g(rng)});
      worst = std::max(worst, max_abs_diff(conv(xi, om), testing::convolution_oracle(f, h, *basis, xi, om)));
    }
  }
  return {worst <= 1e-6, "max deviation from the rotation-quadrature oracle " + sci(worst)};
}

// ---- 7 ----
Outcome heat_semigroup() {
  BasisPtr basis = MonogenicBasis::build(2, 8);
  double worst = 0.0;
  bool ok = true;
  for (const auto& profile : {SpectralProfile::heat_h(2), SpectralProfile::heat_l(2), SpectralProfile::modified(2)})
    for (double t : {0.1, 0.5, 1.0})
      for (double s : {0.1, 0.5, 1.0}) {
        SemigroupReport r = semigroup_check(profile, t, s, *basis, 1e-12);
        worst = std::max(worst, r.max_error);
        ok = ok && r.ok;
      }
  return {ok, "max coefficient error " + sci(worst)};
}

// ---- 8 ----
Outcome admissibility() {
  BasisPtr basis = MonogenicBasis::build(2, 8);
  ScaleGrid grid = ScaleGrid::geometric();
  double worst = 0.0, worst_closed = 0.0;
  std::mt19937_64 rng(808);
  for (const auto& profile : {SpectralProfile::heat_h(2), SpectralProfile::heat_l(2), SpectralProfile::modified(2)}) {
    for (const auto& el : basis->elements()) {
      double lambda = profile.lambda(el);
      if (lambda == 0.0) continue;
      for (double t : {0.01, 0.1, 1.0}) worst = std::max(worst, std::abs(grid.admissibility(lambda, t) - std::exp(-lambda * t)));
    }
    WaveletFamily fam = wavelet_family(profile, grid, *basis);
    SpectralCoefficients c = random_coefficients(*basis, rng);
    WaveletCoefficients w = wavelet_transform(c, fam);
    worst_closed = std::max(worst_closed, coeff_error(wavelet_reconstruct_spectral(w, fam, ScaleIntegral::ClosedForm), c));
  }
  bool ok = worst <= 1e-4 && worst_closed <= 1e-13;
  return {ok, "discrete scale integral " + sci(worst) + ", closed form " + sci(worst_closed)};
}

// ---- 9 ----
Outcome spin_eigenfunctions() {
  int total = 0, formula_ok = 0, casimir_ok = 0;
  std::string example;
  for (int m : {3, 4}) {
    for (const auto& mode : enumerate_spin_modes(m, 4)) {
      auto ev = mode.function.eigenvalue();
      auto degrees = mode.kind == WeightKind::Harmonic ? mode.function.alpha_degrees() : mode.function.beta_degrees();
      Exact formula(degree_formula_eigenvalue(degrees, m));
      Exact casimir = mode.kind == WeightKind::Harmonic ? casimir_H_eigenvalue(mode.weight, m)
                                                         : casimir_L_eigenvalue(mode.weight, m);
      ++total;
      formula_ok += ev && *ev == formula;
      casimir_ok += ev && *ev == casimir;
      if (ev && !(*ev == formula) && example.empty())
        example = "e.g. m=" + std::to_string(m) + " degrees " + std::to_string(degrees[0]) + ": symbolic " + ev->str() +
                  ", formula " + formula.str();
    }
  }

  double worst = 0.0;
  for (int m : {3, 4}) {
    SpinWaveletFamily fam = spin_wavelet(m, 3, ScaleGrid::geometric());
    std::mt19937_64 rng(900 + m);
    std::normal_distribution<double> g;
    std::vector<ApproxMV> c(fam.modes.size(), ApproxMV(m));
    for (auto& x : c) x.add(0, Approx(g(rng), g(rng)));
    std::vector<double> lam = fam.lambdas();
    std::vector<ApproxMV> zero(c.size(), ApproxMV(m));
    for (std::size_t i = 0; i < c.size(); ++i)
      if (lam[i] == 0.0) zero[i] = c[i];
    auto back = scale_reconstruct(scale_transform(c, lam, fam.grid), zero, lam, fam.grid, ScaleIntegral::Grid);
    double num = 0.0, den = 0.0;
    for (int t = 0; t < 20; ++t) {
      ApproxSpin s = random_spin(m, rng);
      ApproxMV want = evaluate_spin_combination(fam, c, s);
      num += (evaluate_spin_combination(fam, back, s) - want).norm2();
      den += want.norm2();
    }
    worst = std::max(worst, std::sqrt(num / den));
  }
  bool ok = formula_ok == total && worst <= 1e-3;
  return {ok, "degree formula " + std::to_string(formula_ok) + "/" + std::to_string(total) + " (" + example +
                  "); Casimir formula " + std::to_string(casimir_ok) + "/" + std::to_string(total) +
                  "; spin wavelet round trip " + sci(worst)};
}

}  // namespace

int main() {
  report(1, "Clifford axioms, m=2..5, exact", clifford_axioms);
  report(2, "Spin double cover and bivector exponential", double_cover);
  report(3, "Eigenvalue battery (Gamma, Delta, Casimir)", eigenvalue_battery);
  report(4, "Operator identities on random polynomials", operator_identities);
  report(5, "Transform round trip on S^2, K=8", transform_round_trip);
  report(6, "Convolution theorem on S^2, K=3", convolution_theorem);
  report(7, "Heat semigroup, all profiles", heat_semigroup);
  report(8, "Scale-grid admissibility", admissibility);
  report(9, "Spin(m) eigenfunctions and wavelet round trip", spin_eigenfunctions);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
