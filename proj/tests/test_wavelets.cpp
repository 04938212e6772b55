#include "doctest.h"

#include <random>

#include "cliffwave/wavelets.hpp"
#include "oracles.hpp"

using namespace cliffwave;

namespace {

BasisPtr basis_s2(int k) {
  static std::map<int, BasisPtr> cache;
  auto& b = cache[k];
  if (!b) b = MonogenicBasis::build(2, k);
  return b;
}

SpectralCoefficients random_coefficients(const MonogenicBasis& basis, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  SpectralCoefficients c = SpectralCoefficients::zeros(basis);
  for (auto& x : c.coeffs)
    for (Blade b = 0; b < (Blade{1} << basis.dim()); ++b) x.add(b, Approx(g(rng), g(rng)));
  return c;
}

double coeff_diff(const SpectralCoefficients& a, const SpectralCoefficients& b) {
  double e = 0.0;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) e = std::max(e, max_abs_diff(a.coeffs[i], b.coeffs[i]));
  return e;
}

}  // namespace

TEST_SUITE("diffusive-wavelets") {
  TEST_CASE("profile eigenvalues") {
    auto h = SpectralProfile::heat_h(2);
    CHECK(h.lambda(2, Part::V) == 6.0);
    CHECK(h.lambda(1, Part::W) == 6.0);  // harmonic degree 2
    CHECK(h.lambda(0, Part::V) == 0.0);
    auto l = SpectralProfile::heat_l(2);
    CHECK(l.lambda(0, Part::V) == doctest::Approx(0.75));
    CHECK(l.lambda(3, Part::W) == doctest::Approx(15.75));
    CHECK(SpectralProfile::modified(3).lambda(2, Part::V) == 10.0);
    CHECK(SpectralProfile::parse("heat-l", 2).kind == ProfileKind::HeatL);
    CHECK_THROWS(SpectralProfile::parse("nope", 2));
  }

  TEST_CASE("heat kernel") {
    BasisPtr b = basis_s2(4);
    auto p = heat_kernel(SpectralProfile::heat_h(2), 1.0, *b);
    CHECK(p.coeffs[b->index_of("2/2,0/V")].scalar_part().real() == doctest::Approx(std::exp(-6.0)).epsilon(1e-14));
    CHECK(p.coeffs[b->index_of("0/0,0/V")].scalar_part().real() == 1.0);
    auto small = heat_kernel(SpectralProfile::heat_h(2), 1e-12, *b);
    for (const auto& c : small.coeffs) CHECK(std::abs(c.scalar_part() - 1.0) < 1e-9);
    CHECK_THROWS(heat_kernel(SpectralProfile::heat_h(2), 0.0, *b));
    CHECK(heat_truncation_bound(SpectralProfile::heat_h(2), 2.0, 4) < 1e-20);
  }

  TEST_CASE("heat semigroup and approximate identity") {
    BasisPtr b = basis_s2(8);
    for (auto profile : {SpectralProfile::heat_h(2), SpectralProfile::heat_l(2), SpectralProfile::modified(2)}) {
      for (double t : {0.1, 0.5, 1.0})
        for (double s : {0.1, 0.5, 1.0}) CHECK(semigroup_check(profile, t, s, *b).ok);
      for (const auto& el : b->elements()) {
        double lam = profile.lambda(el);
        for (double t : {0.01, 0.1, 1.0}) {
          double w = std::exp(-lam * t);
          CHECK(w <= 1.0);
          if (lam > 0.0) CHECK(lam * w > 0.0);  // -d/dt of the weight
        }
        if (lam > 0.0) CHECK(std::exp(-lam * 1e4) < 1e-12);
      }
    }
  }

  TEST_CASE("scale grid and admissibility") {
    ScaleGrid g = ScaleGrid::geometric();
    for (std::size_t i = 0; i + 1 < g.nodes.size(); ++i) CHECK(g.nodes[i] < g.nodes[i + 1]);
    CHECK(g.nodes.front() > 0.0);
    CHECK(g.edges.back() == 20.0);
    CHECK(std::abs(g.admissibility(6.0, 0.01) - std::exp(-0.06)) < 1e-4);
    for (double lam : {2.0, 6.0, 20.0, 80.75, 90.0})
      for (double t : {0.0, 0.01, 0.1, 1.0}) CHECK(std::abs(g.admissibility(lam, t) - std::exp(-lam * t)) < 1e-4);
    // The defect shrinks as the grid refines.
    double prev = 1.0;
    for (double q : {1.2, 1.1, 1.05}) {
      double err = std::abs(ScaleGrid::geometric(1e-3, 20.0, q).admissibility(30.0, 0.01) - std::exp(-0.3));
      CHECK(err < prev);
      prev = err;
    }
    CHECK_THROWS(ScaleGrid::geometric(0.0, 1.0, 1.05));
    CHECK_THROWS(ScaleGrid::geometric(1e-3, 1.0, 1.0));
    CHECK(wavelet_weight(0.0, 1.0) == 0.0);
    CHECK(wavelet_weight(4.0, 0.5) > wavelet_weight(4.0, 1.0));
  }

  TEST_CASE("wavelet transform and reconstruction") {
    BasisPtr b = basis_s2(8);
    auto rule = std::make_shared<const QuadratureRule>(build_quadrature(2, required_exactness(8)));
    std::mt19937_64 rng(17);
    SphereSignal f = synthesize(random_coefficients(*b, rng), *b, rule);
    for (auto profile : {SpectralProfile::heat_h(2), SpectralProfile::heat_l(2), SpectralProfile::modified(2)}) {
      WaveletFamily fam = wavelet_family(profile, ScaleGrid::geometric(), *b);
      WaveletCoefficients w = wavelet_transform(f, fam, *b);
      CHECK(relative_l2_error(wavelet_reconstruct(w, fam, *b, rule), f) <= 1e-3);
      CHECK(relative_l2_error(wavelet_reconstruct(w, fam, *b, rule, ScaleIntegral::ClosedForm), f) <= 1e-10);
    }
    WaveletFamily fam = wavelet_family(SpectralProfile::heat_h(2), ScaleGrid::geometric(), *b);
    // Single element: transform is w_k(rho) times a unit coefficient.
    std::size_t idx = b->index_of("3/2,1/W");
    SpectralCoefficients single = SpectralCoefficients::zeros(*b);
    single.coeffs[idx] = ApproxMV::one(3);
    WaveletCoefficients ws = wavelet_transform(single, fam);
    double prev = 1e300;
    for (std::size_t j = 0; j < fam.grid.size(); ++j) {
      CHECK(std::abs(ws.scales[j].coeffs[idx].scalar_part().real() - wavelet_weight(fam.lambdas[idx], fam.grid.nodes[j])) < 1e-15);
      double norm = ws.scales[j].norm2();
      CHECK(norm <= prev);
      prev = norm;
    }
    // Constants live only in the zero mode.
    SpectralCoefficients constant = SpectralCoefficients::zeros(*b);
    constant.coeffs[b->index_of("0/0,0/V")] = ApproxMV::one(3) * Approx(2.0);
    WaveletCoefficients wc = wavelet_transform(constant, fam);
    for (const auto& s : wc.scales) CHECK(s.norm2() == 0.0);
    CHECK(coeff_diff(wavelet_reconstruct_spectral(wc, fam), constant) == 0.0);
    // Hash mismatch is refused.
    WaveletFamily other = wavelet_family(SpectralProfile::modified(2), ScaleGrid::geometric(), *b);
    CHECK_THROWS_AS(wavelet_reconstruct_spectral(wc, other), std::invalid_argument);
  }

  TEST_CASE("translation covariance") {
    BasisPtr b = basis_s2(4);
    auto rule = std::make_shared<const QuadratureRule>(build_quadrature(2, required_exactness(4)));
    std::mt19937_64 rng(23);
    SphereSignal f = synthesize(random_coefficients(*b, rng), *b, rule);
    ApproxSpin s = random_spin(3, rng);
    WaveletFamily fam = wavelet_family(SpectralProfile::heat_h(2), ScaleGrid::geometric(1e-2, 5.0, 1.2), *b);
    WaveletCoefficients wr = wavelet_transform(rotate_signal(s, f, *b, ActionMode::H), fam, *b);
    WaveletCoefficients w = wavelet_transform(f, fam, *b);
    for (std::size_t j : {std::size_t{0}, fam.grid.size() / 2}) {
      SphereSignal lhs = synthesize(wr.scales[j], *b, rule);
      SphereSignal rhs = rotate_signal(s, synthesize(w.scales[j], *b, rule), *b, ActionMode::H);
      CHECK(relative_l2_error(lhs, rhs) < 1e-8);
    }
  }

  TEST_CASE("spin eigenfunctions") {
    std::mt19937_64 rng(31);
    for (int m : {3, 4}) {
      for (const auto& mode : enumerate_spin_modes(m, 4)) {
        ApproxSpin s = random_spin(m, rng);
        ApproxMV v = mode.function(s);
        ApproxMV lap = cliffwave::testing::group_laplacian_fd([&](const ApproxSpin& g) { return mode.function(g); }, s);
        CHECK(max_abs_diff(lap, v * Approx(-mode.lambda)) < 1e-5 * (1.0 + mode.lambda));
        Exact expected = mode.kind == WeightKind::Harmonic ? casimir_H_eigenvalue(mode.weight, m) : casimir_L_eigenvalue(mode.weight, m);
        CHECK(mode.function.eigenvalue() == expected);
      }
    }
    VarSystem vs(1, 3);
    SpinFunction constant(ExactPoly::one(vs), ExactPoly(vs));
    CHECK(constant.eigenvalue() == Exact(0));
    CHECK(std::abs(constant(random_spin(3, rng)).scalar_part() - 1.0) < 1e-12);
    CHECK_THROWS(SpinFunction(ExactPoly::coordinate(vs, 0, 0).pow(2), ExactPoly(vs)));
    CHECK_THROWS(enumerate_spin_modes(3, kMaxSpinWeight + 1));
  }

  TEST_CASE("spin dirac on enumerated pairs") {
    for (int m : {3, 4}) {
      auto modes = enumerate_spin_modes(m, 2);
      for (const auto& a : modes) {
        if (a.kind != WeightKind::Harmonic) continue;
        for (const auto& b : modes) {
          if (b.kind != WeightKind::Monogenic) continue;
          const ExactPoly& alpha = a.function.alpha();
          const ExactPoly& beta = b.function.beta();
          ExactPoly rhs = gamma_total(alpha) + gamma_total(beta) - beta * Exact(m * (m - 1) / 2);
          CHECK(spin_dirac(alpha, beta) == rhs);
        }
      }
    }
  }

  TEST_CASE("spin wavelet round trip") {
    SpinWaveletFamily fam = spin_wavelet(3, 3, ScaleGrid::geometric());
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    std::vector<ApproxMV> c(fam.modes.size(), ApproxMV(3));
    for (auto& x : c) x.add(0, Approx(g(rng), g(rng)));
    std::vector<ApproxMV> zero(c.size(), ApproxMV(3));
    std::vector<double> lam = fam.lambdas();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (lam[i] == 0.0) zero[i] = c[i];
    auto scales = scale_transform(c, lam, fam.grid);
    auto back = scale_reconstruct(scales, zero, lam, fam.grid, ScaleIntegral::Grid);
    double num = 0.0, den = 0.0;
    for (int t = 0; t < 20; ++t) {
      ApproxSpin s = random_spin(3, rng);
      num += (evaluate_spin_combination(fam, back, s) - evaluate_spin_combination(fam, c, s)).norm2();
      den += evaluate_spin_combination(fam, c, s).norm2();
    }
    CHECK(std::sqrt(num / den) <= 1e-3);
  }
}
