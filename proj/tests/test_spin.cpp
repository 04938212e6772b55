#include "doctest.h"

#include <cmath>

#include "cliffwave/spin.hpp"

using namespace cliffwave;

namespace {
ApproxMV gen(int dim, int i) { return ApproxMV::generator(dim, i); }

double orthogonality_defect(const Eigen::MatrixXd& r) {
  return (r.transpose() * r - Eigen::MatrixXd::Identity(r.rows(), r.cols())).cwiseAbs().maxCoeff();
}
}  // namespace

TEST_SUITE("spin-group") {
  TEST_CASE("exponential of a simple bivector") {
    auto x = Bivector<Approx>::unit(3, 0, 1);
    for (double t : {0.0, 0.3, 1.7, -2.5}) {
      ApproxMV want = ApproxMV::one(3) * Approx(std::cos(t)) + x.value() * Approx(std::sin(t));
      CHECK(max_abs_diff(exp_bivector(x, t).value(), want) < 1e-14);
    }
  }

  TEST_CASE("exponential of a non-simple bivector matches commuting factors") {
    ApproxMV b = Bivector<Approx>::unit(4, 0, 1).value() * Approx(0.7) + Bivector<Approx>::unit(4, 2, 3).value() * Approx(-1.3);
    ApproxSpin s = exp_bivector(Bivector<Approx>(b), 1.0);
    ApproxSpin a = exp_bivector(Bivector<Approx>::unit(4, 0, 1), 0.7);
    ApproxSpin c = exp_bivector(Bivector<Approx>::unit(4, 2, 3), -1.3);
    CHECK(max_abs_diff(s.value(), (a * c).value()) < 1e-13);
  }

  TEST_CASE("invariant validation") {
    CHECK_THROWS_AS(ApproxSpin(gen(3, 0)), std::invalid_argument);
    CHECK_THROWS_AS(ApproxSpin(ApproxMV::one(3) * Approx(2.0)), std::invalid_argument);
    CHECK_THROWS_AS(Bivector<Approx>(gen(3, 0)), std::invalid_argument);
    CHECK_NOTHROW(ApproxSpin::identity(3));
  }

  TEST_CASE("h action maps vectors to vectors isometrically") {
    std::mt19937_64 rng(21);
    for (int dim = 2; dim <= 6; ++dim) {
      for (int t = 0; t < 10; ++t) {
        ApproxSpin s = random_spin(dim, rng);
        ApproxMV v = random_unit_vector(dim, rng);
        ApproxMV w = action_h(s, v);
        double off = 0.0;
        for (const auto& [b, c] : w.terms())
          if (grade_of(b) != 1) off = std::max(off, std::abs(c));
        CHECK(off < 1e-12);
        CHECK(std::abs(w.norm2() - 1.0) < 1e-12);
      }
    }
  }

  TEST_CASE("rotation matrix is a homomorphism onto SO(m)") {
    std::mt19937_64 rng(4);
    for (int dim = 2; dim <= 6; ++dim) {
      ApproxSpin s = random_spin(dim, rng), u = random_spin(dim, rng);
      Eigen::MatrixXd rs = rotation_matrix(s), ru = rotation_matrix(u);
      CHECK(orthogonality_defect(rs) < 1e-12);
      CHECK(std::abs(rs.determinant() - 1.0) < 1e-12);
      CHECK((rotation_matrix(s * u) - rs * ru).cwiseAbs().maxCoeff() < 1e-12);
      // Double cover: s and -s give the same rotation.
      CHECK((rotation_matrix(-s) - rs).cwiseAbs().maxCoeff() < 1e-14);
      CHECK(max_abs_diff((s * s.inverse()).value(), ApproxMV::one(dim)) < 1e-12);
    }
  }

  TEST_CASE("killing form normalization and invariance") {
    auto x = Bivector<Approx>(Bivector<Approx>::unit(4, 0, 1).value() * Approx(0.5));
    CHECK(std::abs(killing_form(x, x) - 1.0) < 1e-12);
    auto y = Bivector<Approx>::unit(4, 1, 3);
    CHECK(std::abs(killing_form(x, y)) < 1e-12);
    std::mt19937_64 rng(8);
    ApproxSpin s = random_spin(4, rng);
    auto z = Bivector<Approx>(Bivector<Approx>::unit(4, 0, 2).value() + Bivector<Approx>::unit(4, 1, 3).value() * Approx(2.0));
    auto ad = [&](const Bivector<Approx>& b) {
      ApproxMV v = action_h(s, b.value());
      ApproxMV clean(v.dim());
      for (const auto& [bl, c] : v.terms())
        if (grade_of(bl) == 2) clean.add(bl, c);
      return Bivector<Approx>(clean);
    };
    CHECK(std::abs(killing_form(ad(z), ad(y)) - killing_form(z, y)) < 1e-12);
    CHECK(killing_form(z, z) > 0.0);
    CHECK_THROWS(killing_form(Bivector<Approx>::unit(2, 0, 1), Bivector<Approx>::unit(2, 0, 1)));
  }

  TEST_CASE("maximal torus elements commute") {
    ApproxSpin a = torus_element(5, {0.3, -1.1});
    ApproxSpin b = torus_element(5, {2.0, 0.4});
    CHECK(max_abs_diff((a * b).value(), (b * a).value()) < 1e-13);
  }
}
