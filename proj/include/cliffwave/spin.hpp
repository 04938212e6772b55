#pragma once

#include <random>

#include <Eigen/Dense>

#include "cliffwave/multivector.hpp"

namespace cliffwave {

// Pure grade-2 element; the Lie algebra spin(m).
template <class S>
class Bivector {
 public:
  explicit Bivector(Multivector<S> v) : value_(std::move(v)) {
    if (!value_.is_homogeneous(2)) throw std::invalid_argument("Bivector: input has non-bivector parts");
  }
  // e_i e_j for i < j (0-based generators).
  static Bivector unit(int dim, int i, int j) {
    if (i == j || i < 0 || j < 0 || i >= dim || j >= dim) throw std::out_of_range("Bivector::unit: bad pair");
    return Bivector(Multivector<S>::generator(dim, i) * Multivector<S>::generator(dim, j));
  }
  const Multivector<S>& value() const { return value_; }
  int dim() const { return value_.dim(); }

 private:
  Multivector<S> value_;
};

// Even, unit-normalized element s with s bar(s) = 1.
template <class S>
class SpinElement {
 public:
  static constexpr double kTolerance = 1e-12;

  // Validates the group invariants: exact backend identically, approx within kTolerance.
  explicit SpinElement(Multivector<S> s) : s_(std::move(s)) {
    if (!s_.is_even()) throw std::invalid_argument("SpinElement: odd-grade part present");
    Multivector<S> unit = s_ * s_.bar();
    Multivector<S> defect = unit - Multivector<S>::one(s_.dim());
    if constexpr (ScalarTraits<S>::exact) {
      if (!defect.is_zero()) throw std::invalid_argument("SpinElement: s bar(s) != 1");
    } else {
      for (const auto& [b, c] : defect.terms())
        if (std::abs(c) > kTolerance) throw std::invalid_argument("SpinElement: s bar(s) deviates from 1");
    }
  }
  static SpinElement identity(int dim) { return SpinElement(Multivector<S>::one(dim)); }

  const Multivector<S>& value() const { return s_; }
  int dim() const { return s_.dim(); }
  // s^{-1} = bar(s) for real spin elements.
  SpinElement inverse() const { return SpinElement(s_.bar_linear()); }
  SpinElement operator-() const { return SpinElement(-s_); }
  friend SpinElement operator*(const SpinElement& a, const SpinElement& b) { return SpinElement(a.s_ * b.s_); }

 private:
  Multivector<S> s_;
};

using ApproxSpin = SpinElement<Approx>;

// exp(t X). Simple bivectors (X^2 scalar) use cos/sin in closed form;
// other bivectors are summed as a power series.
ApproxSpin exp_bivector(const Bivector<Approx>& x, double t);

// h(s) a = s a s^{-1}.
template <class S>
Multivector<S> action_h(const SpinElement<S>& s, const Multivector<S>& a) {
  return s.value() * a * s.value().bar_linear();
}

// l(s) a = s a.
template <class S>
Multivector<S> action_l(const SpinElement<S>& s, const Multivector<S>& a) {
  return s.value() * a;
}

// Column j holds the 1-vector coefficients of h(s) e_j.
Eigen::MatrixXd rotation_matrix(const ApproxSpin& s);

// Normalized Killing form: B(e_ij/2, e_ij/2) = 1.
double killing_form(const Bivector<Approx>& x, const Bivector<Approx>& y);

// Product of 2*pairs random unit vectors.
ApproxSpin random_spin(int dim, std::mt19937_64& rng, int pairs = 3);

ApproxMV random_unit_vector(int dim, std::mt19937_64& rng);

// prod_j exp(t_j e_{2j,2j+1}) over the maximal torus (0-based generators).
ApproxSpin torus_element(int dim, const std::vector<double>& angles);

}  // namespace cliffwave
