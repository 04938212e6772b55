#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffwave/scalar.hpp"

namespace cliffwave {

// Basis blade e_A encoded as a bitmask; bit i set means generator e_i is a factor.
// Generators are 0-based: bit 0 is the first generator of the algebra.
using Blade = std::uint32_t;

inline int grade_of(Blade b) { return std::popcount(b); }

constexpr int kMaxGenerators = 20;

// Sign of e_A e_B after reordering into canonical (sorted) form and
// eliminating squared generators with e_i^2 = -1.
inline int blade_product_sign(Blade a, Blade b) {
  int swaps = 0;
  Blade shifted = a >> 1;
  while (shifted != 0) {
    swaps += std::popcount(shifted & b);
    shifted >>= 1;
  }
  swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

// bar(e_A) = (-1)^r e_{a_r}...e_{a_1} = (-1)^{r + r(r-1)/2} e_A, r = |A|.
inline int blade_bar_sign(Blade b) {
  int r = grade_of(b);
  return ((r + r * (r - 1) / 2) & 1) ? -1 : 1;
}

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Element of the complex Clifford algebra Cl_m with e_i e_j + e_j e_i = -2 delta_ij.
// Sparse: absent blades are zero; stored coefficients are never exactly zero.
template <class S>
class Multivector {
 public:
  using Traits = ScalarTraits<S>;
  using Terms = std::map<Blade, S>;

  Multivector() = default;
  explicit Multivector(int dim) : dim_(dim) {
    if (dim < 0 || dim > kMaxGenerators) throw std::invalid_argument("Multivector: unsupported dimension");
  }

  static Multivector scalar(int dim, const S& s) {
    Multivector r(dim);
    r.add(0, s);
    return r;
  }
  static Multivector one(int dim) { return scalar(dim, Traits::one()); }
  static Multivector blade(int dim, Blade b, const S& s = Traits::one()) {
    Multivector r(dim);
    if (dim < 32 && (b >> dim) != 0) throw std::invalid_argument("Multivector: blade outside algebra");
    r.add(b, s);
    return r;
  }
  static Multivector generator(int dim, int i) {
    if (i < 0 || i >= dim) throw std::out_of_range("Multivector: generator index out of range");
    return blade(dim, Blade{1} << i);
  }
  // Vector sum_i v[i] e_i.
  template <class T>
  static Multivector vector(int dim, const std::vector<T>& v) {
    if (static_cast<int>(v.size()) != dim) throw DimensionMismatch("Multivector::vector: size mismatch");
    Multivector r(dim);
    for (int i = 0; i < dim; ++i) r.add(Blade{1} << i, S(v[i]));
    return r;
  }

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  S coeff(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Traits::zero() : it->second;
  }
  S scalar_part() const { return coeff(0); }

  void add(Blade b, const S& s) {
    if (Traits::is_zero(s)) return;
    auto [it, inserted] = terms_.try_emplace(b, s);
    if (!inserted) {
      it->second += s;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  Multivector& operator+=(const Multivector& o) {
    check_dim(o);
    for (const auto& [b, s] : o.terms_) add(b, s);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_dim(o);
    for (const auto& [b, s] : o.terms_) add(b, -s);
    return *this;
  }
  Multivector& operator*=(const S& s) {
    if (Traits::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      if (Traits::is_zero(it->second))
        it = terms_.erase(it);
      else
        ++it;
    }
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
  friend Multivector operator*(const S& s, Multivector a) { return a *= s; }
  Multivector operator-() const {
    Multivector r(dim_);
    for (const auto& [b, s] : terms_) r.terms_.emplace(b, -s);
    return r;
  }

  // Geometric (Clifford) product.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_dim(b);
    Multivector r(a.dim_);
    for (const auto& [ba, sa] : a.terms_) {
      for (const auto& [bb, sb] : b.terms_) {
        S prod = sa * sb;
        if (blade_product_sign(ba, bb) < 0) prod = -prod;
        r.add(ba ^ bb, prod);
      }
    }
    return r;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  Multivector grade(int k) const {
    if (k < 0 || k > dim_) throw std::out_of_range("grade_project: grade out of range");
    Multivector r(dim_);
    for (const auto& [b, s] : terms_)
      if (grade_of(b) == k) r.terms_.emplace(b, s);
    return r;
  }

  bool is_homogeneous(int k) const {
    for (const auto& [b, s] : terms_)
      if (grade_of(b) != k) return false;
    return true;
  }
  bool is_even() const {
    for (const auto& [b, s] : terms_)
      if (grade_of(b) % 2 != 0) return false;
    return true;
  }

  // Main anti-involution with complex conjugation of coefficients.
  Multivector bar() const {
    Multivector r(dim_);
    for (const auto& [b, s] : terms_) {
      S c = Traits::conj(s);
      if (blade_bar_sign(b) < 0) c = -c;
      r.terms_.emplace(b, c);
    }
    return r;
  }

  // Anti-involution without conjugating coefficients (used where the algebra,
  // not the Hermitian structure, is needed, e.g. inverting unit spin elements).
  Multivector bar_linear() const {
    Multivector r(dim_);
    for (const auto& [b, s] : terms_) r.terms_.emplace(b, blade_bar_sign(b) < 0 ? -s : s);
    return r;
  }

  Multivector conj_coeffs() const {
    Multivector r(dim_);
    for (const auto& [b, s] : terms_) r.terms_.emplace(b, Traits::conj(s));
    return r;
  }

  // Sum of |a_A|^2, which equals <a, a>.
  double norm2() const {
    double n = 0.0;
    for (const auto& [b, s] : terms_) n += Traits::abs2(s);
    return n;
  }

  template <class T>
  Multivector<T> convert() const {
    Multivector<T> r(dim_);
    for (const auto& [b, s] : terms_) r.add(b, convert_scalar<T>(s));
    return r;
  }

  // Same coefficients viewed in a larger algebra (generators keep their indices).
  Multivector embed(int new_dim) const {
    if (new_dim < dim_) throw DimensionMismatch("embed: target dimension smaller");
    Multivector r(new_dim);
    r.terms_ = terms_;
    return r;
  }

  void check_dim(const Multivector& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("Multivector: dimension mismatch");
  }

 private:
  template <class T>
  static T convert_scalar(const S& s) {
    if constexpr (std::is_same_v<T, S>) {
      return s;
    } else if constexpr (std::is_same_v<T, Approx>) {
      return Traits::to_approx(s);
    } else {
      static_assert(std::is_same_v<T, Exact>, "unsupported conversion");
      return Exact(mpq_class(s.real()), mpq_class(s.imag()));
    }
  }

  int dim_ = 0;
  Terms terms_;
};

using ExactMV = Multivector<Exact>;
using ApproxMV = Multivector<Approx>;

template <class S>
Multivector<S> geometric_product(const Multivector<S>& a, const Multivector<S>& b) {
  return a * b;
}

template <class S>
Multivector<S> grade_project(const Multivector<S>& a, int k) {
  return a.grade(k);
}

template <class S>
Multivector<S> main_anti_involution(const Multivector<S>& a) {
  return a.bar();
}

// <a, b> = [bar(a) b]_0.
template <class S>
S clifford_inner_product(const Multivector<S>& a, const Multivector<S>& b) {
  a.check_dim(b);
  // Only matching blades reach grade 0: bar(e_A) e_A = +1 for every A.
  S r = ScalarTraits<S>::zero();
  for (const auto& [blade, sa] : a.terms()) {
    auto it = b.terms().find(blade);
    if (it != b.terms().end()) r += ScalarTraits<S>::conj(sa) * it->second;
  }
  return r;
}

// a ^ b = (ab - ba) / 2.
template <class S>
Multivector<S> wedge(const Multivector<S>& a, const Multivector<S>& b) {
  Multivector<S> r = a * b - b * a;
  return r * ScalarTraits<S>::from_rational(1, 2);
}

// Exact inverse of a multivector by solving the left-multiplication system;
// throws std::domain_error when the element is a zero divisor.
ExactMV inverse(const ExactMV& a);
ApproxMV inverse(const ApproxMV& a);

// Maximum absolute coefficient difference.
double max_abs_diff(const ApproxMV& a, const ApproxMV& b);

std::string to_string(const ExactMV& a);
std::string to_string(const ApproxMV& a);

}  // namespace cliffwave
