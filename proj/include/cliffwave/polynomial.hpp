#pragma once

#include <map>
#include <vector>

#include "cliffwave/multivector.hpp"

namespace cliffwave {

// k vector variables x_0..x_{k-1}, each with n real components x_{i,a}.
// Indeterminate (i, a) sits at flat index i*n + a. Coefficients live in Cl_n.
struct VarSystem {
  int k = 1;
  int n = 1;

  VarSystem() = default;
  VarSystem(int vars, int ambient) : k(vars), n(ambient) {
    if (vars < 1 || ambient < 1) throw std::invalid_argument("VarSystem: k and n must be positive");
    if (ambient > kMaxGenerators) throw std::invalid_argument("VarSystem: ambient dimension too large");
  }
  int count() const { return k * n; }
  int index(int var, int comp) const {
    if (var < 0 || var >= k) throw std::out_of_range("VarSystem: variable index out of range");
    if (comp < 0 || comp >= n) throw std::out_of_range("VarSystem: component index out of range");
    return var * n + comp;
  }
  friend bool operator==(const VarSystem& a, const VarSystem& b) { return a.k == b.k && a.n == b.n; }
};

using Exponents = std::vector<int>;

// Polynomial in the indeterminates of a VarSystem with Cl_n coefficients.
// Zero coefficients are never stored.
template <class S>
class CliffordPolynomial {
 public:
  using MV = Multivector<S>;
  using Traits = ScalarTraits<S>;
  using Terms = std::map<Exponents, MV>;

  CliffordPolynomial() = default;
  explicit CliffordPolynomial(VarSystem vs) : vs_(vs) {}

  static CliffordPolynomial constant(VarSystem vs, const MV& c) {
    CliffordPolynomial p(vs);
    p.add_term(Exponents(vs.count(), 0), c);
    return p;
  }
  static CliffordPolynomial scalar(VarSystem vs, const S& s) { return constant(vs, MV::scalar(vs.n, s)); }
  static CliffordPolynomial one(VarSystem vs) { return scalar(vs, Traits::one()); }

  // The scalar indeterminate x_{var,comp}.
  static CliffordPolynomial coordinate(VarSystem vs, int var, int comp) {
    CliffordPolynomial p(vs);
    Exponents e(vs.count(), 0);
    e[vs.index(var, comp)] = 1;
    p.add_term(e, MV::one(vs.n));
    return p;
  }
  // The vector variable x_var = sum_a x_{var,a} e_a.
  static CliffordPolynomial vector_variable(VarSystem vs, int var) {
    CliffordPolynomial p(vs);
    for (int a = 0; a < vs.n; ++a) {
      Exponents e(vs.count(), 0);
      e[vs.index(var, a)] = 1;
      p.add_term(e, MV::generator(vs.n, a));
    }
    return p;
  }

  const VarSystem& vars() const { return vs_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponents& e, const MV& c) {
    if (static_cast<int>(e.size()) != vs_.count()) throw std::invalid_argument("add_term: exponent size mismatch");
    if (c.dim() != vs_.n) throw DimensionMismatch("add_term: coefficient algebra mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  CliffordPolynomial& operator+=(const CliffordPolynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  CliffordPolynomial& operator-=(const CliffordPolynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend CliffordPolynomial operator+(CliffordPolynomial a, const CliffordPolynomial& b) { return a += b; }
  friend CliffordPolynomial operator-(CliffordPolynomial a, const CliffordPolynomial& b) { return a -= b; }
  CliffordPolynomial operator-() const {
    CliffordPolynomial r(vs_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend CliffordPolynomial operator*(const CliffordPolynomial& p, const S& s) {
    CliffordPolynomial r(p.vs_);
    for (const auto& [e, c] : p.terms_) r.add_term(e, c * s);
    return r;
  }
  friend CliffordPolynomial operator*(const S& s, const CliffordPolynomial& p) { return p * s; }

  // Coefficients multiply in order: (sum a_e x^e)(sum b_f x^f) = sum a_e b_f x^{e+f}.
  friend CliffordPolynomial operator*(const CliffordPolynomial& p, const CliffordPolynomial& q) {
    p.check(q);
    CliffordPolynomial r(p.vs_);
    Exponents sum(p.vs_.count());
    for (const auto& [e, a] : p.terms_) {
      for (const auto& [f, b] : q.terms_) {
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = e[i] + f[i];
        r.add_term(sum, a * b);
      }
    }
    return r;
  }

  CliffordPolynomial left_multiply(const MV& m) const {
    CliffordPolynomial r(vs_);
    for (const auto& [e, c] : terms_) r.add_term(e, m * c);
    return r;
  }
  CliffordPolynomial right_multiply(const MV& m) const {
    CliffordPolynomial r(vs_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * m);
    return r;
  }

  CliffordPolynomial pow(int e) const {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    CliffordPolynomial r = one(vs_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  // d/dx_{idx} for a flat indeterminate index.
  CliffordPolynomial derivative(int idx) const {
    CliffordPolynomial r(vs_);
    for (const auto& [e, c] : terms_) {
      if (e[idx] == 0) continue;
      Exponents f = e;
      f[idx] -= 1;
      r.add_term(f, c * Traits::from_int(e[idx]));
    }
    return r;
  }
  // x_{idx} * p.
  CliffordPolynomial times_coordinate(int idx) const {
    CliffordPolynomial r(vs_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f[idx] += 1;
      r.terms_.emplace(std::move(f), c);
    }
    return r;
  }

  // Applies a coefficient map term by term.
  template <class F>
  CliffordPolynomial map_coeffs(F&& f) const {
    CliffordPolynomial r(vs_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  // Highest total exponent over the block of variable var (-1 for the zero polynomial).
  int degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int a = 0; a < vs_.n; ++a) s += e[vs_.index(var, a)];
      d = std::max(d, s);
    }
    return d;
  }
  // Degree in var if every term has the same degree there, else -1.
  int homogeneous_degree_in(int var) const {
    int d = -2;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int a = 0; a < vs_.n; ++a) s += e[vs_.index(var, a)];
      if (d == -2) d = s;
      else if (d != s) return -1;
    }
    return d == -2 ? 0 : d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int v : e) s += v;
      d = std::max(d, s);
    }
    return d;
  }

  template <class T>
  CliffordPolynomial<T> convert() const {
    CliffordPolynomial<T> r(vs_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.template convert<T>());
    return r;
  }

  // Evaluates at real coordinates (flat layout, size k*n).
  Multivector<Approx> evaluate(const std::vector<double>& point) const {
    if (static_cast<int>(point.size()) != vs_.count()) throw std::invalid_argument("evaluate: point size mismatch");
    Multivector<Approx> r(vs_.n);
    for (const auto& [e, c] : terms_) {
      double mono = 1.0;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int p = 0; p < e[i]; ++p) mono *= point[i];
      if (mono == 0.0) continue;
      for (const auto& [b, s] : c.terms()) r.add(b, ScalarTraits<S>::to_approx(s) * mono);
    }
    return r;
  }

  friend bool operator==(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    return a.vs_ == b.vs_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const CliffordPolynomial& a, const CliffordPolynomial& b) { return !(a == b); }

  void check(const CliffordPolynomial& o) const {
    if (!(vs_ == o.vs_)) throw DimensionMismatch("CliffordPolynomial: variable systems differ");
  }

 private:
  VarSystem vs_;
  Terms terms_;
};

using ExactPoly = CliffordPolynomial<Exact>;
using ApproxPoly = CliffordPolynomial<Approx>;

// True when q == c * p for some scalar c; the scalar is written to *factor.
bool is_scalar_multiple(const ExactPoly& q, const ExactPoly& p, Exact* factor);

}  // namespace cliffwave
