#include "cliffwave/operators.hpp"

#include <random>

namespace cliffwave {

namespace {

void check_var(const ExactPoly& p, int i) {
  if (i < 0 || i >= p.vars().k) throw std::out_of_range("operator: variable index out of range");
}

ExactMV e_ab(int n, int a, int b) { return ExactMV::generator(n, a) * ExactMV::generator(n, b); }

}  // namespace

bool is_scalar_multiple(const ExactPoly& q, const ExactPoly& p, Exact* factor) {
  if (p.is_zero()) {
    if (factor) *factor = Exact();
    return q.is_zero();
  }
  const auto& [e0, c0] = *p.terms().begin();
  const auto& [b0, s0] = *c0.terms().begin();
  auto it = q.terms().find(e0);
  Exact f = it == q.terms().end() ? Exact() : it->second.coeff(b0) / s0;
  if (factor) *factor = f;
  return (q - p * f).is_zero();
}

ExactPoly dirac(const ExactPoly& p, int i) {
  check_var(p, i);
  const VarSystem& vs = p.vars();
  ExactPoly r(vs);
  for (int a = 0; a < vs.n; ++a) r += p.derivative(vs.index(i, a)).left_multiply(ExactMV::generator(vs.n, a));
  return r;
}

ExactPoly laplacian(const ExactPoly& p, int i) {
  check_var(p, i);
  const VarSystem& vs = p.vars();
  ExactPoly r(vs);
  for (int a = 0; a < vs.n; ++a) {
    int idx = vs.index(i, a);
    r += p.derivative(idx).derivative(idx);
  }
  return r;
}

ExactPoly angular_momentum(const ExactPoly& p, int i, int a, int b) {
  check_var(p, i);
  const VarSystem& vs = p.vars();
  if (a == b || a < 0 || b < 0 || a >= vs.n || b >= vs.n) throw std::out_of_range("angular_momentum: invalid pair");
  int ia = vs.index(i, a), ib = vs.index(i, b);
  return p.derivative(ib).times_coordinate(ia) - p.derivative(ia).times_coordinate(ib);
}

ExactPoly wedge_dirac(const ExactPoly& p, int i) {
  check_var(p, i);
  const VarSystem& vs = p.vars();
  ExactPoly r(vs);
  for (int a = 0; a < vs.n; ++a) {
    for (int b = 0; b < vs.n; ++b) {
      if (a == b) continue;
      ExactMV w = wedge(ExactMV::generator(vs.n, a), ExactMV::generator(vs.n, b));
      r += p.derivative(vs.index(i, b)).times_coordinate(vs.index(i, a)).left_multiply(w);
    }
  }
  return r;
}

ExactPoly gamma(const ExactPoly& p, int i) {
  const VarSystem& vs = p.vars();
  ExactPoly r(vs);
  for (int a = 0; a < vs.n; ++a)
    for (int b = a + 1; b < vs.n; ++b) r -= angular_momentum(p, i, a, b).left_multiply(e_ab(vs.n, a, b));
  return r;
}

ExactPoly gamma_total(const ExactPoly& p) {
  ExactPoly r(p.vars());
  for (int i = 0; i < p.vars().k; ++i) r += gamma(p, i);
  return r;
}

ExactPoly euler(const ExactPoly& p, int i) { return mixed_euler(p, i, i); }

ExactPoly mixed_euler(const ExactPoly& p, int i, int j) {
  check_var(p, i);
  check_var(p, j);
  const VarSystem& vs = p.vars();
  ExactPoly r(vs);
  for (int a = 0; a < vs.n; ++a) r += p.derivative(vs.index(j, a)).times_coordinate(vs.index(i, a));
  return r;
}

ExactPoly mixed_divergence(const ExactPoly& p, int i, int j) {
  check_var(p, i);
  check_var(p, j);
  const VarSystem& vs = p.vars();
  ExactPoly r(vs);
  for (int a = 0; a < vs.n; ++a) r += p.derivative(vs.index(j, a)).derivative(vs.index(i, a));
  return r;
}

ExactPoly mixed_laplacian(const ExactPoly& p, int i, int j) {
  if (i == j) throw std::invalid_argument("mixed_laplacian: indices must differ");
  const VarSystem& vs = p.vars();
  ExactPoly r(vs);
  for (int a = 0; a < vs.n; ++a)
    for (int b = a + 1; b < vs.n; ++b) r += angular_momentum(angular_momentum(p, j, a, b), i, a, b);
  return r;
}

ExactPoly overdot_mixed(const ExactPoly& p, int i, int j) {
  if (i == j) throw std::invalid_argument("overdot_mixed: indices must differ");
  check_var(p, i);
  check_var(p, j);
  const VarSystem& vs = p.vars();
  // -sum_{a,b} x_{j,a} x_{i,b} d_{i,a} d_{j,b} p: the coordinate x_{i,b} is not
  // differentiated by d_{i,a}.
  ExactPoly r(vs);
  for (int a = 0; a < vs.n; ++a)
    for (int b = 0; b < vs.n; ++b)
      r -= p.derivative(vs.index(j, b)).derivative(vs.index(i, a)).times_coordinate(vs.index(i, b)).times_coordinate(
          vs.index(j, a));
  return r;
}

ExactPoly spherical_laplacian(const ExactPoly& p, int i) {
  const VarSystem& vs = p.vars();
  ExactPoly r(vs);
  for (int a = 0; a < vs.n; ++a)
    for (int b = a + 1; b < vs.n; ++b) r += angular_momentum(angular_momentum(p, i, a, b), i, a, b);
  return r;
}

ExactPoly h_generator(const ExactPoly& p, int a, int b) {
  ExactPoly r(p.vars());
  for (int i = 0; i < p.vars().k; ++i) r -= angular_momentum(p, i, a, b);
  return r;
}

ExactPoly l_generator(const ExactPoly& p, int a, int b) {
  return h_generator(p, a, b) + p.left_multiply(e_ab(p.vars().n, a, b) * Exact::rational(1, 2));
}

ExactPoly casimir_H(const ExactPoly& p) {
  const VarSystem& vs = p.vars();
  ExactPoly r(vs);
  for (int a = 0; a < vs.n; ++a)
    for (int b = a + 1; b < vs.n; ++b) r += h_generator(h_generator(p, a, b), a, b);
  return r;
}

ExactPoly casimir_H_expanded(const ExactPoly& p) {
  const VarSystem& vs = p.vars();
  ExactPoly r(vs);
  for (int i = 0; i < vs.k; ++i) r += spherical_laplacian(p, i);
  for (int i = 0; i < vs.k; ++i)
    for (int j = i + 1; j < vs.k; ++j) r += mixed_laplacian(p, i, j) * Exact(2);
  return r;
}

Exact default_casimir_constant(int n) { return Exact::rational(static_cast<long>(n) * (n - 1), 8); }

ExactPoly casimir_L(const ExactPoly& p, const Exact& c) { return casimir_H(p) + gamma_total(p) - p * c; }

ExactPoly casimir_L(const ExactPoly& p) { return casimir_L(p, default_casimir_constant(p.vars().n)); }

ExactPoly casimir_L_from_generators(const ExactPoly& p) {
  const VarSystem& vs = p.vars();
  ExactPoly r(vs);
  for (int a = 0; a < vs.n; ++a)
    for (int b = a + 1; b < vs.n; ++b) r += l_generator(l_generator(p, a, b), a, b);
  return r;
}

bool is_harmonic(const ExactPoly& p) {
  const int k = p.vars().k;
  for (int i = 0; i < k; ++i)
    if (!laplacian(p, i).is_zero()) return false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!mixed_divergence(p, i, j).is_zero()) return false;
  return true;
}

bool is_monogenic(const ExactPoly& p) {
  for (int i = 0; i < p.vars().k; ++i)
    if (!dirac(p, i).is_zero()) return false;
  return true;
}

bool is_simplicial(const ExactPoly& p) {
  for (int i = 0; i + 1 < p.vars().k; ++i)
    if (!mixed_euler(p, i, i + 1).is_zero()) return false;
  return true;
}

ExactPoly clifford_inner(const ExactPoly& p, const ExactMV& t) {
  const VarSystem& vs = p.vars();
  ExactPoly r(vs);
  for (const auto& [e, c] : p.terms()) r.add_term(e, ExactMV::scalar(vs.n, clifford_inner_product(c, t)));
  return r;
}

ExactPoly grade_project(const ExactPoly& p, int r) {
  return p.map_coeffs([r](const ExactMV& c) { return c.grade(r); });
}

ExactMV isotropic_vector(int n, int j) {
  if (j < 0 || 2 * j + 1 >= n) throw std::out_of_range("isotropic_vector: index outside algebra");
  ExactMV t = ExactMV::generator(n, 2 * j) - ExactMV::generator(n, 2 * j + 1) * Exact::imag_unit();
  return t * Exact::rational(1, 2);
}

ExactMV interleaved_idempotent(int n, int j) {
  ExactMV t = isotropic_vector(n, j);
  return t * t.bar();
}

ExactMV paired_idempotent(int m, int j) {
  if (j < 0 || j >= m) throw std::out_of_range("paired_idempotent: index outside algebra");
  ExactMV r = ExactMV::one(2 * m) + e_ab(2 * m, j, j + m) * Exact::imag_unit();
  return r * Exact::rational(1, 2);
}

Weight Weight::integral(const std::vector<int>& m) {
  Weight w;
  for (int v : m) w.doubled_.push_back(2 * v);
  return w;
}

Weight Weight::half_integral(const std::vector<int>& m) {
  Weight w;
  for (int v : m) w.doubled_.push_back(2 * v + 1);
  return w;
}

Weight Weight::from_doubled(const std::vector<int>& d) {
  Weight w;
  w.doubled_ = d;
  return w;
}

bool Weight::is_dominant() const {
  for (std::size_t j = 0; j + 1 < doubled_.size(); ++j) {
    int next = doubled_[j + 1];
    if (j + 2 == doubled_.size()) next = std::abs(next);
    if (doubled_[j] < next) return false;
  }
  return doubled_.empty() || doubled_.size() > 1 || doubled_[0] >= 0;
}

bool Weight::all_even() const {
  for (int d : doubled_)
    if (d % 2 != 0) return false;
  return true;
}

bool Weight::all_odd() const {
  if (doubled_.empty()) return false;
  for (int d : doubled_)
    if (d % 2 == 0) return false;
  return true;
}

int Weight::floor_entry(std::size_t j) const {
  int d = doubled_.at(j);
  return d % 2 == 0 ? d / 2 : (d - 1) / 2;
}

std::vector<int> Weight::floor_entries() const {
  std::vector<int> r;
  for (std::size_t j = 0; j < doubled_.size(); ++j) r.push_back(floor_entry(j));
  return r;
}

int Weight::floor_sum() const {
  int s = 0;
  for (std::size_t j = 0; j < doubled_.size(); ++j) s += floor_entry(j);
  return s;
}

ExactPoly highest_weight_vector(const Weight& w, WeightKind kind, int n) {
  const int half = n / 2;
  if (!w.is_dominant()) throw std::invalid_argument("highest_weight_vector: weight is not dominant");
  if (static_cast<int>(w.size()) > half) throw std::invalid_argument("highest_weight_vector: weight longer than rank");
  if (kind == WeightKind::Harmonic && !w.all_even())
    throw std::invalid_argument("highest_weight_vector: harmonic kind needs integral weights");
  if (kind == WeightKind::Monogenic && !w.all_odd())
    throw std::invalid_argument("highest_weight_vector: monogenic kind needs half-integral weights");
  std::vector<int> m = w.floor_entries();
  for (int v : m)
    if (v < 0) throw std::invalid_argument("highest_weight_vector: negative entries are not supported");

  const int k = std::max<int>(1, static_cast<int>(m.size()));
  VarSystem vs(k, n);
  ExactPoly result = ExactPoly::one(vs);
  ExactPoly xs = ExactPoly::one(vs);
  ExactMV ts = ExactMV::one(n);
  for (std::size_t j = 0; j < m.size(); ++j) {
    xs = xs * ExactPoly::vector_variable(vs, static_cast<int>(j));
    ts = ts * isotropic_vector(n, static_cast<int>(j));
    int exponent = m[j] - (j + 1 < m.size() ? m[j + 1] : 0);
    if (exponent == 0) continue;
    const int r = static_cast<int>(j) + 1;
    ExactPoly factor = clifford_inner(grade_project(xs, r), ts.grade(r));
    result = result * factor.pow(exponent);
  }
  if (kind == WeightKind::Monogenic) {
    ExactMV idem = ExactMV::one(n);
    for (int j = 0; j < half; ++j) idem = idem * interleaved_idempotent(n, j);
    result = result.right_multiply(idem);
  }
  return result;
}

Exact casimir_H_eigenvalue(const Weight& w, int n) {
  Exact s;
  auto m = w.floor_entries();
  for (std::size_t j = 0; j < m.size(); ++j) s -= Exact(static_cast<long>(m[j]) * (m[j] + n - 2 * (static_cast<long>(j) + 1)));
  return s;
}

Exact casimir_L_eigenvalue(const Weight& w, int n) {
  Exact s;
  auto m = w.floor_entries();
  for (std::size_t j = 0; j < m.size(); ++j)
    s -= Exact(static_cast<long>(m[j]) * (m[j] + n - 2 * (static_cast<long>(j) + 1) + 1));
  return s - default_casimir_constant(n);
}

ExactPoly spin_dirac(const ExactPoly& alpha, const ExactPoly& beta) {
  alpha.check(beta);
  const VarSystem& vs = alpha.vars();
  ExactPoly r(vs);
  for (int a = 0; a < vs.n; ++a) {
    for (int b = a + 1; b < vs.n; ++b) {
      ExactMV e = e_ab(vs.n, a, b);
      ExactPoly h_alpha = h_generator(alpha, a, b);
      ExactPoly l_beta = h_generator(beta, a, b) + beta.left_multiply(e);
      r += (h_alpha + l_beta).left_multiply(e);
    }
  }
  return r;
}

ExactPoly random_polynomial(VarSystem vs, int max_degree, int terms, unsigned long seed, bool clifford_valued) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> var(0, vs.count() - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<Blade> blade(0, (Blade{1} << vs.n) - 1);
  ExactPoly p(vs);
  for (int t = 0; t < terms; ++t) {
    Exponents e(vs.count(), 0);
    int d = deg(rng);
    for (int s = 0; s < d; ++s) e[var(rng)] += 1;
    ExactMV c(vs.n);
    int blades = clifford_valued ? 2 : 1;
    for (int q = 0; q < blades; ++q) {
      Blade b = clifford_valued ? blade(rng) : 0;
      c.add(b, Exact(mpq_class(coeff(rng)), mpq_class(coeff(rng))));
    }
    p.add_term(e, c);
  }
  return p;
}

}  // namespace cliffwave
