#include "cliffwave/sphere.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include <Eigen/Eigenvalues>

namespace cliffwave {

namespace {

void multi_indices_rec(int vars, int k, int pos, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (pos == vars - 1) {
    cur[pos] = k;
    out.push_back(cur);
    return;
  }
  for (int v = k; v >= 0; --v) {
    cur[pos] = v;
    multi_indices_rec(vars, k - v, pos + 1, cur, out);
  }
}

struct ExponentHash {
  std::size_t operator()(const Exponents& e) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : e) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

const mpq_class& cached_moment(const Exponents& beta) {
  thread_local std::unordered_map<Exponents, mpq_class, ExponentHash> cache;
  auto it = cache.find(beta);
  if (it == cache.end()) it = cache.emplace(beta, sphere_moment(beta)).first;
  return it->second;
}

ExactPoly radius_squared(VarSystem vs) {
  ExactPoly r(vs);
  for (int a = 0; a < vs.n; ++a) {
    Exponents e(vs.count(), 0);
    e[a] = 2;
    r.add_term(e, ExactMV::one(vs.n));
  }
  return r;
}

using ComplexMatrix = Eigen::MatrixXcd;

ComplexMatrix left_matrix(const ApproxMV& a) {
  const int size = 1 << a.dim();
  ComplexMatrix mat = ComplexMatrix::Zero(size, size);
  for (const auto& [blade, c] : a.terms())
    for (Blade b = 0; b < static_cast<Blade>(size); ++b) mat(blade ^ b, b) += c * static_cast<double>(blade_product_sign(blade, b));
  return mat;
}

// Positive square root of an element whose left-multiplication matrix is Hermitian positive definite.
ApproxMV positive_sqrt(const ApproxMV& d) {
  ComplexMatrix mat = left_matrix(d);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat);
  if (solver.info() != Eigen::Success || solver.eigenvalues().minCoeff() <= 0.0)
    throw std::domain_error("positive_sqrt: element is not positive definite");
  ComplexMatrix root = solver.eigenvectors() * solver.eigenvalues().cwiseSqrt().asDiagonal() * solver.eigenvectors().adjoint();
  ApproxMV r(d.dim());
  for (Eigen::Index b = 0; b < root.rows(); ++b)
    if (std::abs(root(b, 0)) > 1e-300) r.add(static_cast<Blade>(b), root(b, 0));
  return r;
}

ApproxMV vector_mv(const std::vector<double>& v) { return ApproxMV::vector(static_cast<int>(v.size()), v); }

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_basis_signal(const SpectralCoefficients& c, const MonogenicBasis& basis) {
  if (c.m != basis.m()) throw DimensionMismatch("spectral coefficients and basis differ in m");
  if (c.max_degree > basis.max_degree()) throw std::invalid_argument("band limit exceeds the constructed basis");
  if (c.coeffs.size() > basis.size()) throw std::invalid_argument("coefficient count exceeds the basis");
}

}  // namespace

std::vector<MultiIndex> multi_indices(int vars, int k) {
  if (vars < 1 || k < 0) throw std::invalid_argument("multi_indices: bad arguments");
  std::vector<MultiIndex> out;
  MultiIndex cur(vars, 0);
  multi_indices_rec(vars, k, 0, cur, out);
  return out;
}

double sphere_area(int m) {
  const double h = 0.5 * (m + 1);
  return 2.0 * std::pow(std::numbers::pi, h) / std::tgamma(h);
}

mpq_class sphere_moment(const std::vector<int>& beta) {
  const long n = static_cast<long>(beta.size());
  mpz_class num = 1;
  long total = 0;
  for (int b : beta) {
    if (b < 0) throw std::invalid_argument("sphere_moment: negative exponent");
    if (b % 2 != 0) return 0;
    for (long q = b - 1; q > 1; q -= 2) num *= q;
    total += b;
  }
  mpz_class den = 1;
  for (long j = 0; j < total / 2; ++j) den *= n + 2 * j;
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

ExactMV sphere_inner(const ExactPoly& a, const ExactPoly& b) {
  a.check(b);
  const VarSystem& vs = a.vars();
  if (vs.k != 1) throw std::invalid_argument("sphere_inner: expects one vector variable");
  std::vector<std::pair<const Exponents*, ExactMV>> left;
  left.reserve(a.size());
  for (const auto& [e, c] : a.terms()) left.emplace_back(&e, c.bar());
  ExactMV r(vs.n);
  Exponents sum(vs.count());
  for (const auto& [ea, ca] : left) {
    for (const auto& [eb, cb] : b.terms()) {
      bool even = true;
      for (std::size_t i = 0; i < sum.size(); ++i) {
        sum[i] = (*ea)[i] + eb[i];
        if (sum[i] & 1) {
          even = false;
          break;
        }
      }
      if (!even) continue;
      r += (ca * cb) * Exact(cached_moment(sum));
    }
  }
  return r;
}

void gauss_gegenbauer(int points, double a, std::vector<double>& nodes, std::vector<double>& weights) {
  if (points < 1) throw std::invalid_argument("gauss_gegenbauer: need at least one point");
  if (a <= -1.0) throw std::invalid_argument("gauss_gegenbauer: weight exponent must exceed -1");
  const double lambda = a + 0.5;
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(points, points);
  for (int k = 1; k < points; ++k) {
    double b = std::sqrt(k * (k + 2.0 * lambda - 1.0) / (4.0 * (k + lambda) * (k + lambda - 1.0)));
    jac(k, k - 1) = jac(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jac);
  const double mu0 = std::sqrt(std::numbers::pi) * std::tgamma(a + 1.0) / std::tgamma(a + 1.5);
  nodes.resize(points);
  weights.resize(points);
  for (int i = 0; i < points; ++i) {
    nodes[i] = solver.eigenvalues()(i);
    double v = solver.eigenvectors()(0, i);
    weights[i] = mu0 * v * v;
  }
}

QuadratureRule build_quadrature(int m, int degree, std::size_t max_nodes) {
  if (m < 1) throw std::invalid_argument("build_quadrature: m must be positive");
  if (degree < 0) throw std::invalid_argument("build_quadrature: degree must be non-negative");
  const std::size_t azimuth = static_cast<std::size_t>(degree) + 1;
  const std::size_t polar = static_cast<std::size_t>(degree + 2) / 2;
  double count = static_cast<double>(azimuth) * std::pow(static_cast<double>(polar), m - 1);
  if (count > static_cast<double>(max_nodes)) throw std::length_error("build_quadrature: node cap exceeded");

  QuadratureRule rule;
  rule.m = m;
  rule.degree = degree;
  for (std::size_t j = 0; j < azimuth; ++j) {
    double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(azimuth);
    rule.nodes.push_back({std::cos(phi), std::sin(phi)});
    rule.weights.push_back(2.0 * std::numbers::pi / static_cast<double>(azimuth));
  }
  std::vector<double> t, w;
  for (int d = 2; d <= m; ++d) {
    gauss_gegenbauer(static_cast<int>(polar), 0.5 * (d - 2), t, w);
    QuadratureRule next;
    for (std::size_t i = 0; i < t.size(); ++i) {
      double s = std::sqrt(std::max(0.0, 1.0 - t[i] * t[i]));
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        std::vector<double> p;
        p.reserve(rule.nodes[q].size() + 1);
        p.push_back(t[i]);
        for (double c : rule.nodes[q]) p.push_back(s * c);
        next.nodes.push_back(std::move(p));
        next.weights.push_back(w[i] * rule.weights[q]);
      }
    }
    rule.nodes = std::move(next.nodes);
    rule.weights = std::move(next.weights);
  }
  return rule;
}

ExactPoly ck_extension(int m, const MultiIndex& alpha) {
  if (m < 1) throw std::invalid_argument("ck_extension: m must be positive");
  if (static_cast<int>(alpha.size()) != m) throw std::invalid_argument("ck_extension: alpha must have m entries");
  const int n = m + 1;
  VarSystem vs(1, n);
  Exponents e(n, 0);
  mpz_class fact = 1;
  int k = 0;
  for (int i = 0; i < m; ++i) {
    if (alpha[i] < 0) throw std::invalid_argument("ck_extension: negative index");
    e[i + 1] = alpha[i];
    for (int q = 2; q <= alpha[i]; ++q) fact *= q;
    k += alpha[i];
  }
  ExactPoly term(vs);
  term.add_term(e, ExactMV::scalar(n, Exact(mpq_class(mpz_class(1), fact))));
  ExactMV e0 = ExactMV::generator(n, 0);
  ExactPoly result = term;
  ExactPoly x0_power = ExactPoly::one(vs);
  mpz_class jfact = 1;
  for (int j = 1; j <= k; ++j) {
    ExactPoly next(vs);
    for (int i = 1; i < n; ++i) next += term.derivative(i).left_multiply(e0 * ExactMV::generator(n, i));
    term = next;
    x0_power = x0_power.times_coordinate(0);
    jfact *= j;
    result += (x0_power * term) * Exact(mpq_class(mpz_class(1), jfact));
  }
  return result;
}

ExactPoly RadialExpansion::on_sphere() const {
  ExactPoly r(vars);
  for (const auto& p : parts) r += p;
  return r;
}

ExactPoly RadialExpansion::homogenized() const {
  ExactPoly r(vars);
  ExactPoly r2 = radius_squared(vars);
  const int top = static_cast<int>(parts.size()) - 1;
  for (int j = 0; j <= top; ++j) r += parts[j] * r2.pow(top - j);
  return r;
}

RadialExpansion RadialExpansion::right_multiply(const ExactMV& c) const {
  RadialExpansion r{vars, base, {}};
  for (const auto& p : parts) r.parts.push_back(p.right_multiply(c));
  return r;
}

RadialExpansion& RadialExpansion::operator+=(const RadialExpansion& o) {
  if (!(vars == o.vars) || base != o.base) throw DimensionMismatch("RadialExpansion: incompatible operands");
  if (parts.size() < o.parts.size()) parts.resize(o.parts.size(), ExactPoly(vars));
  for (std::size_t j = 0; j < o.parts.size(); ++j) parts[j] += o.parts[j];
  return *this;
}

RadialExpansion& RadialExpansion::operator-=(const RadialExpansion& o) {
  if (!(vars == o.vars) || base != o.base) throw DimensionMismatch("RadialExpansion: incompatible operands");
  if (parts.size() < o.parts.size()) parts.resize(o.parts.size(), ExactPoly(vars));
  for (std::size_t j = 0; j < o.parts.size(); ++j) parts[j] -= o.parts[j];
  return *this;
}

RadialExpansion RadialExpansion::derivative(int c) const {
  RadialExpansion r{vars, base, std::vector<ExactPoly>(parts.size() + 1, ExactPoly(vars))};
  for (std::size_t j = 0; j < parts.size(); ++j) {
    r.parts[j] += parts[j].derivative(c);
    r.parts[j + 1] -= parts[j].times_coordinate(c) * Exact(base + 2 * static_cast<long>(j));
  }
  while (r.parts.size() > 1 && r.parts.back().is_zero()) r.parts.pop_back();
  return r;
}

ApproxMV OuterFunction::evaluate(const std::vector<double>& point) const {
  double r = std::sqrt(dot(point, point));
  if (r == 0.0) throw std::domain_error("OuterFunction: singular at the origin");
  ApproxMV out(expansion.vars.n);
  for (std::size_t j = 0; j < expansion.parts.size(); ++j) {
    double radial = scale * std::pow(r, -(expansion.base + 2.0 * static_cast<double>(j)));
    out += expansion.parts[j].evaluate(point) * Approx(radial);
  }
  return out;
}

OuterFunction outer_basis(int m, const MultiIndex& alpha) {
  if (m < 1) throw std::invalid_argument("outer_basis: m must be positive");
  MultiIndex full;
  if (static_cast<int>(alpha.size()) == m) {
    full.push_back(0);
    full.insert(full.end(), alpha.begin(), alpha.end());
  } else if (static_cast<int>(alpha.size()) == m + 1) {
    full = alpha;
  } else {
    throw std::invalid_argument("outer_basis: alpha must have m or m+1 entries");
  }
  const int n = m + 1;
  VarSystem vs(1, n);
  RadialExpansion e{vs, n, {-ExactPoly::vector_variable(vs, 0)}};
  int order = 0;
  for (int c = 0; c < n; ++c) {
    if (full[c] < 0) throw std::invalid_argument("outer_basis: negative index");
    for (int q = 0; q < full[c]; ++q) e = e.derivative(c);
    order += full[c];
  }
  if (order % 2 == 1) e = e.right_multiply(ExactMV::scalar(n, Exact(-1)));
  return OuterFunction{std::move(e), 1.0 / sphere_area(m)};
}

std::string part_name(Part p) { return p == Part::V ? "V" : "W"; }

std::string BasisElement::key() const {
  std::ostringstream os;
  os << degree << '/';
  for (std::size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
  os << '/' << part_name(part);
  return os.str();
}

long MonogenicBasis::rank(int m, int k) {
  if (k < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k + m - 1), static_cast<unsigned long>(m - 1));
  return r.get_si();
}

std::shared_ptr<const MonogenicBasis> MonogenicBasis::build(int m, int max_degree) {
  if (m < 2) throw std::invalid_argument("MonogenicBasis: m >= 2 required");
  if (max_degree < 0) throw std::invalid_argument("MonogenicBasis: max degree must be non-negative");
  auto basis = std::make_shared<MonogenicBasis>();
  basis->m_ = m;
  basis->max_degree_ = max_degree;
  const int n = m + 1;
  const double area = sphere_area(m);

  for (int k = 0; k <= max_degree; ++k) {
    for (Part part : {Part::V, Part::W}) {
      std::vector<MultiIndex> alphas = multi_indices(m, k);
      std::vector<RadialExpansion> raw;
      for (const auto& a : alphas) {
        if (part == Part::V)
          raw.push_back(RadialExpansion{VarSystem(1, n), 0, {ck_extension(m, a)}});
        else
          raw.push_back(outer_basis(m, a).expansion);
      }
      std::vector<ExactPoly> raw_sphere;
      for (const auto& r : raw) raw_sphere.push_back(r.on_sphere());

      std::vector<std::size_t> kept;
      std::vector<ExactPoly> sphere_values;
      std::vector<ExactMV> inverse_gram;
      const std::size_t first = basis->elements_.size();
      for (std::size_t i = 0; i < raw.size(); ++i) {
        BasisElement el;
        el.degree = k;
        el.alpha = alphas[i];
        el.part = part;
        el.exact = raw[i];
        el.transform.assign(raw.size(), ExactMV(n));
        el.transform[i] = ExactMV::one(n);
        for (std::size_t q = 0; q < kept.size(); ++q) {
          const BasisElement& prev = basis->elements_[first + q];
          ExactMV x = inverse_gram[q] * sphere_inner(sphere_values[q], raw_sphere[i]);
          if (x.is_zero()) continue;
          el.exact -= prev.exact.right_multiply(x);
          for (std::size_t c = 0; c < raw.size(); ++c)
            if (!prev.transform[c].is_zero()) el.transform[c] -= prev.transform[c] * x;
        }
        ExactPoly on = el.exact.on_sphere();
        ExactMV gram = sphere_inner(on, on);
        ExactMV inv;
        try {
          inv = inverse(gram);
        } catch (const std::domain_error&) {
          basis->dropped_.push_back(el.key());
          continue;
        }
        ApproxMV root = positive_sqrt(gram.convert<Approx>() * Approx(area));
        el.normalizer = inverse(root);
        el.unit = on.convert<Approx>().right_multiply(el.normalizer);
        kept.push_back(i);
        sphere_values.push_back(std::move(on));
        inverse_gram.push_back(std::move(inv));
        basis->elements_.push_back(std::move(el));
      }
    }
  }
  return basis;
}

std::size_t MonogenicBasis::index_of(const std::string& key) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].key() == key) return i;
  throw std::out_of_range("MonogenicBasis: unknown key " + key);
}

std::vector<std::size_t> MonogenicBasis::block(int degree, Part part) const {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].degree == degree && elements_[i].part == part) r.push_back(i);
  return r;
}

ExactMV MonogenicBasis::exact_inner(std::size_t i, std::size_t j) const {
  return sphere_inner(elements_.at(i).exact.on_sphere(), elements_.at(j).exact.on_sphere());
}

std::vector<ApproxMV> MonogenicBasis::evaluate_all(const std::vector<double>& point) const {
  if (static_cast<int>(point.size()) != dim()) throw DimensionMismatch("evaluate_all: point dimension");
  std::vector<ApproxMV> out;
  out.reserve(elements_.size());
  for (const auto& el : elements_) out.push_back(el.unit.evaluate(point));
  return out;
}

double SphereSignal::norm2() const {
  double s = 0.0;
  for (std::size_t q = 0; q < values.size(); ++q) s += rule->weights[q] * values[q].norm2();
  return s;
}

SpectralCoefficients SpectralCoefficients::zeros(const MonogenicBasis& basis, int max_degree) {
  SpectralCoefficients c;
  c.m = basis.m();
  c.max_degree = max_degree < 0 ? basis.max_degree() : max_degree;
  if (c.max_degree > basis.max_degree()) throw std::invalid_argument("band limit exceeds the constructed basis");
  for (const auto& el : basis.elements())
    if (el.degree <= c.max_degree) c.coeffs.emplace_back(basis.dim());
  return c;
}

double SpectralCoefficients::norm2() const {
  double s = 0.0;
  for (const auto& c : coeffs) s += c.norm2();
  return s;
}

int required_exactness(int max_degree) { return 2 * max_degree + 2; }

SphereSignal sample(const std::shared_ptr<const QuadratureRule>& rule,
                    const std::function<ApproxMV(const std::vector<double>&)>& f) {
  SphereSignal s{rule, {}};
  s.values.reserve(rule->size());
  for (const auto& node : rule->nodes) s.values.push_back(f(node));
  return s;
}

SpectralCoefficients analyze(const SphereSignal& f, const MonogenicBasis& basis) {
  if (!f.rule) throw std::invalid_argument("analyze: signal has no quadrature rule");
  if (f.m() != basis.m()) throw DimensionMismatch("analyze: signal and basis differ in m");
  if (f.rule->degree < required_exactness(basis.max_degree()))
    throw InsufficientQuadrature("analyze: quadrature exactness below 2K+2");
  if (f.values.size() != f.rule->size()) throw std::invalid_argument("analyze: value count does not match nodes");
  SpectralCoefficients c = SpectralCoefficients::zeros(basis);
  for (std::size_t q = 0; q < f.rule->size(); ++q) {
    if (f.values[q].dim() != basis.dim()) throw DimensionMismatch("analyze: value algebra mismatch");
    if (f.values[q].is_zero()) continue;
    std::vector<ApproxMV> ev = basis.evaluate_all(f.rule->nodes[q]);
    for (std::size_t i = 0; i < ev.size(); ++i) c.coeffs[i] += (ev[i].bar() * f.values[q]) * Approx(f.rule->weights[q]);
  }
  return c;
}

ApproxMV evaluate(const SpectralCoefficients& c, const MonogenicBasis& basis, const std::vector<double>& point) {
  check_basis_signal(c, basis);
  std::vector<ApproxMV> ev = basis.evaluate_all(point);
  ApproxMV r(basis.dim());
  for (std::size_t i = 0; i < c.coeffs.size(); ++i)
    if (!c.coeffs[i].is_zero()) r += ev[i] * c.coeffs[i];
  return r;
}

SphereSignal synthesize(const SpectralCoefficients& c, const MonogenicBasis& basis,
                        const std::shared_ptr<const QuadratureRule>& rule) {
  check_basis_signal(c, basis);
  if (rule->m != basis.m()) throw DimensionMismatch("synthesize: rule and basis differ in m");
  return sample(rule, [&](const std::vector<double>& p) { return evaluate(c, basis, p); });
}

double relative_l2_error(const SphereSignal& a, const SphereSignal& b) {
  if (a.values.size() != b.values.size() || a.rule->size() != b.rule->size())
    throw std::invalid_argument("relative_l2_error: signals sampled on different rules");
  double num = 0.0, den = 0.0;
  for (std::size_t q = 0; q < a.values.size(); ++q) {
    num += a.rule->weights[q] * (a.values[q] - b.values[q]).norm2();
    den += b.rule->weights[q] * b.values[q].norm2();
  }
  return den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
}

SpectralCoefficients spectral_multiply(const SpectralCoefficients& a, const SpectralCoefficients& b) {
  if (a.m != b.m || a.coeffs.size() != b.coeffs.size()) throw std::invalid_argument("spectral_multiply: band mismatch");
  SpectralCoefficients r = a;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = a.coeffs[i] * b.coeffs[i];
  return r;
}

double gegenbauer(int n, double lambda, double t) {
  if (n < 0) throw std::invalid_argument("gegenbauer: negative degree");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * lambda * t;
  for (int k = 2; k <= n; ++k) {
    double next = (2.0 * t * (k + lambda - 1.0) * cur - (k + 2.0 * lambda - 2.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

ApproxMV SphereConvolution::operator()(const std::vector<double>& xi, const std::vector<double>& omega) const {
  const double t = std::clamp(dot(xi, omega), -1.0, 1.0);
  const double lambda = 0.5 * (m_ - 1);
  const double area = sphere_area(m_);
  ApproxMV r(m_ + 1);
  for (std::size_t l = 0; l < per_degree_.size(); ++l) {
    double zonal = lambda == 0.0 ? std::cos(static_cast<double>(l) * std::acos(t))
                                 : gegenbauer(static_cast<int>(l), lambda, t) / gegenbauer(static_cast<int>(l), lambda, 1.0);
    r += per_degree_[l] * Approx(zonal / area);
  }
  return r;
}

SphereConvolution sphere_convolution(const SpectralCoefficients& f, const SpectralCoefficients& h,
                                     const MonogenicBasis& basis) {
  check_basis_signal(f, basis);
  check_basis_signal(h, basis);
  if (f.max_degree != h.max_degree || f.coeffs.size() != h.coeffs.size())
    throw std::invalid_argument("sphere_convolution: band mismatch");
  std::vector<ApproxMV> per(static_cast<std::size_t>(f.max_degree) + 2, ApproxMV(basis.dim()));
  for (std::size_t i = 0; i < f.coeffs.size(); ++i)
    per[basis.elements()[i].harmonic_degree()] += f.coeffs[i].bar() * h.coeffs[i];
  return SphereConvolution(basis.m(), std::move(per));
}

ApproxMV zonal_kernel(int m, int k, KernelSign sign, const std::vector<double>& omega, const std::vector<double>& xi) {
  if (m < 2) throw std::invalid_argument("zonal_kernel: m = 1 is unsupported");
  if (k < 0) throw std::invalid_argument("zonal_kernel: negative degree");
  if (static_cast<int>(omega.size()) != m + 1 || static_cast<int>(xi.size()) != m + 1)
    throw DimensionMismatch("zonal_kernel: points must lie in R^{m+1}");
  const double t = dot(omega, xi);
  const double lambda = 0.5 * (m - 1);
  ApproxMV w = vector_mv(omega), x = vector_mv(xi);
  ApproxMV minus = ApproxMV::one(m + 1) * Approx((k + 1) * gegenbauer(k + 1, lambda, t)) +
                   wedge(w, x) * Approx((1.0 - m) * gegenbauer(k, lambda + 1.0, t));
  minus *= Approx(1.0 / (m - 1));
  if (sign == KernelSign::Minus) return minus;
  // C^+ = C^- bar(xi) bar(omega)^{-1}, and bar(omega)^{-1} = omega on the unit sphere.
  return minus * x.bar() * w;
}

SphereSignal rotate_signal(const ApproxSpin& s, const SphereSignal& f, const MonogenicBasis& basis, ActionMode mode) {
  if (s.dim() != basis.dim()) throw DimensionMismatch("rotate_signal: spin element algebra mismatch");
  SpectralCoefficients c = analyze(f, basis);
  Eigen::MatrixXd rot = rotation_matrix(s);
  const ApproxMV& sv = s.value();
  ApproxMV sinv = sv.bar_linear();
  return sample(f.rule, [&](const std::vector<double>& xi) {
    Eigen::VectorXd p = Eigen::Map<const Eigen::VectorXd>(xi.data(), static_cast<Eigen::Index>(xi.size()));
    Eigen::VectorXd q = rot.transpose() * p;
    ApproxMV v = evaluate(c, basis, std::vector<double>(q.data(), q.data() + q.size()));
    return mode == ActionMode::H ? sv * v * sinv : sv * v;
  });
}

}  // namespace cliffwave
