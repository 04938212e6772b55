#include "cliffwave/wavelets.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>

namespace cliffwave {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void enumerate_dominant(int len, int bound, int max_entry, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= std::min(bound, max_entry); ++v) {
    cur.push_back(v);
    enumerate_dominant(len, bound - v, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SpectralProfile SpectralProfile::heat_h(int m) { return SpectralProfile{ProfileKind::HeatH, m, 0.0}; }

SpectralProfile SpectralProfile::heat_l(int m) {
  const double n = m + 1;
  return heat_l(m, n * (n - 1) / 8.0);
}

SpectralProfile SpectralProfile::heat_l(int m, double shift) { return SpectralProfile{ProfileKind::HeatL, m, shift}; }

SpectralProfile SpectralProfile::modified(int m) { return SpectralProfile{ProfileKind::Modified, m, 0.0}; }

SpectralProfile SpectralProfile::parse(const std::string& name, int m) {
  if (name == "heat-h" || name == "heat_H" || name == "heat_h") return heat_h(m);
  if (name == "heat-l" || name == "heat_L" || name == "heat_l") return heat_l(m);
  if (name == "modified") return modified(m);
  throw std::invalid_argument("unknown profile: " + name);
}

std::string SpectralProfile::name() const {
  switch (kind) {
    case ProfileKind::HeatH:
      return "heat-h";
    case ProfileKind::HeatL:
      return "heat-l";
    case ProfileKind::Modified:
      return "modified";
  }
  return "unknown";
}

double SpectralProfile::lambda(int degree, Part part) const {
  const double k = degree;
  double v = 0.0;
  switch (kind) {
    case ProfileKind::HeatH:
      v = part == Part::V ? k * (k + m - 1) : (k + 1) * (k + m);
      break;
    case ProfileKind::HeatL:
      v = k * (k + m) + shift;
      break;
    case ProfileKind::Modified:
      v = k * (k + m);
      break;
  }
  if (v < 0.0) {
    static bool warned = false;
    if (!warned) {
      std::cerr << "warning: profile constant makes low modes negative; flooring at 0\n";
      warned = true;
    }
    v = 0.0;
  }
  return v;
}

SpectralCoefficients heat_kernel(const SpectralProfile& profile, double t, const MonogenicBasis& basis) {
  if (!(t > 0.0)) throw std::invalid_argument("heat_kernel: t must be positive");
  if (profile.m != basis.m()) throw DimensionMismatch("heat_kernel: profile and basis differ in m");
  SpectralCoefficients c = SpectralCoefficients::zeros(basis);
  for (std::size_t i = 0; i < c.coeffs.size(); ++i)
    c.coeffs[i] = ApproxMV::scalar(basis.dim(), Approx(std::exp(-profile.lambda(basis.elements()[i]) * t)));
  return c;
}

double heat_truncation_bound(const SpectralProfile& profile, double t, int max_degree) {
  const int k = max_degree + 1;
  double lam = std::min(profile.lambda(k, Part::V), profile.lambda(k, Part::W));
  return std::exp(-lam * t) * 2.0 * static_cast<double>(MonogenicBasis::rank(profile.m, k));
}

SemigroupReport semigroup_check(const SpectralProfile& profile, double t, double s, const MonogenicBasis& basis, double tol) {
  SpectralCoefficients lhs = spectral_multiply(heat_kernel(profile, t, basis), heat_kernel(profile, s, basis));
  SpectralCoefficients rhs = heat_kernel(profile, t + s, basis);
  SemigroupReport r;
  for (std::size_t i = 0; i < lhs.coeffs.size(); ++i) r.max_error = std::max(r.max_error, max_abs_diff(lhs.coeffs[i], rhs.coeffs[i]));
  r.ok = r.max_error <= tol;
  return r;
}

ScaleGrid ScaleGrid::geometric(double rho_min, double rho_max, double ratio) {
  if (!(rho_min > 0.0) || !(rho_max > rho_min)) throw std::invalid_argument("ScaleGrid: need 0 < rho_min < rho_max");
  if (!(ratio > 1.0)) throw std::invalid_argument("ScaleGrid: ratio must exceed 1");
  ScaleGrid g;
  g.rho_min = rho_min;
  g.rho_max = rho_max;
  g.ratio = ratio;
  g.edges.push_back(0.0);
  double e = rho_min;
  while (e < rho_max * (1.0 - 1e-12)) {
    g.edges.push_back(e);
    e *= ratio;
  }
  g.edges.push_back(rho_max);
  for (std::size_t i = 0; i + 1 < g.edges.size(); ++i) {
    double a = g.edges[i], b = g.edges[i + 1];
    g.nodes.push_back(i == 0 ? 0.5 * (a + b) : std::sqrt(a * b));
    g.widths.push_back(b - a);
  }
  return g;
}

double ScaleGrid::admissibility(double lambda, double t) const {
  double s = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    double a = edges[i], b = edges[i + 1];
    if (b <= t) continue;
    if (a >= t) {
      s += lambda * std::exp(-lambda * nodes[i]) * widths[i];
    } else {
      double mid = t > 0.0 ? std::sqrt(t * b) : 0.5 * b;
      s += lambda * std::exp(-lambda * mid) * (b - t);
    }
  }
  return s;
}

double wavelet_weight(double lambda, double rho) {
  if (lambda <= 0.0) return 0.0;
  return std::sqrt(lambda) * std::exp(-0.5 * lambda * rho);
}

std::uint64_t family_hash(const SpectralProfile& profile, const ScaleGrid& grid, int max_degree) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s|%d|%.17g|%d|%.17g|%.17g|%.17g", profile.name().c_str(), profile.m, profile.shift,
                max_degree, grid.rho_min, grid.rho_max, grid.ratio);
  return fnv1a(buf);
}

WaveletFamily wavelet_family(const SpectralProfile& profile, const ScaleGrid& grid, const MonogenicBasis& basis) {
  if (profile.m != basis.m()) throw DimensionMismatch("wavelet_family: profile and basis differ in m");
  WaveletFamily fam;
  fam.profile = profile;
  fam.grid = grid;
  fam.max_degree = basis.max_degree();
  for (const auto& el : basis.elements()) fam.lambdas.push_back(profile.lambda(el));
  fam.family_hash = family_hash(profile, grid, basis.max_degree());
  return fam;
}

std::vector<std::vector<ApproxMV>> scale_transform(const std::vector<ApproxMV>& coeffs, const std::vector<double>& lambdas,
                                                   const ScaleGrid& grid) {
  if (coeffs.size() > lambdas.size()) throw std::invalid_argument("scale_transform: band violation");
  std::vector<std::vector<ApproxMV>> out(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    out[j].reserve(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) out[j].push_back(coeffs[i] * Approx(wavelet_weight(lambdas[i], grid.nodes[j])));
  }
  return out;
}

std::vector<ApproxMV> scale_reconstruct(const std::vector<std::vector<ApproxMV>>& scales,
                                        const std::vector<ApproxMV>& zero_mode, const std::vector<double>& lambdas,
                                        const ScaleGrid& grid, ScaleIntegral mode) {
  if (scales.size() != grid.size()) throw std::invalid_argument("scale_reconstruct: scale count does not match grid");
  std::vector<ApproxMV> out = zero_mode;
  if (out.size() > lambdas.size()) throw std::invalid_argument("scale_reconstruct: band violation");
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (lambdas[i] <= 0.0) continue;
    out[i] = ApproxMV(out[i].dim());
    if (mode == ScaleIntegral::ClosedForm) {
      // The scale integral of w(rho)^2 over (0, inf) equals 1, so one scale determines the coefficient.
      out[i] += scales[0][i] * Approx(1.0 / wavelet_weight(lambdas[i], grid.nodes[0]));
    } else {
      for (std::size_t j = 0; j < grid.size(); ++j)
        out[i] += scales[j][i] * Approx(wavelet_weight(lambdas[i], grid.nodes[j]) * grid.widths[j]);
    }
  }
  return out;
}

WaveletCoefficients wavelet_transform(const SpectralCoefficients& f, const WaveletFamily& family) {
  if (f.max_degree > family.max_degree || f.coeffs.size() > family.lambdas.size())
    throw std::invalid_argument("wavelet_transform: band violation");
  if (f.m != family.profile.m) throw DimensionMismatch("wavelet_transform: signal and family differ in m");
  WaveletCoefficients w;
  w.family_hash = family.family_hash;
  w.zero_mode = f;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i)
    if (!family.is_zero_mode(i)) w.zero_mode.coeffs[i] = ApproxMV(f.coeffs[i].dim());
  for (auto& scale : scale_transform(f.coeffs, family.lambdas, family.grid)) {
    SpectralCoefficients c = f;
    c.coeffs = std::move(scale);
    w.scales.push_back(std::move(c));
  }
  return w;
}

WaveletCoefficients wavelet_transform(const SphereSignal& f, const WaveletFamily& family, const MonogenicBasis& basis) {
  return wavelet_transform(analyze(f, basis), family);
}

SpectralCoefficients wavelet_reconstruct_spectral(const WaveletCoefficients& w, const WaveletFamily& family, ScaleIntegral mode) {
  if (w.family_hash != family.family_hash) throw std::invalid_argument("wavelet_reconstruct: family hash mismatch");
  std::vector<std::vector<ApproxMV>> scales;
  scales.reserve(w.scales.size());
  for (const auto& s : w.scales) scales.push_back(s.coeffs);
  SpectralCoefficients out = w.zero_mode;
  out.coeffs = scale_reconstruct(scales, w.zero_mode.coeffs, family.lambdas, family.grid, mode);
  return out;
}

SphereSignal wavelet_reconstruct(const WaveletCoefficients& w, const WaveletFamily& family, const MonogenicBasis& basis,
                                 const std::shared_ptr<const QuadratureRule>& rule, ScaleIntegral mode) {
  return synthesize(wavelet_reconstruct_spectral(w, family, mode), basis, rule);
}

SpinFunction::SpinFunction(ExactPoly alpha, ExactPoly beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  alpha_.check(beta_);
  if (!alpha_.is_zero() && !(is_simplicial(alpha_) && is_harmonic(alpha_)))
    throw std::invalid_argument("SpinFunction: alpha must be a simplicial harmonic");
  if (!beta_.is_zero() && !(is_simplicial(beta_) && is_monogenic(beta_)))
    throw std::invalid_argument("SpinFunction: beta must be a simplicial monogenic");
}

ApproxMV SpinFunction::operator()(const ApproxSpin& s) const {
  const VarSystem& vs = alpha_.vars();
  if (s.dim() != vs.n) throw DimensionMismatch("SpinFunction: spin element algebra mismatch");
  Eigen::MatrixXd rot = rotation_matrix(s);
  // Variable j sits at s^{-1} e_j s = R^T e_j.
  std::vector<double> point(vs.count());
  for (int j = 0; j < vs.k; ++j)
    for (int a = 0; a < vs.n; ++a) point[vs.index(j, a)] = rot(j, a);
  const ApproxMV& sv = s.value();
  ApproxMV r(vs.n);
  if (!alpha_.is_zero()) r += sv * alpha_.evaluate(point) * sv.bar_linear();
  if (!beta_.is_zero()) r += sv * beta_.evaluate(point);
  return r;
}

std::optional<Exact> SpinFunction::eigenvalue() const {
  std::optional<Exact> value;
  auto branch = [&](const ExactPoly& p, const ExactPoly& lp) {
    if (p.is_zero()) return true;
    Exact f;
    if (!is_scalar_multiple(lp, p, &f)) return false;
    if (value && *value != f) return false;
    value = f;
    return true;
  };
  if (!branch(alpha_, laplacian_alpha())) return std::nullopt;
  if (!branch(beta_, laplacian_beta())) return std::nullopt;
  return value ? value : std::optional<Exact>(Exact(0));
}

std::vector<int> SpinFunction::alpha_degrees() const {
  std::vector<int> d;
  for (int j = 0; j < alpha_.vars().k; ++j) d.push_back(std::max(0, alpha_.degree_in(j)));
  return d;
}

std::vector<int> SpinFunction::beta_degrees() const {
  std::vector<int> d;
  for (int j = 0; j < beta_.vars().k; ++j) d.push_back(std::max(0, beta_.degree_in(j)));
  return d;
}

std::vector<std::vector<int>> dominant_weights(int len, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  enumerate_dominant(len, bound, bound, cur, out);
  return out;
}

long degree_formula_eigenvalue(const std::vector<int>& degrees, int m) {
  long s = 0;
  for (int k : degrees) s += static_cast<long>(k) * (m - 2 - k);
  return s;
}

std::vector<SpinMode> enumerate_spin_modes(int m, int bound) {
  if (m < 3) throw std::invalid_argument("enumerate_spin_modes: m >= 3 required");
  if (bound < 0 || bound > kMaxSpinWeight) throw std::invalid_argument("enumerate_spin_modes: weight bound exceeded");
  const int half = m / 2;
  std::vector<std::vector<int>> weights = dominant_weights(half, bound);
  VarSystem vs(half, m);
  std::vector<SpinMode> modes;
  for (WeightKind kind : {WeightKind::Harmonic, WeightKind::Monogenic}) {
    for (const auto& w : weights) {
      Weight weight = kind == WeightKind::Harmonic ? Weight::integral(w) : Weight::half_integral(w);
      ExactPoly p = highest_weight_vector(weight, kind, m);
      SpinFunction fn = kind == WeightKind::Harmonic ? SpinFunction(p, ExactPoly(vs)) : SpinFunction(ExactPoly(vs), p);
      auto ev = fn.eigenvalue();
      if (!ev) throw std::logic_error("enumerate_spin_modes: highest weight vector is not an eigenfunction");
      double lambda = -ev->to_approx().real();
      modes.push_back(SpinMode{weight, kind, std::move(fn), std::max(0.0, lambda)});
    }
  }
  return modes;
}

std::vector<double> SpinWaveletFamily::lambdas() const {
  std::vector<double> l;
  for (const auto& mode : modes) l.push_back(mode.lambda);
  return l;
}

SpinWaveletFamily spin_wavelet(int m, int bound, const ScaleGrid& grid) {
  return SpinWaveletFamily{m, bound, enumerate_spin_modes(m, bound), grid};
}

ApproxMV evaluate_spin_combination(const SpinWaveletFamily& family, const std::vector<ApproxMV>& coeffs, const ApproxSpin& s) {
  if (coeffs.size() != family.modes.size()) throw std::invalid_argument("evaluate_spin_combination: coefficient count");
  ApproxMV r(family.m);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) r += family.modes[i].function(s) * coeffs[i];
  return r;
}

}  // namespace cliffwave
